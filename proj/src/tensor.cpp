#include "hypercent/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "hypercent/errors.hpp"

namespace hypercent {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

bool odd_parity(std::span<const NodeId> tuple) {
    int inversions = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] > tuple[j]) ++inversions;
    return inversions % 2 != 0;
}

bool has_duplicates(std::vector<NodeId> sorted) {
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

// Lexicographically smallest arrangement of the tuple's node set with the
// requested parity: sorted order, or sorted with the last two swapped.
std::vector<NodeId> parity_canonical(std::vector<NodeId> tuple, bool odd) {
    std::sort(tuple.begin(), tuple.end());
    if (odd) std::swap(tuple[tuple.size() - 2], tuple[tuple.size() - 1]);
    return tuple;
}

// Parity (relative to sorted order) shared by every member of the orbit
// generated by this entry under the tensor's cyclic tag.
bool orbit_parity(const TensorEntry& entry, SymmetryTag tag) {
    return odd_parity(entry.index) != (tag == SymmetryTag::cyclic_odd);
}

// Leave-one-out products of c over the entry's index tuple.
void loo_products(std::span<const NodeId> idx, const std::vector<double>& c,
                  std::vector<double>& out) {
    const std::size_t m = idx.size();
    out.assign(m, 1.0);
    double prefix = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
        out[i] = prefix;
        prefix *= c[idx[i]];
    }
    double suffix = 1.0;
    for (std::size_t i = m; i-- > 0;) {
        out[i] *= suffix;
        suffix *= c[idx[i]];
    }
}

}  // namespace

OrbitTensor OrbitTensor::from_hypergraph(const Hypergraph& h) {
    int m = h.uniformity();
    const auto& edges = h.edges();
    EdgeKind kind = edges.front().kind;
    for (const Hyperedge& e : edges)
        if (e.kind != kind) fail(errc::mixed_kinds, "hyperedges of several kinds present");

    std::vector<TensorEntry> entries;
    entries.reserve(edges.size());
    SymmetryTag tag = SymmetryTag::full_symmetric;
    switch (kind) {
        case EdgeKind::undirected:
            for (const Hyperedge& e : edges) entries.push_back({e.nodes, 0, e.weight});
            break;
        case EdgeKind::cyclic:
            tag = SymmetryTag::cyclic_even;
            for (const Hyperedge& e : edges) entries.push_back({e.nodes, 0, e.weight});
            break;
        case EdgeKind::directed:
            tag = SymmetryTag::tail_symmetric_directed;
            for (const Hyperedge& e : edges) {
                std::vector<NodeId> idx = e.tail;
                idx.insert(idx.end(), e.head.begin(), e.head.end());
                entries.push_back({std::move(idx), static_cast<int>(e.tail.size()), e.weight});
            }
            break;
    }
    return from_entries(tag, m, h.node_count(), std::move(entries));
}

OrbitTensor OrbitTensor::from_entries(SymmetryTag tag, int order, int node_count,
                                      std::vector<TensorEntry> entries) {
    if (order < 2) fail(errc::wrong_arity, "tensor order must be >= 2");
    if (node_count < 1) fail(errc::index_out_of_range, "node count must be >= 1");

    std::map<std::pair<std::vector<NodeId>, int>, double> merged;
    for (TensorEntry& entry : entries) {
        if (static_cast<int>(entry.index.size()) != order)
            fail(errc::wrong_arity, "entry arity != tensor order");
        for (NodeId v : entry.index)
            if (v < 0 || v >= node_count)
                fail(errc::index_out_of_range, "entry index " + std::to_string(v));
        if (!(entry.weight > 0.0)) fail(errc::non_positive_weight, "entry weight must be > 0");

        int split = 0;
        switch (tag) {
            case SymmetryTag::full_symmetric:
                std::sort(entry.index.begin(), entry.index.end());
                if (has_duplicates(entry.index))
                    fail(errc::repeated_node, "repeated index in symmetric entry");
                break;
            case SymmetryTag::cyclic_even:
            case SymmetryTag::cyclic_odd: {
                std::vector<NodeId> sorted = entry.index;
                std::sort(sorted.begin(), sorted.end());
                if (has_duplicates(sorted)) fail(errc::repeated_node, "repeated index in cyclic entry");
                entry.index = parity_canonical(entry.index, odd_parity(entry.index));
                break;
            }
            case SymmetryTag::tail_symmetric_directed: {
                split = entry.split;
                if (split < 1 || split >= order)
                    fail(errc::empty_block, "directed entry needs nonempty tail and head blocks");
                std::vector<NodeId> sorted = entry.index;
                std::sort(sorted.begin(), sorted.end());
                if (has_duplicates(sorted))
                    fail(errc::repeated_node, "repeated index in directed entry");
                std::sort(entry.index.begin(), entry.index.begin() + split);
                std::sort(entry.index.begin() + split, entry.index.end());
                break;
            }
            case SymmetryTag::ordered_kstep:
                break;
        }
        merged[{std::move(entry.index), split}] += entry.weight;
    }

    OrbitTensor t;
    t.order_ = order;
    t.n_ = node_count;
    t.class_.tag = tag;
    for (auto& [key, w] : merged) {
        t.entries_.push_back({key.first, key.second, w});
        if (tag == SymmetryTag::tail_symmetric_directed &&
            (t.splits_.empty() || t.splits_.back() != key.second))
            t.splits_.push_back(key.second);
    }
    std::sort(t.splits_.begin(), t.splits_.end());
    t.splits_.erase(std::unique(t.splits_.begin(), t.splits_.end()), t.splits_.end());
    if (tag == SymmetryTag::tail_symmetric_directed)
        t.class_.tail_count = t.splits_.size() == 1 ? t.splits_.front() : -1;
    return t;
}

double OrbitTensor::component(std::span<const NodeId> index) const {
    if (static_cast<int>(index.size()) != order_)
        fail(errc::wrong_arity, "queried arity " + std::to_string(index.size()) +
                                    " on an order-" + std::to_string(order_) + " tensor");
    for (NodeId v : index)
        if (v < 0 || v >= n_) fail(errc::index_out_of_range, "index " + std::to_string(v));

    auto lookup = [this](const std::vector<NodeId>& idx, int split) {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair(idx, split),
                                   [](const TensorEntry& e, const auto& key) {
                                       return std::tie(e.index, e.split) <
                                              std::tie(key.first, key.second);
                                   });
        if (it != entries_.end() && it->index == idx && it->split == split) return it->weight;
        return 0.0;
    };

    std::vector<NodeId> idx(index.begin(), index.end());
    switch (class_.tag) {
        case SymmetryTag::full_symmetric: {
            std::sort(idx.begin(), idx.end());
            if (has_duplicates(idx)) return 0.0;
            return lookup(idx, 0);
        }
        case SymmetryTag::cyclic_even:
        case SymmetryTag::cyclic_odd: {
            std::vector<NodeId> sorted = idx;
            std::sort(sorted.begin(), sorted.end());
            if (has_duplicates(sorted)) return 0.0;
            // The generator whose orbit covers idx has parity
            // parity(idx) xor (tag == cyclic_odd).
            bool gen_odd = odd_parity(idx) != (class_.tag == SymmetryTag::cyclic_odd);
            return lookup(parity_canonical(std::move(sorted), gen_odd), 0);
        }
        case SymmetryTag::tail_symmetric_directed: {
            double total = 0.0;
            for (int split : splits_) {
                std::vector<NodeId> canon = idx;
                std::sort(canon.begin(), canon.begin() + split);
                std::sort(canon.begin() + split, canon.end());
                total += lookup(canon, split);
            }
            return total;
        }
        case SymmetryTag::ordered_kstep:
            return lookup(idx, 0);
    }
    return 0.0;
}

OrbitTensor OrbitTensor::transposed() const {
    std::vector<TensorEntry> entries = entries_;
    SymmetryTag tag = class_.tag;
    switch (class_.tag) {
        case SymmetryTag::full_symmetric:
            break;
        case SymmetryTag::cyclic_even:
        case SymmetryTag::cyclic_odd: {
            tag = class_.tag == SymmetryTag::cyclic_even ? SymmetryTag::cyclic_odd
                                                         : SymmetryTag::cyclic_even;
            // Full index reversal is a permutation of parity floor(m/2); when
            // it is even the orbit's parity class is preserved, so flipping
            // the tag must be compensated by flipping the generator.
            if ((order_ / 2) % 2 == 0)
                for (TensorEntry& e : entries) {
                    bool flipped = !odd_parity(e.index);
                    e.index = parity_canonical(std::move(e.index), flipped);
                }
            break;
        }
        case SymmetryTag::tail_symmetric_directed:
            for (TensorEntry& e : entries) {
                std::vector<NodeId> swapped(e.index.begin() + e.split, e.index.end());
                swapped.insert(swapped.end(), e.index.begin(), e.index.begin() + e.split);
                e.index = std::move(swapped);
                e.split = order_ - e.split;
            }
            break;
        case SymmetryTag::ordered_kstep:
            for (TensorEntry& e : entries) std::reverse(e.index.begin(), e.index.end());
            break;
    }
    return from_entries(tag, order_, n_, std::move(entries));
}

std::vector<double> OrbitTensor::apply(const std::vector<double>& c) const {
    if (static_cast<int>(c.size()) != n_) fail(errc::length_mismatch, "vector length != N");
    for (double v : c)
        if (!std::isfinite(v)) fail(errc::non_finite_input, "non-finite vector entry");

    const int m = order_;
    std::vector<double> x(n_, 0.0);
    std::vector<double> loo;
    for (const TensorEntry& entry : entries_) {
        switch (class_.tag) {
            case SymmetryTag::full_symmetric: {
                // (m-1)! arrangements of the trailing indices per leading node.
                double factor = entry.weight * factorial(m - 1);
                loo_products(entry.index, c, loo);
                for (std::size_t i = 0; i < entry.index.size(); ++i)
                    x[entry.index[i]] += factor * loo[i];
                break;
            }
            case SymmetryTag::cyclic_even:
            case SymmetryTag::cyclic_odd: {
                if (m == 2) {
                    // Single-member orbit: the generator itself (even tag) or
                    // its reversal (odd tag).
                    NodeId a = entry.index[0], b = entry.index[1];
                    if (class_.tag == SymmetryTag::cyclic_odd) std::swap(a, b);
                    x[a] += entry.weight * c[b];
                    break;
                }
                // Half of the (m-1)! trailing arrangements land in the
                // orbit's parity class, regardless of which class it is.
                double factor = entry.weight * factorial(m - 1) / 2.0;
                loo_products(entry.index, c, loo);
                for (std::size_t i = 0; i < entry.index.size(); ++i)
                    x[entry.index[i]] += factor * loo[i];
                break;
            }
            case SymmetryTag::tail_symmetric_directed: {
                // Only leading-block nodes ever occupy the first position.
                int p = entry.split;
                double factor = entry.weight * factorial(p - 1) * factorial(m - p);
                loo_products(entry.index, c, loo);
                for (int i = 0; i < p; ++i) x[entry.index[i]] += factor * loo[i];
                break;
            }
            case SymmetryTag::ordered_kstep: {
                double prod = entry.weight;
                for (std::size_t i = 1; i < entry.index.size(); ++i) prod *= c[entry.index[i]];
                x[entry.index[0]] += prod;
                break;
            }
        }
    }
    return x;
}

KStepOperator::KStepOperator(Digraph base, int walk_order) : base_(std::move(base)), k_(walk_order) {
    if (k_ < 2) fail(errc::k_out_of_range, "walk order must be >= 2");
    if (base_.node_count() < 1) fail(errc::index_out_of_range, "base graph has no nodes");
}

KStepOperator KStepOperator::transposed() const { return KStepOperator(base_.transposed(), k_); }

std::vector<double> KStepOperator::apply(const std::vector<double>& c) const {
    const int n = base_.node_count();
    if (static_cast<int>(c.size()) != n) fail(errc::length_mismatch, "vector length != N");
    std::vector<double> z(n, 1.0);
    for (int step = 0; step < k_ - 1; ++step) {
        std::vector<double> scaled(n);
        for (int i = 0; i < n; ++i) scaled[i] = c[i] * z[i];
        z = base_.multiply_transposed(scaled);
    }
    return z;
}

DenseTensor materialize(const OrbitTensor& t, int limit) {
    if (t.node_count() > limit)
        fail(errc::too_large, "N=" + std::to_string(t.node_count()) + " exceeds limit " +
                                  std::to_string(limit));
    DenseTensor dense(t.order(), t.node_count());
    for (const TensorEntry& entry : t.entries()) {
        switch (t.symmetry().tag) {
            case SymmetryTag::full_symmetric: {
                std::vector<NodeId> perm = entry.index;  // canonical form is sorted
                do dense.at(perm) += entry.weight;
                while (std::next_permutation(perm.begin(), perm.end()));
                break;
            }
            case SymmetryTag::cyclic_even:
            case SymmetryTag::cyclic_odd: {
                bool want_odd = orbit_parity(entry, t.symmetry().tag);
                std::vector<NodeId> perm = entry.index;
                std::sort(perm.begin(), perm.end());
                do {
                    if (odd_parity(perm) == want_odd) dense.at(perm) += entry.weight;
                } while (std::next_permutation(perm.begin(), perm.end()));
                break;
            }
            case SymmetryTag::tail_symmetric_directed: {
                std::vector<NodeId> tail(entry.index.begin(), entry.index.begin() + entry.split);
                std::vector<NodeId> head(entry.index.begin() + entry.split, entry.index.end());
                std::vector<NodeId> tuple(entry.index.size());
                do {
                    std::vector<NodeId> head_perm = head;
                    do {
                        std::copy(tail.begin(), tail.end(), tuple.begin());
                        std::copy(head_perm.begin(), head_perm.end(),
                                  tuple.begin() + entry.split);
                        dense.at(tuple) += entry.weight;
                    } while (std::next_permutation(head_perm.begin(), head_perm.end()));
                } while (std::next_permutation(tail.begin(), tail.end()));
                break;
            }
            case SymmetryTag::ordered_kstep:
                dense.at(entry.index) += entry.weight;
                break;
        }
    }
    return dense;
}

DenseTensor materialize(const KStepOperator& op, int limit) {
    const int n = op.node_count();
    if (n > limit)
        fail(errc::too_large, "N=" + std::to_string(n) + " exceeds limit " + std::to_string(limit));
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (const Arc& arc : op.base().arcs()) a[arc.from][arc.to] = arc.weight;

    DenseTensor dense(op.order(), n);
    std::vector<int> idx(op.order(), 0);
    do {
        double prod = 1.0;
        for (std::size_t i = 0; i + 1 < idx.size() && prod != 0.0; ++i)
            prod *= a[idx[i]][idx[i + 1]];
        if (prod != 0.0) dense.at(idx) = prod;
    } while (advance_index(idx, n));
    return dense;
}

}  // namespace hypercent
