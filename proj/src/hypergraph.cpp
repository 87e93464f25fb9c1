#include "hypercent/hypergraph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "hypercent/errors.hpp"

namespace hypercent {

namespace {

void require_distinct(const std::vector<NodeId>& nodes, const char* where) {
    std::unordered_set<NodeId> seen;
    for (NodeId v : nodes)
        if (!seen.insert(v).second)
            fail(errc::repeated_node,
                 std::string("node ") + std::to_string(v) + " repeated in " + where);
}

// Parity of the tuple as a permutation of its own sorted order.
bool odd_parity(const std::vector<NodeId>& tuple) {
    int inversions = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] > tuple[j]) ++inversions;
    return inversions % 2 != 0;
}

}  // namespace

NodeId NodeRegistry::intern(const std::string& label) {
    auto it = ids_.find(label);
    if (it != ids_.end()) return it->second;
    NodeId id = static_cast<NodeId>(labels_.size());
    labels_.push_back(label);
    ids_.emplace(label, id);
    return id;
}

std::optional<NodeId> NodeRegistry::find(const std::string& label) const {
    auto it = ids_.find(label);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

const std::string& NodeRegistry::label(NodeId id) const {
    if (id < 0 || id >= size()) fail(errc::index_out_of_range, "no node " + std::to_string(id));
    return labels_[id];
}

Hyperedge Hyperedge::undirected(std::vector<NodeId> nodes, double weight) {
    if (nodes.size() < 2) fail(errc::empty_block, "undirected hyperedge needs at least 2 nodes");
    require_distinct(nodes, "undirected hyperedge");
    if (!(weight > 0.0)) fail(errc::non_positive_weight, "hyperedge weight must be > 0");
    std::sort(nodes.begin(), nodes.end());
    Hyperedge e;
    e.kind = EdgeKind::undirected;
    e.nodes = std::move(nodes);
    e.weight = weight;
    return e;
}

Hyperedge Hyperedge::cyclic(std::vector<NodeId> nodes, bool odd_orientation, double weight) {
    if (nodes.size() < 2) fail(errc::empty_block, "cyclic hyperedge needs at least 2 nodes");
    require_distinct(nodes, "cyclic hyperedge");
    if (!(weight > 0.0)) fail(errc::non_positive_weight, "hyperedge weight must be > 0");
    // The orbit is the set of arrangements of the node set whose parity
    // (relative to sorted order) equals that of the given tuple, flipped
    // once more for odd orientation. Its lexicographically smallest
    // member is the canonical generator.
    bool orbit_odd = odd_parity(nodes) != odd_orientation;
    std::sort(nodes.begin(), nodes.end());
    if (orbit_odd) std::swap(nodes[nodes.size() - 2], nodes[nodes.size() - 1]);
    Hyperedge e;
    e.kind = EdgeKind::cyclic;
    e.nodes = std::move(nodes);
    e.weight = weight;
    return e;
}

Hyperedge Hyperedge::directed(std::vector<NodeId> tail, std::vector<NodeId> head, double weight) {
    if (tail.empty() || head.empty()) fail(errc::empty_block, "directed hyperedge with empty block");
    if (!(weight > 0.0)) fail(errc::non_positive_weight, "hyperedge weight must be > 0");
    std::vector<NodeId> all = tail;
    all.insert(all.end(), head.begin(), head.end());
    require_distinct(all, "directed hyperedge (tail and head must be disjoint)");
    std::sort(tail.begin(), tail.end());
    std::sort(head.begin(), head.end());
    Hyperedge e;
    e.kind = EdgeKind::directed;
    e.tail = std::move(tail);
    e.head = std::move(head);
    e.weight = weight;
    return e;
}

int Hyperedge::size() const {
    return kind == EdgeKind::directed ? static_cast<int>(tail.size() + head.size())
                                      : static_cast<int>(nodes.size());
}

std::vector<NodeId> Hyperedge::all_nodes() const {
    if (kind != EdgeKind::directed) return nodes;
    std::vector<NodeId> all = tail;
    all.insert(all.end(), head.begin(), head.end());
    return all;
}

void Hypergraph::add_edge(Hyperedge e) {
    for (NodeId v : e.all_nodes())
        if (v < 0 || v >= node_count())
            fail(errc::unknown_node, "node " + std::to_string(v) + " is not registered");
    auto key = std::make_tuple(static_cast<int>(e.kind), e.nodes, e.tail, e.head);
    auto [it, inserted] = edge_index_.try_emplace(std::move(key), edges_.size());
    if (!inserted) {
        edges_[it->second].weight += e.weight;
        return;
    }
    edges_.push_back(std::move(e));
}

bool Hypergraph::all_edges_are(EdgeKind kind) const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [kind](const Hyperedge& e) { return e.kind == kind; });
}

std::vector<int> Hypergraph::kind_counts() const {
    std::vector<int> counts(3, 0);
    for (const Hyperedge& e : edges_) ++counts[static_cast<int>(e.kind)];
    return counts;
}

int Hypergraph::uniformity() const {
    if (edges_.empty()) fail(errc::non_uniform, "hypergraph has no edges");
    int m = edges_.front().size();
    for (const Hyperedge& e : edges_)
        if (e.size() != m)
            fail(errc::non_uniform, "hyperedge sizes " + std::to_string(m) + " and " +
                                        std::to_string(e.size()) + " both present");
    return m;
}

int Hypergraph::tail_uniformity() const {
    if (edges_.empty()) fail(errc::not_directed, "no directed hyperedges");
    for (const Hyperedge& e : edges_)
        if (e.kind != EdgeKind::directed) fail(errc::not_directed, "non-directed hyperedge present");
    int mt = static_cast<int>(edges_.front().tail.size());
    for (const Hyperedge& e : edges_)
        if (static_cast<int>(e.tail.size()) != mt)
            fail(errc::non_tail_uniform, "tail sizes " + std::to_string(mt) + " and " +
                                             std::to_string(e.tail.size()) + " both present");
    return mt;
}

Digraph Hypergraph::project() const {
    Digraph g(node_count());
    for (const Hyperedge& e : edges_) {
        if (e.kind == EdgeKind::directed) {
            for (NodeId u : e.tail)
                for (NodeId v : e.head) g.add_arc(u, v, e.weight);
        } else {
            for (std::size_t i = 0; i < e.nodes.size(); ++i)
                for (std::size_t j = i + 1; j < e.nodes.size(); ++j) {
                    g.add_arc(e.nodes[i], e.nodes[j], e.weight);
                    g.add_arc(e.nodes[j], e.nodes[i], e.weight);
                }
        }
    }
    return g;
}

Hypergraph Hypergraph::induced(const std::vector<NodeId>& keep) const {
    std::vector<NodeId> remap(node_count(), -1);
    Hypergraph sub;
    // Retained labels keep their original relative order.
    std::vector<NodeId> sorted_keep = keep;
    std::sort(sorted_keep.begin(), sorted_keep.end());
    for (NodeId v : sorted_keep) remap[v] = sub.intern(nodes_.label(v));
    auto mapped = [&](const std::vector<NodeId>& in, std::vector<NodeId>& out) {
        for (NodeId v : in) {
            if (remap[v] < 0) return false;
            out.push_back(remap[v]);
        }
        return true;
    };
    for (const Hyperedge& e : edges_) {
        Hyperedge copy = e;
        copy.nodes.clear();
        copy.tail.clear();
        copy.head.clear();
        if (mapped(e.nodes, copy.nodes) && mapped(e.tail, copy.tail) && mapped(e.head, copy.head))
            sub.add_edge(std::move(copy));
    }
    return sub;
}

Hypergraph Hypergraph::relabeled(const std::vector<NodeId>& perm) const {
    if (static_cast<int>(perm.size()) != node_count())
        fail(errc::length_mismatch, "permutation length != node count");
    Hypergraph out;
    std::vector<std::string> new_labels(node_count());
    for (NodeId v = 0; v < node_count(); ++v) new_labels[perm[v]] = nodes_.label(v);
    for (const std::string& label : new_labels) out.intern(label);
    for (const Hyperedge& e : edges_) {
        auto map = [&](std::vector<NodeId> in) {
            for (NodeId& v : in) v = perm[v];
            return in;
        };
        switch (e.kind) {
            case EdgeKind::undirected:
                out.add_edge(Hyperedge::undirected(map(e.nodes), e.weight));
                break;
            case EdgeKind::cyclic:
                out.add_edge(Hyperedge::cyclic(map(e.nodes), false, e.weight));
                break;
            case EdgeKind::directed:
                out.add_edge(Hyperedge::directed(map(e.tail), map(e.head), e.weight));
                break;
        }
    }
    return out;
}

}  // namespace hypercent
