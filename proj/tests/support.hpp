#pragma once

// Deterministic random-instance generators shared by the unit and
// acceptance suites. Strong connectivity is arranged constructively
// (ring backbones) and then verified, with a bounded retry.

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercent/connectivity.hpp"
#include "hypercent/digraph.hpp"
#include "hypercent/hypergraph.hpp"
#include "hypercent/tensor.hpp"

namespace testsupport {

using namespace hypercent;

inline double rand_weight(std::mt19937& rng, double lo = 0.5, double hi = 2.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Hypergraph named_nodes(int n) {
    Hypergraph h;
    for (int i = 0; i < n; ++i) h.intern("n" + std::to_string(i));
    return h;
}

inline std::vector<NodeId> distinct_nodes(std::mt19937& rng, int n, int count) {
    std::vector<NodeId> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(count);
    return all;
}

inline std::vector<double> random_positive_vector(std::mt19937& rng, int n, double lo = 0.1,
                                                  double hi = 1.0) {
    std::vector<double> v(n);
    for (double& x : v) x = std::uniform_real_distribution<double>(lo, hi)(rng);
    return v;
}

inline std::vector<std::vector<double>> dense_matrix(const Digraph& g) {
    std::vector<std::vector<double>> a(g.node_count(), std::vector<double>(g.node_count(), 0.0));
    for (const Arc& arc : g.arcs()) a[arc.from][arc.to] = arc.weight;
    return a;
}

// Connected m-uniform undirected hypergraph: ring of window edges plus
// random extras.
inline Hypergraph random_undirected(std::mt19937& rng, int n, int m, int extra_edges) {
    Hypergraph h = named_nodes(n);
    for (int i = 0; i < n; ++i) {
        std::vector<NodeId> nodes(m);
        for (int j = 0; j < m; ++j) nodes[j] = (i + j) % n;
        h.add_edge(Hyperedge::undirected(std::move(nodes), rand_weight(rng)));
    }
    for (int e = 0; e < extra_edges; ++e)
        h.add_edge(Hyperedge::undirected(distinct_nodes(rng, n, m), rand_weight(rng)));
    return h;
}

inline Hypergraph random_cyclic(std::mt19937& rng, int n, int m, int extra_edges) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        Hypergraph h = named_nodes(n);
        for (int i = 0; i < n; ++i) {
            std::vector<NodeId> nodes(m);
            for (int j = 0; j < m; ++j) nodes[j] = (i + j) % n;
            h.add_edge(Hyperedge::cyclic(std::move(nodes), false, rand_weight(rng)));
        }
        for (int e = 0; e < extra_edges; ++e)
            h.add_edge(Hyperedge::cyclic(distinct_nodes(rng, n, m),
                                         std::bernoulli_distribution(0.5)(rng), rand_weight(rng)));
        if (is_strongly_connected(OrbitTensor::from_hypergraph(h))) return h;
    }
    throw std::logic_error("random_cyclic: no strongly connected instance found");
}

// Tail-uniform directed hypergraph with |tail| = split and |head| =
// m - split per edge, strongly connected through its transposed flow
// graph. Single-head edges ride a backward ring; multi-head edges chain
// overlapping head windows.
inline Hypergraph random_directed_uniform(std::mt19937& rng, int n, int m, int split,
                                          int extra_edges) {
    int head_size = m - split;
    for (int attempt = 0; attempt < 50; ++attempt) {
        Hypergraph h = named_nodes(n);
        for (int i = 0; i < n; ++i) {
            std::vector<NodeId> tail(split), head(head_size);
            for (int j = 0; j < split; ++j) tail[j] = (i + j) % n;
            for (int j = 0; j < head_size; ++j) head[j] = (i + split + j) % n;
            h.add_edge(Hyperedge::directed(std::move(tail), std::move(head), rand_weight(rng)));
        }
        for (int e = 0; e < extra_edges; ++e) {
            std::vector<NodeId> nodes = distinct_nodes(rng, n, m);
            std::vector<NodeId> tail(nodes.begin(), nodes.begin() + split);
            std::vector<NodeId> head(nodes.begin() + split, nodes.end());
            h.add_edge(Hyperedge::directed(std::move(tail), std::move(head), rand_weight(rng)));
        }
        if (is_strongly_connected(OrbitTensor::from_hypergraph(h))) return h;
    }
    throw std::logic_error("random_directed_uniform: no strongly connected instance found");
}

// Tail-uniform hypergraph with mixed head sizes (1 or 2), strongly
// connected through the head -> tail flow graph.
inline Hypergraph random_tail_uniform(std::mt19937& rng, int n, int tail_size, int extra_edges) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        Hypergraph h = named_nodes(n);
        for (int i = 0; i < n; ++i) {
            std::vector<NodeId> tail(tail_size);
            for (int j = 0; j < tail_size; ++j) tail[j] = (i + j) % n;
            h.add_edge(Hyperedge::directed(std::move(tail), {(i + tail_size) % n},
                                           rand_weight(rng)));
        }
        for (int e = 0; e < extra_edges; ++e) {
            int head_size = 1 + std::bernoulli_distribution(0.4)(rng);
            if (tail_size + head_size > n) head_size = 1;
            std::vector<NodeId> nodes = distinct_nodes(rng, n, tail_size + head_size);
            std::vector<NodeId> tail(nodes.begin(), nodes.begin() + tail_size);
            std::vector<NodeId> head(nodes.begin() + tail_size, nodes.end());
            h.add_edge(Hyperedge::directed(std::move(tail), std::move(head), rand_weight(rng)));
        }
        if (scc(directed_flow_graph(h, true)).is_strongly_connected) return h;
    }
    throw std::logic_error("random_tail_uniform: no strongly connected instance found");
}

// All tails are singletons; derived digraph strongly connected.
inline Hypergraph random_f_hypergraph(std::mt19937& rng, int n, int extra_edges) {
    Hypergraph h = named_nodes(n);
    for (int i = 0; i < n; ++i) {
        int head_size = 1 + std::bernoulli_distribution(0.5)(rng);
        std::vector<NodeId> head{(i + 1) % n};
        if (head_size == 2 && n > 2) head.push_back((i + 2) % n);
        h.add_edge(Hyperedge::directed({i}, std::move(head), rand_weight(rng)));
    }
    for (int e = 0; e < extra_edges; ++e) {
        std::vector<NodeId> nodes = distinct_nodes(rng, n, std::min(3, n));
        h.add_edge(Hyperedge::directed({nodes[0]}, {nodes.begin() + 1, nodes.end()},
                                       rand_weight(rng)));
    }
    return h;  // ring arcs i -> i+1 make the derived digraph strongly connected
}

inline Digraph random_sc_digraph(std::mt19937& rng, int n, double arc_prob, double wlo = 1.0,
                                 double whi = 3.0) {
    Digraph g(n);
    for (int i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n, rand_weight(rng, wlo, whi));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && coin(rng) < arc_prob) g.add_arc(i, j, rand_weight(rng, wlo, whi));
    return g;
}

// Ordered-class tensor with arbitrary tuples (repeats allowed).
inline OrbitTensor random_ordered_tensor(std::mt19937& rng, int n, int m, int entry_count) {
    std::uniform_int_distribution<int> node(0, n - 1);
    std::vector<TensorEntry> entries;
    for (int e = 0; e < entry_count; ++e) {
        std::vector<NodeId> idx(m);
        for (NodeId& v : idx) v = node(rng);
        entries.push_back({std::move(idx), 0, rand_weight(rng)});
    }
    return OrbitTensor::from_entries(SymmetryTag::ordered_kstep, m, n, std::move(entries));
}

// Every walk of the operator's base graph as an explicit ordered entry;
// used to build strongly connected ordered-class instances.
inline OrbitTensor ordered_from_kstep(const KStepOperator& op) {
    const int n = op.node_count();
    const auto a = dense_matrix(op.base());
    std::vector<TensorEntry> entries;
    std::vector<NodeId> walk(op.order());
    auto extend = [&](auto&& self, int depth, double prod) -> void {
        if (depth == op.order()) {
            entries.push_back({walk, 0, prod});
            return;
        }
        for (int next = 0; next < n; ++next) {
            double w = a[walk[depth - 1]][next];
            if (w > 0.0) {
                walk[depth] = next;
                self(self, depth + 1, prod * w);
            }
        }
    };
    for (int first = 0; first < n; ++first) {
        walk[0] = first;
        extend(extend, 1, 1.0);
    }
    return OrbitTensor::from_entries(SymmetryTag::ordered_kstep, op.order(), n,
                                     std::move(entries));
}

// One single-head edge per head node, tail kept; identical eigenproblem
// to the solver's per-edge reading.
inline Hypergraph b_split(const Hypergraph& h) {
    Hypergraph out;
    for (int i = 0; i < h.node_count(); ++i) out.intern(h.nodes().label(i));
    for (const Hyperedge& e : h.edges())
        for (NodeId head : e.head)
            out.add_edge(Hyperedge::directed(e.tail, {head}, e.weight));
    return out;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace testsupport
