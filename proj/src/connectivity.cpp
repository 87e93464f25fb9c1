#include "hypercent/connectivity.hpp"

#include <algorithm>

#include "hypercent/errors.hpp"

namespace hypercent {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

bool odd_parity(const std::vector<NodeId>& tuple) {
    int inversions = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] > tuple[j]) ++inversions;
    return inversions % 2 != 0;
}

}  // namespace

SccReport scc(const Digraph& g) {
    const int n = g.node_count();
    const auto adj = g.out_neighbors();

    SccReport report;
    report.component_of.assign(n, -1);
    std::vector<int> number(n, -1), low(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int counter = 0;

    // Iterative Tarjan; frame = (node, next out-neighbour position).
    struct Frame {
        int node;
        std::size_t next;
    };
    std::vector<Frame> frames;
    for (int root = 0; root < n; ++root) {
        if (number[root] != -1) continue;
        frames.push_back({root, 0});
        number[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& frame = frames.back();
            int v = frame.node;
            if (frame.next < adj[v].size()) {
                int w = adj[v][frame.next++];
                if (number[w] == -1) {
                    number[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], number[w]);
                }
                continue;
            }
            frames.pop_back();
            if (!frames.empty()) low[frames.back().node] = std::min(low[frames.back().node], low[v]);
            if (low[v] == number[v]) {
                std::vector<int> component;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    report.component_of[w] = static_cast<int>(report.components.size());
                    component.push_back(w);
                } while (w != v);
                std::sort(component.begin(), component.end());
                report.components.push_back(std::move(component));
            }
        }
    }

    for (std::size_t i = 0; i < report.components.size(); ++i) {
        if (report.largest < 0) {
            report.largest = static_cast<int>(i);
            continue;
        }
        const auto& best = report.components[report.largest];
        const auto& cur = report.components[i];
        if (cur.size() > best.size() || (cur.size() == best.size() && cur.front() < best.front()))
            report.largest = static_cast<int>(i);
    }
    report.is_strongly_connected = report.components.size() == 1 && n > 0;
    return report;
}

Digraph induced_matrix(const OrbitTensor& t) {
    const int m = t.order();
    Digraph matrix(t.node_count());
    for (const TensorEntry& entry : t.entries()) {
        switch (t.symmetry().tag) {
            case SymmetryTag::full_symmetric: {
                double w = entry.weight * factorial(m - 2);
                for (NodeId u : entry.index)
                    for (NodeId v : entry.index)
                        if (u != v) matrix.add_arc(u, v, w);
                break;
            }
            case SymmetryTag::cyclic_even:
            case SymmetryTag::cyclic_odd: {
                bool orbit_odd =
                    odd_parity(entry.index) != (t.symmetry().tag == SymmetryTag::cyclic_odd);
                if (m == 2) {
                    NodeId a = entry.index[0], b = entry.index[1];
                    if (t.symmetry().tag == SymmetryTag::cyclic_odd) std::swap(a, b);
                    matrix.add_arc(a, b, entry.weight);
                    break;
                }
                if (m == 3) {
                    // One arrangement per ordered pair; it contributes only
                    // when its parity matches the orbit's.
                    const auto& e = entry.index;
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 3; ++j) {
                            if (i == j) continue;
                            std::vector<NodeId> tuple{e[i], e[j], e[3 - i - j]};
                            if (odd_parity(tuple) == orbit_odd)
                                matrix.add_arc(e[i], e[j], entry.weight);
                        }
                    break;
                }
                double w = entry.weight * factorial(m - 2) / 2.0;
                for (NodeId u : entry.index)
                    for (NodeId v : entry.index)
                        if (u != v) matrix.add_arc(u, v, w);
                break;
            }
            case SymmetryTag::tail_symmetric_directed: {
                int p = entry.split;
                auto tail_begin = entry.index.begin();
                auto head_begin = entry.index.begin() + p;
                if (p >= 2) {
                    // The first two positions are both tail slots.
                    double w = entry.weight * factorial(p - 2) * factorial(m - p);
                    for (auto u = tail_begin; u != head_begin; ++u)
                        for (auto v = tail_begin; v != head_begin; ++v)
                            if (*u != *v) matrix.add_arc(*u, *v, w);
                } else {
                    double w = entry.weight * factorial(m - 2);
                    for (auto v = head_begin; v != entry.index.end(); ++v)
                        matrix.add_arc(*tail_begin, *v, w);
                }
                break;
            }
            case SymmetryTag::ordered_kstep:
                matrix.add_arc(entry.index[0], entry.index[1], entry.weight);
                break;
        }
    }
    return matrix;
}

Digraph induced_matrix(const KStepOperator& op) {
    const int n = op.node_count();
    // s_j = weighted count of (k-2)-walks starting at j.
    std::vector<double> s(n, 1.0);
    for (int step = 0; step < op.order() - 2; ++step) s = op.base().multiply(s);
    Digraph matrix(n);
    for (const Arc& arc : op.base().arcs())
        if (arc.weight * s[arc.to] > 0.0) matrix.add_arc(arc.from, arc.to, arc.weight * s[arc.to]);
    return matrix;
}

bool is_strongly_connected(const OrbitTensor& t) {
    return scc(induced_matrix(t.transposed())).is_strongly_connected;
}

bool is_strongly_connected(const KStepOperator& op) {
    return scc(induced_matrix(op.transposed())).is_strongly_connected;
}

bool is_strongly_connected(const Digraph& g) { return scc(g).is_strongly_connected; }

Digraph directed_flow_graph(const Hypergraph& h, bool transposed) {
    Digraph g(h.node_count());
    for (const Hyperedge& e : h.edges()) {
        if (e.kind != EdgeKind::directed) fail(errc::not_directed, "non-directed hyperedge present");
        for (NodeId head : e.head)
            for (NodeId tail : e.tail) {
                if (transposed)
                    g.add_arc(head, tail, e.weight);
                else
                    g.add_arc(tail, head, e.weight);
            }
    }
    return g;
}

Hypergraph b_uniform_core(const Hypergraph& h, int tail_cardinality) {
    for (const Hyperedge& e : h.edges())
        if (e.kind != EdgeKind::directed) fail(errc::not_directed, "non-directed hyperedge present");

    Hypergraph core;
    for (NodeId v = 0; v < h.node_count(); ++v) core.intern(h.nodes().label(v));
    for (const Hyperedge& e : h.edges())
        if (static_cast<int>(e.tail.size()) == tail_cardinality) core.add_edge(e);

    while (true) {
        if (core.edge_count() == 0) return Hypergraph{};
        SccReport report = scc(directed_flow_graph(core, /*transposed=*/true));
        const std::vector<int>& keep = report.components[report.largest];
        if (static_cast<int>(keep.size()) == core.node_count()) return core;
        core = core.induced(keep);
    }
}

}  // namespace hypercent
