#include "hypercent/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "hypercent/errors.hpp"

namespace hypercent {

namespace {

std::vector<double> start_vector(int n, const SolverConfig& cfg) {
    if (!cfg.start) return std::vector<double>(n, 1.0 / n);
    if (static_cast<int>(cfg.start->size()) != n)
        fail(errc::length_mismatch, "start vector length != N");
    double sum = 0.0;
    for (double v : *cfg.start) {
        if (!(v > 0.0) || !std::isfinite(v))
            fail(errc::non_finite_input, "start vector must be strictly positive and finite");
        sum += v;
    }
    std::vector<double> x = *cfg.start;
    for (double& v : x) v /= sum;
    return x;
}

// Shifted power iteration for lambda c^[degree] = F(c), with F the
// contraction of the (already transposed) tensor. The spectral radius is
// bracketed by min/max of y_i / x_i^degree each step; convergence is
// bracket width < tol. The shift term shift * x^[degree] keeps iterates
// positive on imprimitive inputs and is subtracted from the reported
// lambda.
CentralityResult power_iterate(int n, int degree,
                               const std::function<std::vector<double>(const std::vector<double>&)>& contract,
                               const SolverConfig& cfg) {
    if (cfg.tol <= 0.0) fail(errc::non_finite_input, "tol must be > 0");
    if (cfg.max_iter < 1) fail(errc::k_out_of_range, "max_iter must be >= 1");
    if (cfg.shift < 0.0) fail(errc::non_finite_input, "shift must be >= 0");

    std::vector<double> x = start_vector(n, cfg);
    CentralityResult result;
    result.residual = std::numeric_limits<double>::infinity();

    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        std::vector<double> y = contract(x);
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (int i = 0; i < n; ++i) {
            double xp = std::pow(x[i], degree);
            y[i] += cfg.shift * xp;
            double ratio = xp > 0.0 ? y[i] / xp : std::numeric_limits<double>::infinity();
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        result.iterations = iter;
        result.residual = hi - lo;
        if (result.residual < cfg.tol) {
            result.converged = true;
            result.lambda = 0.5 * (lo + hi) - cfg.shift;
            break;
        }
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            x[i] = std::pow(y[i], 1.0 / degree);
            sum += x[i];
        }
        if (!(sum > 0.0) || !std::isfinite(sum)) {
            result.lambda = 0.5 * (lo + hi) - cfg.shift;
            break;  // iteration collapsed; reported as not converged
        }
        for (double& v : x) v /= sum;
        if (iter == cfg.max_iter) result.lambda = 0.5 * (lo + hi) - cfg.shift;
    }

    double sum = 0.0;
    for (double v : x) sum += v;
    if (sum > 0.0)
        for (double& v : x) v /= sum;
    result.scores = std::move(x);
    return result;
}

}  // namespace

CentralityResult hec(const OrbitTensor& t, const SolverConfig& cfg) {
    if (!cfg.force && !is_strongly_connected(t))
        fail(errc::not_strongly_connected, "transposed tensor's induced graph is not strongly connected");
    OrbitTensor tt = t.transposed();
    return power_iterate(
        t.node_count(), t.order() - 1, [&tt](const std::vector<double>& x) { return tt.apply(x); },
        cfg);
}

CentralityResult hec_directed(const Hypergraph& h, const SolverConfig& cfg) {
    int mt = h.tail_uniformity();
    if (!cfg.force && !scc(directed_flow_graph(h, /*transposed=*/true)).is_strongly_connected)
        fail(errc::not_strongly_connected, "transposed flow graph is not strongly connected");
    const auto& edges = h.edges();
    auto contract = [&edges, n = h.node_count()](const std::vector<double>& x) {
        std::vector<double> y(n, 0.0);
        for (const Hyperedge& e : edges) {
            double prod = e.weight;
            for (NodeId i : e.tail) prod *= x[i];
            for (NodeId j : e.head) y[j] += prod;
        }
        return y;
    };
    return power_iterate(h.node_count(), mt, contract, cfg);
}

CentralityResult ec_f_hypergraph(const Hypergraph& h, const SolverConfig& cfg) {
    if (h.edge_count() == 0) fail(errc::not_f_hypergraph, "no hyperedges");
    for (const Hyperedge& e : h.edges())
        if (e.kind != EdgeKind::directed || e.tail.size() != 1)
            fail(errc::not_f_hypergraph, "every hyperedge must be directed with a single tail node");
    Digraph g = directed_flow_graph(h, /*transposed=*/false);
    if (!cfg.force && !is_strongly_connected(g))
        fail(errc::not_strongly_connected, "derived digraph is not strongly connected");
    return power_iterate(
        g.node_count(), 1, [&g](const std::vector<double>& x) { return g.multiply_transposed(x); },
        cfg);
}

CentralityResult ec_projection(const Digraph& g, const SolverConfig& cfg) {
    if (g.node_count() < 1) fail(errc::index_out_of_range, "empty graph");
    if (!cfg.force && !is_strongly_connected(g))
        fail(errc::not_strongly_connected, "graph is not strongly connected");
    return power_iterate(
        g.node_count(), 1, [&g](const std::vector<double>& x) { return g.multiply_transposed(x); },
        cfg);
}

CentralityResult kstep_centrality(const KStepOperator& op, const SolverConfig& cfg) {
    if (!cfg.force && !is_strongly_connected(op))
        fail(errc::not_strongly_connected, "k-step hypergraph is not strongly connected");
    return power_iterate(
        op.node_count(), op.order() - 1,
        [&op](const std::vector<double>& x) { return op.apply(x); }, cfg);
}

}  // namespace hypercent
