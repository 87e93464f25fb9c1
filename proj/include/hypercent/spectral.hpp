#pragma once

#include <optional>
#include <vector>

#include "hypercent/connectivity.hpp"
#include "hypercent/hypergraph.hpp"
#include "hypercent/tensor.hpp"

namespace hypercent {

struct SolverConfig {
    double tol = 1e-10;   // convergence: Collatz-Wielandt bracket width < tol
    int max_iter = 10000;
    double shift = 1.0;   // rho_shift added as shift * x^[degree], removed from lambda
    bool force = false;   // skip the strong-connectivity precondition check
    /// Strictly positive start vector; uniform 1/N when absent.
    std::optional<std::vector<double>> start;
};

/// All solvers L1-normalize scores. A non-converged run is returned with
/// converged = false rather than thrown; callers that cannot use partial
/// results (e.g. rankings_csv) raise not_converged.
struct CentralityResult {
    std::vector<double> scores;
    double lambda = 0.0;
    int iterations = 0;
    double residual = 0.0;  // final bracket width
    bool converged = false;
};

/// Perron-like H-eigenvector of the transposed tensor: solves
/// lambda c^[m-1] = T^t c..c by shifted power iteration, lambda bracketed
/// by min/max of y_i / x_i^(m-1).
CentralityResult hec(const OrbitTensor& t, const SolverConfig& cfg = {});

/// Directed variant over the edge list of a tail-uniform hypergraph:
/// lambda c_j^{m_T} = sum_{e : j in head(e)} w_e prod_{i in tail(e)} c_i.
/// Tail-permutation multiplicity is absorbed into lambda, so the
/// orbit-tensor route reports lambda exactly m_T! times larger for the
/// same normalized scores.
CentralityResult hec_directed(const Hypergraph& h, const SolverConfig& cfg = {});

/// Linear centrality of a hypergraph whose every tail is a singleton:
/// eigenvector centrality of the digraph with one arc tail -> head node
/// per head per edge (per-edge coefficient 1; mixed head sizes allowed).
CentralityResult ec_f_hypergraph(const Hypergraph& h, const SolverConfig& cfg = {});

/// Standard eigenvector centrality: Perron vector of g^T.
CentralityResult ec_projection(const Digraph& g, const SolverConfig& cfg = {});

/// H-eigenvector centrality of the k-step tensor (degree k-1), using the
/// implicit transposed contraction.
CentralityResult kstep_centrality(const KStepOperator& op, const SolverConfig& cfg = {});

}  // namespace hypercent
