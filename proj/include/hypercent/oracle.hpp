#pragma once

#include <vector>

#include "hypercent/dense_tensor.hpp"

namespace hypercent::oracle {

/// Brute-force reference implementations used by tests. These share no
/// contraction code with the sparse path, so agreement between the two is
/// a real cross-check.

/// Nested-loop evaluation of x_{i1} = sum T_{i1..im} c_{i2}..c_{im}.
std::vector<double> dense_apply(const DenseTensor& t, const std::vector<double>& c);

struct DenseEig {
    std::vector<double> scores;  // L1-normalized
    double lambda = 0.0;
    bool converged = false;
};

/// Shifted power iteration over dense_apply on the tensor as given (pass
/// the already-transposed tensor when validating a centrality).
DenseEig dense_hec(const DenseTensor& t, double tol = 1e-10, double shift = 1.0,
                   int max_iter = 20000);

/// Explicit k-step tensor of a dense adjacency matrix by enumerating all
/// index tuples: T_{i1..ik} = a[i1][i2] * .. * a[i(k-1)][ik].
DenseTensor enumerate_walks(const std::vector<std::vector<double>>& a, int walk_order);

}  // namespace hypercent::oracle
