#include "hypercent/oracle.hpp"

#include <cmath>
#include <limits>

#include "hypercent/errors.hpp"

namespace hypercent::oracle {

std::vector<double> dense_apply(const DenseTensor& t, const std::vector<double>& c) {
    const int n = t.node_count();
    const int m = t.order();
    if (static_cast<int>(c.size()) != n) fail(errc::length_mismatch, "vector length != N");

    std::vector<double> x(n, 0.0);
    std::vector<int> idx(m, 0);
    for (int i1 = 0; i1 < n; ++i1) {
        idx.assign(m, 0);
        idx[0] = i1;
        double sum = 0.0;
        // Odometer over the trailing m-1 indices.
        while (true) {
            double term = t.at(idx);
            if (term != 0.0) {
                for (int pos = 1; pos < m; ++pos) term *= c[idx[pos]];
                sum += term;
            }
            int pos = m - 1;
            while (pos >= 1) {
                if (++idx[pos] < n) break;
                idx[pos] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
        x[i1] = sum;
    }
    return x;
}

DenseEig dense_hec(const DenseTensor& t, double tol, double shift, int max_iter) {
    const int n = t.node_count();
    const int degree = t.order() - 1;
    std::vector<double> x(n, 1.0 / n);
    DenseEig out;
    for (int iter = 1; iter <= max_iter; ++iter) {
        std::vector<double> y = dense_apply(t, x);
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (int i = 0; i < n; ++i) {
            double xp = std::pow(x[i], degree);
            y[i] += shift * xp;
            double ratio = xp > 0.0 ? y[i] / xp : std::numeric_limits<double>::infinity();
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        if (hi - lo < tol) {
            out.converged = true;
            out.lambda = 0.5 * (lo + hi) - shift;
            break;
        }
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            x[i] = std::pow(y[i], 1.0 / degree);
            sum += x[i];
        }
        if (!(sum > 0.0)) break;
        for (double& v : x) v /= sum;
    }
    double sum = 0.0;
    for (double v : x) sum += v;
    if (sum > 0.0)
        for (double& v : x) v /= sum;
    out.scores = std::move(x);
    if (!out.converged) fail(errc::not_converged, "dense power iteration did not converge");
    return out;
}

DenseTensor enumerate_walks(const std::vector<std::vector<double>>& a, int walk_order) {
    const int n = static_cast<int>(a.size());
    if (walk_order < 2) fail(errc::k_out_of_range, "walk order must be >= 2");
    DenseTensor t(walk_order, n);
    std::vector<int> idx(walk_order, 0);
    do {
        double prod = 1.0;
        for (int pos = 0; pos + 1 < walk_order; ++pos) prod *= a[idx[pos]][idx[pos + 1]];
        if (prod != 0.0) t.at(idx) = prod;
    } while (advance_index(idx, n));
    return t;
}

}  // namespace hypercent::oracle
