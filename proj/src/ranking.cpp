#include "hypercent/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hypercent/errors.hpp"

namespace hypercent {

namespace {

// NaN when either vector is constant; spearman turns that into a loud
// error, the top-K curves emit it as an undefined point.
double pearson_or_nan(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = a.size();
    double mean_a = std::accumulate(a.begin(), a.end(), 0.0) / n;
    double mean_b = std::accumulate(b.begin(), b.end(), 0.0) / n;
    double cov = 0.0, var_a = 0.0, var_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double da = a[i] - mean_a;
        double db = b[i] - mean_b;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if (var_a == 0.0 || var_b == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return cov / std::sqrt(var_a * var_b);
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    double rho = pearson_or_nan(a, b);
    if (std::isnan(rho))
        fail(errc::degenerate_input, "constant score vector has no rank variance");
    return rho;
}

std::vector<double> ranks_of(const std::vector<double>& scores, std::vector<int>& order) {
    const std::size_t n = scores.size();
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&scores](int lhs, int rhs) {
        if (scores[lhs] != scores[rhs]) return scores[lhs] > scores[rhs];
        return lhs < rhs;
    });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
        double mean_rank = 0.5 * static_cast<double>(i + 1 + j + 1);  // 1-based positions
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = mean_rank;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

Ranking rank_descending(const std::vector<double>& scores) {
    Ranking r;
    r.ranks = ranks_of(scores, r.order);
    return r;
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2)
        fail(errc::length_mismatch, "score vectors must have equal length >= 2");
    std::vector<int> order;
    return pearson(ranks_of(a, order), ranks_of(b, order));
}

RankComparison topk_curve(const std::vector<double>& a, const std::vector<double>& b,
                          std::vector<int> ks) {
    const int n = static_cast<int>(a.size());
    if (a.size() != b.size() || n < 2)
        fail(errc::length_mismatch, "score vectors must have equal length >= 2");
    for (int k : ks)
        if (k < 2 || k > n)
            fail(errc::k_out_of_range, "K=" + std::to_string(k) + " outside 2.." + std::to_string(n));
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    if (ks.empty() || ks.back() != n) ks.push_back(n);

    Ranking ra = rank_descending(a);
    Ranking rb = rank_descending(b);

    RankComparison cmp;
    cmp.rho_full = pearson(ra.ranks, rb.ranks);
    auto direction = [&](const Ranking& by, const Ranking& other) {
        std::vector<std::pair<int, double>> curve;
        curve.reserve(ks.size());
        for (int k : ks) {
            if (k == n) {  // definitional endpoint, bit-identical in both directions
                curve.emplace_back(k, cmp.rho_full);
                continue;
            }
            std::vector<double> local(k), global(k);
            for (int i = 0; i < k; ++i) {
                int node = by.order[i];
                local[i] = by.ranks[node];
                global[i] = other.ranks[node];
            }
            curve.emplace_back(k, pearson(local, global));
        }
        return curve;
    };
    cmp.curve_ab = direction(ra, rb);
    cmp.curve_ba = direction(rb, ra);
    return cmp;
}

std::vector<int> default_k_grid(int n) {
    if (n < 2) fail(errc::k_out_of_range, "need at least 2 nodes");
    std::vector<int> ks;
    const int points = 24;
    for (int i = 0; i <= points; ++i) {
        double t = static_cast<double>(i) / points;
        int k = static_cast<int>(std::lround(2.0 * std::pow(n / 2.0, t)));
        ks.push_back(std::clamp(k, 2, n));
    }
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
}

std::vector<std::vector<std::string>> top_n_table(
    const std::vector<std::pair<std::string, std::vector<double>>>& results,
    const std::vector<std::string>& labels, int n) {
    std::vector<std::vector<std::string>> table;
    table.reserve(results.size());
    for (const auto& [method, scores] : results) {
        if (scores.size() != labels.size()) fail(errc::length_mismatch, "scores/labels mismatch");
        if (n > static_cast<int>(scores.size()))
            fail(errc::k_out_of_range, "table depth exceeds node count");
        std::vector<int> order(scores.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
            if (scores[lhs] != scores[rhs]) return scores[lhs] > scores[rhs];
            return labels[lhs] < labels[rhs];
        });
        std::vector<std::string> column;
        column.reserve(n);
        for (int i = 0; i < n; ++i) column.push_back(labels[order[i]]);
        table.push_back(std::move(column));
    }
    return table;
}

}  // namespace hypercent
