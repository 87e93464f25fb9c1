#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hypercent {

/// Descending-score ranking with average ranks for ties (rank 1 = top).
struct Ranking {
    std::vector<int> order;      // node ids, score descending, ties by id
    std::vector<double> ranks;   // per node id, 1-based; tied groups share the mean position
};

Ranking rank_descending(const std::vector<double>& scores);

/// Spearman's rho: Pearson correlation of the average-rank vectors.
/// Throws degenerate_input when either vector is constant.
double spearman(const std::vector<double>& a, const std::vector<double>& b);

struct RankComparison {
    double rho_full = 0.0;
    std::vector<std::pair<int, double>> curve_ab;
    std::vector<std::pair<int, double>> curve_ba;
};

/// Top-K correlation curves in both directions. Direction a->b at K
/// correlates the rank positions of a's top-K nodes (1..K in a when
/// tie-free) against those nodes' positions in b's full ranking; b->a is
/// symmetric. K = N is always included, where both directions equal
/// rho_full.
RankComparison topk_curve(const std::vector<double>& a, const std::vector<double>& b,
                          std::vector<int> ks);

/// Near-logarithmic K grid from 2 to n, n included.
std::vector<int> default_k_grid(int n);

/// Per-method columns of the n top-scored node labels, score descending,
/// ties by lexicographically smaller label.
std::vector<std::vector<std::string>> top_n_table(
    const std::vector<std::pair<std::string, std::vector<double>>>& results,
    const std::vector<std::string>& labels, int n);

}  // namespace hypercent
