#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypercent/digraph.hpp"
#include "hypercent/hypergraph.hpp"
#include "hypercent/ranking.hpp"
#include "hypercent/spectral.hpp"

namespace hypercent {

/// Hyperedge file grammar, one edge per line:
///   # comment (to end of line)
///   A,B,C [: w]          undirected
///   cyc A,B,C [: w]      cyclic, orbit = even permutations of the listed order
///   A,B -> C,D [: w]     directed (tail -> head)
/// Default weight 1. Labels are arbitrary tokens without ',', '->' or
/// ':' (the last ':' starts the weight clause); surrounding whitespace is
/// trimmed. Labels are interned in first-appearance order. Identical
/// edges merge by weight summation.
Hypergraph parse_hyperedges(const std::string& text);

std::string serialize_hyperedges(const Hypergraph& h);

/// Reaction lines `A + B -> C + D`, one directed edge per line with
/// weight 1 (duplicate lines merge). A leading integer token in a
/// species chunk (`2 H`) is a stoichiometric coefficient and is dropped;
/// repeated species within one side collapse (set semantics). Blank
/// lines are skipped; there is no comment syntax ('#' may appear in
/// species names).
Hypergraph parse_reactions(const std::string& text);

struct LabeledDigraph {
    Digraph graph;
    NodeRegistry nodes;
};

/// Edge-list lines `src dst [w]`, whitespace-separated, default w = 1.
/// Lines starting with '#' and blank lines are skipped. Duplicate arcs
/// accumulate. With undirected = true every arc is mirrored (self-loops
/// are added once).
LabeledDigraph parse_edgelist(const std::string& text, bool undirected = false);

/// CSV `node,score,rank`, rows score-descending (ties by label).
/// Refuses unconverged results unless allow_unconverged.
std::string rankings_csv(const CentralityResult& r, const Ranking& ranking,
                         const std::vector<std::string>& labels,
                         bool allow_unconverged = false);

/// JSON mirror of the CSV, plus lambda / iterations / residual / converged.
std::string rankings_json(const CentralityResult& r, const Ranking& ranking,
                          const std::vector<std::string>& labels,
                          bool allow_unconverged = false);

struct RankingsDoc {
    std::vector<std::string> nodes;  // row order of the document
    std::vector<double> scores;
    std::vector<double> ranks;
    double lambda = 0.0;
    int iterations = 0;
    double residual = 0.0;
    bool converged = false;
};

RankingsDoc parse_rankings_json(const std::string& text);

/// Reads back `node,score[,rank]` CSV into (label, score) pairs.
std::vector<std::pair<std::string, double>> parse_scores_csv(const std::string& text);

/// Curve CSV `K,rho_ab,rho_ba`, one row per sampled K, final row K = N.
std::string comparison_csv(const RankComparison& cmp);

/// Shortest round-trip decimal form of a double (used by every writer so
/// output bytes are stable).
std::string format_double(double value);

std::string read_file(const std::string& path);           // io_error on failure
void write_file(const std::string& path, const std::string& content);

}  // namespace hypercent
