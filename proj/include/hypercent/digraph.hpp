#pragma once

#include <map>
#include <utility>
#include <vector>

namespace hypercent {

struct Arc {
    int from = 0;
    int to = 0;
    double weight = 0.0;

    bool operator==(const Arc&) const = default;
};

/// Sparse weighted digraph over nodes 0..N-1. Only strictly positive
/// weights are stored; a missing arc has weight zero. The same type
/// represents pairwise projections of hypergraphs and induced matrices
/// (arc i->j iff M_ij > 0).
class Digraph {
  public:
    Digraph() = default;
    explicit Digraph(int node_count);

    int node_count() const { return n_; }
    std::size_t arc_count() const { return weights_.size(); }

    /// Accumulates weight onto an existing arc. weight must be > 0.
    void add_arc(int from, int to, double weight);

    double weight(int from, int to) const;

    /// Arcs in (from, to) lexicographic order.
    std::vector<Arc> arcs() const;

    Digraph transposed() const;

    /// y = A x
    std::vector<double> multiply(const std::vector<double>& x) const;
    /// y = A^T x
    std::vector<double> multiply_transposed(const std::vector<double>& x) const;

    /// Out-neighbour lists (targets only), index = source node.
    std::vector<std::vector<int>> out_neighbors() const;

    bool operator==(const Digraph&) const = default;

  private:
    int n_ = 0;
    std::map<std::pair<int, int>, double> weights_;
};

}  // namespace hypercent
