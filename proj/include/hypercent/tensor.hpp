#pragma once

#include <span>
#include <vector>

#include "hypercent/dense_tensor.hpp"
#include "hypercent/digraph.hpp"
#include "hypercent/hypergraph.hpp"

namespace hypercent {

/// How the index tuples of one stored entry expand into tensor components
/// sharing that entry's weight:
///   full_symmetric          all permutations of the tuple
///   cyclic_even             all even permutations of the tuple
///   cyclic_odd              all odd permutations of the tuple
///   tail_symmetric_directed all (tail-block permutation) x (head-block
///                           permutation) combinations, blocks kept in place
///   ordered_kstep           the tuple itself, no symmetry
enum class SymmetryTag {
    full_symmetric,
    cyclic_even,
    cyclic_odd,
    tail_symmetric_directed,
    ordered_kstep,
};

struct SymmetryClass {
    SymmetryTag tag = SymmetryTag::full_symmetric;
    /// Common leading-block (tail) size for tail_symmetric_directed
    /// tensors; -1 when entries mix block sizes or the tag has no blocks.
    int tail_count = -1;

    bool operator==(const SymmetryClass&) const = default;
};

struct TensorEntry {
    std::vector<NodeId> index;  // canonical tuple, see OrbitTensor invariants
    int split = 0;              // leading-block length (tail_symmetric_directed only)
    double weight = 0.0;

    bool operator==(const TensorEntry&) const = default;
};

/// Sparse adjacency tensor stored one orbit per entry. Canonical entry
/// forms: full_symmetric sorted; cyclic_even/odd the lexicographically
/// smallest generator of the orbit (sorted tuple, or sorted with the last
/// two indices swapped, depending on the orbit's permutation parity);
/// tail_symmetric_directed sorted tail block followed by sorted head
/// block; ordered_kstep as-is. Entries are sorted and duplicate orbits
/// merged, so equal tensors compare equal entry-wise.
class OrbitTensor {
  public:
    /// Requires a uniform, single-kind hypergraph. Undirected edges map
    /// to full_symmetric orbits, cyclic edges to cyclic_even orbits, and
    /// directed edges to tail_symmetric_directed orbits (tails first).
    static OrbitTensor from_hypergraph(const Hypergraph& h);

    /// Direct construction from entries; canonicalizes, validates and
    /// merges duplicates.
    static OrbitTensor from_entries(SymmetryTag tag, int order, int node_count,
                                    std::vector<TensorEntry> entries);

    int order() const { return order_; }
    int node_count() const { return n_; }
    const SymmetryClass& symmetry() const { return class_; }
    const std::vector<TensorEntry>& entries() const { return entries_; }

    /// Expanded component value at the given index tuple; 0 when no orbit
    /// covers it. Components covered by several directed orbits of
    /// different block splits accumulate additively.
    double component(std::span<const NodeId> index) const;

    /// Index permutation appropriate to the symmetry class:
    /// full_symmetric identity, cyclic full reversal (the class tag flips
    /// even<->odd), directed block swap (heads become the leading block),
    /// ordered_kstep tuple reversal. An involution for every class.
    OrbitTensor transposed() const;

    /// x_{i1} = sum_{i2..im} T_{i1 i2..im} c_{i2}..c_{im}, evaluated per
    /// orbit with closed-form permutation counts. Entries of c must be
    /// finite; evaluation order is fixed, results are reproducible.
    std::vector<double> apply(const std::vector<double>& c) const;

    bool operator==(const OrbitTensor&) const = default;

  private:
    int order_ = 0;
    int n_ = 0;
    SymmetryClass class_;
    std::vector<TensorEntry> entries_;
    std::vector<int> splits_;  // distinct entry splits, ascending
};

/// Implicit k-step tensor T_{i1..ik} = a_{i1 i2} ... a_{i(k-1) ik} of a
/// base digraph; never materialized. Undirected base graphs are expected
/// to be ingested as symmetric digraphs beforehand.
class KStepOperator {
  public:
    KStepOperator(Digraph base, int walk_order);

    const Digraph& base() const { return base_; }
    int order() const { return k_; }
    int node_count() const { return base_.node_count(); }

    /// Tuple reversal, realized as the operator over the transposed base.
    KStepOperator transposed() const;

    /// Contraction of the *transposed* k-step tensor:
    /// x_j = sum over walks v1 -> .. -> v_{k-1} -> j of the walk's arc
    /// weights times c_{v1}..c_{v_{k-1}}. Runs in O((k-1)|arcs|) as
    /// z(0) = 1, z(t) = A^T (c .* z(t-1)), x = z(k-1).
    std::vector<double> apply(const std::vector<double>& c) const;

    bool operator==(const KStepOperator&) const = default;

  private:
    Digraph base_;
    int k_ = 2;
};

/// Dense component array expansions, for small N only (default cap 10).
DenseTensor materialize(const OrbitTensor& t, int limit = 10);
DenseTensor materialize(const KStepOperator& op, int limit = 10);

}  // namespace hypercent
