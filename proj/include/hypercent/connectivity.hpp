#pragma once

#include <vector>

#include "hypercent/digraph.hpp"
#include "hypercent/hypergraph.hpp"
#include "hypercent/tensor.hpp"

namespace hypercent {

struct SccReport {
    std::vector<std::vector<int>> components;  // node-sorted; partition of 0..N-1
    std::vector<int> component_of;             // node -> index into components
    int largest = -1;                          // most nodes, ties by smallest min node id
    bool is_strongly_connected = false;
};

/// Strongly connected components of the digraph with arc i->j iff the
/// stored weight is positive. A single node counts as strongly connected.
SccReport scc(const Digraph& g);

/// M_ij = sum_{j3..jm} T_{i j j3..jm}, evaluated exactly from orbits.
Digraph induced_matrix(const OrbitTensor& t);

/// Same, without materializing: M_ij = a_ij * (weighted count of
/// (k-2)-walks starting at j).
Digraph induced_matrix(const KStepOperator& op);

/// Strong connectivity of the *transposed* tensor's induced graph, which
/// is what existence/uniqueness of the centrality fixed point needs.
bool is_strongly_connected(const OrbitTensor& t);
bool is_strongly_connected(const KStepOperator& op);
bool is_strongly_connected(const Digraph& g);

/// Pairwise flow graph of a directed hypergraph with every multi-head
/// edge read as one single-head edge per head node: arcs head -> tail
/// when transposed is true (the solver's connectivity requirement),
/// tail -> head otherwise.
Digraph directed_flow_graph(const Hypergraph& h, bool transposed);

/// Largest strongly connected sub-hypergraph with uniform tail
/// cardinality: drops edges with |tail| != tail_cardinality, restricts to
/// the largest SCC of the transposed flow graph, and repeats to a
/// fixpoint. Returns an empty hypergraph when nothing survives.
Hypergraph b_uniform_core(const Hypergraph& h, int tail_cardinality);

}  // namespace hypercent
