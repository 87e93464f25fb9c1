#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "hypercent/digraph.hpp"

namespace hypercent {

using NodeId = int;

/// Bijective label <-> dense id mapping. Ids are assigned contiguously
/// in interning order.
class NodeRegistry {
  public:
    NodeId intern(const std::string& label);
    std::optional<NodeId> find(const std::string& label) const;
    const std::string& label(NodeId id) const;
    const std::vector<std::string>& labels() const { return labels_; }
    int size() const { return static_cast<int>(labels_.size()); }

    bool operator==(const NodeRegistry& other) const { return labels_ == other.labels_; }

  private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> ids_;
};

enum class EdgeKind { undirected, cyclic, directed };

/// A single hyperedge. Use the factory functions; they validate and
/// canonicalize node content:
///   - undirected: nodes sorted ascending
///   - cyclic: nodes replaced by the lexicographically smallest tuple of
///     the edge's permutation orbit (the orbit is the set of arrangements
///     of the node set whose parity matches the given tuple/orientation);
///     after canonicalization the orbit is always "even permutations of
///     the stored tuple"
///   - directed: tail and head sorted ascending, disjoint, both nonempty
struct Hyperedge {
    EdgeKind kind = EdgeKind::undirected;
    std::vector<NodeId> nodes;  // undirected / cyclic membership
    std::vector<NodeId> tail;   // directed only
    std::vector<NodeId> head;   // directed only
    double weight = 1.0;

    static Hyperedge undirected(std::vector<NodeId> nodes, double weight = 1.0);
    static Hyperedge cyclic(std::vector<NodeId> nodes, bool odd_orientation = false,
                            double weight = 1.0);
    static Hyperedge directed(std::vector<NodeId> tail, std::vector<NodeId> head,
                              double weight = 1.0);

    /// Total number of participating nodes.
    int size() const;
    /// All participating nodes (directed: tail then head).
    std::vector<NodeId> all_nodes() const;

    bool operator==(const Hyperedge&) const = default;
};

class Hypergraph {
  public:
    NodeId intern(const std::string& label) { return nodes_.intern(label); }
    const NodeRegistry& nodes() const { return nodes_; }
    int node_count() const { return nodes_.size(); }

    /// Appends the edge, or sums weights if an edge with identical kind
    /// and canonical node content already exists.
    void add_edge(Hyperedge e);

    const std::vector<Hyperedge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool all_edges_are(EdgeKind kind) const;
    std::vector<int> kind_counts() const;  // indexed by EdgeKind

    /// Common hyperedge size m, or throws non_uniform naming the two
    /// offending sizes. Directed edges count |tail| + |head|.
    int uniformity() const;

    /// Common tail cardinality of an all-directed hypergraph. Throws
    /// not_directed (also for an empty edge list) or non_tail_uniform.
    int tail_uniformity() const;

    /// Clique-expands undirected/cyclic edges (symmetric arcs of weight w
    /// per unordered pair) and fans directed edges out tail -> head.
    Digraph project() const;

    /// Sub-hypergraph on the given nodes (relative label order preserved,
    /// ids recompacted); keeps only edges with every endpoint retained.
    Hypergraph induced(const std::vector<NodeId>& keep) const;

    /// Node relabeling by permutation (new_id = perm[old_id]).
    Hypergraph relabeled(const std::vector<NodeId>& perm) const;

    bool operator==(const Hypergraph& other) const {
        return nodes_ == other.nodes_ && edges_ == other.edges_;
    }

  private:
    NodeRegistry nodes_;
    std::vector<Hyperedge> edges_;
    std::map<std::tuple<int, std::vector<NodeId>, std::vector<NodeId>, std::vector<NodeId>>,
             std::size_t>
        edge_index_;
};

}  // namespace hypercent
