#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nrd/geometry.hpp"

namespace nrd {

using NodeId = std::string;
using EdgeId = std::string;

// Dense handles. Nodes and edges are stored sorted by id, so comparing
// handles is the same as comparing ids.
using NodeIndex = std::size_t;
using EdgeIndex = std::size_t;

/// Raised for malformed network input (duplicate ids, dangling references,
/// geometry that does not meet its nodes, asymmetric opposites).
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Node {
  NodeId id;
  Point position;
  std::vector<EdgeIndex> outgoing;  // ascending
};

struct DirectedEdge {
  EdgeId id;
  NodeIndex source = 0;
  NodeIndex destination = 0;
  Polyline geometry;
  std::optional<EdgeIndex> opposite;
};

struct NodeSpec {
  NodeId id;
  Point position;
};

struct EdgeSpec {
  EdgeId id;
  NodeId source;
  NodeId destination;
  std::vector<Point> geometry;
};

using OppositePairs = std::vector<std::pair<EdgeId, EdgeId>>;

class RoadGraph {
 public:
  RoadGraph() = default;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Node& node(NodeIndex n) const { return nodes_.at(n); }
  const DirectedEdge& edge(EdgeIndex e) const { return edges_.at(e); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<DirectedEdge>& edges() const { return edges_; }

  std::optional<NodeIndex> find_node(const NodeId& id) const;
  std::optional<EdgeIndex> find_edge(const EdgeId& id) const;
  /// Throws GraphError for unknown ids.
  NodeIndex node_index(const NodeId& id) const;
  EdgeIndex edge_index(const EdgeId& id) const;

  const std::vector<EdgeIndex>& outgoing_edges(NodeIndex n) const { return node(n).outgoing; }
  std::optional<EdgeIndex> opposite_of(EdgeIndex e) const { return edge(e).opposite; }

 private:
  friend RoadGraph build_graph(std::vector<NodeSpec>, std::vector<EdgeSpec>,
                               const std::optional<OppositePairs>&);

  std::vector<Node> nodes_;
  std::vector<DirectedEdge> edges_;
  std::unordered_map<NodeId, NodeIndex> node_lookup_;
  std::unordered_map<EdgeId, EdgeIndex> edge_lookup_;
};

/// Validates and assembles a graph. When `opposite_pairs` is empty the
/// opposite of each edge is detected as the unique edge with swapped
/// endpoints and reversed geometry.
RoadGraph build_graph(std::vector<NodeSpec> nodes, std::vector<EdgeSpec> edges,
                      const std::optional<OppositePairs>& opposite_pairs = std::nullopt);

/// Tolerance for node/geometry endpoint agreement and opposite geometry.
inline constexpr double kEndpointTolerance = 1e-3;

}  // namespace nrd
