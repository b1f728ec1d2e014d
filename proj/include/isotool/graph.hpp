#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace iso {

using VertexId = std::uint32_t;

// Unordered vertex pair; normalized to first < second on a built Graph.
using Edge = std::pair<VertexId, VertexId>;

// Which graph features take part in isomorphism decisions. Numeric
// attributes never do; they are carried through untouched.
enum class IsoMode {
  Topology,
  NodeLabels,
  NodeAndEdgeLabels,
};

std::string_view to_string(IsoMode mode);
std::optional<IsoMode> parse_iso_mode(std::string_view name);

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// What graph normalization dropped or merged.
struct EdgeNormalization {
  std::size_t self_loops_dropped = 0;
  std::size_t parallel_edges_collapsed = 0;
};

// Immutable undirected simple graph with optional categorical node/edge
// labels and numeric attributes. Construct through GraphBuilder or
// make_graph; adjacency is precomputed and shared freely across threads.
class Graph {
 public:
  Graph() = default;

  std::uint32_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Sorted lexicographically, each with first < second.
  std::span<const Edge> edges() const { return edges_; }

  bool has_node_labels() const { return node_labels_present_; }
  bool has_edge_labels() const { return edge_labels_present_; }
  bool has_node_attributes() const { return node_attributes_present_; }
  bool has_edge_attributes() const { return edge_attributes_present_; }

  std::int32_t node_label(VertexId v) const { return node_labels_[v]; }
  std::span<const std::int32_t> node_labels() const { return node_labels_; }

  // Aligned with edges().
  std::span<const std::int32_t> edge_labels() const { return edge_labels_; }
  std::int32_t edge_label(std::size_t edge_index) const {
    return edge_labels_[edge_index];
  }

  std::span<const std::vector<double>> node_attributes() const {
    return node_attributes_;
  }
  std::span<const std::vector<double>> edge_attributes() const {
    return edge_attributes_;
  }

  std::uint32_t degree(VertexId v) const {
    return adj_offsets_[v + 1] - adj_offsets_[v];
  }
  // Neighbors of v in ascending order.
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adj_.data() + adj_offsets_[v], adj_.data() + adj_offsets_[v + 1]};
  }
  // Edge index per neighbors() slot.
  std::span<const std::uint32_t> incident_edges(VertexId v) const {
    return {adj_edge_.data() + adj_offsets_[v],
            adj_edge_.data() + adj_offsets_[v + 1]};
  }

  // Index into edges() for the unordered pair {u, v}, if present.
  std::optional<std::uint32_t> edge_index(VertexId u, VertexId v) const;

 private:
  friend class GraphBuilder;

  std::uint32_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> node_labels_;
  std::vector<std::int32_t> edge_labels_;
  std::vector<std::vector<double>> node_attributes_;
  std::vector<std::vector<double>> edge_attributes_;
  bool node_labels_present_ = false;
  bool edge_labels_present_ = false;
  bool node_attributes_present_ = false;
  bool edge_attributes_present_ = false;

  std::vector<std::uint32_t> adj_offsets_;
  std::vector<VertexId> adj_;
  std::vector<std::uint32_t> adj_edge_;
};

// Accumulates a raw (possibly redundant) edge list and normalizes it into a
// Graph: self-loops are dropped and counted, repeated unordered pairs are
// collapsed and counted. An edge listed in both orientations counts as one
// edge plus one collapse.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::uint32_t node_count);

  GraphBuilder& add_edge(VertexId u, VertexId v);
  GraphBuilder& add_edge(VertexId u, VertexId v, std::int32_t label);
  GraphBuilder& add_edge(VertexId u, VertexId v,
                         std::optional<std::int32_t> label,
                         std::optional<std::vector<double>> attribute);

  GraphBuilder& node_labels(std::vector<std::int32_t> labels);
  GraphBuilder& node_attributes(std::vector<std::vector<double>> attributes);

  // Instead of collapsing parallel edges silently, fold each edge's
  // multiplicity into its label: distinct (base label, multiplicity) pairs
  // become dense label ids. Multiplicity of a pair is the maximum count over
  // the two orientations, so a plain symmetric listing stays at 1.
  GraphBuilder& multiplicity_as_edge_label(bool enable);

  Graph build(EdgeNormalization* report = nullptr);

 private:
  struct RawEdge {
    VertexId u, v;
    std::optional<std::int32_t> label;
    std::optional<std::vector<double>> attribute;
  };

  std::uint32_t node_count_;
  std::vector<RawEdge> raw_;
  std::vector<std::int32_t> node_labels_;
  bool node_labels_set_ = false;
  std::vector<std::vector<double>> node_attributes_;
  bool node_attributes_set_ = false;
  bool multiplicity_as_edge_label_ = false;
};

Graph make_graph(std::uint32_t node_count, std::span<const Edge> edges,
                 EdgeNormalization* report = nullptr);

// Non-increasing degree list; invariant under vertex relabeling.
std::vector<std::uint32_t> degree_sequence(const Graph& g);

}  // namespace iso
