#include "isotool/graph.hpp"

#include <algorithm>
#include <map>

namespace iso {

std::string_view to_string(IsoMode mode) {
  switch (mode) {
    case IsoMode::Topology:
      return "topology";
    case IsoMode::NodeLabels:
      return "node-labels";
    case IsoMode::NodeAndEdgeLabels:
      return "node-edge-labels";
  }
  return "?";
}

std::optional<IsoMode> parse_iso_mode(std::string_view name) {
  if (name == "topology") return IsoMode::Topology;
  if (name == "node-labels") return IsoMode::NodeLabels;
  if (name == "node-edge-labels") return IsoMode::NodeAndEdgeLabels;
  return std::nullopt;
}

std::optional<std::uint32_t> Graph::edge_index(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::uint32_t>(it - edges_.begin());
}

GraphBuilder::GraphBuilder(std::uint32_t node_count)
    : node_count_(node_count) {}

GraphBuilder& GraphBuilder::add_edge(VertexId u, VertexId v) {
  return add_edge(u, v, std::nullopt, std::nullopt);
}

GraphBuilder& GraphBuilder::add_edge(VertexId u, VertexId v,
                                     std::int32_t label) {
  return add_edge(u, v, std::optional<std::int32_t>(label), std::nullopt);
}

GraphBuilder& GraphBuilder::add_edge(VertexId u, VertexId v,
                                     std::optional<std::int32_t> label,
                                     std::optional<std::vector<double>> attr) {
  if (u >= node_count_ || v >= node_count_) {
    throw GraphError("edge endpoint out of range: (" + std::to_string(u) +
                     ", " + std::to_string(v) + ") with " +
                     std::to_string(node_count_) + " nodes");
  }
  raw_.push_back(RawEdge{u, v, label, std::move(attr)});
  return *this;
}

GraphBuilder& GraphBuilder::node_labels(std::vector<std::int32_t> labels) {
  node_labels_ = std::move(labels);
  node_labels_set_ = true;
  return *this;
}

GraphBuilder& GraphBuilder::node_attributes(
    std::vector<std::vector<double>> attributes) {
  node_attributes_ = std::move(attributes);
  node_attributes_set_ = true;
  return *this;
}

GraphBuilder& GraphBuilder::multiplicity_as_edge_label(bool enable) {
  multiplicity_as_edge_label_ = enable;
  return *this;
}

Graph GraphBuilder::build(EdgeNormalization* report) {
  if (node_labels_set_ && node_labels_.size() != node_count_) {
    throw GraphError("node label count " + std::to_string(node_labels_.size()) +
                     " != node count " + std::to_string(node_count_));
  }
  if (node_attributes_set_ && node_attributes_.size() != node_count_) {
    throw GraphError("node attribute count " +
                     std::to_string(node_attributes_.size()) +
                     " != node count " + std::to_string(node_count_));
  }

  EdgeNormalization norm;

  struct Group {
    std::uint32_t count_fwd = 0;  // occurrences as (u, v) with u < v
    std::uint32_t count_rev = 0;
    std::optional<std::int32_t> label;
    std::optional<std::vector<double>> attribute;
    bool label_seen = false;
  };
  std::map<Edge, Group> groups;  // keyed by normalized pair, keeps edges sorted

  bool any_label = false;
  bool any_attribute = false;
  for (RawEdge& e : raw_) {
    if (e.u == e.v) {
      ++norm.self_loops_dropped;
      continue;
    }
    bool forward = e.u < e.v;
    Edge key = forward ? Edge{e.u, e.v} : Edge{e.v, e.u};
    Group& g = groups[key];
    if (forward)
      ++g.count_fwd;
    else
      ++g.count_rev;
    if (e.label) {
      any_label = true;
      if (g.label_seen && *g.label != *e.label) {
        throw GraphError("conflicting labels for edge (" +
                         std::to_string(key.first) + ", " +
                         std::to_string(key.second) + ")");
      }
      g.label = e.label;
      g.label_seen = true;
    }
    if (e.attribute && !g.attribute) g.attribute = std::move(e.attribute);
    if (g.attribute) any_attribute = true;
  }

  if (any_label) {
    for (const auto& [key, g] : groups) {
      if (!g.label_seen) {
        throw GraphError("edge (" + std::to_string(key.first) + ", " +
                         std::to_string(key.second) + ") is missing a label");
      }
    }
  }

  Graph out;
  out.node_count_ = node_count_;
  out.edges_.reserve(groups.size());

  std::vector<std::uint32_t> multiplicities;
  multiplicities.reserve(groups.size());
  for (const auto& [key, g] : groups) {
    out.edges_.push_back(key);
    std::uint32_t occurrences = g.count_fwd + g.count_rev;
    norm.parallel_edges_collapsed += occurrences - 1;
    multiplicities.push_back(std::max(g.count_fwd, g.count_rev));
    if (any_label) out.edge_labels_.push_back(*g.label);
    if (any_attribute)
      out.edge_attributes_.push_back(g.attribute ? *g.attribute
                                                 : std::vector<double>{});
  }

  if (multiplicity_as_edge_label_) {
    // Dense ids over the sorted distinct (base label, multiplicity) pairs.
    std::vector<std::pair<std::int32_t, std::uint32_t>> keys;
    keys.reserve(out.edges_.size());
    for (std::size_t i = 0; i < out.edges_.size(); ++i) {
      keys.emplace_back(any_label ? out.edge_labels_[i] : 0, multiplicities[i]);
    }
    std::vector<std::pair<std::int32_t, std::uint32_t>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    out.edge_labels_.resize(out.edges_.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      out.edge_labels_[i] = static_cast<std::int32_t>(
          std::lower_bound(sorted.begin(), sorted.end(), keys[i]) -
          sorted.begin());
    }
    any_label = true;
  }

  out.node_labels_ = std::move(node_labels_);
  out.node_labels_present_ = node_labels_set_;
  out.node_attributes_ = std::move(node_attributes_);
  out.node_attributes_present_ = node_attributes_set_;
  out.edge_labels_present_ = any_label;
  out.edge_attributes_present_ = any_attribute;

  // CSR adjacency, neighbors ascending.
  out.adj_offsets_.assign(node_count_ + 1, 0);
  for (const Edge& e : out.edges_) {
    ++out.adj_offsets_[e.first + 1];
    ++out.adj_offsets_[e.second + 1];
  }
  for (std::uint32_t v = 0; v < node_count_; ++v) {
    out.adj_offsets_[v + 1] += out.adj_offsets_[v];
  }
  out.adj_.resize(out.edges_.size() * 2);
  out.adj_edge_.resize(out.edges_.size() * 2);
  std::vector<std::uint32_t> cursor(out.adj_offsets_.begin(),
                                    out.adj_offsets_.end() - 1);
  for (std::uint32_t i = 0; i < out.edges_.size(); ++i) {
    auto [u, v] = out.edges_[i];
    out.adj_[cursor[u]] = v;
    out.adj_edge_[cursor[u]++] = i;
    out.adj_[cursor[v]] = u;
    out.adj_edge_[cursor[v]++] = i;
  }
  // edges_ sorted by (u, v) already yields ascending neighbor lists for the
  // first endpoint; sort each list to cover the second.
  for (std::uint32_t v = 0; v < node_count_; ++v) {
    std::uint32_t lo = out.adj_offsets_[v], hi = out.adj_offsets_[v + 1];
    std::vector<std::pair<VertexId, std::uint32_t>> tmp;
    tmp.reserve(hi - lo);
    for (std::uint32_t i = lo; i < hi; ++i)
      tmp.emplace_back(out.adj_[i], out.adj_edge_[i]);
    std::sort(tmp.begin(), tmp.end());
    for (std::uint32_t i = lo; i < hi; ++i) {
      out.adj_[i] = tmp[i - lo].first;
      out.adj_edge_[i] = tmp[i - lo].second;
    }
  }

  if (report) *report = norm;
  return out;
}

Graph make_graph(std::uint32_t node_count, std::span<const Edge> edges,
                 EdgeNormalization* report) {
  GraphBuilder b(node_count);
  for (const Edge& e : edges) b.add_edge(e.first, e.second);
  return b.build(report);
}

std::vector<std::uint32_t> degree_sequence(const Graph& g) {
  std::vector<std::uint32_t> degrees(g.node_count());
  for (VertexId v = 0; v < g.node_count(); ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

}  // namespace iso
