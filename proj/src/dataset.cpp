#include "isotool/dataset.hpp"

namespace iso {

std::int32_t LabelDictionary::intern(std::int64_t value) {
  auto [it, inserted] =
      index_.try_emplace(value, static_cast<std::int32_t>(values_.size()));
  if (inserted) values_.push_back(value);
  return it->second;
}

Dataset::Dataset(std::string name, std::vector<Graph> graphs,
                 std::vector<std::int64_t> class_values,
                 LabelDictionary node_label_dict,
                 LabelDictionary edge_label_dict)
    : name_(std::move(name)),
      graphs_(std::move(graphs)),
      node_label_dict_(std::move(node_label_dict)),
      edge_label_dict_(std::move(edge_label_dict)) {
  if (graphs_.size() != class_values.size()) {
    throw GraphError("dataset '" + name_ + "': " +
                     std::to_string(graphs_.size()) + " graphs but " +
                     std::to_string(class_values.size()) + " class labels");
  }
  class_labels_.reserve(class_values.size());
  for (std::int64_t v : class_values) {
    class_labels_.push_back(class_dict_.intern(v));
  }
  if (!graphs_.empty()) {
    bool all_node_labels = true, any_node_labels = false;
    bool any_edge_labels = false, edge_labels_missing = false;
    has_node_attributes_ = true;
    has_edge_attributes_ = true;
    for (const Graph& g : graphs_) {
      all_node_labels &= g.has_node_labels();
      any_node_labels |= g.has_node_labels();
      any_edge_labels |= g.has_edge_labels();
      // Edgeless graphs cannot carry edge labels; only graphs with edges
      // count as missing them.
      edge_labels_missing |= !g.has_edge_labels() && g.edge_count() > 0;
      has_node_attributes_ &= g.has_node_attributes();
      has_edge_attributes_ &= g.has_edge_attributes() || g.edge_count() == 0;
    }
    if (any_node_labels && !all_node_labels) {
      throw GraphError("dataset '" + name_ +
                       "': node labels present on some graphs only");
    }
    if (any_edge_labels && edge_labels_missing) {
      throw GraphError("dataset '" + name_ +
                       "': edge labels present on some graphs only");
    }
    has_node_labels_ = all_node_labels;
    has_edge_labels_ = any_edge_labels && !edge_labels_missing;
    has_edge_attributes_ &= graphs_.size() > 0;
  }
}

}  // namespace iso
