#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "isotool/graph.hpp"

namespace iso {

// Dense id <-> original categorical value. Graphs and class arrays store the
// dense ids; writers map back through the dictionary.
class LabelDictionary {
 public:
  std::int32_t intern(std::int64_t value);
  std::int64_t value(std::int32_t id) const { return values_[id]; }
  std::size_t size() const { return values_.size(); }
  std::span<const std::int64_t> values() const { return values_; }

 private:
  std::vector<std::int64_t> values_;
  std::unordered_map<std::int64_t, std::int32_t> index_;
};

// Ordered collection of graphs with one categorical class label per graph.
// Immutable after construction.
class Dataset {
 public:
  Dataset() = default;

  // Interns raw class label values; node/edge label dictionaries describe the
  // dense ids already stored on the graphs (pass empty ones for raw labels).
  Dataset(std::string name, std::vector<Graph> graphs,
          std::vector<std::int64_t> class_values,
          LabelDictionary node_label_dict = {},
          LabelDictionary edge_label_dict = {});

  const std::string& name() const { return name_; }
  std::size_t size() const { return graphs_.size(); }
  const Graph& graph(std::size_t i) const { return graphs_[i]; }
  std::span<const Graph> graphs() const { return graphs_; }

  std::int32_t class_label(std::size_t i) const { return class_labels_[i]; }
  std::span<const std::int32_t> class_labels() const { return class_labels_; }
  std::int64_t class_value(std::size_t i) const {
    return class_dict_.value(class_labels_[i]);
  }
  std::size_t class_count() const { return class_dict_.size(); }

  const LabelDictionary& class_dictionary() const { return class_dict_; }
  const LabelDictionary& node_label_dictionary() const {
    return node_label_dict_;
  }
  const LabelDictionary& edge_label_dictionary() const {
    return edge_label_dict_;
  }

  bool has_node_labels() const { return has_node_labels_; }
  bool has_edge_labels() const { return has_edge_labels_; }
  bool has_node_attributes() const { return has_node_attributes_; }
  bool has_edge_attributes() const { return has_edge_attributes_; }

 private:
  std::string name_;
  std::vector<Graph> graphs_;
  std::vector<std::int32_t> class_labels_;
  LabelDictionary class_dict_;
  LabelDictionary node_label_dict_;
  LabelDictionary edge_label_dict_;
  bool has_node_labels_ = false;
  bool has_edge_labels_ = false;
  bool has_node_attributes_ = false;
  bool has_edge_attributes_ = false;
};

}  // namespace iso
