#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "isotool/dataset.hpp"
#include "isotool/rational.hpp"

namespace iso {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadOptions {
  bool multiplicity_as_edge_label = false;
};

struct LoadReport {
  std::size_t duplicate_edge_lines_collapsed = 0;
  std::size_t self_loops_dropped = 0;
  std::vector<std::string> notices;
};

// Reads a dataset directory in the multi-file benchmark format:
//   <DS>_A.txt              edge list, "i, j" with 1-based global node ids
//   <DS>_graph_indicator.txt one graph id per node line
//   <DS>_graph_labels.txt   one class label per graph line
// plus optional <DS>_node_labels.txt, <DS>_edge_labels.txt,
// <DS>_node_attributes.txt, <DS>_edge_attributes.txt. <DS> is the directory
// basename. Both edge orientations collapse to one undirected edge.
Dataset load_dataset(const std::filesystem::path& dir,
                     const LoadOptions& options = {},
                     LoadReport* report = nullptr);

// Writes `ds` in the same format under dir (created if needed), emitting both
// orientations of every edge. load_dataset(write_dataset(ds)) reproduces the
// dataset graph by graph.
void write_dataset(const Dataset& ds, const std::filesystem::path& dir);

struct DatasetStats {
  std::size_t n = 0;
  std::size_t classes = 0;
  std::size_t total_nodes = 0;
  std::size_t total_edges = 0;  // undirected
  bool has_node_labels = false;
  bool has_edge_labels = false;
  std::size_t min_class_size = 0;
  std::size_t max_class_size = 0;

  Rational avg_nodes() const {
    return n == 0 ? Rational::zero()
                  : Rational::of(static_cast<std::int64_t>(total_nodes),
                                 static_cast<std::int64_t>(n));
  }
  Rational avg_edges() const {
    return n == 0 ? Rational::zero()
                  : Rational::of(static_cast<std::int64_t>(total_edges),
                                 static_cast<std::int64_t>(n));
  }
};

DatasetStats dataset_stats(const Dataset& ds);

// Single-graph text format for isomorphism checks:
//   nodes N
//   node_labels l0 l1 ... l{N-1}     (optional)
//   edge U V [LABEL]                 (0-based vertex ids)
// with '#' comments and blank lines ignored.
Graph load_graph_file(const std::filesystem::path& file);

}  // namespace iso
