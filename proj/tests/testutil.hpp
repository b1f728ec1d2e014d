#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "isotool/dataset.hpp"
#include "isotool/graph.hpp"

namespace testutil {

using iso::Edge;
using iso::Graph;
using iso::VertexId;

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline Graph path_graph(std::uint32_t n) {
  iso::GraphBuilder b(n);
  for (std::uint32_t v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

inline Graph cycle_graph(std::uint32_t n) {
  iso::GraphBuilder b(n);
  for (std::uint32_t v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

inline Graph complete_graph(std::uint32_t n) {
  iso::GraphBuilder b(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

inline Graph star_graph(std::uint32_t leaves) {
  iso::GraphBuilder b(leaves + 1);
  for (std::uint32_t v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return b.build();
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  iso::GraphBuilder builder(a.node_count() + b.node_count());
  for (const Edge& e : a.edges()) builder.add_edge(e.first, e.second);
  for (const Edge& e : b.edges()) {
    builder.add_edge(e.first + a.node_count(), e.second + a.node_count());
  }
  return builder.build();
}

inline Graph with_node_labels(const Graph& g,
                              std::vector<std::int32_t> labels) {
  iso::GraphBuilder b(g.node_count());
  for (const Edge& e : g.edges()) b.add_edge(e.first, e.second);
  b.node_labels(std::move(labels));
  return b.build();
}

inline std::vector<VertexId> random_permutation(std::uint32_t n, Rng& rng) {
  std::vector<VertexId> perm(n);
  for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
  for (std::uint32_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.below(i)]);
  }
  return perm;
}

// Relabels vertices: vertex v becomes perm[v]; labels and attributes follow.
inline Graph permute_graph(const Graph& g,
                           const std::vector<VertexId>& perm) {
  iso::GraphBuilder b(g.node_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    if (g.has_edge_labels()) {
      b.add_edge(perm[u], perm[v], g.edge_label(e));
    } else {
      b.add_edge(perm[u], perm[v]);
    }
  }
  if (g.has_node_labels()) {
    std::vector<std::int32_t> labels(g.node_count());
    for (VertexId v = 0; v < g.node_count(); ++v) {
      labels[perm[v]] = g.node_label(v);
    }
    b.node_labels(std::move(labels));
  }
  return b.build();
}

inline Graph random_graph(std::uint32_t n, std::uint32_t percent_edges,
                          Rng& rng) {
  iso::GraphBuilder b(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (rng.below(100) < percent_edges) b.add_edge(u, v);
    }
  }
  return b.build();
}

inline std::vector<std::int32_t> random_labels(std::uint32_t n,
                                               std::int32_t alphabet,
                                               Rng& rng) {
  std::vector<std::int32_t> labels(n);
  for (auto& l : labels) l = static_cast<std::int32_t>(rng.below(alphabet));
  return labels;
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("isotool_test_" + tag + "_" + std::to_string(counter_++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  static inline std::uint64_t counter_ = 0;
  std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& file,
                       const std::string& content) {
  std::ofstream out(file, std::ios::trunc);
  out << content;
}

// A small dataset in the on-disk multi-file format. Node ids inside
// `edge_lines` are 1-based and global, as in the real files.
struct TuFixture {
  std::string name;
  std::vector<std::string> a_lines;
  std::vector<std::string> indicator_lines;
  std::vector<std::string> label_lines;
  std::vector<std::string> node_label_lines;
  std::vector<std::string> edge_label_lines;
  std::vector<std::string> node_attribute_lines;
  std::vector<std::string> edge_attribute_lines;

  void write(const std::filesystem::path& dir) const {
    namespace fs = std::filesystem;
    fs::create_directories(dir / name);
    auto dump = [&](const std::string& suffix,
                    const std::vector<std::string>& lines, bool mandatory) {
      if (!mandatory && lines.empty()) return;
      std::string text;
      for (const std::string& l : lines) text += l + "\n";
      write_text(dir / name / (name + suffix), text);
    };
    dump("_A.txt", a_lines, true);
    dump("_graph_indicator.txt", indicator_lines, true);
    dump("_graph_labels.txt", label_lines, true);
    dump("_node_labels.txt", node_label_lines, false);
    dump("_edge_labels.txt", edge_label_lines, false);
    dump("_node_attributes.txt", node_attribute_lines, false);
    dump("_edge_attributes.txt", edge_attribute_lines, false);
  }
};

// Dataset built in memory from plain graphs with raw class values.
inline iso::Dataset make_dataset(std::string name, std::vector<Graph> graphs,
                                 std::vector<std::int64_t> classes) {
  return iso::Dataset(std::move(name), std::move(graphs), std::move(classes));
}

// Pool of random small graphs with planted duplicate orbits: one to three
// permuted copies of each pool graph. Copies share one class label unless
// `mismatch` flips the second copy's label.
inline iso::Dataset planted_dataset(std::size_t distinct, Rng& rng,
                                    bool mismatch) {
  std::vector<Graph> graphs;
  std::vector<std::int64_t> labels;
  for (std::size_t made = 0; made < distinct; ++made) {
    Graph g = random_graph(3 + rng.below(5), 45, rng);
    int copies = 1 + rng.below(3);
    std::int64_t label = rng.below(2);
    for (int c = 0; c < copies; ++c) {
      graphs.push_back(
          permute_graph(g, random_permutation(g.node_count(), rng)));
      labels.push_back(mismatch && c == 1 ? 1 - label : label);
    }
  }
  return make_dataset("planted", graphs, labels);
}

}  // namespace testutil
