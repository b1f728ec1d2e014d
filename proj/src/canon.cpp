#include "isotool/canon.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace iso {

namespace {

void append_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v >> 24));
  out.push_back(static_cast<char>(v >> 16));
  out.push_back(static_cast<char>(v >> 8));
  out.push_back(static_cast<char>(v));
}

void append_i32(std::string& out, std::int32_t v) {
  append_u32(out, static_cast<std::uint32_t>(v));
}

// Byte encoding of g relabeled by `labeling` (position -> vertex): header,
// sorted canonical edge list, node label values in position order, edge label
// values in canonical edge order. Encodings are complete: equal bytes imply
// equal relabeled graphs.
std::string encode_leaf(const Graph& g, const std::vector<VertexId>& labeling,
                        IsoMode mode) {
  const std::uint32_t n = g.node_count();
  std::vector<std::uint32_t> position(n);
  for (std::uint32_t p = 0; p < n; ++p) position[labeling[p]] = p;

  std::string out;
  out.reserve(16 + g.edge_count() * 12 + n * 4);
  out.push_back(static_cast<char>(mode));
  append_u32(out, n);
  append_u32(out, static_cast<std::uint32_t>(g.edge_count()));

  struct CanonEdge {
    std::uint32_t u, v, index;
  };
  std::vector<CanonEdge> edges;
  edges.reserve(g.edge_count());
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    std::uint32_t pu = position[g.edges()[e].first];
    std::uint32_t pv = position[g.edges()[e].second];
    if (pu > pv) std::swap(pu, pv);
    edges.push_back({pu, pv, e});
  }
  std::sort(edges.begin(), edges.end(), [](const CanonEdge& a,
                                           const CanonEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (const CanonEdge& e : edges) {
    append_u32(out, e.u);
    append_u32(out, e.v);
  }
  if (mode != IsoMode::Topology) {
    for (std::uint32_t p = 0; p < n; ++p) {
      append_i32(out, g.node_label(labeling[p]));
    }
  }
  if (mode == IsoMode::NodeAndEdgeLabels) {
    for (const CanonEdge& e : edges) {
      append_i32(out, g.edge_label(e.index));
    }
  }
  return out;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;

  explicit UnionFind(std::uint32_t n) : parent(n) {
    for (std::uint32_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

bool is_automorphism(const Graph& g, const std::vector<VertexId>& sigma,
                     IsoMode mode) {
  for (const Edge& e : g.edges()) {
    if (!g.edge_index(sigma[e.first], sigma[e.second])) return false;
  }
  if (mode != IsoMode::Topology) {
    for (VertexId v = 0; v < g.node_count(); ++v) {
      if (g.node_label(v) != g.node_label(sigma[v])) return false;
    }
  }
  if (mode == IsoMode::NodeAndEdgeLabels) {
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges()[e];
      auto image = g.edge_index(sigma[u], sigma[v]);
      if (!image || g.edge_label(*image) != g.edge_label(e)) return false;
    }
  }
  return true;
}

// Individualization-refinement search. The canonical leaf minimizes the pair
// (invariant path, leaf encoding), compared lexicographically with shorter
// prefix-equal paths ranking first. Both components are functions of the
// isomorphism class, so the minimum is too.
class CanonSearch {
 public:
  CanonSearch(const Graph& g, IsoMode mode, const CanonOptions& options)
      : g_(g), mode_(mode), options_(options) {}

  CanonicalForm run() {
    Coloring init = initial_coloring(g_, mode_);
    if (g_.node_count() == 0) {
      CanonicalForm form;
      form.certificate = encode_leaf(g_, {}, mode_);
      return form;
    }
    RefineResult root = refine_traced(g_, init, mode_);
    visit(root.coloring, root.trace, 0);
    assert(have_leaf_);
    return {best_encoding_, best_labeling_};
  }

 private:
  void visit(const Coloring& coloring, std::uint64_t invariant, int depth) {
    if (++nodes_expanded_ > options_.search_node_budget) {
      throw BudgetExceededError(options_.search_node_budget);
    }

    // Invariant-path pruning against the best leaf found so far.
    auto d = static_cast<std::size_t>(depth);
    if (d < best_path_.size()) {
      if (invariant > best_path_[d]) return;
      if (invariant < best_path_[d]) {
        best_path_.resize(d);
        best_path_.push_back(invariant);
        have_leaf_ = false;
      }
    } else {
      if (have_leaf_) return;  // longer path with equal prefix ranks after
      best_path_.push_back(invariant);
    }

    if (coloring.discrete()) {
      handle_leaf(coloring, depth);
      return;
    }

    // First smallest non-singleton cell in partition order.
    std::vector<std::uint32_t> cell_size(coloring.num_colors, 0);
    for (std::int32_t c : coloring.color_of) ++cell_size[c];
    std::int32_t target = -1;
    for (std::int32_t c = 0; c < coloring.num_colors; ++c) {
      if (cell_size[c] > 1 &&
          (target < 0 || cell_size[c] < cell_size[target])) {
        target = c;
      }
    }
    std::vector<VertexId> members;
    members.reserve(cell_size[target]);
    for (VertexId v = 0; v < g_.node_count(); ++v) {
      if (coloring.color_of[v] == target) members.push_back(v);
    }

    std::vector<VertexId> tried;
    for (VertexId v : members) {
      if (in_orbit_of_tried(v, tried)) continue;
      tried.push_back(v);

      Coloring individualized = coloring;
      individualized.color_of[v] = individualized.num_colors++;
      RefineResult child = refine_traced(g_, individualized, mode_);

      base_.push_back(v);
      visit(child.coloring, child.trace, depth + 1);
      base_.pop_back();
    }
  }

  void handle_leaf(const Coloring& coloring, int depth) {
    std::vector<VertexId> labeling(g_.node_count());
    for (VertexId v = 0; v < g_.node_count(); ++v) {
      labeling[coloring.color_of[v]] = v;
    }
    std::string encoding = encode_leaf(g_, labeling, mode_);

    if (!have_first_) {
      have_first_ = true;
      first_encoding_ = encoding;
      first_labeling_ = labeling;
    } else if (encoding == first_encoding_ && labeling != first_labeling_) {
      record_automorphism(first_labeling_, labeling);
    }

    auto d = static_cast<std::size_t>(depth);
    if (!have_leaf_) {
      have_leaf_ = true;
      best_path_.resize(d + 1);
      best_encoding_ = std::move(encoding);
      best_labeling_ = std::move(labeling);
      return;
    }
    if (d + 1 < best_path_.size()) {
      // Shorter invariant path with an equal prefix ranks first.
      best_path_.resize(d + 1);
      best_encoding_ = std::move(encoding);
      best_labeling_ = std::move(labeling);
      return;
    }
    if (encoding < best_encoding_) {
      best_encoding_ = std::move(encoding);
      best_labeling_ = std::move(labeling);
    } else if (encoding == best_encoding_ && labeling != best_labeling_) {
      record_automorphism(best_labeling_, labeling);
    }
  }

  // sigma maps lab_a's relabeling onto lab_b's; equal encodings make it an
  // automorphism candidate, verified before use.
  void record_automorphism(const std::vector<VertexId>& lab_a,
                           const std::vector<VertexId>& lab_b) {
    if (generators_.size() >= kMaxGenerators) return;
    std::vector<VertexId> sigma(g_.node_count());
    for (std::uint32_t p = 0; p < g_.node_count(); ++p) {
      sigma[lab_a[p]] = lab_b[p];
    }
    if (is_automorphism(g_, sigma, mode_)) {
      generators_.push_back(std::move(sigma));
    }
  }

  // Skip v when a discovered automorphism fixing the individualized prefix
  // pointwise maps it into an already-tried member; pruned subtrees are
  // isomorphic copies of explored ones.
  bool in_orbit_of_tried(VertexId v, const std::vector<VertexId>& tried) {
    if (tried.empty() || generators_.empty()) return false;
    UnionFind uf(g_.node_count());
    for (const auto& gen : generators_) {
      bool fixes_base = true;
      for (VertexId b : base_) {
        if (gen[b] != b) {
          fixes_base = false;
          break;
        }
      }
      if (!fixes_base) continue;
      for (VertexId x = 0; x < g_.node_count(); ++x) uf.unite(x, gen[x]);
    }
    for (VertexId u : tried) {
      if (uf.find(u) == uf.find(v)) return true;
    }
    return false;
  }

  static constexpr std::size_t kMaxGenerators = 512;

  const Graph& g_;
  IsoMode mode_;
  CanonOptions options_;
  std::uint64_t nodes_expanded_ = 0;

  std::vector<std::uint64_t> best_path_;
  bool have_leaf_ = false;
  std::string best_encoding_;
  std::vector<VertexId> best_labeling_;

  bool have_first_ = false;
  std::string first_encoding_;
  std::vector<VertexId> first_labeling_;

  std::vector<std::vector<VertexId>> generators_;
  std::vector<VertexId> base_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, IsoMode mode,
                             const CanonOptions& options) {
  CanonSearch search(g, mode, options);
  return search.run();
}

Certificate certificate(const Graph& g, IsoMode mode,
                        const CanonOptions& options) {
  return canonical_form(g, mode, options).certificate;
}

bool verify_witness(const Graph& g1, const Graph& g2, const IsoWitness& w,
                    IsoMode mode) {
  const std::uint32_t n = g1.node_count();
  if (g2.node_count() != n || w.mapping.size() != n) return false;
  if (g1.edge_count() != g2.edge_count()) return false;
  std::vector<bool> hit(n, false);
  for (VertexId v = 0; v < n; ++v) {
    if (w.mapping[v] >= n || hit[w.mapping[v]]) return false;
    hit[w.mapping[v]] = true;
  }
  for (const Edge& e : g1.edges()) {
    if (!g2.edge_index(w.mapping[e.first], w.mapping[e.second])) return false;
  }
  if (mode != IsoMode::Topology) {
    if (!g1.has_node_labels() || !g2.has_node_labels()) return false;
    for (VertexId v = 0; v < n; ++v) {
      if (g1.node_label(v) != g2.node_label(w.mapping[v])) return false;
    }
  }
  if (mode == IsoMode::NodeAndEdgeLabels) {
    for (std::uint32_t e = 0; e < g1.edge_count(); ++e) {
      auto [u, v] = g1.edges()[e];
      auto image = g2.edge_index(w.mapping[u], w.mapping[v]);
      if (!image || g2.edge_label(*image) != g1.edge_label(e)) return false;
    }
  }
  return true;
}

std::optional<IsoWitness> is_isomorphic(const Graph& g1, const Graph& g2,
                                        IsoMode mode,
                                        const CanonOptions& options) {
  if (g1.node_count() != g2.node_count()) return std::nullopt;
  if (g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (degree_sequence(g1) != degree_sequence(g2)) return std::nullopt;
  if (mode != IsoMode::Topology) {
    if (!g1.has_node_labels() || !g2.has_node_labels()) {
      throw GraphError("mode " + std::string(to_string(mode)) +
                       " requires node labels");
    }
    std::vector<std::int32_t> l1(g1.node_labels().begin(),
                                 g1.node_labels().end());
    std::vector<std::int32_t> l2(g2.node_labels().begin(),
                                 g2.node_labels().end());
    std::sort(l1.begin(), l1.end());
    std::sort(l2.begin(), l2.end());
    if (l1 != l2) return std::nullopt;
  }
  if (mode == IsoMode::NodeAndEdgeLabels) {
    std::vector<std::int32_t> l1(g1.edge_labels().begin(),
                                 g1.edge_labels().end());
    std::vector<std::int32_t> l2(g2.edge_labels().begin(),
                                 g2.edge_labels().end());
    std::sort(l1.begin(), l1.end());
    std::sort(l2.begin(), l2.end());
    if (l1 != l2) return std::nullopt;
  }

  CanonicalForm f1 = canonical_form(g1, mode, options);
  CanonicalForm f2 = canonical_form(g2, mode, options);
  if (f1.certificate != f2.certificate) return std::nullopt;

  const std::uint32_t n = g1.node_count();
  std::vector<std::uint32_t> position1(n);
  for (std::uint32_t p = 0; p < n; ++p) position1[f1.labeling[p]] = p;
  IsoWitness witness;
  witness.mapping.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    witness.mapping[v] = f2.labeling[position1[v]];
  }
  if (!verify_witness(g1, g2, witness, mode)) {
    throw std::logic_error(
        "canonical forms matched but the derived mapping is not an "
        "isomorphism");
  }
  return witness;
}

}  // namespace iso
