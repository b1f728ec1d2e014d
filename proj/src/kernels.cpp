#include "isotool/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace iso {

namespace {

// Sparse count vector sorted by label id.
using Counts = std::vector<std::pair<std::int32_t, std::int64_t>>;

Counts count_labels(const std::vector<std::int32_t>& labels) {
  std::map<std::int32_t, std::int64_t> m;
  for (std::int32_t l : labels) ++m[l];
  return Counts(m.begin(), m.end());
}

double dot(const Counts& a, const Counts& b) {
  std::int64_t sum = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return static_cast<double>(sum);
}

std::vector<std::int32_t> base_labels(const Graph& g, bool labeled) {
  if (labeled) {
    return std::vector<std::int32_t>(g.node_labels().begin(),
                                     g.node_labels().end());
  }
  return std::vector<std::int32_t>(g.node_count(), 0);
}

GramMatrix from_features(const Dataset& ds,
                         const std::vector<Counts>& features,
                         std::string kernel_name) {
  GramMatrix gram;
  gram.kernel = std::move(kernel_name);
  gram.n = ds.size();
  gram.values.assign(gram.n * gram.n, 0.0);
  for (std::size_t i = 0; i < gram.n; ++i) {
    for (std::size_t j = i; j < gram.n; ++j) {
      double k = dot(features[i], features[j]);
      gram.at(i, j) = k;
      gram.at(j, i) = k;
    }
  }
  return gram;
}

void accumulate(Counts& into, const Counts& delta) {
  Counts merged;
  merged.reserve(into.size() + delta.size());
  auto ia = into.begin();
  auto ib = delta.begin();
  while (ia != into.end() || ib != delta.end()) {
    if (ib == delta.end() || (ia != into.end() && ia->first < ib->first)) {
      merged.push_back(*ia++);
    } else if (ia == into.end() || ib->first < ia->first) {
      merged.push_back(*ib++);
    } else {
      merged.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  into = std::move(merged);
}

}  // namespace

GramMatrix vertex_histogram_kernel(const Dataset& ds) {
  const bool labeled = ds.has_node_labels();
  std::vector<Counts> features;
  features.reserve(ds.size());
  for (const Graph& g : ds.graphs()) {
    features.push_back(count_labels(base_labels(g, labeled)));
  }
  return from_features(ds, features, "vh");
}

GramMatrix wl_kernel(const Dataset& ds, int h) {
  const bool labeled = ds.has_node_labels();

  // Compressed-label dictionary shared across the dataset. Keys carry the
  // iteration number, so ids from different iterations never collide and the
  // merged count vectors dot out to the per-iteration sum.
  std::map<std::vector<std::int32_t>, std::int32_t> rehash;
  auto compress = [&](std::vector<std::int32_t> key) {
    auto [it, inserted] = rehash.try_emplace(
        std::move(key), static_cast<std::int32_t>(rehash.size()));
    return it->second;
  };

  std::vector<std::vector<std::int32_t>> labels(ds.size());
  std::vector<Counts> features(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    labels[i] = base_labels(ds.graph(i), labeled);
    for (std::int32_t& l : labels[i]) l = compress({0, l});
    features[i] = count_labels(labels[i]);
  }

  for (int iter = 1; iter <= h; ++iter) {
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const Graph& g = ds.graph(i);
      std::vector<std::int32_t> next(g.node_count());
      for (VertexId v = 0; v < g.node_count(); ++v) {
        std::vector<std::int32_t> key;
        key.reserve(g.degree(v) + 2);
        key.push_back(iter);
        key.push_back(labels[i][v]);
        for (VertexId u : g.neighbors(v)) key.push_back(labels[i][u]);
        std::sort(key.begin() + 2, key.end());
        next[v] = compress(std::move(key));
      }
      labels[i] = std::move(next);
      accumulate(features[i], count_labels(labels[i]));
    }
  }

  GramMatrix gram = from_features(ds, features, "wl");
  gram.wl_iterations = h;
  return gram;
}

void normalize_gram(GramMatrix& gram) {
  if (gram.normalized) return;
  std::vector<double> diag(gram.n);
  for (std::size_t i = 0; i < gram.n; ++i) diag[i] = gram.at(i, i);
  for (std::size_t i = 0; i < gram.n; ++i) {
    for (std::size_t j = 0; j < gram.n; ++j) {
      if (diag[i] > 0 && diag[j] > 0) {
        gram.at(i, j) /= std::sqrt(diag[i] * diag[j]);
      }
    }
  }
  gram.normalized = true;
}

}  // namespace iso
