#include <doctest.h>

#include "isotool/canon.hpp"
#include "isotool/kernels.hpp"
#include "testutil.hpp"

using iso::Dataset;
using iso::Graph;
using iso::GramMatrix;
using testutil::Rng;

TEST_SUITE_BEGIN("kernels");

namespace {

Graph labeled_path(std::vector<std::int32_t> labels) {
  Graph g = testutil::path_graph(static_cast<std::uint32_t>(labels.size()));
  return testutil::with_node_labels(g, std::move(labels));
}

}  // namespace

TEST_CASE("vertex histogram dot products") {
  // label multisets {a,a,b} and {a,b,b}
  Dataset ds = testutil::make_dataset(
      "vh", {labeled_path({0, 0, 1}), labeled_path({0, 1, 1})}, {0, 1});
  GramMatrix gram = iso::vertex_histogram_kernel(ds);
  CHECK(gram.at(0, 1) == 4);  // 2*1 + 1*2
  CHECK(gram.at(0, 0) == 5);  // 4 + 1
  CHECK(gram.at(1, 0) == gram.at(0, 1));
}

TEST_CASE("unlabeled graphs fall back to the node-count kernel") {
  Dataset ds = testutil::make_dataset(
      "counts", {testutil::path_graph(3), testutil::cycle_graph(4)}, {0, 1});
  GramMatrix gram = iso::vertex_histogram_kernel(ds);
  CHECK(gram.at(0, 1) == 12);
  CHECK(gram.at(0, 0) == 9);

  GramMatrix wl0 = iso::wl_kernel(ds, 0);
  CHECK(wl0.at(0, 1) == 12);
}

TEST_CASE("wl at h=0 equals the vertex histogram kernel exactly") {
  Rng rng(3);
  std::vector<Graph> graphs;
  std::vector<std::int64_t> labels;
  for (int i = 0; i < 8; ++i) {
    Graph g = testutil::random_graph(2 + rng.below(6), 50, rng);
    graphs.push_back(testutil::with_node_labels(
        g, testutil::random_labels(g.node_count(), 3, rng)));
    labels.push_back(rng.below(2));
  }
  Dataset ds = testutil::make_dataset("wl0", graphs, labels);
  GramMatrix vh = iso::vertex_histogram_kernel(ds);
  GramMatrix wl0 = iso::wl_kernel(ds, 0);
  CHECK(vh.values == wl0.values);
}

TEST_CASE("wl self-similarity is positive and grows with h") {
  Dataset ds = testutil::make_dataset("grow", {testutil::cycle_graph(5)}, {0});
  double prev = 0;
  for (int h = 0; h <= 3; ++h) {
    GramMatrix gram = iso::wl_kernel(ds, h);
    CHECK(gram.at(0, 0) > prev);
    prev = gram.at(0, 0);
  }
}

TEST_CASE("wl rows of isomorphic graphs are identical") {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    std::uint32_t n = 3 + rng.below(6);
    Graph g = testutil::with_node_labels(
        testutil::random_graph(n, 50, rng),
        testutil::random_labels(n, 2, rng));
    Graph h = testutil::permute_graph(g, testutil::random_permutation(n, rng));
    Graph other = testutil::with_node_labels(
        testutil::random_graph(n, 50, rng),
        testutil::random_labels(n, 2, rng));
    Dataset ds = testutil::make_dataset("iso", {g, h, other}, {0, 0, 1});

    // certificates agree that 0 and 1 are the isomorphic pair
    REQUIRE(iso::certificate(g, iso::IsoMode::NodeLabels) ==
            iso::certificate(h, iso::IsoMode::NodeLabels));

    GramMatrix gram = iso::wl_kernel(ds, 5);
    for (std::size_t j = 0; j < ds.size(); ++j) {
      CHECK(gram.at(0, j) == gram.at(1, j));
    }
  }
}

TEST_CASE("normalization fixes the diagonal at one") {
  Rng rng(8);
  std::vector<Graph> graphs;
  std::vector<std::int64_t> labels;
  for (int i = 0; i < 6; ++i) {
    graphs.push_back(testutil::random_graph(2 + rng.below(5), 60, rng));
    labels.push_back(0);
  }
  graphs.push_back(testutil::path_graph(2));
  labels.push_back(1);
  Dataset ds = testutil::make_dataset("norm", graphs, labels);
  GramMatrix gram = iso::wl_kernel(ds, 2);
  iso::normalize_gram(gram);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    CHECK(gram.at(i, i) == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t j = 0; j < ds.size(); ++j) {
      CHECK(gram.at(i, j) == gram.at(j, i));
      CHECK(gram.at(i, j) <= 1.0 + 1e-12);
    }
  }
}

TEST_SUITE_END();
