#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isotool/dataset.hpp"

namespace iso {

// Symmetric kernel matrix over all graphs of a dataset.
struct GramMatrix {
  std::string kernel;
  int wl_iterations = 0;
  bool normalized = false;
  std::size_t n = 0;
  std::vector<double> values;  // row-major n x n

  double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
  double& at(std::size_t i, std::size_t j) { return values[i * n + j]; }
};

// Dot product of node-label count vectors. Unlabeled datasets fall back to a
// single pseudo-label, i.e. K(g1, g2) = |V1| * |V2|.
GramMatrix vertex_histogram_kernel(const Dataset& ds);

// Weisfeiler-Lehman subtree kernel with h refinement iterations: the sum over
// iterations 0..h of count-vector dot products under compressed relabeling.
// h = 0 coincides with the vertex histogram kernel.
GramMatrix wl_kernel(const Dataset& ds, int h);

// Cosine normalization K(x,y) / sqrt(K(x,x) K(y,y)); zero diagonals leave
// their row untouched.
void normalize_gram(GramMatrix& gram);

}  // namespace iso
