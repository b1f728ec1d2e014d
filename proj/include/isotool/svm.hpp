#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "isotool/kernels.hpp"

namespace iso {

struct SvmOptions {
  double tolerance = 1e-3;
  // Update budget per binary problem: sweeps * n * classes.
  std::uint64_t sweeps = 10;
};

// One-vs-rest kernel SVM trained on precomputed Gram entries. Training is
// deterministic: no randomness, fixed iteration order.
class KernelSvm {
 public:
  // labels[id] gives the class of graph id; only ids in train_ids are used.
  static KernelSvm train(const GramMatrix& gram,
                         std::span<const std::uint32_t> train_ids,
                         std::span<const std::int32_t> labels, double c,
                         const SvmOptions& options = {});

  std::int32_t predict(const GramMatrix& gram, std::uint32_t id) const;

  double c() const { return c_; }
  bool constant() const { return constant_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  double c_ = 0;
  bool constant_ = false;
  std::int32_t constant_label_ = 0;
  std::vector<std::int32_t> classes_;
  std::vector<std::uint32_t> train_ids_;
  // Per class (one-vs-rest): alpha_i * y_i per training point, plus bias.
  std::vector<std::vector<double>> coefficients_;
  std::vector<double> bias_;
  std::vector<std::string> warnings_;
};

struct ModelSelection {
  KernelSvm model;
  double chosen_c = 0;
  std::vector<std::string> warnings;
};

// Picks C on the validation split (ties favor the smaller C), then retrains
// on the full training set with the winner.
ModelSelection select_and_train(const GramMatrix& gram,
                                std::span<const std::uint32_t> train_ids,
                                std::span<const std::uint32_t> validation_ids,
                                std::span<const std::int32_t> labels,
                                std::span<const double> c_grid,
                                const SvmOptions& options = {});

}  // namespace iso
