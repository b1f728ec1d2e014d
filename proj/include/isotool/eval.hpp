#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isotool/audit.hpp"
#include "isotool/dataset.hpp"
#include "isotool/kernels.hpp"
#include "isotool/rational.hpp"
#include "isotool/svm.hpp"

namespace iso {

// One cross-validation fold. validation_ids is a subset of train_ids used
// for hyperparameter selection; the final model retrains on all of train.
struct FoldSplit {
  int index = 0;
  std::vector<std::uint32_t> train_ids;
  std::vector<std::uint32_t> validation_ids;
  std::vector<std::uint32_t> test_ids;
  std::uint64_t seed = 0;
};

// Stratified k-fold split, deterministic under the seed. Classes smaller
// than k fall back to plain distribution with a warning.
std::vector<FoldSplit> kfold(const Dataset& ds, int k, std::uint64_t seed,
                             std::vector<std::string>* warnings = nullptr);

// Replace predictions on test graphs that have isomorphic training copies:
// Homogeneous touches only graphs whose linked copies agree on one label,
// MajorityVote votes over all linked copies (ties pick the smallest label).
enum class PeeringMode { None, Homogeneous, MajorityVote };

std::string_view to_string(PeeringMode mode);
std::optional<PeeringMode> parse_peering_mode(std::string_view name);

// For each test graph, the training graphs isomorphic to it. `homogeneous`
// is what a model can see at inference time (all linked training labels
// agree); `orbit_homogeneous` additionally requires the whole orbit,
// including the test graph itself, to carry a single label. Peering uses the
// former; the exact acc = 1 guarantee holds on the latter.
struct IsoLinkage {
  std::vector<std::uint32_t> test_ids;
  std::vector<std::vector<std::uint32_t>> linked_train;  // aligned
  std::vector<bool> homogeneous;  // all linked labels equal; false when empty
  std::vector<bool> orbit_homogeneous;

  std::size_t iso_count() const {
    std::size_t c = 0;
    for (const auto& l : linked_train) c += !l.empty();
    return c;
  }
};

IsoLinkage link_test_to_train(const Dataset& ds, const FoldSplit& split,
                              const OrbitPartition& orbits);

// Exact accuracy split between test graphs with and without isomorphic
// training copies. The identity
//   |test| * acc_test == |new| * acc_new + |iso| * acc_iso
// holds exactly; empty sets have accuracy 0.
struct AccuracyDecomposition {
  std::size_t n_test = 0, n_new = 0, n_iso = 0;
  std::size_t correct_test = 0, correct_new = 0, correct_iso = 0;
  Rational acc_test, acc_new, acc_iso;
};

AccuracyDecomposition decompose_accuracy(
    std::span<const std::int32_t> predictions, const Dataset& truth,
    const IsoLinkage& linkage);

bool eq2_identity_holds(const AccuracyDecomposition& d);

std::vector<std::int32_t> apply_peering(
    std::span<const std::int32_t> predictions, const IsoLinkage& linkage,
    PeeringMode mode, const Dataset& ds);

// acc_test > acc_new iff acc_iso > acc_new; a theorem whenever n_iso >= 1,
// so a false return signals an arithmetic bug.
bool check_property1(const AccuracyDecomposition& d);

struct EvalConfig {
  std::string kernel = "wl";  // "wl" or "vh"
  int wl_iterations = 5;
  int folds = 10;
  std::uint64_t seed = 0;
  std::vector<double> c_grid = {0.001, 0.01, 0.1, 1, 10};
  PeeringMode peering = PeeringMode::None;
  IsoMode link_mode = IsoMode::Topology;
  bool normalize = true;
  SvmOptions svm;
  ComputeOrbitsOptions orbits;
};

struct FoldEvaluation {
  int fold = 0;
  std::size_t n_train = 0;
  double chosen_c = 0;
  AccuracyDecomposition base;
  std::optional<AccuracyDecomposition> peered;
  // Test graphs whose whole orbit carries a single label, and how many the
  // (possibly peered) model got right.
  std::size_t homogeneous_iso = 0;
  std::size_t homogeneous_iso_correct = 0;
  bool eq2_ok = true;
  bool property1_ok = true;  // vacuously true when n_iso == 0
  bool theorem1_ok = true;   // peered acc_test >= base acc_test
};

struct EvaluationResult {
  EvalConfig config;
  std::string dataset;
  std::vector<FoldEvaluation> folds;
  std::vector<std::string> warnings;

  double mean_acc_test = 0, mean_acc_new = 0, mean_acc_iso = 0;
  double std_acc_test = 0, std_acc_new = 0, std_acc_iso = 0;
  double mean_peered_acc_test = 0, mean_peered_acc_iso = 0;
};

// Full kernel + SVM evaluation pipeline.
EvaluationResult run_evaluation(const Dataset& ds, const EvalConfig& config);

// Applies the decomposition and peering to externally produced predictions,
// aligned through the same seeded fold split. predictions[id] must cover
// every graph id.
EvaluationResult evaluate_predictions(
    const Dataset& ds, const EvalConfig& config,
    std::span<const std::int32_t> predictions);

}  // namespace iso
