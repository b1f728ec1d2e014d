#include "isotool/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "isotool/refine.hpp"

namespace iso {

namespace {

// Stdlib-independent RNG so splits are reproducible across toolchains.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

void shuffle_ids(std::vector<std::uint32_t>& ids, SplitMix64& rng) {
  for (std::size_t i = ids.size(); i > 1; --i) {
    std::size_t j = rng.next() % i;
    std::swap(ids[i - 1], ids[j]);
  }
}

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
}

double std_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0;
  double m = mean_of(xs);
  double ss = 0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / xs.size());
}

}  // namespace

std::string_view to_string(PeeringMode mode) {
  switch (mode) {
    case PeeringMode::None:
      return "none";
    case PeeringMode::Homogeneous:
      return "ph";
    case PeeringMode::MajorityVote:
      return "p";
  }
  return "?";
}

std::optional<PeeringMode> parse_peering_mode(std::string_view name) {
  if (name == "none") return PeeringMode::None;
  if (name == "ph") return PeeringMode::Homogeneous;
  if (name == "p") return PeeringMode::MajorityVote;
  return std::nullopt;
}

std::vector<FoldSplit> kfold(const Dataset& ds, int k, std::uint64_t seed,
                             std::vector<std::string>* warnings) {
  if (k < 2) throw std::invalid_argument("k-fold requires k >= 2");
  if (ds.size() < static_cast<std::size_t>(k)) {
    throw std::invalid_argument("k-fold requires at least k graphs");
  }

  SplitMix64 rng(seed);

  // Per-class id lists in class-id order, each shuffled.
  std::vector<std::vector<std::uint32_t>> by_class(ds.class_count());
  for (std::uint32_t i = 0; i < ds.size(); ++i) {
    by_class[ds.class_label(i)].push_back(i);
  }
  for (auto& ids : by_class) shuffle_ids(ids, rng);

  // Chunk each class across folds; the remainder cursor rotates so fold
  // sizes stay within one of each other.
  std::vector<std::vector<std::uint32_t>> test_of_fold(k);
  std::size_t cursor = 0;
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    const auto& ids = by_class[c];
    if (ids.size() < static_cast<std::size_t>(k) && warnings) {
      warnings->push_back("class " +
                          std::to_string(ds.class_dictionary().value(
                              static_cast<std::int32_t>(c))) +
                          " has " + std::to_string(ids.size()) +
                          " graphs for " + std::to_string(k) +
                          " folds; stratification incomplete");
    }
    std::size_t base = ids.size() / k;
    std::size_t rem = ids.size() % k;
    std::size_t pos = 0;
    for (int f = 0; f < k; ++f) {
      std::size_t extra =
          (static_cast<std::size_t>((f - static_cast<int>(cursor) + k) % k) <
           rem)
              ? 1
              : 0;
      std::size_t take = base + extra;
      for (std::size_t t = 0; t < take; ++t) {
        test_of_fold[f].push_back(ids[pos++]);
      }
    }
    cursor = (cursor + rem) % k;
  }

  std::vector<FoldSplit> folds(k);
  for (int f = 0; f < k; ++f) {
    FoldSplit& split = folds[f];
    split.index = f;
    split.seed = seed;
    split.test_ids = test_of_fold[f];
    std::sort(split.test_ids.begin(), split.test_ids.end());

    std::vector<bool> in_test(ds.size(), false);
    for (std::uint32_t id : split.test_ids) in_test[id] = true;
    for (std::uint32_t i = 0; i < ds.size(); ++i) {
      if (!in_test[i]) split.train_ids.push_back(i);
    }

    // Validation: 20% of the training split, stratified per class.
    std::vector<std::vector<std::uint32_t>> train_by_class(ds.class_count());
    for (std::uint32_t id : split.train_ids) {
      train_by_class[ds.class_label(id)].push_back(id);
    }
    for (auto& ids : train_by_class) {
      shuffle_ids(ids, rng);
      std::size_t take = ids.size() / 5;
      for (std::size_t t = 0; t < take; ++t) {
        split.validation_ids.push_back(ids[t]);
      }
    }
    std::sort(split.validation_ids.begin(), split.validation_ids.end());
  }
  return folds;
}

IsoLinkage link_test_to_train(const Dataset& ds, const FoldSplit& split,
                              const OrbitPartition& orbits) {
  std::vector<bool> in_train(ds.size(), false);
  for (std::uint32_t id : split.train_ids) in_train[id] = true;

  IsoLinkage linkage;
  linkage.test_ids = split.test_ids;
  linkage.linked_train.resize(split.test_ids.size());
  linkage.homogeneous.assign(split.test_ids.size(), false);
  linkage.orbit_homogeneous.assign(split.test_ids.size(), false);

  for (std::size_t t = 0; t < split.test_ids.size(); ++t) {
    std::uint32_t id = split.test_ids[t];
    const auto& orbit = orbits.orbits[orbits.orbit_of[id]];
    auto& linked = linkage.linked_train[t];
    for (std::uint32_t member : orbit) {
      if (member != id && in_train[member]) linked.push_back(member);
    }
    if (!linked.empty()) {
      bool homogeneous = true;
      for (std::uint32_t member : linked) {
        homogeneous &= ds.class_label(member) == ds.class_label(linked[0]);
      }
      linkage.homogeneous[t] = homogeneous;
      bool whole_orbit = true;
      for (std::uint32_t member : orbit) {
        whole_orbit &= ds.class_label(member) == ds.class_label(orbit[0]);
      }
      linkage.orbit_homogeneous[t] = whole_orbit;
    }
  }
  return linkage;
}

AccuracyDecomposition decompose_accuracy(
    std::span<const std::int32_t> predictions, const Dataset& truth,
    const IsoLinkage& linkage) {
  if (predictions.size() != linkage.test_ids.size()) {
    throw std::invalid_argument(
        "predictions do not cover the test split exactly");
  }
  AccuracyDecomposition d;
  d.n_test = linkage.test_ids.size();
  for (std::size_t t = 0; t < linkage.test_ids.size(); ++t) {
    bool correct = predictions[t] == truth.class_label(linkage.test_ids[t]);
    bool iso = !linkage.linked_train[t].empty();
    d.n_iso += iso;
    d.n_new += !iso;
    d.correct_test += correct;
    if (iso) {
      d.correct_iso += correct;
    } else {
      d.correct_new += correct;
    }
  }
  d.acc_test = accuracy(static_cast<std::int64_t>(d.correct_test),
                        static_cast<std::int64_t>(d.n_test));
  d.acc_new = accuracy(static_cast<std::int64_t>(d.correct_new),
                       static_cast<std::int64_t>(d.n_new));
  d.acc_iso = accuracy(static_cast<std::int64_t>(d.correct_iso),
                       static_cast<std::int64_t>(d.n_iso));
  return d;
}

bool eq2_identity_holds(const AccuracyDecomposition& d) {
  Rational lhs = d.acc_test.scaled(static_cast<std::int64_t>(d.n_test));
  Rational rhs = d.acc_new.scaled(static_cast<std::int64_t>(d.n_new)) +
                 d.acc_iso.scaled(static_cast<std::int64_t>(d.n_iso));
  return lhs == rhs;
}

std::vector<std::int32_t> apply_peering(
    std::span<const std::int32_t> predictions, const IsoLinkage& linkage,
    PeeringMode mode, const Dataset& ds) {
  std::vector<std::int32_t> out(predictions.begin(), predictions.end());
  if (mode == PeeringMode::None) return out;
  for (std::size_t t = 0; t < linkage.test_ids.size(); ++t) {
    const auto& linked = linkage.linked_train[t];
    if (linked.empty()) continue;
    if (mode == PeeringMode::Homogeneous) {
      if (linkage.homogeneous[t]) out[t] = ds.class_label(linked[0]);
    } else {
      std::map<std::int32_t, std::size_t> votes;
      for (std::uint32_t member : linked) ++votes[ds.class_label(member)];
      std::int32_t winner = votes.begin()->first;
      std::size_t best = votes.begin()->second;
      for (const auto& [label, count] : votes) {
        if (count > best) {  // ties keep the smallest label id
          best = count;
          winner = label;
        }
      }
      out[t] = winner;
    }
  }
  return out;
}

bool check_property1(const AccuracyDecomposition& d) {
  if (d.n_iso == 0) {
    throw std::invalid_argument("property check requires a non-empty iso set");
  }
  return (d.acc_test > d.acc_new) == (d.acc_iso > d.acc_new);
}

namespace {

EvaluationResult evaluate_common(
    const Dataset& ds, const EvalConfig& config, const GramMatrix* gram,
    std::span<const std::int32_t> external_predictions) {
  EvaluationResult result;
  result.config = config;
  result.dataset = ds.name();

  OrbitPartition orbits =
      compute_orbits(ds, config.link_mode, config.orbits);
  std::vector<FoldSplit> folds =
      kfold(ds, config.folds, config.seed, &result.warnings);

  std::vector<double> acc_test, acc_new, acc_iso, peered_test, peered_iso;
  for (const FoldSplit& split : folds) {
    FoldEvaluation fold_eval;
    fold_eval.fold = split.index;
    fold_eval.n_train = split.train_ids.size();

    std::vector<std::int32_t> predictions;
    predictions.reserve(split.test_ids.size());
    if (gram) {
      ModelSelection selection = select_and_train(
          *gram, split.train_ids, split.validation_ids, ds.class_labels(),
          config.c_grid, config.svm);
      fold_eval.chosen_c = selection.chosen_c;
      for (const std::string& w : selection.warnings) {
        result.warnings.push_back("fold " + std::to_string(split.index) +
                                  ": " + w);
      }
      for (std::uint32_t id : split.test_ids) {
        predictions.push_back(selection.model.predict(*gram, id));
      }
    } else {
      for (std::uint32_t id : split.test_ids) {
        predictions.push_back(external_predictions[id]);
      }
    }

    IsoLinkage linkage = link_test_to_train(ds, split, orbits);
    fold_eval.base = decompose_accuracy(predictions, ds, linkage);
    fold_eval.eq2_ok = eq2_identity_holds(fold_eval.base);
    if (fold_eval.base.n_iso > 0) {
      fold_eval.property1_ok = check_property1(fold_eval.base);
    }

    std::span<const std::int32_t> final_predictions = predictions;
    std::vector<std::int32_t> peered;
    if (config.peering != PeeringMode::None) {
      peered = apply_peering(predictions, linkage, config.peering, ds);
      fold_eval.peered = decompose_accuracy(peered, ds, linkage);
      fold_eval.eq2_ok =
          fold_eval.eq2_ok && eq2_identity_holds(*fold_eval.peered);
      if (config.peering == PeeringMode::Homogeneous) {
        // The no-drop guarantee requires the rewritten graphs' orbits to be
        // single-labeled; a training side that merely looks homogeneous can
        // still disagree with the test graph's own label.
        bool rewritten_orbits_homogeneous = true;
        for (std::size_t t = 0; t < linkage.test_ids.size(); ++t) {
          if (!linkage.linked_train[t].empty() && linkage.homogeneous[t]) {
            rewritten_orbits_homogeneous &= linkage.orbit_homogeneous[t];
          }
        }
        if (rewritten_orbits_homogeneous) {
          fold_eval.theorem1_ok =
              fold_eval.peered->acc_test >= fold_eval.base.acc_test;
        }
      }
      final_predictions = peered;
      peered_test.push_back(fold_eval.peered->acc_test.to_double());
      peered_iso.push_back(fold_eval.peered->acc_iso.to_double());
    }

    // Accuracy on the orbit-homogeneous part of the iso set, for the final
    // (possibly peered) predictions.
    for (std::size_t t = 0; t < linkage.test_ids.size(); ++t) {
      if (linkage.linked_train[t].empty() || !linkage.orbit_homogeneous[t]) {
        continue;
      }
      ++fold_eval.homogeneous_iso;
      fold_eval.homogeneous_iso_correct +=
          final_predictions[t] == ds.class_label(linkage.test_ids[t]);
    }

    acc_test.push_back(fold_eval.base.acc_test.to_double());
    acc_new.push_back(fold_eval.base.acc_new.to_double());
    acc_iso.push_back(fold_eval.base.acc_iso.to_double());
    result.folds.push_back(std::move(fold_eval));
  }

  result.mean_acc_test = mean_of(acc_test);
  result.mean_acc_new = mean_of(acc_new);
  result.mean_acc_iso = mean_of(acc_iso);
  result.std_acc_test = std_of(acc_test);
  result.std_acc_new = std_of(acc_new);
  result.std_acc_iso = std_of(acc_iso);
  result.mean_peered_acc_test = mean_of(peered_test);
  result.mean_peered_acc_iso = mean_of(peered_iso);
  return result;
}

}  // namespace

EvaluationResult run_evaluation(const Dataset& ds, const EvalConfig& config) {
  GramMatrix gram;
  if (config.kernel == "vh") {
    gram = vertex_histogram_kernel(ds);
  } else if (config.kernel == "wl") {
    gram = wl_kernel(ds, config.wl_iterations);
  } else {
    throw std::invalid_argument("unknown kernel '" + config.kernel + "'");
  }
  if (config.normalize) normalize_gram(gram);
  return evaluate_common(ds, config, &gram, {});
}

EvaluationResult evaluate_predictions(
    const Dataset& ds, const EvalConfig& config,
    std::span<const std::int32_t> predictions) {
  if (predictions.size() != ds.size()) {
    throw std::invalid_argument("need one prediction per graph");
  }
  return evaluate_common(ds, config, nullptr, predictions);
}

}  // namespace iso
