#include "isotool/svm.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace iso {

namespace {

// Platt-style SMO on the dual of a binary C-SVM over precomputed kernel
// entries. y in {-1, +1}.
struct SmoSolver {
  const GramMatrix& gram;
  const std::vector<std::uint32_t>& ids;
  const std::vector<double>& y;
  double c;
  double tol;
  std::uint64_t max_updates;

  std::vector<double> alpha;
  std::vector<double> error;  // f(x_i) - y_i
  double b = 0;
  std::uint64_t updates = 0;
  bool budget_hit = false;

  double k(std::size_t i, std::size_t j) const {
    return gram.at(ids[i], ids[j]);
  }

  void solve() {
    const std::size_t n = ids.size();
    alpha.assign(n, 0.0);
    error.resize(n);
    for (std::size_t i = 0; i < n; ++i) error[i] = -y[i];

    bool examine_all = true;
    while (true) {
      std::size_t changed = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!examine_all && (alpha[i] <= 0 || alpha[i] >= c)) continue;
        changed += examine(i);
        if (updates >= max_updates) {
          budget_hit = true;
          return;
        }
      }
      if (examine_all) {
        if (changed == 0) return;
        examine_all = false;
      } else if (changed == 0) {
        examine_all = true;
      }
    }
  }

  bool examine(std::size_t i) {
    const double r = error[i] * y[i];
    const bool violates =
        (r < -tol && alpha[i] < c) || (r > tol && alpha[i] > 0);
    if (!violates) return false;

    // Second choice: maximal |E_i - E_j| among non-bound points, then any
    // non-bound point, then a full scan; all orders are deterministic.
    const std::size_t n = ids.size();
    std::size_t best = n;
    double best_gap = -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || alpha[j] <= 0 || alpha[j] >= c) continue;
      double gap = std::abs(error[i] - error[j]);
      if (gap > best_gap) {
        best_gap = gap;
        best = j;
      }
    }
    if (best < n && step(i, best)) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || alpha[j] <= 0 || alpha[j] >= c) continue;
      if (step(i, j)) return true;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (step(i, j)) return true;
    }
    return false;
  }

  bool step(std::size_t i, std::size_t j) {
    if (i == j) return false;
    const double ai_old = alpha[i], aj_old = alpha[j];
    double lo, hi;
    if (y[i] != y[j]) {
      lo = std::max(0.0, aj_old - ai_old);
      hi = std::min(c, c + aj_old - ai_old);
    } else {
      lo = std::max(0.0, ai_old + aj_old - c);
      hi = std::min(c, ai_old + aj_old);
    }
    if (lo >= hi) return false;

    const double eta = k(i, i) + k(j, j) - 2 * k(i, j);
    if (eta <= 0) return false;  // flat or concave direction; skip pair

    double aj = aj_old + y[j] * (error[i] - error[j]) / eta;
    aj = std::clamp(aj, lo, hi);
    if (std::abs(aj - aj_old) < 1e-12 * (aj + aj_old + 1e-12)) return false;
    const double ai = ai_old + y[i] * y[j] * (aj_old - aj);

    alpha[i] = ai;
    alpha[j] = aj;

    const double b1 = b - error[i] - y[i] * (ai - ai_old) * k(i, i) -
                      y[j] * (aj - aj_old) * k(i, j);
    const double b2 = b - error[j] - y[i] * (ai - ai_old) * k(i, j) -
                      y[j] * (aj - aj_old) * k(j, j);
    double b_new;
    if (ai > 0 && ai < c) {
      b_new = b1;
    } else if (aj > 0 && aj < c) {
      b_new = b2;
    } else {
      b_new = (b1 + b2) / 2;
    }

    const std::size_t n = ids.size();
    for (std::size_t t = 0; t < n; ++t) {
      error[t] += y[i] * (ai - ai_old) * k(i, t) +
                  y[j] * (aj - aj_old) * k(j, t) + (b_new - b);
    }
    b = b_new;
    ++updates;
    return true;
  }
};

}  // namespace

KernelSvm KernelSvm::train(const GramMatrix& gram,
                           std::span<const std::uint32_t> train_ids,
                           std::span<const std::int32_t> labels, double c,
                           const SvmOptions& options) {
  if (train_ids.empty()) {
    throw std::invalid_argument("empty training set");
  }
  KernelSvm model;
  model.c_ = c;
  model.train_ids_.assign(train_ids.begin(), train_ids.end());

  std::set<std::int32_t> class_set;
  for (std::uint32_t id : train_ids) class_set.insert(labels[id]);
  model.classes_.assign(class_set.begin(), class_set.end());

  if (model.classes_.size() == 1) {
    model.constant_ = true;
    model.constant_label_ = model.classes_.front();
    model.warnings_.push_back(
        "training set has a single class; constant classifier");
    return model;
  }

  const std::size_t n = train_ids.size();
  const std::uint64_t max_updates =
      options.sweeps * n * model.classes_.size();
  for (std::int32_t cls : model.classes_) {
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = labels[train_ids[i]] == cls ? 1.0 : -1.0;
    }
    SmoSolver solver{gram, model.train_ids_, y, c, options.tolerance,
                     max_updates,
                     {},   {},               0, 0, false};
    solver.solve();
    if (solver.budget_hit) {
      model.warnings_.push_back("SMO update budget reached for class " +
                                std::to_string(cls));
    }
    std::vector<double> coef(n);
    for (std::size_t i = 0; i < n; ++i) coef[i] = solver.alpha[i] * y[i];
    model.coefficients_.push_back(std::move(coef));
    model.bias_.push_back(solver.b);
  }
  return model;
}

std::int32_t KernelSvm::predict(const GramMatrix& gram,
                                std::uint32_t id) const {
  if (constant_) return constant_label_;
  std::int32_t best_class = classes_.front();
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    double score = bias_[c];
    for (std::size_t i = 0; i < train_ids_.size(); ++i) {
      if (coefficients_[c][i] != 0.0) {
        score += coefficients_[c][i] * gram.at(train_ids_[i], id);
      }
    }
    if (score > best_score) {
      best_score = score;
      best_class = classes_[c];
    }
  }
  return best_class;
}

ModelSelection select_and_train(const GramMatrix& gram,
                                std::span<const std::uint32_t> train_ids,
                                std::span<const std::uint32_t> validation_ids,
                                std::span<const std::int32_t> labels,
                                std::span<const double> c_grid,
                                const SvmOptions& options) {
  if (c_grid.empty()) {
    throw std::invalid_argument("empty C grid");
  }
  ModelSelection selection;

  // Model selection trains on train \ validation and scores on validation.
  std::vector<std::uint32_t> fit_ids;
  std::vector<bool> in_validation;
  {
    std::uint32_t max_id = 0;
    for (std::uint32_t id : train_ids) max_id = std::max(max_id, id);
    in_validation.assign(max_id + 1, false);
    for (std::uint32_t id : validation_ids) {
      if (id < in_validation.size()) in_validation[id] = true;
    }
    for (std::uint32_t id : train_ids) {
      if (!in_validation[id]) fit_ids.push_back(id);
    }
  }

  double best_c = c_grid.front();
  if (validation_ids.empty() || fit_ids.empty()) {
    selection.warnings.push_back(
        "no validation split available; defaulting to the smallest C");
  } else {
    double best_acc = -1;
    for (double c : c_grid) {
      KernelSvm candidate =
          KernelSvm::train(gram, fit_ids, labels, c, options);
      std::size_t correct = 0;
      for (std::uint32_t id : validation_ids) {
        correct += candidate.predict(gram, id) == labels[id];
      }
      double acc =
          static_cast<double>(correct) / validation_ids.size();
      if (acc > best_acc) {
        best_acc = acc;
        best_c = c;
      }
    }
  }

  selection.chosen_c = best_c;
  selection.model =
      KernelSvm::train(gram, train_ids, labels, best_c, options);
  for (const std::string& w : selection.model.warnings()) {
    selection.warnings.push_back(w);
  }
  return selection;
}

}  // namespace iso
