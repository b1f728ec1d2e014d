#include "isotool/reports.hpp"

namespace iso {

namespace {

Json decomposition_json(const AccuracyDecomposition& d) {
  Json j;
  j["n_test"] = d.n_test;
  j["n_new"] = d.n_new;
  j["n_iso"] = d.n_iso;
  j["acc_test"] = round_half_up(d.acc_test, 3);
  j["acc_new"] = round_half_up(d.acc_new, 3);
  j["acc_iso"] = round_half_up(d.acc_iso, 3);
  j["acc_test_exact"] = to_json(d.acc_test);
  j["acc_new_exact"] = to_json(d.acc_new);
  j["acc_iso_exact"] = to_json(d.acc_iso);
  return j;
}

}  // namespace

Json to_json(const Rational& r) { return Json::array({r.num, r.den}); }

Json audit_report_json(const std::string& dataset, IsoMode mode,
                       const AuditReport& report) {
  Json j;
  j["dataset"] = dataset;
  j["mode"] = std::string(to_string(mode));
  j["N"] = report.n;
  j["orbits_nontrivial"] = report.orbits_nontrivial;
  j["orbits_total"] = report.orbits_total;
  j["I"] = report.iso_graph_count;
  j["I_pct"] = round_half_up(report.iso_graph_pct, 2);
  j["IP_pct"] = round_half_up(report.iso_pair_pct, 2);
  j["mismatched"] = report.mismatched_count;
  j["mismatched_pct"] = round_half_up(report.mismatched_pct, 2);
  j["I_pct_exact"] = to_json(report.iso_graph_pct);
  j["IP_pct_exact"] = to_json(report.iso_pair_pct);
  j["mismatched_pct_exact"] = to_json(report.mismatched_pct);
  Json hist = Json::array();
  for (const auto& [size, count] : report.histogram.nontrivial) {
    hist.push_back(Json::array({size, count}));
  }
  j["histogram"] = hist;
  j["trivial_orbits"] = report.histogram.trivial;
  return j;
}

std::string histogram_csv(IsoMode mode, const OrbitHistogram& histogram) {
  std::string out = "mode,orbit_size,count\n";
  std::string mode_name(to_string(mode));
  for (const auto& [size, count] : histogram.nontrivial) {
    out += mode_name + "," + std::to_string(size) + "," +
           std::to_string(count) + "\n";
  }
  out += mode_name + ",1," + std::to_string(histogram.trivial) + "\n";
  return out;
}

Json clean_report_json(const std::string& dataset, const CleanReport& report,
                       const DatasetStats& cleaned_stats) {
  Json j;
  j["dataset"] = dataset;
  j["original_size"] = report.original_size;
  j["cleaned_size"] = report.cleaned_size;
  j["retention_pct"] = round_half_up(report.retention_pct, 2);
  j["retention_pct_exact"] = to_json(report.retention_pct);
  j["removed_mismatched_orbits"] = report.removed_mismatched_orbits;
  j["removed_mismatched_graphs"] = report.removed_mismatched_graphs;
  j["classes"] = report.class_count;
  j["min_class"] = report.min_class_size;
  j["max_class"] = report.max_class_size;
  j["avg_nodes"] = round_half_up(cleaned_stats.avg_nodes(), 2);
  j["avg_edges"] = round_half_up(cleaned_stats.avg_edges(), 2);
  j["avg_nodes_exact"] = to_json(cleaned_stats.avg_nodes());
  j["avg_edges_exact"] = to_json(cleaned_stats.avg_edges());
  return j;
}

Json stats_json(const std::string& dataset, const DatasetStats& stats) {
  Json j;
  j["dataset"] = dataset;
  j["N"] = stats.n;
  j["classes"] = stats.classes;
  j["avg_nodes"] = round_half_up(stats.avg_nodes(), 2);
  j["avg_edges"] = round_half_up(stats.avg_edges(), 2);
  j["avg_nodes_exact"] = to_json(stats.avg_nodes());
  j["avg_edges_exact"] = to_json(stats.avg_edges());
  j["node_labels"] = stats.has_node_labels;
  j["edge_labels"] = stats.has_edge_labels;
  j["min_class"] = stats.min_class_size;
  j["max_class"] = stats.max_class_size;
  return j;
}

Json evaluation_json(const EvaluationResult& result) {
  Json j;
  j["dataset"] = result.dataset;
  j["seed"] = result.config.seed;
  j["kernel"] = result.config.kernel;
  if (result.config.kernel == "wl") j["h"] = result.config.wl_iterations;
  j["folds"] = result.config.folds;
  j["C_grid"] = result.config.c_grid;
  j["peering"] = std::string(to_string(result.config.peering));
  j["link_mode"] = std::string(to_string(result.config.link_mode));
  j["normalized_kernel"] = result.config.normalize;

  Json folds = Json::array();
  for (const FoldEvaluation& fe : result.folds) {
    Json f;
    f["fold"] = fe.fold;
    f["n_train"] = fe.n_train;
    if (fe.chosen_c > 0) f["chosen_C"] = fe.chosen_c;
    Json base = decomposition_json(fe.base);
    for (auto& [key, value] : base.items()) {
      f[key] = value;
    }
    if (fe.peered) f["peered"] = decomposition_json(*fe.peered);
    f["homogeneous_iso"] = fe.homogeneous_iso;
    f["homogeneous_iso_correct"] = fe.homogeneous_iso_correct;
    f["eq2_identity"] = fe.eq2_ok;
    f["property1"] = fe.property1_ok;
    f["theorem1"] = fe.theorem1_ok;
    folds.push_back(std::move(f));
  }
  j["per_fold"] = std::move(folds);

  Json mean;
  mean["acc_test"] = result.mean_acc_test;
  mean["acc_new"] = result.mean_acc_new;
  mean["acc_iso"] = result.mean_acc_iso;
  if (result.config.peering != PeeringMode::None) {
    mean["peered_acc_test"] = result.mean_peered_acc_test;
    mean["peered_acc_iso"] = result.mean_peered_acc_iso;
  }
  j["mean"] = std::move(mean);
  Json std_dev;
  std_dev["acc_test"] = result.std_acc_test;
  std_dev["acc_new"] = result.std_acc_new;
  std_dev["acc_iso"] = result.std_acc_iso;
  j["std"] = std::move(std_dev);
  j["warnings"] = result.warnings;
  return j;
}

}  // namespace iso
