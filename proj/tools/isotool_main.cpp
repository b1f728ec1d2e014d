#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "isotool/cleanse.hpp"
#include "isotool/reports.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotIsomorphic = 1;
constexpr int kExitParseError = 2;
constexpr int kExitBudgetExceeded = 3;

struct CommonOptions {
  unsigned jobs = 0;  // 0 = hardware concurrency
  std::uint64_t budget = 10'000'000;
  bool trust_certificates = false;
  std::uint64_t seed = 0;

  iso::ComputeOrbitsOptions orbit_options() const {
    iso::ComputeOrbitsOptions o;
    o.canon.search_node_budget = budget;
    o.verify_witnesses = !trust_certificates;
    o.jobs = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
    return o;
  }
};

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw iso::ParseError("cannot write " + path.string());
  out << content;
}

void write_json(const fs::path& path, const iso::Json& j) {
  write_file(path, j.dump(2) + "\n");
}

void print_audit_row(const std::string& name, iso::IsoMode mode,
                     const iso::AuditReport& r) {
  std::cout << name << "\t" << to_string(mode) << "\tN=" << r.n
            << "\torbits=" << r.orbits_nontrivial
            << "\tI=" << r.iso_graph_count
            << "\tI%=" << format_fixed(r.iso_graph_pct, 2)
            << "\tIP%=" << format_fixed(r.iso_pair_pct, 2)
            << "\tmismatched%=" << format_fixed(r.mismatched_pct, 2) << "\n";
}

int cmd_audit(const fs::path& dataset_dir, const std::string& mode_name,
              const fs::path& out_dir, bool multiplicity_as_edge_label,
              const CommonOptions& common) {
  iso::LoadOptions load_options;
  load_options.multiplicity_as_edge_label = multiplicity_as_edge_label;
  iso::LoadReport load_report;
  iso::Dataset ds = iso::load_dataset(dataset_dir, load_options, &load_report);
  for (const std::string& notice : load_report.notices) {
    std::cerr << "note: " << notice << "\n";
  }

  std::vector<iso::IsoMode> modes;
  if (mode_name == "both") {
    modes.push_back(iso::IsoMode::Topology);
    if (ds.has_node_labels()) modes.push_back(iso::IsoMode::NodeLabels);
  } else {
    auto mode = iso::parse_iso_mode(mode_name);
    if (!mode) throw iso::ParseError("unknown mode '" + mode_name + "'");
    modes.push_back(*mode);
  }

  iso::Json reports = iso::Json::array();
  std::string csv;
  for (iso::IsoMode mode : modes) {
    iso::OrbitPartition orbits =
        iso::compute_orbits(ds, mode, common.orbit_options());
    iso::AuditReport report = iso::audit_metrics(ds, orbits);
    print_audit_row(ds.name(), mode, report);
    iso::Json j = iso::audit_report_json(ds.name(), mode, report);
    j["seed"] = common.seed;
    reports.push_back(std::move(j));
    std::string mode_csv = iso::histogram_csv(mode, report.histogram);
    if (csv.empty()) {
      csv = mode_csv;
    } else {
      csv += mode_csv.substr(mode_csv.find('\n') + 1);  // skip header
    }
  }

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_json(out_dir / "audit.json", reports);
    write_file(out_dir / "histogram.csv", csv);
  }
  return kExitOk;
}

int cmd_clean(const fs::path& dataset_dir, const fs::path& out_dir,
              const CommonOptions& common) {
  iso::Dataset ds = iso::load_dataset(dataset_dir);
  iso::CleanResult result = iso::clean(ds, common.orbit_options());
  iso::DatasetStats stats = iso::dataset_stats(result.dataset);

  std::cout << ds.name() << "\tsize=" << result.report.cleaned_size
            << "\tretention%=" << format_fixed(result.report.retention_pct, 2)
            << "\tavg_nodes=" << format_fixed(stats.avg_nodes(), 2)
            << "\tavg_edges=" << format_fixed(stats.avg_edges(), 2)
            << "\tclasses=" << result.report.class_count
            << "\tmin_class=" << result.report.min_class_size
            << "\tmax_class=" << result.report.max_class_size << "\n";

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    iso::write_dataset(result.dataset, out_dir / ds.name());
    iso::Json j = iso::clean_report_json(ds.name(), result.report, stats);
    j["seed"] = common.seed;
    write_json(out_dir / "clean_report.json", j);
  }
  return kExitOk;
}

std::vector<std::int32_t> read_predictions(const fs::path& file,
                                           const iso::Dataset& ds) {
  std::ifstream in(file);
  if (!in) throw iso::ParseError("cannot open " + file.string());
  std::vector<std::int32_t> predictions(ds.size(), -1);
  std::vector<bool> seen(ds.size(), false);

  // Raw class values are mapped through the dataset's dictionary.
  std::unordered_map<std::int64_t, std::int32_t> value_to_id;
  for (std::size_t id = 0; id < ds.class_dictionary().size(); ++id) {
    value_to_id[ds.class_dictionary().value(static_cast<std::int32_t>(id))] =
        static_cast<std::int32_t>(id);
  }

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line.find("graph_id") != std::string::npos) continue;
    std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw iso::ParseError("expected 'graph_id,predicted_label' at " +
                            file.string() + ":" + std::to_string(line_no));
    }
    std::size_t id = std::stoull(line.substr(0, comma));
    std::int64_t value = std::stoll(line.substr(comma + 1));
    if (id >= ds.size()) {
      throw iso::ParseError("graph id " + std::to_string(id) +
                            " out of range at " + file.string() + ":" +
                            std::to_string(line_no));
    }
    auto it = value_to_id.find(value);
    if (it == value_to_id.end()) {
      throw iso::ParseError("predicted label " + std::to_string(value) +
                            " is not a class of '" + ds.name() + "'");
    }
    predictions[id] = it->second;
    seen[id] = true;
  }
  for (std::size_t id = 0; id < ds.size(); ++id) {
    if (!seen[id]) {
      throw iso::ParseError("no prediction for graph " + std::to_string(id));
    }
  }
  return predictions;
}

int cmd_eval(const fs::path& dataset_dir, iso::EvalConfig config,
             const fs::path& predictions_file, const fs::path& out_dir) {
  iso::Dataset ds = iso::load_dataset(dataset_dir);
  iso::EvaluationResult result;
  if (!predictions_file.empty()) {
    std::vector<std::int32_t> predictions = read_predictions(predictions_file, ds);
    result = iso::evaluate_predictions(ds, config, predictions);
  } else {
    result = iso::run_evaluation(ds, config);
  }

  std::cout << ds.name() << "\tkernel=" << config.kernel
            << "\tmean_acc_test=" << result.mean_acc_test
            << "\tmean_acc_iso=" << result.mean_acc_iso;
  if (config.peering != iso::PeeringMode::None) {
    std::cout << "\tpeered_acc_test=" << result.mean_peered_acc_test
              << "\tpeered_acc_iso=" << result.mean_peered_acc_iso;
  }
  std::cout << "\n";
  for (const std::string& w : result.warnings) {
    std::cerr << "warning: " << w << "\n";
  }

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_json(out_dir / "eval.json", iso::evaluation_json(result));
  }
  return kExitOk;
}

int cmd_isocheck(const fs::path& file_a, const fs::path& file_b,
                 const std::string& mode_name, const CommonOptions& common) {
  auto mode = iso::parse_iso_mode(mode_name);
  if (!mode) throw iso::ParseError("unknown mode '" + mode_name + "'");
  iso::Graph a = iso::load_graph_file(file_a);
  iso::Graph b = iso::load_graph_file(file_b);
  iso::CanonOptions canon;
  canon.search_node_budget = common.budget;
  auto witness = iso::is_isomorphic(a, b, *mode, canon);
  if (!witness) {
    std::cout << "not isomorphic (" << to_string(*mode) << ")\n";
    return kExitNotIsomorphic;
  }
  std::cout << "isomorphic (" << to_string(*mode) << "); witness:";
  for (iso::VertexId v = 0; v < witness->mapping.size(); ++v) {
    std::cout << " " << v << "->" << witness->mapping[v];
  }
  std::cout << "\n";
  return kExitOk;
}

int cmd_stats(const fs::path& dataset_dir, const fs::path& out_dir) {
  iso::Dataset ds = iso::load_dataset(dataset_dir);
  iso::DatasetStats stats = iso::dataset_stats(ds);
  std::cout << ds.name() << "\tN=" << stats.n << "\tC=" << stats.classes
            << "\tavg_nodes=" << format_fixed(stats.avg_nodes(), 2)
            << "\tavg_edges=" << format_fixed(stats.avg_edges(), 2)
            << "\tnode_labels=" << (stats.has_node_labels ? "+" : "-")
            << "\tedge_labels=" << (stats.has_edge_labels ? "+" : "-") << "\n";
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_json(out_dir / "stats.json", iso::stats_json(ds.name(), stats));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph classification dataset audit: finds isomorphic "
               "duplicates, cleans datasets, and measures their effect on "
               "classifier accuracy"};
  app.require_subcommand(1);

  CommonOptions common;
  app.fallthrough();  // global flags may follow the subcommand
  app.add_option("--jobs", common.jobs, "worker threads (0 = all cores)");
  app.add_option("--budget", common.budget,
                 "canonical search node budget per graph");
  app.add_option("--seed", common.seed, "random seed echoed in reports");

  std::string dataset_path, out_path, mode_name = "both";
  bool multiplicity_flag = false;

  CLI::App* audit = app.add_subcommand("audit", "orbit and quality metrics");
  audit->add_option("dataset", dataset_path, "dataset directory")->required();
  audit->add_option("--mode", mode_name,
                    "topology | node-labels | node-edge-labels | both");
  audit->add_option("--out", out_path, "report directory");
  audit->add_flag("--trust-certificates", common.trust_certificates,
                  "skip witness verification of certificate groups");
  audit->add_flag("--multiplicity-as-edge-label", multiplicity_flag,
                  "fold parallel-edge counts into edge labels");

  CLI::App* clean = app.add_subcommand("clean", "emit a deduplicated dataset");
  clean->add_option("dataset", dataset_path, "dataset directory")->required();
  clean->add_option("--out", out_path, "output directory");

  iso::EvalConfig eval_config;
  std::string peering_name = "none", link_mode_name = "topology";
  std::string predictions_path;
  bool no_normalize = false;
  CLI::App* eval = app.add_subcommand("eval", "cross-validated evaluation");
  eval->set_help_flag("--help", "print help");  // frees -h for the WL depth
  eval->add_option("dataset", dataset_path, "dataset directory")->required();
  eval->add_option("--kernel", eval_config.kernel, "wl | vh");
  eval->add_option("--h", eval_config.wl_iterations, "WL iterations");
  eval->add_option("--folds", eval_config.folds, "cross-validation folds");
  eval->add_option("--C-grid", eval_config.c_grid, "SVM C candidates");
  eval->add_option("--peering", peering_name, "none | ph | p");
  eval->add_option("--link-mode", link_mode_name,
                   "isomorphism mode for test-train linkage");
  eval->add_option("--predictions", predictions_path,
                   "CSV graph_id,predicted_label instead of the built-in "
                   "classifier");
  eval->add_flag("--no-normalize", no_normalize, "skip kernel normalization");
  eval->add_option("--out", out_path, "report directory");

  std::string file_a, file_b;
  std::string check_mode = "topology";
  CLI::App* isocheck =
      app.add_subcommand("isocheck", "compare two graph files");
  isocheck->add_option("fileA", file_a, "first graph file")->required();
  isocheck->add_option("fileB", file_b, "second graph file")->required();
  isocheck->add_option("--mode", check_mode,
                       "topology | node-labels | node-edge-labels");

  CLI::App* stats = app.add_subcommand("stats", "dataset summary row");
  stats->add_option("dataset", dataset_path, "dataset directory")->required();
  stats->add_option("--out", out_path, "report directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (audit->parsed()) {
      return cmd_audit(dataset_path, mode_name, out_path, multiplicity_flag,
                       common);
    }
    if (clean->parsed()) {
      return cmd_clean(dataset_path, out_path, common);
    }
    if (eval->parsed()) {
      auto peering = iso::parse_peering_mode(peering_name);
      if (!peering) throw iso::ParseError("unknown peering '" + peering_name + "'");
      auto link_mode = iso::parse_iso_mode(link_mode_name);
      if (!link_mode) throw iso::ParseError("unknown mode '" + link_mode_name + "'");
      eval_config.peering = *peering;
      eval_config.link_mode = *link_mode;
      eval_config.seed = common.seed;
      eval_config.normalize = !no_normalize;
      eval_config.orbits = common.orbit_options();
      return cmd_eval(dataset_path, eval_config, predictions_path, out_path);
    }
    if (isocheck->parsed()) {
      return cmd_isocheck(file_a, file_b, check_mode, common);
    }
    if (stats->parsed()) {
      return cmd_stats(dataset_path, out_path);
    }
  } catch (const iso::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudgetExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
  return kExitParseError;
}
