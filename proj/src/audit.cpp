#include "isotool/audit.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace iso {

namespace {

// Canonical forms for all graphs, fanned out across jobs. Results are stored
// by graph index, so the outcome does not depend on scheduling.
std::vector<CanonicalForm> canonical_forms(const Dataset& ds, IsoMode mode,
                                           const ComputeOrbitsOptions& opts) {
  const std::size_t n = ds.size();
  std::vector<CanonicalForm> forms(n);
  unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        forms[i] = canonical_form(ds.graph(i), mode, opts.canon);
      } catch (const BudgetExceededError& e) {
        throw BudgetExceededError(e.budget(),
                                  "graph " + std::to_string(i) + " of '" +
                                      ds.name() + "'");
      }
    }
    return forms;
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::size_t error_index = n;
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        forms[i] = canonical_form(ds.graph(i), mode, opts.canon);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) {
    try {
      std::rethrow_exception(error);
    } catch (const BudgetExceededError& e) {
      throw BudgetExceededError(e.budget(),
                                "graph " + std::to_string(error_index) +
                                    " of '" + ds.name() + "'");
    }
  }
  return forms;
}

}  // namespace

OrbitPartition compute_orbits(const Dataset& ds, IsoMode mode,
                              const ComputeOrbitsOptions& options) {
  std::vector<CanonicalForm> forms = canonical_forms(ds, mode, options);

  OrbitPartition partition;
  partition.mode = mode;
  partition.orbit_of.resize(ds.size());

  std::unordered_map<std::string_view, std::uint32_t> orbit_index;
  orbit_index.reserve(ds.size());
  for (std::uint32_t i = 0; i < ds.size(); ++i) {
    auto [it, inserted] = orbit_index.try_emplace(
        std::string_view(forms[i].certificate),
        static_cast<std::uint32_t>(partition.orbits.size()));
    if (inserted) {
      partition.orbits.emplace_back();
      partition.representatives.push_back(i);
    }
    partition.orbits[it->second].push_back(i);
    partition.orbit_of[i] = it->second;
  }

  if (options.verify_witnesses) {
    for (const auto& orbit : partition.orbits) {
      if (orbit.size() < 2) continue;
      std::uint32_t rep = orbit.front();
      const CanonicalForm& rep_form = forms[rep];
      const std::uint32_t n = ds.graph(rep).node_count();
      std::vector<std::uint32_t> rep_position(n);
      for (std::uint32_t p = 0; p < n; ++p) {
        rep_position[rep_form.labeling[p]] = p;
      }
      for (std::size_t k = 1; k < orbit.size(); ++k) {
        std::uint32_t member = orbit[k];
        IsoWitness witness;
        witness.mapping.resize(n);
        for (VertexId v = 0; v < n; ++v) {
          witness.mapping[v] = forms[member].labeling[rep_position[v]];
        }
        if (!verify_witness(ds.graph(rep), ds.graph(member), witness, mode)) {
          throw std::logic_error(
              "certificate collision between graphs " + std::to_string(rep) +
              " and " + std::to_string(member) + " of '" + ds.name() + "'");
        }
      }
    }
  }
  return partition;
}

OrbitHistogram orbit_histogram(const OrbitPartition& partition) {
  OrbitHistogram hist;
  for (const auto& orbit : partition.orbits) {
    if (orbit.size() > 1) {
      ++hist.nontrivial[orbit.size()];
    } else {
      ++hist.trivial;
    }
  }
  return hist;
}

AuditReport audit_metrics(const Dataset& ds, const OrbitPartition& partition) {
  AuditReport report;
  report.n = ds.size();
  report.orbits_total = partition.orbits.size();
  report.histogram = orbit_histogram(partition);
  report.orbits_nontrivial = partition.nontrivial_count();

  std::int64_t iso_pairs = 0;
  for (const auto& orbit : partition.orbits) {
    if (orbit.size() > 1) {
      report.iso_graph_count += orbit.size();
      auto s = static_cast<std::int64_t>(orbit.size());
      iso_pairs += s * (s - 1) / 2;
    }
    std::unordered_set<std::int32_t> labels;
    for (std::uint32_t id : orbit) labels.insert(ds.class_label(id));
    if (labels.size() > 1) report.mismatched_count += orbit.size();
  }

  auto n = static_cast<std::int64_t>(report.n);
  report.iso_graph_pct =
      percentage(static_cast<std::int64_t>(report.iso_graph_count), n);
  report.mismatched_pct =
      percentage(static_cast<std::int64_t>(report.mismatched_count), n);
  std::int64_t total_pairs = n * (n - 1) / 2;
  report.iso_pair_pct = percentage(iso_pairs, total_pairs);
  return report;
}

}  // namespace iso
