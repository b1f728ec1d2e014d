#include "isotool/cleanse.hpp"

#include <algorithm>
#include <unordered_set>

namespace iso {

CleanResult clean(const Dataset& ds, const ComputeOrbitsOptions& options) {
  OrbitPartition partition = compute_orbits(ds, IsoMode::Topology, options);

  CleanReport report;
  report.original_size = ds.size();

  std::vector<std::uint32_t> kept;
  kept.reserve(partition.orbits.size());
  for (const auto& orbit : partition.orbits) {
    std::unordered_set<std::int32_t> labels;
    for (std::uint32_t id : orbit) labels.insert(ds.class_label(id));
    if (labels.size() > 1) {
      ++report.removed_mismatched_orbits;
      report.removed_mismatched_graphs += orbit.size();
      continue;
    }
    kept.push_back(*std::min_element(orbit.begin(), orbit.end()));
  }
  std::sort(kept.begin(), kept.end());

  std::vector<Graph> graphs;
  std::vector<std::int64_t> class_values;
  graphs.reserve(kept.size());
  class_values.reserve(kept.size());
  for (std::uint32_t id : kept) {
    graphs.push_back(ds.graph(id));
    class_values.push_back(ds.class_value(id));
  }

  Dataset cleaned(ds.name(), std::move(graphs), std::move(class_values),
                  ds.node_label_dictionary(), ds.edge_label_dictionary());

  report.cleaned_size = cleaned.size();
  report.retention_pct =
      percentage(static_cast<std::int64_t>(report.cleaned_size),
                 static_cast<std::int64_t>(report.original_size));
  report.class_count = cleaned.size() > 0 ? cleaned.class_count() : 0;
  if (cleaned.size() > 0) {
    std::vector<std::size_t> per_class(cleaned.class_count(), 0);
    for (std::int32_t c : cleaned.class_labels()) ++per_class[c];
    report.min_class_size =
        *std::min_element(per_class.begin(), per_class.end());
    report.max_class_size =
        *std::max_element(per_class.begin(), per_class.end());
  }
  return {std::move(cleaned), std::move(report)};
}

CleanVerification verify_clean(const Dataset& ds,
                               const ComputeOrbitsOptions& options) {
  OrbitPartition partition = compute_orbits(ds, IsoMode::Topology, options);
  CleanVerification result;
  for (const auto& orbit : partition.orbits) {
    for (std::size_t k = 1; k < orbit.size(); ++k) {
      result.duplicate_pairs.emplace_back(orbit.front(), orbit[k]);
    }
  }
  result.clean = result.duplicate_pairs.empty();
  return result;
}

}  // namespace iso
