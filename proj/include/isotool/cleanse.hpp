#pragma once

#include "isotool/audit.hpp"
#include "isotool/dataset.hpp"

namespace iso {

struct CleanReport {
  std::size_t original_size = 0;
  std::size_t cleaned_size = 0;
  Rational retention_pct;
  std::size_t removed_mismatched_orbits = 0;
  std::size_t removed_mismatched_graphs = 0;
  std::size_t class_count = 0;
  std::size_t min_class_size = 0;
  std::size_t max_class_size = 0;
};

struct CleanResult {
  Dataset dataset;
  CleanReport report;
};

// Deduplicates by topology-only orbits: each single-label orbit keeps its
// lowest-id member, orbits with conflicting class labels are dropped whole.
// Kept graphs preserve original dataset order; empty classes disappear from
// the label dictionary.
CleanResult clean(const Dataset& ds, const ComputeOrbitsOptions& options = {});

struct CleanVerification {
  bool clean = true;
  // One (representative, duplicate) pair per extra member of each
  // non-trivial orbit.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> duplicate_pairs;
};

// True iff every topology-mode orbit is trivial.
CleanVerification verify_clean(const Dataset& ds,
                               const ComputeOrbitsOptions& options = {});

}  // namespace iso
