#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "isotool/canon.hpp"
#include "isotool/dataset.hpp"
#include "isotool/rational.hpp"

namespace iso {

// Partition of a dataset into maximal sets of mutually isomorphic graphs.
// Orbits are ordered by smallest member id; members ascend within an orbit.
struct OrbitPartition {
  IsoMode mode = IsoMode::Topology;
  std::vector<std::vector<std::uint32_t>> orbits;
  std::vector<std::uint32_t> orbit_of;       // graph id -> orbit index
  std::vector<std::uint32_t> representatives;  // lowest member per orbit

  std::size_t nontrivial_count() const {
    std::size_t c = 0;
    for (const auto& o : orbits) c += o.size() > 1;
    return c;
  }
};

struct ComputeOrbitsOptions {
  CanonOptions canon;
  // Validate one witness per graph against its orbit representative; guards
  // certificate grouping against collisions.
  bool verify_witnesses = true;
  unsigned jobs = 1;
};

// Groups graphs by certificate equality. Canonicalization errors carry the
// offending graph id.
OrbitPartition compute_orbits(const Dataset& ds, IsoMode mode,
                              const ComputeOrbitsOptions& options = {});

struct OrbitHistogram {
  std::map<std::size_t, std::size_t> nontrivial;  // orbit size -> count
  std::size_t trivial = 0;
};

OrbitHistogram orbit_histogram(const OrbitPartition& partition);

// Dataset quality metrics over an orbit partition. I counts graphs in
// orbits of size > 1; IP counts isomorphic pairs among all graph pairs;
// mismatched counts graphs in orbits carrying more than one class label.
struct AuditReport {
  std::size_t n = 0;
  std::size_t orbits_nontrivial = 0;
  std::size_t orbits_total = 0;
  std::size_t iso_graph_count = 0;  // I
  Rational iso_graph_pct;           // I / N * 100
  Rational iso_pair_pct;            // sum C(s,2) / C(N,2) * 100
  std::size_t mismatched_count = 0;
  Rational mismatched_pct;
  OrbitHistogram histogram;
};

AuditReport audit_metrics(const Dataset& ds, const OrbitPartition& partition);

}  // namespace iso
