#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isotool/graph.hpp"
#include "isotool/refine.hpp"

namespace iso {

struct CanonOptions {
  // Abort canonicalization after this many search-tree nodes; guards against
  // the exponential blowup of highly symmetric instances.
  std::uint64_t search_node_budget = 10'000'000;
};

class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(std::uint64_t budget)
      : std::runtime_error("canonical search exceeded its node budget of " +
                           std::to_string(budget)),
        budget_(budget) {}
  BudgetExceededError(std::uint64_t budget, const std::string& context)
      : std::runtime_error("canonical search exceeded its node budget of " +
                           std::to_string(budget) + " on " + context),
        budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

// Canonical byte-string identity of a graph under a mode: equal certificates
// iff isomorphic in that mode.
using Certificate = std::string;

struct CanonicalForm {
  Certificate certificate;
  // labeling[p] = original vertex at canonical position p.
  std::vector<VertexId> labeling;
};

// Canonical form via individualization-refinement search over the refined
// partition: the target cell is the first smallest non-singleton cell, its
// members are individualized in ascending vertex order, and the canonical
// leaf minimizes (invariant path, encoded adjacency/labels). Pure function
// of the isomorphism class.
CanonicalForm canonical_form(const Graph& g, IsoMode mode,
                             const CanonOptions& options = {});

Certificate certificate(const Graph& g, IsoMode mode,
                        const CanonOptions& options = {});

// Vertex bijection g1 -> g2 witnessing isomorphism.
struct IsoWitness {
  std::vector<VertexId> mapping;
};

// Checks edge preservation in both directions plus label correspondence as
// required by the mode.
bool verify_witness(const Graph& g1, const Graph& g2, const IsoWitness& w,
                    IsoMode mode);

// Decides isomorphism; the returned witness is validated before return.
// Cheap invariants (node/edge counts, degree sequences, label multisets)
// reject first, then canonical forms are compared.
std::optional<IsoWitness> is_isomorphic(const Graph& g1, const Graph& g2,
                                        IsoMode mode,
                                        const CanonOptions& options = {});

}  // namespace iso
