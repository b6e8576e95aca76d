#pragma once

#include <vector>

#include "subm/family.hpp"
#include "subm/util.hpp"

namespace subm {

/// Result of a maximum-disjoint-packing search. exact=false means the step
/// budget ran out: size/witness are the best found, not a proven optimum.
struct PackingResult {
  long size = 0;
  std::vector<Element> witness;
  bool exact = true;
};

/// Maximum antichain inside an upward-closed family, finite backend, exact by
/// branch-and-bound over the atom set with memoization.
///
/// Any packing element dominates a distinct generator, and replacing each
/// element by such a generator preserves disjointness, so the search runs over
/// the generators only.
PackingResult max_disjoint_packing(const UpwardClosedFamily& fam, SearchBudget budget = {});

}  // namespace subm
