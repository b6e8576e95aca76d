#include "subm/packing.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace subm {

namespace {

struct PackSearch {
  std::vector<std::uint32_t> gens;              // sorted by mask value
  std::vector<std::vector<int>> by_atom;        // atom index -> generators containing it
  std::unordered_map<std::uint32_t, int> memo;  // available-mask -> best packing size
  SearchBudget* budget;
  bool exhausted = false;

  int best(std::uint32_t avail) {
    auto it = memo.find(avail);
    if (it != memo.end()) return it->second;
    if (exhausted || !budget->tick(1)) {
      exhausted = true;
      return 0;
    }
    // pivot: lowest available atom contained in some generator that still fits
    int pivot = -1;
    for (std::uint32_t rest = avail; rest; rest &= rest - 1) {
      int atom = std::countr_zero(rest);
      for (int gi : by_atom[atom]) {
        if ((gens[gi] & avail) == gens[gi]) {
          pivot = atom;
          break;
        }
      }
      if (pivot >= 0) break;
    }
    if (pivot < 0) {
      memo[avail] = 0;
      return 0;
    }
    // either some packed generator contains the pivot atom, or none does and
    // the packing lives in avail minus the pivot
    int result = 0;
    for (int gi : by_atom[pivot]) {
      std::uint32_t g = gens[gi];
      if ((g & avail) != g) continue;
      int cand = 1 + best(avail & ~g);
      if (cand > result) result = cand;
      if (exhausted) return result;
    }
    int cand = best(avail & ~(std::uint32_t{1} << pivot));
    if (cand > result) result = cand;
    if (!exhausted) memo[avail] = result;
    return result;
  }
};

}  // namespace

PackingResult max_disjoint_packing(const UpwardClosedFamily& fam, SearchBudget budget) {
  const Algebra& alg = fam.algebra();
  if (!alg.is_finite()) throw InputError("max_disjoint_packing needs the finite backend");
  for (const auto& g : fam.generators()) {
    if (g.is_zero()) throw InputError("packing family contains 0");
  }
  PackingResult out;
  if (fam.empty()) return out;

  PackSearch s;
  s.budget = &budget;
  for (const auto& g : fam.generators()) s.gens.push_back(g.mask());
  std::sort(s.gens.begin(), s.gens.end());
  s.by_atom.resize(alg.atoms());
  for (std::size_t i = 0; i < s.gens.size(); ++i) {
    std::uint32_t m = s.gens[i];
    while (m) {
      s.by_atom[std::countr_zero(m)].push_back(static_cast<int>(i));
      m &= m - 1;
    }
  }

  std::uint32_t full = static_cast<std::uint32_t>(alg.element_count() - 1);
  out.size = s.best(full);
  out.exact = !s.exhausted;

  // greedy reconstruction over the memo: pick the mask-smallest generator that
  // keeps the optimum reachable
  std::uint32_t avail = full;
  long need = out.size;
  while (need > 0 && !s.exhausted) {
    bool advanced = false;
    for (std::uint32_t g : s.gens) {
      if ((g & avail) != g) continue;
      std::uint32_t next = avail & ~g;
      if (s.best(next) == need - 1) {
        out.witness.push_back(alg.element(g));
        avail = next;
        --need;
        advanced = true;
        break;
      }
      if (s.exhausted) break;
    }
    if (!advanced) break;
  }
  if (static_cast<long>(out.witness.size()) != out.size) {
    out.exact = false;
    out.size = static_cast<long>(out.witness.size());
  }
  return out;
}

}  // namespace subm
