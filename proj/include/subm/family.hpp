#pragma once

#include <vector>

#include "subm/algebra.hpp"
#include "subm/element.hpp"

namespace subm {

/// An upward-closed family, stored by its minimal-element antichain (the
/// extension of a level set can be exponentially large, the generators never
/// are). a is a member iff some generator g <= a.
class UpwardClosedFamily {
 public:
  /// Generators must be pairwise incomparable and from alg; they are sorted
  /// into the deterministic element order.
  UpwardClosedFamily(Algebra alg, std::vector<Element> generators);

  const Algebra& algebra() const { return alg_; }
  const std::vector<Element>& generators() const { return gens_; }
  bool empty() const { return gens_.empty(); }

  bool member(const Element& a) const;

  friend bool operator==(const UpwardClosedFamily&, const UpwardClosedFamily&) = default;

 private:
  Algebra alg_;
  std::vector<Element> gens_;
};

/// Family generated by the minimal elements of xs; member(result, a) iff some
/// x in xs has x <= a.
UpwardClosedFamily upward_closure(const Algebra& alg, std::vector<Element> xs);

/// True iff the nonempty list is pairwise disjoint and contains no zero
/// (0 never counts as an antichain member).
bool is_antichain(const std::vector<Element>& xs);

/// Finite backend: membership bit per mask, index = mask. Transient scan
/// helper; families themselves stay generator-represented.
std::vector<char> materialize(const UpwardClosedFamily& fam);

}  // namespace subm
