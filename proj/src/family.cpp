#include "subm/family.hpp"

#include <algorithm>

namespace subm {

UpwardClosedFamily::UpwardClosedFamily(Algebra alg, std::vector<Element> generators)
    : alg_(alg), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (!alg_.contains(g)) throw InputError("generator from a different algebra");
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      if (leq(gens_[i], gens_[j]) || leq(gens_[j], gens_[i]))
        throw InputError("generators must be pairwise incomparable: " + to_string(gens_[i]) +
                         " vs " + to_string(gens_[j]));
    }
  }
}

bool UpwardClosedFamily::member(const Element& a) const {
  if (!alg_.contains(a)) throw InputError("membership query from a different algebra");
  for (const auto& g : gens_) {
    if (leq(g, a)) return true;
  }
  return false;
}

UpwardClosedFamily upward_closure(const Algebra& alg, std::vector<Element> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Element> minimal;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j != i && leq(xs[j], xs[i]) && xs[j] != xs[i]) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(xs[i]);
  }
  return UpwardClosedFamily(alg, std::move(minimal));
}

bool is_antichain(const std::vector<Element>& xs) {
  if (xs.empty()) throw InputError("is_antichain on an empty list");
  for (const auto& x : xs) {
    if (x.is_zero()) return false;
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (!meet(xs[i], xs[j]).is_zero()) return false;
    }
  }
  return true;
}

std::vector<char> materialize(const UpwardClosedFamily& fam) {
  const Algebra& alg = fam.algebra();
  if (!alg.is_finite()) throw InputError("materialize needs the finite backend");
  std::vector<char> bits(alg.element_count(), 0);
  for (const auto& g : fam.generators()) {
    std::uint32_t gm = g.mask();
    // mark all supersets of gm: iterate supermasks via the complement-submask walk
    std::uint32_t full = static_cast<std::uint32_t>(alg.element_count() - 1);
    std::uint32_t rest = full & ~gm;
    std::uint32_t s = rest;
    while (true) {
      bits[gm | s] = 1;
      if (s == 0) break;
      s = (s - 1) & rest;
    }
  }
  return bits;
}

}  // namespace subm
