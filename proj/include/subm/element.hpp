#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace subm {

enum class Backend : std::uint8_t { Finite, Cantor };

/// An element of a Boolean algebra, in one of two exact representations:
///   - finite backend: an atom bitmask over N atoms (N <= 24);
///   - cantor backend: a canonical finite antichain of binary-tree nodes,
///     each node a string over {'0','1'} naming a clopen cylinder.
///
/// Cantor canonical form: no node is an ancestor of another, and no two
/// sibling nodes are both present (complete sibling pairs merge into the
/// parent). {} encodes 0 and {""} encodes 1, so equality is structural.
class Element {
 public:
  Element() = default;  // finite zero of a 0-atom placeholder; containers only

  static Element finite(unsigned atom_count, std::uint32_t mask);
  static Element cantor(std::vector<std::string> nodes);  // canonicalizes

  Backend backend() const { return backend_; }
  unsigned atom_count() const { return atoms_; }    // finite backend
  std::uint32_t mask() const { return mask_; }      // finite backend
  const std::vector<std::string>& nodes() const { return nodes_; }  // cantor

  bool is_zero() const;
  bool is_one() const;

  friend bool operator==(const Element& a, const Element& b) = default;
  /// Deterministic total order used for tie-breaking and report output:
  /// mask value on the finite backend, node-set lexicographic on cantor.
  friend bool operator<(const Element& a, const Element& b);

 private:
  Backend backend_ = Backend::Finite;
  std::uint8_t atoms_ = 0;
  std::uint32_t mask_ = 0;
  std::vector<std::string> nodes_;  // sorted, canonical
};

Element join(const Element& a, const Element& b);
Element meet(const Element& a, const Element& b);
Element complement(const Element& a);
Element symdiff(const Element& a, const Element& b);
bool leq(const Element& a, const Element& b);

/// Pairwise disjoint elements whose join is a. Finite backend: the atoms of a.
/// Cantor backend: one singleton element per canonical node of a.
std::vector<Element> atoms_below(const Element& a);

/// Canonical form of an arbitrary node set: duplicates removed, descendants of
/// present nodes dropped, complete sibling pairs merged (to fixpoint), sorted.
std::vector<std::string> canonical_nodes(std::vector<std::string> nodes);

/// Short printable form ("0x2a" or "{00,1}") for reports and test failures.
std::string to_string(const Element& a);

/// Throws InputError unless a and b live in the same algebra.
void require_same_algebra(const Element& a, const Element& b);

}  // namespace subm
