#pragma once

#include <cstdint>

#include "subm/element.hpp"
#include "subm/util.hpp"

namespace subm {

/// Handle for the algebra an element lives in: either the powerset of N atoms
/// (1 <= N <= 24, elements are machine-word bitmasks) or the clopen algebra of
/// Cantor space, which is atomless.
class Algebra {
 public:
  static Algebra finite(unsigned atoms) {
    if (atoms < 1 || atoms > 24) throw InputError("finite algebra needs 1..24 atoms");
    Algebra a;
    a.backend_ = Backend::Finite;
    a.atoms_ = atoms;
    return a;
  }

  static Algebra cantor() {
    Algebra a;
    a.backend_ = Backend::Cantor;
    return a;
  }

  Backend backend() const { return backend_; }
  bool is_finite() const { return backend_ == Backend::Finite; }
  unsigned atoms() const { return atoms_; }

  /// 2^N on the finite backend.
  std::uint64_t element_count() const {
    if (!is_finite()) throw InputError("element_count on the cantor backend");
    return std::uint64_t{1} << atoms_;
  }

  Element zero() const {
    return is_finite() ? Element::finite(atoms_, 0) : Element::cantor({});
  }
  Element one() const {
    return is_finite() ? Element::finite(atoms_, static_cast<std::uint32_t>(element_count() - 1))
                       : Element::cantor({""});
  }
  Element atom(unsigned i) const {
    if (!is_finite() || i >= atoms_) throw InputError("atom index out of range");
    return Element::finite(atoms_, std::uint32_t{1} << i);
  }
  Element element(std::uint32_t mask) const {
    if (!is_finite()) throw InputError("mask elements exist on the finite backend only");
    return Element::finite(atoms_, mask);
  }

  bool contains(const Element& e) const {
    if (e.backend() != backend_) return false;
    return !is_finite() || e.atom_count() == atoms_;
  }

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  Backend backend_ = Backend::Finite;
  unsigned atoms_ = 0;
};

}  // namespace subm
