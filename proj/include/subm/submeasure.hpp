#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subm/algebra.hpp"
#include "subm/packing.hpp"
#include "subm/rational.hpp"
#include "subm/stream.hpp"
#include "subm/util.hpp"

namespace subm {

inline constexpr std::uint64_t kDefaultSeed = 1729;

enum class SubmeasureKind { AtomWeights, CoveringFamily, Table, Constructed, CantorLebesgue };

/// F must cover 1; m(a) = min(1, c(a)/K) where c(a) is the least number of
/// members of F whose join dominates a. A standard source of pathological,
/// non-additive submeasures.
struct CoveringFamilyParams {
  std::vector<Element> members;
  long scale = 1;  // K >= 1
};

/// A submeasure value map on an exactly-represented algebra. All values are
/// exact rationals in [0,1]. Construction validates shape only; the submeasure
/// axioms (monotone, subadditive, boundary values) are the axiom checker's
/// business, so pathological tables can exist as test subjects.
class Submeasure {
 public:
  static Submeasure from_atom_weights(const Algebra& alg, std::vector<Rational> weights);
  static Submeasure from_covering(const Algebra& alg, CoveringFamilyParams params);
  /// values indexed by mask, all 2^N present, values in [0,1], v[0]=0, v[1]=1.
  static Submeasure from_table(const Algebra& alg, std::vector<Rational> values);
  static Submeasure constructed(const Algebra& alg, std::vector<Rational> values,
                                std::string source_label);
  /// Equal atom weights on the finite backend; Lebesgue on cantor.
  static Submeasure uniform(const Algebra& alg);
  static Submeasure lebesgue_cantor();

  const Algebra& algebra() const { return alg_; }
  SubmeasureKind kind() const { return kind_; }
  const char* kind_name() const;
  /// Finitely additive by construction (atom weights / Lebesgue).
  bool additive_kind() const {
    return kind_ == SubmeasureKind::AtomWeights || kind_ == SubmeasureKind::CantorLebesgue;
  }

  const std::vector<Rational>& weights() const { return weights_; }
  const CoveringFamilyParams& covering() const { return covering_; }
  const std::vector<Rational>& table() const { return table_; }
  const std::string& source_label() const { return source_; }

  Rational eval(const Element& a) const;
  Rational eval(const Element& a, SearchBudget& budget) const;

  /// All 2^N values, index = mask (finite backend, N <= 20). Covering counts
  /// share one DP pass; the memo lives in this call, not in the object.
  std::vector<Rational> value_table(SearchBudget budget = {}) const;

 private:
  Algebra alg_ = Algebra::finite(1);
  SubmeasureKind kind_ = SubmeasureKind::AtomWeights;
  std::vector<Rational> weights_;
  CoveringFamilyParams covering_;
  std::vector<Rational> table_;
  std::string source_;
};

/// rho(a,b) = m(a symdiff b)
Rational distance(const Submeasure& m, const Element& a, const Element& b);

struct AxiomCheckConfig {
  bool exhaustive_monotone = true;
  bool exhaustive_subadditive = true;
  std::uint64_t samples = 100000;  // per sampled axiom
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;

  static AxiomCheckConfig exhaustive() { return {}; }
  static AxiomCheckConfig sampled(std::uint64_t count, std::uint64_t seed_value = kDefaultSeed) {
    AxiomCheckConfig c;
    c.exhaustive_monotone = false;
    c.exhaustive_subadditive = false;
    c.samples = count;
    c.seed = seed_value;
    return c;
  }
};

struct AxiomReport {
  bool boundary_ok = true;
  std::optional<std::pair<Element, Element>> monotone_cex;  // a <= b with m(a) > m(b)
  std::optional<std::pair<Element, Element>> subadd_cex;    // m(a v b) > m(a) + m(b)
  std::optional<Element> positivity_cex;                    // nonzero a with m(a) = 0
  std::uint64_t monotone_pairs = 0;
  std::uint64_t subadd_pairs = 0;

  bool pass() const { return boundary_ok && !monotone_cex && !subadd_cex; }
  bool strictly_positive() const { return !positivity_cex; }
};

/// Verifies boundary values, monotonicity, subadditivity and reports strict
/// positivity. Exhaustive modes need the finite backend with <= 12 atoms;
/// the cantor backend always samples. Failures are reported, never thrown.
AxiomReport check_axioms(const Submeasure& m, const AxiomCheckConfig& cfg = {});

struct ExhaustivityResult {
  bool horizon_exhausted = false;
  long index = 0;            // stream-native label where the tail stays below eps
  Rational trailing_max;     // last value still >= eps when the horizon ran out
  bool certified = false;    // declared envelope already below eps at index
  long sampled = 0;
};

/// Scans the antichain stream up to labels <= horizon and returns the least
/// label from which every sampled value is < eps. Disjointness and nonzeroness
/// are enforced incrementally; a violation is an input error naming the pair.
ExhaustivityResult is_exhaustive_on(const Submeasure& m, AntichainStream& s, const Rational& eps,
                                    long horizon);

/// Exact K: maximum antichain inside {a : m(a) >= eps}, finite backend.
/// Budget exhaustion propagates through the packing result's exact flag.
PackingResult uniform_exhaustivity_bound(const Submeasure& m, const Rational& eps,
                                         SearchBudget budget = {});

/// Minimal elements of {a in B+ : m(a) >= threshold} (finite backend).
std::vector<Element> level_generators(const std::vector<Rational>& table, const Algebra& alg,
                                      const Rational& threshold);

}  // namespace subm
