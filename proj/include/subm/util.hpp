#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subm {

/// Malformed or inconsistent caller input (mixed backends, bad weights, ...).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An exact search ran out of its step budget before reaching an answer.
struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Step budget for exact searches. Every branch-and-bound / DP loop ticks it;
/// a search that would exceed it stops with an explicit "unknown" outcome
/// instead of a silent wrong answer.
struct SearchBudget {
  std::uint64_t steps = 10'000'000;

  bool tick(std::uint64_t n = 1) {
    if (steps < n) {
      steps = 0;
      return false;
    }
    steps -= n;
    return true;
  }

  void tick_or_throw(std::uint64_t n, const char* where) {
    if (!tick(n)) throw BudgetExhausted(std::string("step budget exhausted in ") + where);
  }
};

/// splitmix64: tiny deterministic PRNG, stable across platforms. Used for all
/// seeded sampling so identical seeds give byte-identical reports.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    // rejection sampling keeps the distribution exact
    std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit && limit != 0);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace subm
