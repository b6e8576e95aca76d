#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "subm/algebra.hpp"
#include "subm/element.hpp"
#include "subm/rational.hpp"

namespace subm {

/// Declared monotone nonincreasing bound with limit 0, indexed by stream
/// label. Envelopes are the certificate mechanism for "converges to 0":
/// limits are never inferred from samples alone.
struct Envelope {
  std::function<Rational(long)> at;
  std::string description;
};

/// Lazy sequence of elements meant to be pairwise disjoint and nonzero.
/// Consumers enforce disjointness incrementally. Streams carry their own label
/// origin: plain element lists label from 0, the cantor depth-node stream
/// labels by depth (starting 1), and results are reported in stream labels.
class AntichainStream {
 public:
  using Generator = std::function<std::optional<Element>(long)>;

  AntichainStream(Generator gen, long start_label, std::optional<Envelope> env = {})
      : gen_(std::move(gen)), start_(start_label), label_(start_label), env_(std::move(env)) {}

  static AntichainStream from_elements(std::vector<Element> elems, long start_label = 0,
                                       std::optional<Envelope> env = {});

  /// Label d (d >= 1) carries the node "1"^{d-1}"0", a depth-d cylinder of
  /// Lebesgue measure 2^-d; the whole stream is an antichain.
  static AntichainStream cantor_depth_nodes();

  std::optional<Element> next() {
    auto e = gen_(label_);
    if (e) ++label_;
    return e;
  }
  long next_label() const { return label_; }
  long start_label() const { return start_; }
  const std::optional<Envelope>& envelope() const { return env_; }
  void reset() { label_ = start_; }

 private:
  Generator gen_;
  long start_;
  long label_;
  std::optional<Envelope> env_;
};

/// Lazy element sequence together with a null envelope certifying membership
/// in the convergence ideal of a submeasure: every term at label n is promised
/// to satisfy m(a_n) <= envelope(n). Script-backed sequences are infinite with
/// tail 0. Single-consumer; reset() rewinds for replay.
class SequenceWithCertificate {
 public:
  SequenceWithCertificate(Algebra alg, std::vector<Element> script, Envelope env,
                          long start_label = 0);
  SequenceWithCertificate(Algebra alg, std::function<Element(long)> gen, Envelope env,
                          long start_label = 0);

  Element next();
  long next_label() const { return label_; }
  long start_label() const { return start_; }
  const Envelope& envelope() const { return env_; }
  const Algebra& algebra() const { return alg_; }
  /// -1 when generator-backed.
  long script_length() const { return script_ ? static_cast<long>(script_->size()) : -1; }
  const std::vector<Element>* script() const { return script_ ? &*script_ : nullptr; }
  void reset() { label_ = start_; }

 private:
  Algebra alg_;
  std::optional<std::vector<Element>> script_;
  std::function<Element(long)> gen_;
  Envelope env_;
  long start_;
  long label_;
};

/// Sequence of finite antichains A_n with the size schedule |A_n| >= n,
/// labeled from 1; the input shape of concentration checks.
class AntichainFamilyStream {
 public:
  using Generator = std::function<std::optional<std::vector<Element>>(long)>;

  AntichainFamilyStream(Generator gen, long start_label = 1)
      : gen_(std::move(gen)), label_(start_label) {}

  static AntichainFamilyStream from_lists(std::vector<std::vector<Element>> lists,
                                          long start_label = 1);

  std::optional<std::vector<Element>> next() {
    auto a = gen_(label_);
    if (a) ++label_;
    return a;
  }
  long next_label() const { return label_; }

 private:
  Generator gen_;
  long label_;
};

/// envelope n -> 2^-n (n clamped at 0)
Envelope envelope_pow2();
/// envelope n -> c/n for n >= 1 (and c at 0)
Envelope envelope_harmonic(const Rational& c = Rational(1));
/// envelope from explicit values; beyond the list the last value repeats
Envelope envelope_table(std::vector<Rational> values, long start_label = 0);

}  // namespace subm
