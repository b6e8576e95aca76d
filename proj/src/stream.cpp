#include "subm/stream.hpp"

#include "subm/util.hpp"

namespace subm {

AntichainStream AntichainStream::from_elements(std::vector<Element> elems, long start_label,
                                               std::optional<Envelope> env) {
  auto gen = [elems = std::move(elems), start_label](long label) -> std::optional<Element> {
    long i = label - start_label;
    if (i < 0 || i >= static_cast<long>(elems.size())) return std::nullopt;
    return elems[static_cast<std::size_t>(i)];
  };
  return AntichainStream(std::move(gen), start_label, std::move(env));
}

AntichainStream AntichainStream::cantor_depth_nodes() {
  auto gen = [](long depth) -> std::optional<Element> {
    if (depth < 1 || depth > 4096) return std::nullopt;
    std::string node(static_cast<std::size_t>(depth - 1), '1');
    node += '0';
    return Element::cantor({node});
  };
  Envelope env{[](long d) { return d < 1 ? Rational(1) : pow2_neg(static_cast<unsigned>(d)); },
               "2^-n"};
  return AntichainStream(std::move(gen), 1, env);
}

SequenceWithCertificate::SequenceWithCertificate(Algebra alg, std::vector<Element> script,
                                                 Envelope env, long start_label)
    : alg_(alg),
      script_(std::move(script)),
      env_(std::move(env)),
      start_(start_label),
      label_(start_label) {
  for (const auto& e : *script_) {
    if (!alg_.contains(e)) throw InputError("script element from a different algebra");
  }
}

SequenceWithCertificate::SequenceWithCertificate(Algebra alg, std::function<Element(long)> gen,
                                                 Envelope env, long start_label)
    : alg_(alg), gen_(std::move(gen)), env_(std::move(env)), start_(start_label), label_(start_label) {}

Element SequenceWithCertificate::next() {
  long label = label_++;
  if (script_) {
    long i = label - start_;
    if (i < static_cast<long>(script_->size())) return (*script_)[static_cast<std::size_t>(i)];
    return alg_.zero();
  }
  return gen_(label);
}

AntichainFamilyStream AntichainFamilyStream::from_lists(std::vector<std::vector<Element>> lists,
                                                        long start_label) {
  auto gen = [lists = std::move(lists), start_label](long n) -> std::optional<std::vector<Element>> {
    long i = n - start_label;
    if (i < 0 || i >= static_cast<long>(lists.size())) return std::nullopt;
    return lists[static_cast<std::size_t>(i)];
  };
  return AntichainFamilyStream(std::move(gen), start_label);
}

Envelope envelope_pow2() {
  return {[](long n) { return n < 1 ? Rational(1) : pow2_neg(static_cast<unsigned>(n)); }, "2^-n"};
}

Envelope envelope_harmonic(const Rational& c) {
  return {[c](long n) { return n < 1 ? c : Rational(c / n); }, format_rational(c) + "/n"};
}

Envelope envelope_table(std::vector<Rational> values, long start_label) {
  if (values.empty()) throw InputError("empty envelope table");
  auto fn = [values = std::move(values), start_label](long n) {
    long i = n - start_label;
    if (i < 0) i = 0;
    if (i >= static_cast<long>(values.size())) i = static_cast<long>(values.size()) - 1;
    return values[static_cast<std::size_t>(i)];
  };
  return {std::move(fn), "table"};
}

}  // namespace subm
