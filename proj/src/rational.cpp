#include "subm/rational.hpp"

#include "subm/util.hpp"

namespace subm {

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw InputError("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    std::string num(text.substr(0, slash));
    std::string den(text.substr(slash + 1));
    if (num.empty() || den.empty()) throw InputError("malformed rational: " + std::string(text));
    BigInt q(den);
    if (q == 0) throw InputError("zero denominator: " + std::string(text));
    return Rational(BigInt(num), q);
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("malformed rational: " + std::string(text));
  }
}

Rational pow2_neg(unsigned n) {
  return Rational(BigInt(1), BigInt(1) << n);
}

Rational harmonic(unsigned n) {
  if (n == 0) throw InputError("harmonic(0)");
  return Rational(1, n);
}

}  // namespace subm
