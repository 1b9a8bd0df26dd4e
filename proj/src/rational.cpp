#include "operads/rational.hpp"

#include <stdexcept>

namespace operads {

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(const Integer& n, unsigned k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (Integer(k) > n) return 0;
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - Integer(i - 1);
    r /= i;
  }
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

std::string to_string(const Rational& r) { return r.str(); }
std::string to_string(const Integer& n) { return n.str(); }

}  // namespace operads
