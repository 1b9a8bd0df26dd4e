#pragma once

#include <map>
#include <utility>

#include "operads/rational.hpp"

namespace operads {

/// Finite formal linear combination over an ordered basis-key type.
/// Zero coefficients are never stored; iteration follows the key order,
/// which makes printing and equality deterministic.
template <class B>
class LinComb {
 public:
  using Terms = std::map<B, Rational>;

  LinComb() = default;

  static LinComb basis(B key) { return term(std::move(key), Rational(1)); }

  static LinComb term(B key, Rational coef) {
    LinComb c;
    c.add_term(std::move(key), std::move(coef));
    return c;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  Rational coeff(const B& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(B key, Rational coef) {
    if (coef == 0) return;
    auto [it, fresh] = terms_.emplace(std::move(key), coef);
    if (!fresh) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
  }

  LinComb& operator-=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
  }

  LinComb& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Applies a key substitution term by term. `f` maps a key to any key type.
template <class B, class F>
auto map_keys(const LinComb<B>& x, F&& f) -> LinComb<std::decay_t<decltype(f(std::declval<B>()))>> {
  LinComb<std::decay_t<decltype(f(std::declval<B>()))>> out;
  for (const auto& [k, c] : x.terms()) out.add_term(f(k), c);
  return out;
}

/// Bilinear extension of a basis-level product. `mul(a, b)` returns a LinComb.
template <class A, class B, class F>
auto bilinear(const LinComb<A>& x, const LinComb<B>& y, F&& mul)
    -> std::decay_t<decltype(mul(std::declval<A>(), std::declval<B>()))> {
  std::decay_t<decltype(mul(std::declval<A>(), std::declval<B>()))> out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out += mul(a, b) * (ca * cb);
  return out;
}

}  // namespace operads
