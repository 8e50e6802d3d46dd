#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <type_traits>

namespace wellcentered {

/// Exponents of X, Y, Z.
using Monomial = std::array<unsigned, 3>;

/// Sparse polynomial in X, Y, Z over a coefficient ring. Zero
/// coefficients are never stored.
template <class Coeff>
class MultiPoly {
 public:
  MultiPoly() = default;

  static MultiPoly constant(const Coeff& c) { return term(c, {0, 0, 0}); }
  static MultiPoly term(const Coeff& c, Monomial m) {
    MultiPoly p;
    p.accumulate(m, c);
    return p;
  }
  static MultiPoly X() { return term(Coeff(1), {1, 0, 0}); }
  static MultiPoly Y() { return term(Coeff(1), {0, 1, 0}); }
  static MultiPoly Z() { return term(Coeff(1), {0, 0, 1}); }

  const std::map<Monomial, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) accumulate(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) accumulate(m, Coeff(0) - c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        out.accumulate({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    return out;
  }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void accumulate(const Monomial& m, const Coeff& c) {
    Coeff sum = terms_.count(m) ? Coeff(terms_.at(m) + c) : c;
    if constexpr (std::is_same_v<Coeff, mpq_class>) sum.canonicalize();
    if (sum == Coeff(0)) terms_.erase(m);
    else terms_[m] = sum;
  }

  std::map<Monomial, Coeff> terms_;
};

using RationalPoly = MultiPoly<mpq_class>;

template <class Coeff>
std::string to_string(const MultiPoly<Coeff>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  static constexpr const char* names[] = {"X", "Y", "Z"};
  for (const auto& [m, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    std::string mono;
    for (int v = 0; v < 3; ++v) {
      if (m[v] == 0) continue;
      mono += names[v];
      if (m[v] > 1) mono += "^" + std::to_string(m[v]);
    }
    const std::string coeff = mpq_class(c).get_str();
    if (mono.empty()) s += coeff;
    else if (coeff == "1") s += mono;
    else s += coeff + "*" + mono;
  }
  return s;
}

}  // namespace wellcentered
