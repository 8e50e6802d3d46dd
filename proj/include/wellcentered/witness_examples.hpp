#pragma once

#include <wellcentered/multipoly.hpp>

#include <stdexcept>
#include <vector>

namespace wellcentered {

/// a + b sqrt(2) with rational a, b.
struct QuadraticNumber {
  mpq_class a;
  mpq_class b;

  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;

  bool is_rational() const { return b == 0; }
};

/// (1 + sqrt 2)^n for n >= 1.
inline QuadraticNumber power_one_plus_sqrt2(unsigned n) {
  if (n == 0) throw std::invalid_argument("power_one_plus_sqrt2 needs n >= 1");
  const QuadraticNumber base{1, 1};
  QuadraticNumber acc = base;
  for (unsigned i = 1; i < n; ++i) acc = acc * base;
  return acc;
}

struct WitnessCheck {
  bool verified = false;
  std::string detail;
};

/// X * 1 + Y * Z against `claimed`; equality means 1 = X u + Y (Z u) with
/// u the inverse of `claimed`, so (X, Y) generates the unit ideal once
/// X + YZ is inverted.
template <class Coeff>
WitnessCheck verify_flatness_identity(const MultiPoly<Coeff>& claimed) {
  using P = MultiPoly<Coeff>;
  const P lhs = P::X() * P::constant(Coeff(1)) + P::Y() * P::Z();
  const P diff = lhs - claimed;
  if (diff.is_zero()) return {true, "X*1 + Y*Z == X + Y*Z"};
  return {false, "X*1 + Y*Z differs from the claimed element"};
}

inline WitnessCheck verify_exsimple_flatness(const RationalPoly& claimed = RationalPoly::X() +
                                                                           RationalPoly::Y() * RationalPoly::Z()) {
  WitnessCheck c = verify_flatness_identity(claimed);
  if (!c.verified) c.detail = "X*1 + Y*Z differs from " + to_string(claimed);
  return c;
}

/// Laurent polynomial in Z: exponent -> coefficient.
using LaurentZ = std::map<long, mpq_class>;

/// numerator / denominator, both polynomials in X, Y, Z.
struct RingGenerator {
  std::string name;
  RationalPoly numerator;
  RationalPoly denominator = RationalPoly::constant(1);
};

/// X, Y, XZ, YZ, 1/(X + YZ)
inline std::vector<RingGenerator> exsimple_generators_of_A() {
  using P = RationalPoly;
  return {{"X", P::X()},
          {"Y", P::Y()},
          {"XZ", P::X() * P::Z()},
          {"YZ", P::Y() * P::Z()},
          {"1/(X+YZ)", P::constant(1), P::X() + P::Y() * P::Z()}};
}

/// X, Y, Z, 1/(X + YZ)
inline std::vector<RingGenerator> exsimple_generators_of_B() {
  using P = RationalPoly;
  return {{"X", P::X()}, {"Y", P::Y()}, {"Z", P::Z()}, {"1/(X+YZ)", P::constant(1), P::X() + P::Y() * P::Z()}};
}

/// The k[Z]-algebra map X -> 0, Y -> 1/Z applied to a polynomial.
inline LaurentZ substitute_x0_y_inv_z(const RationalPoly& p) {
  LaurentZ out;
  for (const auto& [m, c] : p.terms()) {
    if (m[0] > 0) continue;
    const long e = static_cast<long>(m[2]) - static_cast<long>(m[1]);
    out[e] += c;
    if (out[e] == 0) out.erase(e);
  }
  return out;
}

inline std::string to_string(const LaurentZ& p) {
  if (p.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : p) {
    if (!s.empty()) s += " + ";
    s += c.get_str();
    if (e != 0) s += "*Z^" + std::to_string(e);
  }
  return s;
}

/// Maps each generator through X -> 0, Y -> 1/Z and checks that every image
/// lies in the span of nonpositive powers of Z, while Z itself maps to Z.
/// The map is a ring homomorphism, so the ring generated lands in that span
/// and cannot contain Z.
inline WitnessCheck verify_exsimple_Z_not_in_A(const std::vector<RingGenerator>& gens = exsimple_generators_of_A()) {
  WitnessCheck out{true, ""};
  for (const auto& g : gens) {
    LaurentZ num = substitute_x0_y_inv_z(g.numerator);
    const LaurentZ den = substitute_x0_y_inv_z(g.denominator);
    if (den.size() != 1 || den.begin()->first != 0)
      return {false, g.name + ": denominator image " + to_string(den) + " is not a nonzero constant"};
    for (auto& [e, c] : num) c /= den.begin()->second;
    out.detail += g.name + " -> " + to_string(num) + "; ";
    if (!num.empty() && num.rbegin()->first > 0)
      return {false, out.detail + g.name + " maps outside the nonpositive powers of Z"};
  }
  const LaurentZ z_image = substitute_x0_y_inv_z(RationalPoly::Z());
  out.detail += "Z -> " + to_string(z_image);
  if (z_image.empty() || z_image.rbegin()->first <= 0) return {false, out.detail + "; Z lands in the span"};
  return out;
}

}  // namespace wellcentered
