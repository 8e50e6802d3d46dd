#pragma once

#include <wellcentered/integer.hpp>
#include <wellcentered/smith.hpp>

#include <compare>
#include <optional>
#include <utility>

namespace wellcentered {

class InvalidModulus : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element of a finitely generated abelian group: free coordinates
/// followed by torsion residues, the latter always reduced.
struct GroupElement {
  IntVector free;
  IntVector torsion;

  /// Free coordinates first, then torsion coordinates.
  IntVector flat() const {
    IntVector v = free;
    v.insert(v.end(), torsion.begin(), torsion.end());
    return v;
  }

  bool is_zero() const { return wellcentered::is_zero(free) && wellcentered::is_zero(torsion); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
    return a.flat() <=> b.flat();
  }
};

inline std::string to_string(const GroupElement& x) { return to_string(x.flat()); }

/// Z^rank + Z/d_1 + ... + Z/d_m. The moduli are kept in the order given.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;

  FgAbelianGroup(std::size_t rank, IntVector torsion_moduli)
      : rank_(rank), moduli_(std::move(torsion_moduli)) {
    for (const auto& d : moduli_)
      if (d < 2) throw InvalidModulus("torsion modulus " + d.get_str() + " is below 2");
  }

  std::size_t rank() const { return rank_; }
  const IntVector& torsion_moduli() const { return moduli_; }
  std::size_t num_torsion() const { return moduli_.size(); }
  /// Length of the flat element encoding.
  std::size_t dimension() const { return rank_ + moduli_.size(); }

  bool is_torsion() const { return rank_ == 0; }
  bool is_trivial() const { return rank_ == 0 && moduli_.empty(); }

  /// Group order, or nothing for infinite groups.
  std::optional<Integer> order() const {
    if (rank_ != 0) return std::nullopt;
    Integer n = 1;
    for (const auto& d : moduli_) n *= d;
    return n;
  }

  /// Builds an element from its flat encoding, reducing torsion residues.
  GroupElement element(const IntVector& flat) const {
    if (flat.size() != dimension())
      throw ShapeError("element has " + std::to_string(flat.size()) +
                       " coordinates, group expects " + std::to_string(dimension()));
    GroupElement x;
    x.free.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(rank_));
    x.torsion.resize(moduli_.size());
    for (std::size_t j = 0; j < moduli_.size(); ++j)
      x.torsion[j] = floor_mod(flat[rank_ + j], moduli_[j]);
    return x;
  }

  GroupElement zero() const { return GroupElement{IntVector(rank_), IntVector(moduli_.size())}; }

  /// The canonical generators: each free basis vector, then each torsion
  /// factor's generator.
  GroupElement basis_element(std::size_t i) const {
    IntVector v(dimension());
    v.at(i) = 1;
    return element(v);
  }

  bool contains(const GroupElement& x) const {
    if (x.free.size() != rank_ || x.torsion.size() != moduli_.size()) return false;
    for (std::size_t j = 0; j < moduli_.size(); ++j)
      if (x.torsion[j] < 0 || x.torsion[j] >= moduli_[j]) return false;
    return true;
  }

  GroupElement add(const GroupElement& x, const GroupElement& y) const {
    check(x);
    check(y);
    GroupElement z = x;
    for (std::size_t i = 0; i < rank_; ++i) z.free[i] += y.free[i];
    for (std::size_t j = 0; j < moduli_.size(); ++j)
      z.torsion[j] = floor_mod(z.torsion[j] + y.torsion[j], moduli_[j]);
    return z;
  }

  GroupElement neg(const GroupElement& x) const { return scalar_mul(-1, x); }

  GroupElement sub(const GroupElement& x, const GroupElement& y) const { return add(x, neg(y)); }

  GroupElement scalar_mul(const Integer& n, const GroupElement& x) const {
    check(x);
    GroupElement z = x;
    for (auto& c : z.free) c *= n;
    for (std::size_t j = 0; j < moduli_.size(); ++j)
      z.torsion[j] = floor_mod(n * z.torsion[j], moduli_[j]);
    return z;
  }

  /// sum_i coefficients[i] * elements[i]
  GroupElement combine(const std::vector<GroupElement>& elements, const IntVector& coefficients) const {
    if (elements.size() != coefficients.size())
      throw ShapeError("combination of " + std::to_string(elements.size()) + " elements with " +
                       std::to_string(coefficients.size()) + " coefficients");
    GroupElement z = zero();
    for (std::size_t i = 0; i < elements.size(); ++i) z = add(z, scalar_mul(coefficients[i], elements[i]));
    return z;
  }

  /// Smallest n >= 1 with n * x == 0, or nothing when x has infinite order.
  std::optional<Integer> element_order(const GroupElement& x) const {
    check(x);
    if (!wellcentered::is_zero(x.free)) return std::nullopt;
    Integer n = 1;
    for (std::size_t j = 0; j < moduli_.size(); ++j)
      n = lcm(n, moduli_[j] / gcd(moduli_[j], x.torsion[j]));
    return n;
  }

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

 private:
  void check(const GroupElement& x) const {
    if (!contains(x))
      throw ShapeError("element " + to_string(x) + " does not belong to the group");
  }

  std::size_t rank_ = 0;
  IntVector moduli_;
};

inline FgAbelianGroup make_group(std::size_t rank, IntVector torsion_moduli) {
  return FgAbelianGroup(rank, std::move(torsion_moduli));
}

inline bool is_torsion_group(const FgAbelianGroup& g) { return g.is_torsion(); }

inline std::string to_string(const FgAbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::string s;
  if (g.rank() == 1) s = "Z";
  else if (g.rank() > 1) s = "Z^" + std::to_string(g.rank());
  for (const auto& d : g.torsion_moduli()) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  return s;
}

/// Additive map from exponent vectors over a generating set onto a group.
/// Column k of `matrix` is the flat-coordinate-k functional.
struct GroupProjection {
  FgAbelianGroup target;
  IntMatrix matrix;

  GroupElement operator()(const IntVector& exponents) const {
    if (exponents.size() != matrix.rows())
      throw ShapeError("projection expects " + std::to_string(matrix.rows()) + " exponents, got " +
                       std::to_string(exponents.size()));
    IntVector flat(matrix.cols());
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
      if (exponents[i] == 0) continue;
      for (std::size_t k = 0; k < matrix.cols(); ++k) flat[k] += exponents[i] * matrix(i, k);
    }
    return target.element(flat);
  }
};

/// Z^num_generators modulo the row span of `relations`, in invariant-factor
/// form, together with the quotient map.
inline std::pair<FgAbelianGroup, GroupProjection> group_from_relations(std::size_t num_generators,
                                                                       const IntMatrix& relations) {
  if (relations.rows() != 0 && relations.cols() != num_generators)
    throw ShapeError("relation matrix has " + std::to_string(relations.cols()) +
                     " columns, expected " + std::to_string(num_generators));
  IntMatrix rel = relations.rows() == 0 ? IntMatrix(0, num_generators) : relations;
  // U R V = D, so x -> x V carries the row span of R onto that of D.
  const SmithForm f = smith_normal_form(rel);
  std::vector<std::size_t> free_cols, torsion_cols;
  IntVector moduli;
  for (std::size_t i = 0; i < num_generators; ++i) {
    const Integer d = i < rel.rows() ? f.diagonal(i, i) : Integer(0);
    if (d == 0) free_cols.push_back(i);
    else if (d != 1) {
      torsion_cols.push_back(i);
      moduli.push_back(d);
    }
  }
  FgAbelianGroup group(free_cols.size(), moduli);
  IntMatrix map(num_generators, group.dimension());
  std::size_t k = 0;
  for (auto c : free_cols) {
    for (std::size_t i = 0; i < num_generators; ++i) map(i, k) = f.right(i, c);
    ++k;
  }
  for (auto c : torsion_cols) {
    for (std::size_t i = 0; i < num_generators; ++i) map(i, k) = f.right(i, c);
    ++k;
  }
  return {group, GroupProjection{group, std::move(map)}};
}

/// Canonical invariant-factor form of `g` and the isomorphism onto it,
/// applied to flat element encodings.
inline std::pair<FgAbelianGroup, GroupProjection> normalize(const FgAbelianGroup& g) {
  IntMatrix rel(g.num_torsion(), g.dimension());
  for (std::size_t j = 0; j < g.num_torsion(); ++j) rel(j, g.rank() + j) = g.torsion_moduli()[j];
  return group_from_relations(g.dimension(), rel);
}

/// Quotient of `g` by the subgroup generated by `elements`.
inline std::pair<FgAbelianGroup, GroupProjection> quotient(const FgAbelianGroup& g,
                                                           const std::vector<GroupElement>& elements) {
  IntMatrix rel(g.num_torsion() + elements.size(), g.dimension());
  for (std::size_t j = 0; j < g.num_torsion(); ++j) rel(j, g.rank() + j) = g.torsion_moduli()[j];
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!g.contains(elements[i]))
      throw ShapeError("element " + to_string(elements[i]) + " does not belong to the group");
    const IntVector flat = elements[i].flat();
    for (std::size_t k = 0; k < flat.size(); ++k) rel(g.num_torsion() + i, k) = flat[k];
  }
  return group_from_relations(g.dimension(), rel);
}

}  // namespace wellcentered
