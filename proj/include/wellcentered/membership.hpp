#pragma once

#include <wellcentered/abelian_group.hpp>
#include <wellcentered/hilbert.hpp>

#include <algorithm>

namespace wellcentered {

namespace detail {

// Rows of the equation sum_i e_i T_i == x in `g`: one exact row per free
// coordinate, one congruence row per torsion factor.
inline LinearSystem group_system(const FgAbelianGroup& g, const std::vector<GroupElement>& gens,
                                 const GroupElement& x) {
  LinearSystem s;
  s.coeffs = IntMatrix(g.dimension(), gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!g.contains(gens[i]))
      throw ShapeError("element " + to_string(gens[i]) + " does not belong to the group");
    const IntVector flat = gens[i].flat();
    for (std::size_t k = 0; k < flat.size(); ++k) s.coeffs(k, i) = flat[k];
  }
  if (!g.contains(x)) throw ShapeError("element " + to_string(x) + " does not belong to the group");
  s.row_moduli.assign(g.rank(), 0);
  s.row_moduli.insert(s.row_moduli.end(), g.torsion_moduli().begin(), g.torsion_moduli().end());
  s.var_domains.assign(gens.size(), VarDomain::Nonnegative);
  s.target = x.flat();
  return s;
}

}  // namespace detail

/// Exponents e >= 0 with sum_i e_i T_i == x, or nothing if x is not in the
/// monoid generated by T. The empty set generates {0}.
inline std::optional<IntVector> monoid_membership(const FgAbelianGroup& g, const std::vector<GroupElement>& gens,
                                                  const GroupElement& x, const SolverOptions& opts = {}) {
  return solve_nonneg(detail::group_system(g, gens, x), opts);
}

/// Integer coefficients a with sum_i a_i T_i == x, or nothing if x is not
/// in the subgroup generated by T.
inline std::optional<IntVector> subgroup_membership(const FgAbelianGroup& g, const std::vector<GroupElement>& gens,
                                                    const GroupElement& x) {
  const LinearSystem s = detail::group_system(g, gens, x);
  // Torsion rows become exact by adjoining d_j * e_j as extra columns.
  IntMatrix a(g.dimension(), gens.size() + g.num_torsion());
  for (std::size_t k = 0; k < g.dimension(); ++k)
    for (std::size_t i = 0; i < gens.size(); ++i) a(k, i) = s.coeffs(k, i);
  for (std::size_t j = 0; j < g.num_torsion(); ++j)
    a(g.rank() + j, gens.size() + j) = g.torsion_moduli()[j];
  auto z = solve_integer_system(a, s.target);
  if (!z) return std::nullopt;
  z->resize(gens.size());
  return z;
}

/// A monoid generator of M(S1) & G(S2) together with the exponents over
/// S1 that produce it.
struct IntersectionGenerator {
  GroupElement element;
  IntVector exponents;
};

/// Generators of the monoid M(S1) & G(S2), sorted by element, nonzero and
/// distinct.
///
/// u in N^|S1| lands in G(S2) exactly when its image vanishes in
/// g / G(S2), so the u form the solution monoid of a system over that
/// quotient; the images of its Hilbert basis generate the intersection.
inline std::vector<IntersectionGenerator> intersection_generators(const FgAbelianGroup& g,
                                                                  const std::vector<GroupElement>& s1,
                                                                  const std::vector<GroupElement>& s2,
                                                                  const SolverOptions& opts = {}) {
  if (s1.empty()) return {};
  const auto [h, to_quotient] = quotient(g, s2);
  std::vector<GroupElement> images;
  for (const auto& x : s1) {
    if (!g.contains(x)) throw ShapeError("element " + to_string(x) + " does not belong to the group");
    images.push_back(to_quotient(x.flat()));
  }
  LinearSystem sys = detail::group_system(h, images, h.zero());
  const HilbertBasis hb = hilbert_basis(sys, opts);

  std::vector<IntersectionGenerator> out;
  for (const auto& u : hb.generators) {
    GroupElement x = g.combine(s1, u);
    if (x.is_zero()) continue;
    out.push_back({std::move(x), u});
  }
  // Generators are sorted by exponent vector, so the first copy of each
  // element keeps the lexicographically smallest exponents.
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.element.flat() < b.element.flat(); });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& a, const auto& b) { return a.element == b.element; }),
            out.end());
  return out;
}

struct PositiveMultiple {
  Integer multiple;
  IntVector exponents;
};

/// Some n >= 1 and e >= 0 with n x == sum_i e_i T_i, or nothing.
///
/// The n-coordinate is additive on solutions of sum e_i T_i - n x == 0, so
/// a solution with n >= 1 exists iff some Hilbert basis element has one.
inline std::optional<PositiveMultiple> exists_positive_multiple_in_monoid(const FgAbelianGroup& g,
                                                                          const std::vector<GroupElement>& gens,
                                                                          const GroupElement& x,
                                                                          const SolverOptions& opts = {}) {
  if (!g.contains(x)) throw ShapeError("element " + to_string(x) + " does not belong to the group");
  if (x.is_zero()) return PositiveMultiple{1, IntVector(gens.size())};
  std::vector<GroupElement> cols = gens;
  cols.push_back(g.neg(x));
  const LinearSystem sys = detail::group_system(g, cols, g.zero());
  const detail::Lowered l = detail::lower(sys, false);
  const std::size_t n_col = l.positive.back();
  auto found = detail::complete(l.completion, opts,
                                [n_col](const detail::Point& p) { return p[n_col] >= 1; });
  if (found.empty() || found.back()[n_col] < 1) return std::nullopt;
  IntVector v = detail::recombine(l, found.back());
  PositiveMultiple r{v.back(), {}};
  v.pop_back();
  r.exponents = std::move(v);
  return r;
}

}  // namespace wellcentered
