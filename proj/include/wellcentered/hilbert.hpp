#pragma once

#include <wellcentered/integer.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>

namespace wellcentered {

/// Raised when the completion procedure exceeds its step budget. Never
/// replaced by a guessed answer.
class ResourceExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class VarDomain { Nonnegative, FreeInteger };

/// coeffs * v == target, row i taken modulo row_moduli[i] when that is
/// nonzero, with each variable ranging over its domain.
struct LinearSystem {
  IntMatrix coeffs;
  IntVector row_moduli;
  std::vector<VarDomain> var_domains;
  IntVector target;

  /// Homogeneous system of exact equations over nonnegative variables.
  static LinearSystem homogeneous(IntMatrix coeffs) {
    LinearSystem s;
    s.row_moduli.assign(coeffs.rows(), 0);
    s.var_domains.assign(coeffs.cols(), VarDomain::Nonnegative);
    s.target.assign(coeffs.rows(), 0);
    s.coeffs = std::move(coeffs);
    return s;
  }

  std::size_t num_rows() const { return coeffs.rows(); }
  std::size_t num_vars() const { return coeffs.cols(); }

  void validate() const {
    if (row_moduli.size() != coeffs.rows())
      throw ShapeError("row_moduli has " + std::to_string(row_moduli.size()) + " entries for " +
                       std::to_string(coeffs.rows()) + " rows");
    if (target.size() != coeffs.rows())
      throw ShapeError("target has " + std::to_string(target.size()) + " entries for " +
                       std::to_string(coeffs.rows()) + " rows");
    if (var_domains.size() != coeffs.cols())
      throw ShapeError("var_domains has " + std::to_string(var_domains.size()) + " entries for " +
                       std::to_string(coeffs.cols()) + " variables");
    for (const auto& d : row_moduli)
      if (d != 0 && d < 2)
        throw std::invalid_argument("row modulus " + d.get_str() + " must be 0 or at least 2");
  }

  /// Whether `v` satisfies every row and respects the variable domains.
  bool is_solution(const IntVector& v) const {
    if (v.size() != num_vars()) return false;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (var_domains[j] == VarDomain::Nonnegative && v[j] < 0) return false;
    const IntVector lhs = coeffs * v;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      const Integer diff = lhs[i] - target[i];
      if (row_moduli[i] == 0 ? diff != 0 : floor_mod(diff, row_moduli[i]) != 0) return false;
    }
    return true;
  }
};

struct HilbertBasis {
  std::vector<IntVector> generators;
};

struct SolverOptions {
  std::uint64_t step_budget = 10'000'000;
};

namespace detail {

// Homogeneous system over N^q given column-wise: row i is an exact
// equation when moduli[i] == 0 and a congruence modulo moduli[i]
// otherwise. Optional per-variable upper bounds restrict the search to a
// box; minimal solutions inside the box are still found because every
// completion path towards a minimal solution s stays below s.
struct Completion {
  std::vector<IntVector> columns;   // A e_j
  IntVector moduli;                 // per row
  std::vector<std::int64_t> upper;  // -1 = unbounded
};

using Point = std::vector<std::int64_t>;

// Whether x + e_j >= b componentwise.
inline bool step_dominates(const Point& x, std::size_t j, const Point& b) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] + (i == j ? 1 : 0) < b[i]) return false;
  return true;
}

// Contejean-Devie completion extended to congruence rows.
//
// Exact rows drive the geometric criterion: x -> x + e_j is explored only
// when the exact defect E x and E e_j point in opposite directions. A point
// whose exact defect vanishes but whose residues do not may move in every
// direction. Points dominating a found solution are discarded. Returns the
// minimal solutions in discovery order; stops early once `stop` accepts one.
inline std::vector<Point> complete(const Completion& sys, const SolverOptions& opts,
                                   const std::function<bool(const Point&)>& stop = {}) {
  const std::size_t q = sys.columns.size();
  const std::size_t p = sys.moduli.size();
  std::vector<std::size_t> exact, congruence;
  for (std::size_t r = 0; r < p; ++r) (sys.moduli[r] == 0 ? exact : congruence).push_back(r);

  // gram[i][j] = <E e_i, E e_j>; for a point x the score s_j = <E x, E e_j>
  // is updated incrementally, and <E x, E x> = sum_j x_j s_j.
  std::vector<IntVector> gram(q, IntVector(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      for (auto r : exact) gram[i][j] += sys.columns[i][r] * sys.columns[j][r];
  std::vector<IntVector> step(q, IntVector(congruence.size()));
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t k = 0; k < congruence.size(); ++k)
      step[j][k] = floor_mod(sys.columns[j][congruence[k]], sys.moduli[congruence[k]]);

  struct Node {
    Point x;
    IntVector score;
    IntVector residue;
  };
  auto within = [&](std::size_t j, std::int64_t v) {
    return sys.upper.empty() || sys.upper[j] < 0 || v <= sys.upper[j];
  };
  auto advance = [&](const Node& n, std::size_t j) {
    Node m{n.x, n.score, n.residue};
    ++m.x[j];
    for (std::size_t k = 0; k < q; ++k) m.score[k] += gram[j][k];
    for (std::size_t k = 0; k < congruence.size(); ++k) {
      m.residue[k] += step[j][k];
      if (m.residue[k] >= sys.moduli[congruence[k]]) m.residue[k] -= sys.moduli[congruence[k]];
    }
    return m;
  };

  std::vector<Point> basis;
  std::vector<Node> frontier;
  const Node origin{Point(q, 0), IntVector(q), IntVector(congruence.size())};
  for (std::size_t j = 0; j < q; ++j)
    if (within(j, 1)) frontier.push_back(advance(origin, j));

  std::uint64_t steps = 0;
  while (!frontier.empty()) {
    std::vector<std::pair<Node, bool>> open;  // node, exact defect vanishes
    for (auto& node : frontier) {
      Integer norm = 0;
      for (std::size_t j = 0; j < q; ++j)
        if (node.x[j]) norm += node.x[j] * node.score[j];
      if (norm == 0 && is_zero(node.residue)) {
        basis.push_back(node.x);
        if (stop && stop(node.x)) return basis;
      } else {
        open.emplace_back(std::move(node), norm == 0);
      }
    }

    std::vector<Node> next;
    for (const auto& [node, balanced] : open) {
      if (++steps > opts.step_budget)
        throw ResourceExceeded("Hilbert basis completion exceeded the step budget of " +
                               std::to_string(opts.step_budget) + " expansions");
      for (std::size_t j = 0; j < q; ++j) {
        if ((!balanced && node.score[j] >= 0) || !within(j, node.x[j] + 1)) continue;
        const bool pruned = std::any_of(basis.begin(), basis.end(),
                                        [&](const Point& b) { return step_dominates(node.x, j, b); });
        if (!pruned) next.push_back(advance(node, j));
      }
    }
    std::sort(next.begin(), next.end(), [](const Node& a, const Node& b) { return a.x < b.x; });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Node& a, const Node& b) { return a.x == b.x; }),
               next.end());
    frontier = std::move(next);
  }
  return basis;
}

// Rewrites a system as a homogeneous one over N.
//
// Columns are laid out as: each original variable (a free variable
// contributes a positive and a negative copy), then optionally the
// homogenizing variable carrying -target.
struct Lowered {
  Completion completion;
  std::vector<std::size_t> positive;  // original var -> column
  std::vector<std::optional<std::size_t>> negative;
  std::optional<std::size_t> homogenizer;
};

inline Lowered lower(const LinearSystem& sys, bool homogenize) {
  sys.validate();
  const std::size_t p = sys.num_rows();

  Lowered out;
  out.completion.moduli = sys.row_moduli;
  auto& cols = out.completion.columns;
  for (std::size_t j = 0; j < sys.num_vars(); ++j) {
    IntVector c = sys.coeffs.col(j);
    out.positive.push_back(cols.size());
    cols.push_back(c);
    if (sys.var_domains[j] == VarDomain::FreeInteger) {
      for (auto& x : c) x = -x;
      out.negative.push_back(cols.size());
      cols.push_back(std::move(c));
    } else {
      out.negative.push_back(std::nullopt);
    }
  }
  if (homogenize) {
    IntVector c(p);
    for (std::size_t i = 0; i < p; ++i) c[i] = -sys.target[i];
    out.homogenizer = cols.size();
    cols.push_back(std::move(c));
  }
  out.completion.upper.assign(cols.size(), -1);
  if (out.homogenizer) out.completion.upper[*out.homogenizer] = 1;
  return out;
}

inline IntVector recombine(const Lowered& l, const Point& x) {
  IntVector v(l.positive.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    v[j] = Integer(static_cast<long>(x[l.positive[j]]));
    if (l.negative[j]) v[j] -= Integer(static_cast<long>(x[*l.negative[j]]));
  }
  return v;
}

}  // namespace detail

/// Minimal generating set of {v in N^q : coeffs v == 0, row-wise moduli},
/// sorted lexicographically.
inline HilbertBasis hilbert_basis(const LinearSystem& sys, const SolverOptions& opts = {}) {
  sys.validate();
  if (!is_zero(sys.target))
    throw std::invalid_argument("hilbert_basis requires a homogeneous system");
  for (auto d : sys.var_domains)
    if (d != VarDomain::Nonnegative)
      throw std::invalid_argument("hilbert_basis requires nonnegative variables");

  const detail::Lowered l = detail::lower(sys, false);
  HilbertBasis hb;
  for (const auto& x : detail::complete(l.completion, opts)) hb.generators.push_back(detail::recombine(l, x));
  std::sort(hb.generators.begin(), hb.generators.end());
  return hb;
}

/// A solution of `sys` respecting its variable domains, or nothing when
/// none exists.
///
/// Decided by homogenization: a solution with homogenizer h == 1 splits
/// into exactly one minimal solution with h == 1 plus solutions with h == 0,
/// so the search is confined to h <= 1 and stops at the first h == 1 hit.
inline std::optional<IntVector> solve_nonneg(const LinearSystem& sys, const SolverOptions& opts = {}) {
  sys.validate();
  if (is_zero(sys.target)) return IntVector(sys.num_vars());
  const detail::Lowered l = detail::lower(sys, true);
  const std::size_t h = *l.homogenizer;
  auto found = detail::complete(l.completion, opts, [h](const detail::Point& x) { return x[h] == 1; });
  if (found.empty() || found.back()[h] != 1) return std::nullopt;
  return detail::recombine(l, found.back());
}

}  // namespace wellcentered
