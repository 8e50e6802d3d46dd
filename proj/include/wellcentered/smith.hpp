#pragma once

#include <wellcentered/integer.hpp>

#include <algorithm>
#include <optional>

namespace wellcentered {

/// Factors of a Smith normal form: `left * M * right == diagonal`.
///
/// `left` and `right` are unimodular. The diagonal entries of `diagonal`
/// are nonnegative and each divides the next; zeros come last.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
};

namespace detail {

// Position of the entry with smallest nonzero absolute value in the
// trailing block starting at (t, t).
inline std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(const IntMatrix& d,
                                                                         std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t p = m.rows();
  const std::size_t q = m.cols();
  SmithForm f{IntMatrix::identity(p), m, IntMatrix::identity(q)};
  IntMatrix& d = f.diagonal;

  for (std::size_t t = 0; t < std::min(p, q); ++t) {
    for (;;) {
      auto pivot = detail::smallest_pivot(d, t);
      if (!pivot) return f;  // trailing block is zero
      auto [pi, pj] = *pivot;
      d.swap_rows(t, pi);
      f.left.swap_rows(t, pi);
      d.swap_cols(t, pj);
      f.right.swap_cols(t, pj);

      bool reduced = true;
      for (std::size_t i = t + 1; i < p; ++i) {
        if (d(i, t) == 0) continue;
        Integer quot = d(i, t) / d(t, t);
        d.add_row(i, t, -quot);
        f.left.add_row(i, t, -quot);
        if (d(i, t) != 0) reduced = false;
      }
      for (std::size_t j = t + 1; j < q; ++j) {
        if (d(t, j) == 0) continue;
        Integer quot = d(t, j) / d(t, t);
        d.add_col(j, t, -quot);
        f.right.add_col(j, t, -quot);
        if (d(t, j) != 0) reduced = false;
      }
      if (!reduced) continue;

      // The pivot must divide the whole trailing block; otherwise fold the
      // offending row into row t and reduce again.
      bool divides = true;
      for (std::size_t i = t + 1; i < p && divides; ++i)
        for (std::size_t j = t + 1; j < q; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row(t, i, 1);
            f.left.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      f.left.negate_row(t);
    }
  }
  return f;
}

/// Solves `a * z == b` over the integers, or returns nothing if no integer
/// solution exists.
inline std::optional<IntVector> solve_integer_system(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows())
    throw ShapeError("right-hand side has " + std::to_string(b.size()) + " entries, expected " +
                     std::to_string(a.rows()));
  const SmithForm f = smith_normal_form(a);
  const IntVector w = f.left * b;
  IntVector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Integer pivot = i < a.cols() ? f.diagonal(i, i) : Integer(0);
    if (pivot == 0) {
      if (w[i] != 0) return std::nullopt;
      continue;
    }
    if (!mpz_divisible_p(w[i].get_mpz_t(), pivot.get_mpz_t())) return std::nullopt;
    y[i] = w[i] / pivot;
  }
  return f.right * y;
}

}  // namespace wellcentered
