#pragma once

#include <wellcentered/membership.hpp>

#include <map>

namespace wellcentered {

/// An overring B of a Dedekind domain A, seen through ideal classes.
///
/// `kept_classes` are the classes of the maximal ideals P with B inside
/// A_P; `inverted_classes` those of the maximal ideals with PB = B. Only the
/// sets matter: a single prime of class c already yields every n c as the
/// class of its powers. Empty `kept_classes` means B is the fraction field,
/// empty `inverted_classes` means B = A.
class OverringConfig {
 public:
  OverringConfig(FgAbelianGroup group, const std::vector<GroupElement>& kept,
                 const std::vector<GroupElement>& inverted, std::optional<bool> finitely_generated = {})
      : group_(std::move(group)),
        kept_(dedupe(kept)),
        inverted_(dedupe(inverted)),
        finitely_generated_(finitely_generated) {}

  /// Builds from flat element encodings; torsion coordinates are reduced.
  static OverringConfig from_flat(FgAbelianGroup group, const std::vector<IntVector>& kept,
                                  const std::vector<IntVector>& inverted,
                                  std::optional<bool> finitely_generated = {}) {
    std::vector<GroupElement> k, i;
    for (const auto& v : kept) k.push_back(group.element(v));
    for (const auto& v : inverted) i.push_back(group.element(v));
    return OverringConfig(std::move(group), k, i, finitely_generated);
  }

  const FgAbelianGroup& group() const { return group_; }
  const std::vector<GroupElement>& kept_classes() const { return kept_; }
  const std::vector<GroupElement>& inverted_classes() const { return inverted_; }
  std::optional<bool> finitely_generated() const { return finitely_generated_; }

  std::vector<GroupElement> all_classes() const {
    std::vector<GroupElement> all = kept_;
    all.insert(all.end(), inverted_.begin(), inverted_.end());
    return all;
  }

  friend bool operator==(const OverringConfig&, const OverringConfig&) = default;

 private:
  std::vector<GroupElement> dedupe(const std::vector<GroupElement>& xs) const {
    std::vector<GroupElement> out;
    for (const auto& x : xs) {
      if (!group_.contains(x)) throw ShapeError("class " + to_string(x) + " does not belong to the group");
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
    return out;
  }

  FgAbelianGroup group_;
  std::vector<GroupElement> kept_;
  std::vector<GroupElement> inverted_;
  std::optional<bool> finitely_generated_;
};

/// Result of realizability validation: empty when the classes generate the
/// group as a monoid, otherwise the first canonical generator they miss.
struct Validation {
  std::optional<GroupElement> missing;
  bool ok() const { return !missing.has_value(); }
};

/// Checks that kept and inverted classes together generate the group as a
/// monoid, which is what makes the class distribution realizable.
///
/// Canonical generators are tried in order: e_1, -e_1, e_2, -e_2, ... for
/// the free part, then each torsion generator.
inline Validation validate(const OverringConfig& cfg, const SolverOptions& opts = {}) {
  const auto& g = cfg.group();
  const auto all = cfg.all_classes();
  auto missing = [&](const GroupElement& x) { return !monoid_membership(g, all, x, opts); };
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const GroupElement e = g.basis_element(i);
    if (missing(e)) return {e};
    if (missing(g.neg(e))) return {g.neg(e)};
  }
  for (std::size_t j = 0; j < g.num_torsion(); ++j) {
    const GroupElement e = g.basis_element(g.rank() + j);
    if (missing(e)) return {e};
  }
  return {};
}

class InvalidDivisor : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An ideal of A supported on kept primes: label -> (class, exponent).
struct Divisor {
  struct Entry {
    GroupElement cls;
    Integer exponent;
  };
  std::map<std::string, Entry> entries;
};

/// The ideal class of a divisor.
inline GroupElement divisor_class(const OverringConfig& cfg, const Divisor& d) {
  const auto& g = cfg.group();
  GroupElement sum = g.zero();
  for (const auto& [label, e] : d.entries) {
    if (e.exponent < 1)
      throw InvalidDivisor("prime " + label + " has nonpositive exponent " + e.exponent.get_str());
    const auto& kept = cfg.kept_classes();
    if (std::find(kept.begin(), kept.end(), e.cls) == kept.end())
      throw InvalidDivisor("prime " + label + " has class " + to_string(e.cls) + " outside the kept classes");
    sum = g.add(sum, g.scalar_mul(e.exponent, e.cls));
  }
  return sum;
}

/// IB is principal in B iff the class of I lies in G(inverted classes).
/// Returns the coefficients over the inverted classes.
inline std::optional<IntVector> is_principal_in_overring(const OverringConfig& cfg, const GroupElement& c) {
  return subgroup_membership(cfg.group(), cfg.inverted_classes(), c);
}

/// IB is the extension of a principal ideal of A iff the class of I lies in
/// -M(inverted classes). Returns exponents e with sum e_i c_i == -class.
inline std::optional<IntVector> is_extension_of_principal(const OverringConfig& cfg, const GroupElement& c,
                                                          const SolverOptions& opts = {}) {
  return monoid_membership(cfg.group(), cfg.inverted_classes(), cfg.group().neg(c), opts);
}

/// Evidence attached to one class in a verdict. Every field that is set
/// replays under group arithmetic:
///   kept_exponents        . kept     == element
///   inverted_coefficients . inverted == element
///   inverted_exponents    . inverted == -multiple * element
struct ClassEvidence {
  GroupElement element;
  std::optional<IntVector> kept_exponents;
  std::optional<IntVector> inverted_coefficients;
  std::optional<Integer> multiple;
  std::optional<IntVector> inverted_exponents;
};

struct Verdict {
  bool holds = false;
  /// Certificates for a positive answer.
  std::vector<ClassEvidence> evidence;
  /// The violating class for a negative answer.
  std::optional<ClassEvidence> counterexample;
};

namespace detail {

inline ClassEvidence intersection_evidence(const OverringConfig& cfg, const IntersectionGenerator& gen) {
  ClassEvidence ev{gen.element, gen.exponents, {}, {}, {}};
  ev.inverted_coefficients = subgroup_membership(cfg.group(), cfg.inverted_classes(), gen.element);
  return ev;
}

}  // namespace detail

/// B is well-centered on A iff M(kept) & G(inverted) lies in -M(inverted).
/// It suffices to test the monoid generators of the left side.
inline Verdict is_well_centered(const OverringConfig& cfg, const SolverOptions& opts = {}) {
  const auto& g = cfg.group();
  Verdict v{true, {}, {}};
  for (const auto& gen : intersection_generators(g, cfg.kept_classes(), cfg.inverted_classes(), opts)) {
    ClassEvidence ev = detail::intersection_evidence(cfg, gen);
    auto e = monoid_membership(g, cfg.inverted_classes(), g.neg(gen.element), opts);
    if (!e) return Verdict{false, {}, std::move(ev)};
    ev.multiple = 1;
    ev.inverted_exponents = std::move(e);
    v.evidence.push_back(std::move(ev));
  }
  return v;
}

/// B is almost well-centered on A iff every element of M(kept) & G(inverted)
/// has a positive multiple in -M(inverted). On generators this suffices:
/// a sum of generators takes the lcm of their multiples.
inline Verdict is_almost_well_centered(const OverringConfig& cfg, const SolverOptions& opts = {}) {
  const auto& g = cfg.group();
  Verdict v{true, {}, {}};
  for (const auto& gen : intersection_generators(g, cfg.kept_classes(), cfg.inverted_classes(), opts)) {
    ClassEvidence ev = detail::intersection_evidence(cfg, gen);
    auto m = exists_positive_multiple_in_monoid(g, cfg.inverted_classes(), g.neg(gen.element), opts);
    if (!m) return Verdict{false, {}, std::move(ev)};
    ev.multiple = m->multiple;
    ev.inverted_exponents = std::move(m->exponents);
    v.evidence.push_back(std::move(ev));
  }
  return v;
}

/// B equals the localization of A at the complement of the kept primes iff
/// each inverted prime Q contains an element whose ideal is supported on
/// inverted primes, i.e. -[Q] lies in M(inverted classes).
inline Verdict is_localization(const OverringConfig& cfg, const SolverOptions& opts = {}) {
  const auto& g = cfg.group();
  Verdict v{true, {}, {}};
  for (const auto& c : cfg.inverted_classes()) {
    auto e = monoid_membership(g, cfg.inverted_classes(), g.neg(c), opts);
    if (!e) return Verdict{false, {}, ClassEvidence{c, {}, {}, {}, {}}};
    v.evidence.push_back(ClassEvidence{c, {}, {}, Integer(1), std::move(e)});
  }
  return v;
}

/// Class group of B: the class group of A modulo the inverted classes, in
/// invariant-factor form.
inline FgAbelianGroup overring_class_group(const OverringConfig& cfg) {
  return quotient(cfg.group(), cfg.inverted_classes()).first;
}

/// A prime of class c is the radical of a principal ideal iff some power
/// of it is principal, i.e. c has finite order.
inline bool prime_class_is_radical_of_principal(const FgAbelianGroup& g, const GroupElement& c) {
  return g.element_order(c).has_value();
}

struct AnalysisReport {
  bool valid = false;
  std::optional<GroupElement> missing_generator;
  Verdict localization;
  Verdict well_centered;
  Verdict almost_well_centered;
  FgAbelianGroup overring_class_group;
  bool is_pid = false;
};

/// Validates, then runs every predicate. An invalid config yields a report
/// with `valid == false` and nothing else filled in.
inline AnalysisReport classify(const OverringConfig& cfg, const SolverOptions& opts = {}) {
  AnalysisReport r;
  const Validation val = validate(cfg, opts);
  if (!val.ok()) {
    r.missing_generator = val.missing;
    return r;
  }
  r.valid = true;
  r.localization = is_localization(cfg, opts);
  r.well_centered = is_well_centered(cfg, opts);
  r.almost_well_centered = is_almost_well_centered(cfg, opts);
  r.overring_class_group = overring_class_group(cfg);
  r.is_pid = r.overring_class_group.is_trivial();
  return r;
}

/// Checks every certificate in `v` by direct group arithmetic.
inline bool replay(const OverringConfig& cfg, const Verdict& v) {
  const auto& g = cfg.group();
  auto check = [&](const ClassEvidence& ev) {
    if (!g.contains(ev.element)) return false;
    try {
      if (ev.kept_exponents) {
        for (const auto& e : *ev.kept_exponents)
          if (e < 0) return false;
        if (g.combine(cfg.kept_classes(), *ev.kept_exponents) != ev.element) return false;
      }
      if (ev.inverted_coefficients &&
          g.combine(cfg.inverted_classes(), *ev.inverted_coefficients) != ev.element)
        return false;
      if (ev.inverted_exponents) {
        if (!ev.multiple || *ev.multiple < 1) return false;
        for (const auto& e : *ev.inverted_exponents)
          if (e < 0) return false;
        if (g.combine(cfg.inverted_classes(), *ev.inverted_exponents) !=
            g.neg(g.scalar_mul(*ev.multiple, ev.element)))
          return false;
      }
    } catch (const ShapeError&) {
      return false;
    }
    return true;
  };
  if (v.holds) {
    if (v.counterexample) return false;
    for (const auto& ev : v.evidence)
      if (!check(ev)) return false;
    return true;
  }
  return v.counterexample && check(*v.counterexample);
}

}  // namespace wellcentered
