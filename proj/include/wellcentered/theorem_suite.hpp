#pragma once

#include <wellcentered/sampler.hpp>

namespace wellcentered {

class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ReproductionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool implication_chain_holds(const AnalysisReport& r) {
  if (!r.valid) return true;
  if (r.localization.holds && !r.well_centered.holds) return false;
  if (r.well_centered.holds && !r.almost_well_centered.holds) return false;
  return true;
}

/// Outcome of a sampled property check. Failures are collected, not thrown.
struct CheckOutcome {
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  struct Failure {
    std::size_t sample_index;
    OverringConfig config;
    std::string reason;
  };
  std::vector<Failure> failures;
  bool pass() const { return failures.empty(); }
};

namespace detail {

// Draws until `count` configs were evaluated, giving up on a draw after
// the sampler's retries and on the whole run after 100 * count draws.
template <class Check>
CheckOutcome run_samples(ConfigSampler& sampler, std::size_t count, const SolverOptions& opts, Check&& check) {
  CheckOutcome out;
  for (std::size_t draw = 0; out.evaluated < count && draw < 100 * count; ++draw) {
    auto cfg = sampler.next(opts);
    if (!cfg) {
      ++out.skipped;
      continue;
    }
    const std::size_t index = out.evaluated++;
    if (auto reason = check(*cfg)) out.failures.push_back({index, std::move(*cfg), std::move(*reason)});
  }
  return out;
}

}  // namespace detail

/// Over a torsion class group every overring is a localization and
/// well-centered; checks all three predicates on sampled configs.
inline CheckOutcome check_nontor(ConfigSampler& sampler, std::size_t sample_count, const SolverOptions& opts = {}) {
  return detail::run_samples(sampler, sample_count, opts, [&](const OverringConfig& cfg) -> std::optional<std::string> {
    if (!cfg.group().is_torsion())
      throw PreconditionViolation("check_nontor sampled a non-torsion group " + to_string(cfg.group()));
    const AnalysisReport r = classify(cfg, opts);
    if (!r.localization.holds) return "not a localization";
    if (!r.well_centered.holds) return "not well-centered";
    if (!r.almost_well_centered.holds) return "not almost well-centered";
    return std::nullopt;
  });
}

/// For finitely generated overrings, almost well-centered implies
/// localization. A violation is recorded and the run continues.
inline CheckOutcome check_prufer_consistency(ConfigSampler& sampler, std::size_t sample_count,
                                             const SolverOptions& opts = {}) {
  return detail::run_samples(sampler, sample_count, opts, [&](const OverringConfig& cfg) -> std::optional<std::string> {
    if (cfg.finitely_generated() != true)
      throw PreconditionViolation("check_prufer_consistency needs configs flagged finitely_generated");
    const AnalysisReport r = classify(cfg, opts);
    if (r.almost_well_centered.holds && !r.localization.holds)
      return "almost well-centered but not a localization";
    return std::nullopt;
  });
}

/// Implication chain localization => well-centered => almost well-centered.
inline CheckOutcome check_implication_chain(ConfigSampler& sampler, std::size_t sample_count,
                                            const SolverOptions& opts = {}) {
  return detail::run_samples(sampler, sample_count, opts, [&](const OverringConfig& cfg) -> std::optional<std::string> {
    if (!implication_chain_holds(classify(cfg, opts))) return "implication chain violated";
    return std::nullopt;
  });
}

/// Searches configs over a group of positive rank for an overring that is
/// not a localization. Nothing is returned once `max_draws` is spent.
inline std::optional<OverringConfig> find_non_localization_overring(const FgAbelianGroup& g, std::uint64_t seed,
                                                                    std::size_t max_draws = 1000,
                                                                    const SolverOptions& opts = {}) {
  if (g.is_torsion())
    throw PreconditionViolation("group " + to_string(g) + " is torsion; every overring is a localization");
  SamplerSettings s;
  s.fixed_group = g;
  ConfigSampler sampler(seed, s);
  for (std::size_t i = 0; i < max_draws; ++i) {
    auto cfg = sampler.next(opts);
    if (cfg && !is_localization(*cfg, opts).holds) return cfg;
  }
  return std::nullopt;
}

struct ReproductionRow {
  std::string name;
  OverringConfig config;
  AnalysisReport report;
  std::string expected;
  bool matches = false;
};

inline GroupElement integer_class(long n) { return FgAbelianGroup(1, {}).element({n}); }

/// The fixed configurations: over Z with kept {-1} and inverted {1}
/// (well-centered, not a localization), with kept {-1} and inverted {2, 3}
/// (almost well-centered, not well-centered, PID), and a torsion witness
/// over Z/6.
inline std::vector<ReproductionRow> reproduce_paper_examples(const SolverOptions& opts = {}) {
  const FgAbelianGroup z(1, {});
  const FgAbelianGroup z6(0, {6});
  std::vector<ReproductionRow> rows;

  auto add = [&](std::string name, OverringConfig cfg, std::string expected, auto&& predicate) {
    AnalysisReport r = classify(cfg, opts);
    const bool ok = r.valid && predicate(r);
    rows.push_back({std::move(name), std::move(cfg), std::move(r), std::move(expected), ok});
  };

  add("exdedekind-A", OverringConfig(z, {integer_class(-1)}, {integer_class(1)}), "wc Yes, loc No",
      [](const AnalysisReport& r) { return r.well_centered.holds && !r.localization.holds; });
  add("exdedekind-B", OverringConfig(z, {integer_class(-1)}, {integer_class(2), integer_class(3)}),
      "awc Yes, wc No(-1), loc No, C(B) trivial", [&](const AnalysisReport& r) {
        return r.almost_well_centered.holds && !r.well_centered.holds && r.well_centered.counterexample &&
               r.well_centered.counterexample->element == integer_class(-1) && !r.localization.holds &&
               r.is_pid;
      });
  add("torsion-witness", OverringConfig(z6, {z6.element({1})}, {z6.element({2}), z6.element({3})}),
      "loc Yes, wc Yes, awc Yes", [](const AnalysisReport& r) {
        return r.localization.holds && r.well_centered.holds && r.almost_well_centered.holds;
      });
  return rows;
}

inline void require_reproduced(const std::vector<ReproductionRow>& rows) {
  for (const auto& row : rows)
    if (!row.matches) throw ReproductionFailure("row " + row.name + " does not match: expected " + row.expected);
}

}  // namespace wellcentered
