#pragma once

#include <wellcentered/overring.hpp>

#include <array>
#include <random>

namespace wellcentered {

struct SamplerSettings {
  std::size_t min_rank = 0;
  std::size_t max_rank = 2;
  /// Upper bound on the product of the torsion moduli.
  Integer torsion_order_cap = 8;
  std::size_t classes_per_side_cap = 3;
  long coordinate_cap = 3;
  /// Emit configs flagged finitely generated. Their inverted classes are
  /// drawn from the kept classes: with finitely many inverted primes, every
  /// class of the distribution still carries kept primes.
  bool finitely_generated = false;
  /// Sample classes over this group instead of drawing one.
  std::optional<FgAbelianGroup> fixed_group;
  std::size_t max_retries = 100;
};

/// Deterministic stream of valid overring configs.
///
/// Ranks are uniform over [min_rank, max_rank], torsion factors are drawn
/// from {2, 3, 4, 6, 8} under the order cap, class coordinates are uniform
/// in [-coordinate_cap, coordinate_cap] (free) or [0, d) (torsion). A draw
/// that fails validation is redrawn, up to max_retries times.
class ConfigSampler {
 public:
  ConfigSampler(std::uint64_t seed, SamplerSettings settings)
      : settings_(std::move(settings)), rng_(seed) {}

  const SamplerSettings& settings() const { return settings_; }

  /// The next valid config, or nothing if every retry failed validation.
  std::optional<OverringConfig> next(const SolverOptions& opts = {}) {
    for (std::size_t attempt = 0; attempt < settings_.max_retries; ++attempt) {
      OverringConfig cfg = draw();
      if (validate(cfg, opts).ok()) return cfg;
    }
    return std::nullopt;
  }

  /// Uniform integer in [lo, hi] by rejection on the raw engine output, so
  /// the stream does not depend on the standard library's distributions.
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do r = rng_();
    while (r >= limit);
    return lo + static_cast<long>(r % span);
  }

 private:
  FgAbelianGroup draw_group() {
    static constexpr std::array<long, 5> factors{2, 3, 4, 6, 8};
    const auto rank = static_cast<std::size_t>(
        uniform(static_cast<long>(settings_.min_rank), static_cast<long>(settings_.max_rank)));
    IntVector moduli;
    Integer order = 1;
    const long count = uniform(0, 3);
    for (long i = 0; i < count; ++i) {
      const long d = factors[static_cast<std::size_t>(uniform(0, factors.size() - 1))];
      if (order * d > settings_.torsion_order_cap) continue;
      order *= d;
      moduli.push_back(d);
    }
    return FgAbelianGroup(rank, moduli);
  }

  GroupElement draw_class(const FgAbelianGroup& g) {
    IntVector flat;
    for (std::size_t i = 0; i < g.rank(); ++i)
      flat.emplace_back(uniform(-settings_.coordinate_cap, settings_.coordinate_cap));
    for (const auto& d : g.torsion_moduli()) flat.emplace_back(uniform(0, d.get_si() - 1));
    return g.element(flat);
  }

  OverringConfig draw() {
    FgAbelianGroup g = settings_.fixed_group ? *settings_.fixed_group : draw_group();
    const long cap = static_cast<long>(settings_.classes_per_side_cap);
    std::vector<GroupElement> kept, inverted;
    const long nk = uniform(0, cap);
    for (long i = 0; i < nk; ++i) kept.push_back(draw_class(g));
    if (settings_.finitely_generated) {
      for (const auto& c : kept)
        if (uniform(0, 1)) inverted.push_back(c);
      return OverringConfig(std::move(g), kept, inverted, true);
    }
    const long ni = uniform(0, cap);
    for (long i = 0; i < ni; ++i) inverted.push_back(draw_class(g));
    return OverringConfig(std::move(g), kept, inverted);
  }

  SamplerSettings settings_;
  std::mt19937_64 rng_;
};

}  // namespace wellcentered
