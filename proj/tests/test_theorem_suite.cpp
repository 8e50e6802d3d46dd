#include <wellcentered/theorem_suite.hpp>

#include <gtest/gtest.h>

using namespace wellcentered;

namespace {

SamplerSettings torsion_settings() {
  SamplerSettings s;
  s.max_rank = 0;
  s.torsion_order_cap = 64;
  return s;
}

std::string describe(const CheckOutcome& o) {
  std::string s = std::to_string(o.evaluated) + " evaluated";
  for (const auto& f : o.failures) s += "; #" + std::to_string(f.sample_index) + " " + f.reason;
  return s;
}

}  // namespace

TEST(Sampler, SameSeedSameStream) {
  ConfigSampler a(99, {}), b(99, {}), c(100, {});
  bool differs = false;
  for (int i = 0; i < 50; ++i) {
    const auto x = a.next(), y = b.next(), w = c.next();
    ASSERT_TRUE(x && y && w);
    EXPECT_EQ(*x, *y);
    differs = differs || !(*x == *w);
  }
  EXPECT_TRUE(differs);
}

TEST(Sampler, RespectsSettings) {
  SamplerSettings s;
  s.torsion_order_cap = 8;
  ConfigSampler sampler(5, s);
  for (int i = 0; i < 200; ++i) {
    const auto cfg = sampler.next();
    ASSERT_TRUE(cfg);
    EXPECT_LE(cfg->group().rank(), 2u);
    Integer order = 1;
    for (const auto& d : cfg->group().torsion_moduli()) order *= d;
    EXPECT_LE(order, 8);
    EXPECT_LE(cfg->kept_classes().size(), 3u);
    EXPECT_LE(cfg->inverted_classes().size(), 3u);
    for (const auto& c : cfg->all_classes())
      for (const auto& x : c.free) EXPECT_LE(abs(x), 3);
  }
}

TEST(Sampler, FinitelyGeneratedFlag) {
  SamplerSettings s;
  s.finitely_generated = true;
  ConfigSampler sampler(8, s);
  for (int i = 0; i < 100; ++i) {
    const auto cfg = sampler.next();
    ASSERT_TRUE(cfg);
    EXPECT_EQ(cfg->finitely_generated(), true);
    for (const auto& c : cfg->inverted_classes())
      EXPECT_NE(std::find(cfg->kept_classes().begin(), cfg->kept_classes().end(), c), cfg->kept_classes().end());
  }
}

TEST(CheckNontor, TwoHundredTorsionSamples) {
  ConfigSampler sampler(42, torsion_settings());
  const auto o = check_nontor(sampler, 200);
  EXPECT_EQ(o.evaluated, 200u);
  EXPECT_TRUE(o.pass()) << describe(o);
}

TEST(CheckNontor, ZeroSamplesPass) {
  ConfigSampler sampler(1, torsion_settings());
  const auto o = check_nontor(sampler, 0);
  EXPECT_EQ(o.evaluated, 0u);
  EXPECT_TRUE(o.pass());
}

TEST(CheckNontor, SingleConfigOverZ2) {
  const auto g = make_group(0, {2});
  const auto r = classify(OverringConfig(g, {g.element({1})}, {g.element({1})}));
  ASSERT_TRUE(r.valid);
  EXPECT_TRUE(r.localization.holds);
  EXPECT_TRUE(r.well_centered.holds);
  EXPECT_TRUE(r.almost_well_centered.holds);
}

TEST(CheckNontor, RejectsNonTorsionSamples) {
  ConfigSampler sampler(1, {});
  SamplerSettings s;
  s.min_rank = 1;
  ConfigSampler free_sampler(1, s);
  EXPECT_THROW(check_nontor(free_sampler, 5), PreconditionViolation);
}

TEST(CheckNontor, DeterministicOutcome) {
  ConfigSampler a(7, torsion_settings()), b(7, torsion_settings());
  const auto x = check_nontor(a, 40), y = check_nontor(b, 40);
  EXPECT_EQ(x.evaluated, y.evaluated);
  EXPECT_EQ(x.skipped, y.skipped);
  EXPECT_EQ(x.failures.size(), y.failures.size());
}

TEST(FindNonLocalization, OverZ) {
  const auto cfg = find_non_localization_overring(make_group(1, {}), 42);
  ASSERT_TRUE(cfg);
  const auto r = classify(*cfg);
  ASSERT_TRUE(r.valid);
  EXPECT_FALSE(r.localization.holds);
  EXPECT_TRUE(replay(*cfg, r.localization));
}

TEST(FindNonLocalization, OverHigherRank) {
  const auto cfg = find_non_localization_overring(make_group(2, {2}), 3);
  ASSERT_TRUE(cfg);
  EXPECT_FALSE(is_localization(*cfg).holds);
}

TEST(FindNonLocalization, KnownWitnesses) {
  const auto z = make_group(1, {});
  EXPECT_FALSE(is_localization(OverringConfig(z, {integer_class(-1)}, {integer_class(1)})).holds);
  EXPECT_FALSE(
      is_localization(OverringConfig(z, {integer_class(-1)}, {integer_class(2), integer_class(3)})).holds);
}

TEST(FindNonLocalization, TorsionGroupRejected) {
  EXPECT_THROW(find_non_localization_overring(make_group(0, {4}), 1), PreconditionViolation);
}

TEST(CheckPrufer, FlaggedSamplesAreConsistent) {
  SamplerSettings s;
  s.finitely_generated = true;
  ConfigSampler sampler(43, s);
  const auto o = check_prufer_consistency(sampler, 200);
  EXPECT_EQ(o.evaluated, 200u);
  EXPECT_TRUE(o.pass()) << describe(o);
}

TEST(CheckPrufer, UnflaggedSamplesRejected) {
  ConfigSampler sampler(43, {});
  EXPECT_THROW(check_prufer_consistency(sampler, 3), PreconditionViolation);
}

TEST(CheckPrufer, Examples) {
  const auto z = make_group(1, {});
  const auto r = classify(OverringConfig(z, {integer_class(-1), integer_class(1)}, {integer_class(2)}, true));
  ASSERT_TRUE(r.valid);
  EXPECT_FALSE(r.almost_well_centered.holds);

  const auto c6 = make_group(0, {6});
  const auto t = classify(OverringConfig(c6, {c6.element({1})}, {c6.element({1})}, true));
  EXPECT_TRUE(t.almost_well_centered.holds && t.localization.holds);

  SamplerSettings s;
  s.finitely_generated = true;
  ConfigSampler sampler(1, s);
  EXPECT_TRUE(check_prufer_consistency(sampler, 0).pass());
}

TEST(CheckImplicationChain, Samples) {
  ConfigSampler sampler(44, {});
  const auto o = check_implication_chain(sampler, 200);
  EXPECT_EQ(o.evaluated, 200u);
  EXPECT_TRUE(o.pass()) << describe(o);
}

TEST(Reproduce, FixedRows) {
  const auto rows = reproduce_paper_examples();
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].name, "exdedekind-A");
  EXPECT_EQ(rows[1].name, "exdedekind-B");
  EXPECT_EQ(rows[2].name, "torsion-witness");
  for (const auto& row : rows) EXPECT_TRUE(row.matches) << row.name;
  EXPECT_NO_THROW(require_reproduced(rows));

  const auto& b = rows[1].report;
  EXPECT_TRUE(b.almost_well_centered.holds);
  EXPECT_FALSE(b.well_centered.holds);
  EXPECT_EQ(b.well_centered.counterexample->element, integer_class(-1));
  EXPECT_FALSE(b.localization.holds);
  EXPECT_TRUE(b.is_pid);
}

TEST(Reproduce, MismatchNamesTheRow) {
  auto rows = reproduce_paper_examples();
  rows[1].matches = false;
  try {
    require_reproduced(rows);
    FAIL() << "expected ReproductionFailure";
  } catch (const ReproductionFailure& e) {
    EXPECT_NE(std::string(e.what()).find("exdedekind-B"), std::string::npos);
  }
}
