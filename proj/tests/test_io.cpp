#include <wellcentered/io.hpp>
#include <wellcentered/sampler.hpp>

#include <gtest/gtest.h>

using namespace wellcentered;
using wellcentered::json;

namespace {

std::string parse_error_of(const std::string& text) {
  try {
    io::config_from_json(io::parse_text(text, "cfg"));
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ConfigJson, RoundTrip) {
  const auto g = make_group(1, {6});
  const auto cfg = OverringConfig::from_flat(g, {{-1, 0}, {0, 1}}, {{2, 3}}, true);
  const json j = io::config_to_json(cfg);
  EXPECT_EQ(io::config_from_json(j), cfg);
  EXPECT_EQ(j["group"]["rank"], 1);
  EXPECT_EQ(j["kept_classes"][0], json::array({-1, 0}));
}

TEST(ConfigJson, TorsionCoordinatesReduced) {
  const auto cfg = io::config_from_json(json::parse(
      R"({"group": {"rank": 0, "torsion": [4]}, "kept_classes": [[5]], "inverted_classes": [[-1]]})"));
  EXPECT_EQ(cfg.kept_classes()[0].torsion, IntVector{1});
  EXPECT_EQ(cfg.inverted_classes()[0].torsion, IntVector{3});
}

TEST(ConfigJson, SyntaxErrorHasLineAndColumn) {
  const std::string msg = parse_error_of("{\n  \"group\": {\"rank\": 1, \"torsion\": []},\n  \"kept_classes\": [[-1]\n}");
  EXPECT_NE(msg.find("cfg:4:"), std::string::npos) << msg;
  EXPECT_NE(msg.find("syntax error"), std::string::npos) << msg;
}

TEST(ConfigJson, FieldDiagnostics) {
  EXPECT_NE(parse_error_of(R"({"kept_classes": [], "inverted_classes": []})").find("group"), std::string::npos);
  const std::string wrong_len = parse_error_of(
      R"({"group": {"rank": 1, "torsion": []}, "kept_classes": [[1], [1, 2]], "inverted_classes": []})");
  EXPECT_NE(wrong_len.find("kept_classes[1]"), std::string::npos) << wrong_len;
  const std::string bad_mod =
      parse_error_of(R"({"group": {"rank": 0, "torsion": [1]}, "kept_classes": [], "inverted_classes": []})");
  EXPECT_FALSE(bad_mod.empty());
  const std::string not_int = parse_error_of(
      R"({"group": {"rank": 1, "torsion": []}, "kept_classes": [["x"]], "inverted_classes": []})");
  EXPECT_NE(not_int.find("kept_classes[0]"), std::string::npos) << not_int;
}

TEST(ConfigJson, BigIntegersSurvive) {
  const std::string big = "123456789012345678901234567890";
  const auto cfg = io::config_from_json(json::parse(R"({"group": {"rank": 1, "torsion": []}, "kept_classes": [[")" +
                                                    big + R"("]], "inverted_classes": []})"));
  EXPECT_EQ(cfg.kept_classes()[0].free[0], Integer(big));
  EXPECT_EQ(io::config_from_json(io::config_to_json(cfg)), cfg);
}

TEST(SystemJson, Parses) {
  const auto sys = io::system_from_json(json::parse(
      R"({"coeffs": [[2, 3]], "row_moduli": [0], "var_domains": ["Nonnegative", "FreeInteger"], "target": [5]})"));
  EXPECT_EQ(sys.num_vars(), 2u);
  EXPECT_EQ(sys.var_domains[1], VarDomain::FreeInteger);
  EXPECT_EQ(sys.target, IntVector{5});

  const auto hom = io::system_from_json(json::parse(R"({"coeffs": [[1, 1, -2]]})"));
  EXPECT_EQ(hom.row_moduli, IntVector{0});
  EXPECT_EQ(hom.target, IntVector{0});
  EXPECT_THROW(io::system_from_json(json::parse(R"({"coeffs": [[1], [1, 2]]})")), ParseError);
  EXPECT_THROW(io::system_from_json(json::parse(R"({"coeffs": [[1]], "var_domains": ["Real"]})")), ParseError);
}

TEST(ReportJson, FormattedReportRoundTripsAndVerifies) {
  ConfigSampler sampler(21, {});
  for (int i = 0; i < 40; ++i) {
    const auto cfg = sampler.next();
    ASSERT_TRUE(cfg);
    const auto r = classify(*cfg);
    const std::string text = io::format_report(*cfg, r);
    const json section = io::machine_section(text, "report");
    const auto back = io::report_from_json(*cfg, section);
    EXPECT_EQ(back.localization.holds, r.localization.holds);
    EXPECT_EQ(back.overring_class_group, r.overring_class_group);
    EXPECT_TRUE(io::verify_report(*cfg, back).agrees());
  }
}

TEST(ReportJson, ExdedekindBSummary) {
  const auto z = make_group(1, {});
  const auto cfg = OverringConfig::from_flat(z, {{-1}}, {{2}, {3}});
  const std::string text = io::format_report(cfg, classify(cfg));
  EXPECT_NE(text.find("well-centered:        No, class (-1)"), std::string::npos) << text;
  EXPECT_NE(text.find("almost well-centered: Yes"), std::string::npos) << text;
  EXPECT_NE(text.find("localization:         No, class (2)"), std::string::npos) << text;
  EXPECT_NE(text.find("principal ideal domain: Yes"), std::string::npos) << text;
}

TEST(ReportJson, TamperedReportRejected) {
  const auto z = make_group(1, {});
  const auto cfg = OverringConfig::from_flat(z, {{-1}}, {{2}, {3}});
  json j = io::report_to_json(cfg, classify(cfg));
  // Claim well-centered = Yes with no certificates.
  for (auto& p : j["predicates"])
    if (p["predicate"] == "is_well_centered") {
      p["verdict"] = "Yes";
      p.erase("counterexample");
      p["certificates"] = json::array();
    }
  const auto claimed = io::report_from_json(cfg, j);
  const auto outcome = io::verify_report(cfg, claimed);
  EXPECT_FALSE(outcome.agrees());
}

TEST(ReportJson, InvalidConfigReport) {
  const auto z = make_group(1, {});
  const auto cfg = OverringConfig::from_flat(z, {{1}}, {{2}});
  const auto r = classify(cfg);
  const json j = io::report_to_json(cfg, r);
  EXPECT_EQ(j["valid"], false);
  EXPECT_TRUE(j.contains("missing_generator"));
  EXPECT_FALSE(j.contains("predicates"));
  EXPECT_TRUE(io::verify_report(cfg, io::report_from_json(cfg, j)).agrees());
}
