// Command-line front end: analyze overring configs, run the property
// suite, sample configs, solve Diophantine systems, check the fixed
// ring-theoretic witnesses.
//
// Exit codes: 0 success, 1 a check failed or the solver ran out of budget,
// 2 invalid input.

#include <wellcentered/wellcentered.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace wc = wellcentered;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

std::string yes_no(bool b) { return b ? "Yes" : "No"; }

int run_analyze(const std::string& path, const wc::SolverOptions& opts) {
  const wc::OverringConfig cfg = wc::io::load_config(path);
  const wc::AnalysisReport r = wc::classify(cfg, opts);
  std::cout << wc::io::format_report(cfg, r);
  return r.valid ? kOk : kInvalid;
}

int run_verify(const std::string& config_path, const std::string& report_path, const wc::SolverOptions& opts) {
  const wc::OverringConfig cfg = wc::io::load_config(config_path);
  const wc::json j = wc::io::machine_section(wc::io::read_file(report_path), report_path);
  const wc::AnalysisReport claimed = wc::io::report_from_json(cfg, j);
  const auto outcome = wc::io::verify_report(cfg, claimed, opts);
  if (outcome.agrees()) {
    std::cout << "verified: every certificate replays and every verdict agrees\n";
    return kOk;
  }
  for (const auto& p : outcome.problems) std::cout << "mismatch: " << p << "\n";
  return kFailed;
}

void print_outcome(const std::string& name, const wc::CheckOutcome& o) {
  std::cout << (o.pass() ? "PASS " : "FAIL ") << name << ": " << o.evaluated << " samples";
  if (o.skipped) std::cout << ", " << o.skipped << " draws skipped";
  std::cout << "\n";
  for (const auto& f : o.failures)
    std::cout << "  sample " << f.sample_index << ": " << f.reason << " "
              << wc::io::config_to_json(f.config).dump() << "\n";
}

int run_suite(std::uint64_t seed, std::size_t samples, const wc::SolverOptions& opts) {
  bool ok = true;

  const auto rows = wc::reproduce_paper_examples(opts);
  for (const auto& row : rows) {
    std::cout << (row.matches ? "PASS " : "FAIL ") << "reproduce " << row.name << ": expected " << row.expected
              << "; got loc " << yes_no(row.report.localization.holds) << ", wc "
              << wc::io::verdict_summary(row.report.well_centered) << ", awc "
              << yes_no(row.report.almost_well_centered.holds) << ", C(B) "
              << wc::to_string(row.report.overring_class_group) << "\n";
    ok = ok && row.matches;
  }

  wc::SamplerSettings torsion;
  torsion.min_rank = torsion.max_rank = 0;
  torsion.torsion_order_cap = 64;
  wc::ConfigSampler torsion_sampler(seed, torsion);
  const auto nontor = wc::check_nontor(torsion_sampler, samples, opts);
  print_outcome("torsion class group: every overring a well-centered localization", nontor);
  ok = ok && nontor.pass();

  const auto found = wc::find_non_localization_overring(wc::FgAbelianGroup(1, {}), seed, 1000, opts);
  if (found) {
    std::cout << "PASS non-localization overring over Z: " << wc::io::config_to_json(*found).dump() << "\n";
  } else {
    std::cout << "FAIL non-localization overring over Z: none found\n";
    ok = false;
  }

  wc::SamplerSettings fg;
  fg.finitely_generated = true;
  wc::ConfigSampler fg_sampler(seed + 1, fg);
  const auto prufer = wc::check_prufer_consistency(fg_sampler, samples, opts);
  print_outcome("finitely generated: almost well-centered implies localization", prufer);
  ok = ok && prufer.pass();

  wc::ConfigSampler general(seed + 2, wc::SamplerSettings{});
  const auto chain = wc::check_implication_chain(general, samples, opts);
  print_outcome("localization => well-centered => almost well-centered", chain);
  ok = ok && chain.pass();

  return ok ? kOk : kFailed;
}

int run_random(std::size_t rank, const std::vector<long>& torsion, std::uint64_t seed, std::size_t count,
               const wc::SolverOptions& opts) {
  wc::IntVector moduli(torsion.begin(), torsion.end());
  wc::FgAbelianGroup g;
  try {
    g = wc::FgAbelianGroup(rank, moduli);
  } catch (const wc::InvalidModulus& e) {
    throw wc::ParseError(std::string("--torsion: ") + e.what());
  }
  wc::SamplerSettings s;
  s.fixed_group = g;
  wc::ConfigSampler sampler(seed, s);
  bool ok = true;
  for (std::size_t i = 0; i < count; ++i) {
    auto cfg = sampler.next(opts);
    if (!cfg) {
      std::cout << "sample " << i << ": skipped (no realizable draw)\n";
      continue;
    }
    const auto r = wc::classify(*cfg, opts);
    const bool chain = wc::implication_chain_holds(r);
    ok = ok && chain;
    std::cout << "sample " << i << ": " << wc::io::config_to_json(*cfg).dump() << " loc "
              << yes_no(r.localization.holds) << " wc " << yes_no(r.well_centered.holds) << " awc "
              << yes_no(r.almost_well_centered.holds) << " C(B) " << wc::to_string(r.overring_class_group)
              << (chain ? "" : " IMPLICATION CHAIN VIOLATED") << "\n";
  }
  return ok ? kOk : kFailed;
}

int run_hilbert(const std::string& path, const wc::SolverOptions& opts) {
  const wc::LinearSystem sys = wc::io::load_system(path);
  bool homogeneous_nonneg = wc::is_zero(sys.target);
  for (auto d : sys.var_domains) homogeneous_nonneg = homogeneous_nonneg && d == wc::VarDomain::Nonnegative;
  if (homogeneous_nonneg) {
    const auto hb = wc::hilbert_basis(sys, opts);
    std::cout << "hilbert basis: " << hb.generators.size() << " generators\n";
    for (const auto& v : hb.generators) std::cout << "  " << wc::to_string(v) << "\n";
    return kOk;
  }
  if (auto v = wc::solve_nonneg(sys, opts)) std::cout << "Feasible " << wc::to_string(*v) << "\n";
  else std::cout << "Infeasible\n";
  return kOk;
}

int run_examples() {
  bool ok = true;
  auto line = [&](const std::string& name, bool passed, const std::string& detail) {
    std::cout << (passed ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
    ok = ok && passed;
  };

  bool irrational = true;
  for (unsigned n = 1; n <= 50; ++n) irrational = irrational && !wc::power_one_plus_sqrt2(n).is_rational();
  const auto p2 = wc::power_one_plus_sqrt2(2);
  const auto p3 = wc::power_one_plus_sqrt2(3);
  line("sqrt2-powers", irrational && p2 == wc::QuadraticNumber{3, 2} && p3 == wc::QuadraticNumber{7, 5},
       "(1+sqrt2)^n has nonzero sqrt2 part for n = 1..50; n=2 -> " + p2.a.get_str() + "+" + p2.b.get_str() +
           "sqrt2, n=3 -> " + p3.a.get_str() + "+" + p3.b.get_str() + "sqrt2");

  const auto flat = wc::verify_exsimple_flatness();
  line("flatness-identity", flat.verified, flat.detail);
  using P = wc::RationalPoly;
  const auto perturbed = wc::verify_exsimple_flatness(P::X() + P::constant(2) * P::Y() * P::Z());
  line("flatness-negative-control", !perturbed.verified, "rejected: " + perturbed.detail);

  const auto sep = wc::verify_exsimple_Z_not_in_A();
  line("z-separation", sep.verified, sep.detail);
  const auto sep_b = wc::verify_exsimple_Z_not_in_A(wc::exsimple_generators_of_B());
  line("z-separation-negative-control", !sep_b.verified, "rejected: " + sep_b.detail);

  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide localization and (almost) well-centeredness of Dedekind overrings from class data"};
  app.require_subcommand(1);

  std::uint64_t budget = wc::SolverOptions{}.step_budget;
  app.add_option("--budget", budget, "Step budget for the Hilbert basis completion")->capture_default_str();

  std::string config_path, report_path, system_path;
  std::uint64_t seed = 42;
  std::size_t samples = 200, count = 10, rank = 1;
  std::vector<long> torsion;

  auto* analyze = app.add_subcommand("analyze", "Classify an overring config");
  analyze->add_option("config", config_path, "Config file")->required();

  auto* verify = app.add_subcommand("verify", "Replay a report's certificates against its config");
  verify->add_option("config", config_path, "Config file")->required();
  verify->add_option("report", report_path, "Report produced by analyze")->required();

  auto* suite = app.add_subcommand("suite", "Run the property suite and the fixed reproductions");
  suite->add_option("--seed", seed, "Random seed")->capture_default_str();
  suite->add_option("--samples", samples, "Samples per property")->capture_default_str();

  auto* random = app.add_subcommand("random", "Sample and classify configs over a given group");
  random->add_option("--rank", rank, "Free rank")->capture_default_str();
  random->add_option("--torsion", torsion, "Torsion moduli")->delimiter(',');
  random->add_option("--seed", seed, "Random seed")->capture_default_str();
  random->add_option("--count", count, "Number of configs")->capture_default_str();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis or feasibility of a linear system");
  hilbert->add_option("system", system_path, "System file")->required();

  auto* examples = app.add_subcommand("examples", "Verify the fixed ring-theoretic witnesses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  const wc::SolverOptions opts{budget};
  try {
    if (*analyze) return run_analyze(config_path, opts);
    if (*verify) return run_verify(config_path, report_path, opts);
    if (*suite) return run_suite(seed, samples, opts);
    if (*random) return run_random(rank, torsion, seed, count, opts);
    if (*hilbert) return run_hilbert(system_path, opts);
    if (*examples) return run_examples();
  } catch (const wc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const wc::ResourceExceeded& e) {
    std::cerr << "error: " << e.what() << "; rerun with a larger --budget\n";
    return kFailed;
  }
  return kInvalid;
}
