#pragma once

#include <wellcentered/overring.hpp>

#include <json.hpp>

#include <fstream>
#include <iterator>

namespace wellcentered {

using json = nlohmann::ordered_json;

/// Malformed input; the message names the line or the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace io {

inline json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

inline json vector_to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(integer_to_json(x));
  return a;
}

inline Integer integer_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  throw ParseError("field '" + field + "': expected an integer, got " + j.dump());
}

inline IntVector vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError("field '" + field + "': expected a list of integers");
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(integer_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return v;
}

inline const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw ParseError("field '" + where + "': expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing field '" + (where.empty() ? key : where + "." + key) + "'");
  return *it;
}

/// Parses text as JSON, reporting syntax errors by line and column.
inline json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": syntax error");
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline json group_to_json(const FgAbelianGroup& g) {
  return json{{"rank", g.rank()}, {"torsion", vector_to_json(g.torsion_moduli())}};
}

inline FgAbelianGroup group_from_json(const json& j, const std::string& field) {
  const Integer rank = integer_from_json(require(j, "rank", field), field + ".rank");
  if (rank < 0) throw ParseError("field '" + field + ".rank': must be nonnegative");
  IntVector torsion;
  if (j.contains("torsion")) torsion = vector_from_json(j["torsion"], field + ".torsion");
  try {
    return FgAbelianGroup(rank.get_ui(), torsion);
  } catch (const InvalidModulus& e) {
    throw ParseError("field '" + field + ".torsion': " + e.what());
  }
}

inline std::vector<GroupElement> classes_from_json(const FgAbelianGroup& g, const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError("field '" + field + "': expected a list of classes");
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string f = field + "[" + std::to_string(i) + "]";
    const IntVector v = vector_from_json(j[i], f);
    if (v.size() != g.dimension())
      throw ParseError("field '" + f + "': expected " + std::to_string(g.dimension()) + " coordinates, got " +
                       std::to_string(v.size()));
    out.push_back(g.element(v));
  }
  return out;
}

inline json classes_to_json(const std::vector<GroupElement>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(vector_to_json(x.flat()));
  return a;
}

inline OverringConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("config: expected an object");
  const FgAbelianGroup g = group_from_json(require(j, "group", ""), "group");
  auto kept = classes_from_json(g, require(j, "kept_classes", ""), "kept_classes");
  auto inverted = classes_from_json(g, require(j, "inverted_classes", ""), "inverted_classes");
  std::optional<bool> fg;
  if (j.contains("finitely_generated")) {
    if (!j["finitely_generated"].is_boolean()) throw ParseError("field 'finitely_generated': expected a boolean");
    fg = j["finitely_generated"].get<bool>();
  }
  return OverringConfig(g, kept, inverted, fg);
}

inline json config_to_json(const OverringConfig& cfg) {
  json j{{"group", group_to_json(cfg.group())},
         {"kept_classes", classes_to_json(cfg.kept_classes())},
         {"inverted_classes", classes_to_json(cfg.inverted_classes())}};
  if (cfg.finitely_generated()) j["finitely_generated"] = *cfg.finitely_generated();
  return j;
}

inline OverringConfig load_config(const std::string& path) { return config_from_json(parse_text(read_file(path), path)); }

inline LinearSystem system_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("system: expected an object");
  const json& rows = require(j, "coeffs", "");
  if (!rows.is_array()) throw ParseError("field 'coeffs': expected a list of rows");
  std::vector<IntVector> coeff_rows;
  for (std::size_t i = 0; i < rows.size(); ++i)
    coeff_rows.push_back(vector_from_json(rows[i], "coeffs[" + std::to_string(i) + "]"));
  std::size_t q = coeff_rows.empty() ? 0 : coeff_rows.front().size();
  if (j.contains("var_domains")) q = j["var_domains"].size();
  LinearSystem s;
  try {
    s.coeffs = IntMatrix::from_rows(coeff_rows, q);
  } catch (const ShapeError& e) {
    throw ParseError(std::string("field 'coeffs': ") + e.what());
  }
  const std::size_t p = coeff_rows.size();
  s.row_moduli = j.contains("row_moduli") ? vector_from_json(j["row_moduli"], "row_moduli") : IntVector(p);
  s.target = j.contains("target") ? vector_from_json(j["target"], "target") : IntVector(p);
  s.var_domains.assign(q, VarDomain::Nonnegative);
  if (j.contains("var_domains")) {
    const json& d = j["var_domains"];
    if (!d.is_array()) throw ParseError("field 'var_domains': expected a list");
    for (std::size_t i = 0; i < d.size(); ++i) {
      const std::string name = d[i].is_string() ? d[i].get<std::string>() : "";
      if (name == "Nonnegative") s.var_domains[i] = VarDomain::Nonnegative;
      else if (name == "FreeInteger") s.var_domains[i] = VarDomain::FreeInteger;
      else
        throw ParseError("field 'var_domains[" + std::to_string(i) +
                         "]': expected \"Nonnegative\" or \"FreeInteger\", got " + d[i].dump());
    }
  }
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("system: ") + e.what());
  }
  return s;
}

inline LinearSystem load_system(const std::string& path) { return system_from_json(parse_text(read_file(path), path)); }

inline json evidence_to_json(const ClassEvidence& ev) {
  json j{{"class", vector_to_json(ev.element.flat())}};
  if (ev.kept_exponents) j["kept_exponents"] = vector_to_json(*ev.kept_exponents);
  if (ev.inverted_coefficients) j["inverted_coefficients"] = vector_to_json(*ev.inverted_coefficients);
  if (ev.multiple) j["multiple"] = integer_to_json(*ev.multiple);
  if (ev.inverted_exponents) j["inverted_exponents"] = vector_to_json(*ev.inverted_exponents);
  return j;
}

inline ClassEvidence evidence_from_json(const FgAbelianGroup& g, const json& j, const std::string& field) {
  ClassEvidence ev;
  const IntVector cls = vector_from_json(require(j, "class", field), field + ".class");
  if (cls.size() != g.dimension()) throw ParseError("field '" + field + ".class': wrong number of coordinates");
  ev.element = g.element(cls);
  if (j.contains("kept_exponents")) ev.kept_exponents = vector_from_json(j["kept_exponents"], field + ".kept_exponents");
  if (j.contains("inverted_coefficients"))
    ev.inverted_coefficients = vector_from_json(j["inverted_coefficients"], field + ".inverted_coefficients");
  if (j.contains("multiple")) ev.multiple = integer_from_json(j["multiple"], field + ".multiple");
  if (j.contains("inverted_exponents"))
    ev.inverted_exponents = vector_from_json(j["inverted_exponents"], field + ".inverted_exponents");
  return ev;
}

inline json verdict_to_json(const std::string& name, const Verdict& v) {
  json j{{"predicate", name}, {"verdict", v.holds ? "Yes" : "No"}};
  if (v.holds) {
    json certs = json::array();
    for (const auto& ev : v.evidence) certs.push_back(evidence_to_json(ev));
    j["certificates"] = certs;
  } else if (v.counterexample) {
    j["counterexample"] = evidence_to_json(*v.counterexample);
  }
  return j;
}

inline Verdict verdict_from_json(const FgAbelianGroup& g, const json& j, const std::string& field) {
  Verdict v;
  const json& verdict = require(j, "verdict", field);
  if (verdict != "Yes" && verdict != "No") throw ParseError("field '" + field + ".verdict': expected Yes or No");
  v.holds = verdict == "Yes";
  if (j.contains("certificates")) {
    const json& certs = j["certificates"];
    if (!certs.is_array()) throw ParseError("field '" + field + ".certificates': expected a list");
    for (std::size_t i = 0; i < certs.size(); ++i)
      v.evidence.push_back(evidence_from_json(g, certs[i], field + ".certificates[" + std::to_string(i) + "]"));
  }
  if (j.contains("counterexample")) v.counterexample = evidence_from_json(g, j["counterexample"], field + ".counterexample");
  return v;
}

inline constexpr const char* predicate_names[] = {"is_localization", "is_well_centered", "is_almost_well_centered"};

inline json report_to_json(const OverringConfig& cfg, const AnalysisReport& r) {
  json j = config_to_json(cfg);
  j["valid"] = r.valid;
  if (!r.valid) {
    if (r.missing_generator) j["missing_generator"] = vector_to_json(r.missing_generator->flat());
    return j;
  }
  j["predicates"] = json::array({verdict_to_json(predicate_names[0], r.localization),
                                 verdict_to_json(predicate_names[1], r.well_centered),
                                 verdict_to_json(predicate_names[2], r.almost_well_centered)});
  j["overring_class_group"] = group_to_json(r.overring_class_group);
  j["is_pid"] = r.is_pid;
  return j;
}

inline AnalysisReport report_from_json(const OverringConfig& cfg, const json& j) {
  AnalysisReport r;
  if (!require(j, "valid", "").is_boolean()) throw ParseError("field 'valid': expected a boolean");
  r.valid = j["valid"].get<bool>();
  const auto& g = cfg.group();
  if (!r.valid) {
    if (j.contains("missing_generator")) r.missing_generator = g.element(vector_from_json(j["missing_generator"], "missing_generator"));
    return r;
  }
  const json& preds = require(j, "predicates", "");
  if (!preds.is_array()) throw ParseError("field 'predicates': expected a list");
  Verdict* slots[] = {&r.localization, &r.well_centered, &r.almost_well_centered};
  std::array<bool, 3> seen{};
  for (std::size_t i = 0; i < preds.size(); ++i) {
    const std::string field = "predicates[" + std::to_string(i) + "]";
    const json& name = require(preds[i], "predicate", field);
    bool known = false;
    for (std::size_t k = 0; k < 3; ++k)
      if (name == predicate_names[k]) {
        *slots[k] = verdict_from_json(g, preds[i], field);
        seen[k] = known = true;
      }
    if (!known) throw ParseError("field '" + field + ".predicate': unknown predicate " + name.dump());
  }
  for (std::size_t k = 0; k < 3; ++k)
    if (!seen[k]) throw ParseError(std::string("report lacks predicate ") + predicate_names[k]);
  r.overring_class_group = group_from_json(require(j, "overring_class_group", ""), "overring_class_group");
  r.is_pid = require(j, "is_pid", "").get<bool>();
  return r;
}

inline constexpr const char* machine_marker = "# machine-readable";

inline std::string verdict_summary(const Verdict& v) {
  if (v.holds) return "Yes";
  return v.counterexample ? "No, class " + to_string(v.counterexample->element) : "No";
}

/// Human-readable summary, then the machine-readable JSON section.
inline std::string format_report(const OverringConfig& cfg, const AnalysisReport& r) {
  std::string out;
  out += "class group:          " + to_string(cfg.group()) + "\n";
  out += "kept classes:         " + classes_to_json(cfg.kept_classes()).dump() + "\n";
  out += "inverted classes:     " + classes_to_json(cfg.inverted_classes()).dump() + "\n";
  if (!r.valid) {
    out += "realizable:           No (missing generator " +
           (r.missing_generator ? to_string(*r.missing_generator) : std::string("?")) + ")\n";
  } else {
    out += "realizable:           Yes\n";
    out += "localization:         " + verdict_summary(r.localization) + "\n";
    out += "well-centered:        " + verdict_summary(r.well_centered) + "\n";
    out += "almost well-centered: " + verdict_summary(r.almost_well_centered) + "\n";
    out += "overring class group: " + to_string(r.overring_class_group) + "\n";
    out += std::string("principal ideal domain: ") + (r.is_pid ? "Yes" : "No") + "\n";
  }
  out += std::string(machine_marker) + "\n";
  out += report_to_json(cfg, r).dump(2) + "\n";
  return out;
}

/// The JSON section of a formatted report. Plain JSON is accepted too.
inline json machine_section(const std::string& text, const std::string& source) {
  const auto pos = text.find(machine_marker);
  if (pos == std::string::npos) return parse_text(text, source);
  return parse_text(text.substr(pos + std::string(machine_marker).size()), source);
}

struct VerifyOutcome {
  std::vector<std::string> problems;
  bool agrees() const { return problems.empty(); }
};

/// Replays every certificate of `claimed` and compares its verdicts with a
/// fresh classification of `cfg`.
inline VerifyOutcome verify_report(const OverringConfig& cfg, const AnalysisReport& claimed,
                                   const SolverOptions& opts = {}) {
  VerifyOutcome out;
  const AnalysisReport fresh = classify(cfg, opts);
  if (fresh.valid != claimed.valid) {
    out.problems.push_back("validity differs");
    return out;
  }
  if (!fresh.valid) return out;
  const Verdict* claimed_v[] = {&claimed.localization, &claimed.well_centered, &claimed.almost_well_centered};
  const Verdict* fresh_v[] = {&fresh.localization, &fresh.well_centered, &fresh.almost_well_centered};
  for (std::size_t k = 0; k < 3; ++k) {
    const std::string name = predicate_names[k];
    if (!replay(cfg, *claimed_v[k])) out.problems.push_back(name + ": certificate does not replay");
    if (claimed_v[k]->holds != fresh_v[k]->holds) out.problems.push_back(name + ": verdict differs");
  }
  if (claimed.overring_class_group != fresh.overring_class_group) out.problems.push_back("overring class group differs");
  if (claimed.is_pid != fresh.is_pid) out.problems.push_back("PID flag differs");
  return out;
}

}  // namespace io
}  // namespace wellcentered
