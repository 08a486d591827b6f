#include "vogel/serialize.hpp"

#include <sstream>

namespace vogel {

namespace {

nlohmann::json factor_list(const InstantiatedProduct::Factors& factors) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [value, mult] : factors) out.push_back({to_string(value), mult});
  return out;
}

std::string lines_field(const std::vector<PLine>& lines) {
  std::string out;
  for (const PLine& line : lines) {
    if (!out.empty()) out += ";";
    out += line.label();
  }
  return out;
}

std::string head(const Verdict& v) {
  return v.point + " " + std::string(formula_string(v.formula)) + "(" + std::to_string(v.k) + "," +
         std::to_string(v.l) + ") perm " + v.perm;
}

}  // namespace

nlohmann::json to_json(const LaurentPoly& poly) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : poly.terms()) terms.push_back({e, c.get_str()});
  return {{"granularity", poly.granularity()}, {"terms", terms}};
}

nlohmann::json to_json(const InstantiatedProduct& e) {
  return {{"mode", e.mode() == Mode::Quantum ? "quantum" : "rational"},
          {"sign", e.sign()},
          {"scale", to_string(e.scale())},
          {"numerator", factor_list(e.numerator())},
          {"denominator", factor_list(e.denominator())},
          {"text", e.to_string()}};
}

nlohmann::json to_json(const Classification& c) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const LinForm& f : c.witnesses) witnesses.push_back(f.to_string());
  return {{"kind", std::string(kind_string(c.kind))}, {"n", c.n}, {"d", c.d},
          {"raw_n", c.raw_n}, {"raw_d", c.raw_d}, {"witnesses", witnesses}};
}

nlohmann::json to_json(const ResolvedLimit& r) {
  nlohmann::json direction = nlohmann::json::array();
  for (const Rational& x : r.direction) direction.push_back(to_string(x));
  return {{"line", r.line.label()},
          {"line_form", r.line.form().to_string()},
          {"direction", direction},
          {"identically_zero", r.identically_zero},
          {"prefactor", to_string(r.prefactor)},
          {"residual_factors", to_json(r.residual)},
          {"classical_value", to_string(r.classical_value())}};
}

nlohmann::json to_json(const CatalogEntry& entry) {
  nlohmann::json lines = nlohmann::json::array();
  for (const PLine& line : entry.lines) lines.push_back(line.label());
  return {{"name", entry.name},
          {"alpha", to_string(entry.coords[0])},
          {"beta", to_string(entry.coords[1])},
          {"gamma", to_string(entry.coords[2])},
          {"dim", entry.dim ? nlohmann::json(entry.dim->get_str()) : nlohmann::json(nullptr)},
          {"rank", entry.rank ? nlohmann::json(*entry.rank) : nlohmann::json(nullptr)},
          {"lines", lines},
          {"region", std::string(region_string(entry.region))}};
}

nlohmann::json to_json(const SurveyReport& report, bool include_timing) {
  nlohmann::json verdicts = nlohmann::json::array();
  for (const Verdict& v : report.verdicts) {
    verdicts.push_back({v.point, std::string(formula_string(v.formula)), v.perm, v.k, v.l,
                        std::string(kind_string(v.kind)), v.n, v.d});
  }
  nlohmann::json witnesses = nlohmann::json::array();
  for (const WitnessRecord& w : report.witnesses) {
    witnesses.push_back({{"point", w.point}, {"formula", std::string(formula_string(w.formula))},
                         {"perm", w.perm}, {"k", w.k}, {"l", w.l}, {"form", w.form.to_string()}});
  }
  nlohmann::json nonintegers = nlohmann::json::array();
  for (const NonInteger& n : report.nonintegers) {
    nonintegers.push_back({{"point", n.point}, {"formula", std::string(formula_string(n.formula))},
                           {"perm", n.perm}, {"k", n.k}, {"l", n.l}, {"value", to_string(n.value)}});
  }
  nlohmann::json checks = nlohmann::json::array();
  for (const CrossCheck& c : report.crosschecks) {
    nlohmann::json item = {{"family", c.family}, {"case", c.case_id}, {"k", c.k}, {"l", c.l}, {"N", c.N},
                           {"outcome", c.outcome}, {"general_kind", std::string(kind_string(c.general_kind))},
                           {"general_order", c.general_order}, {"display_order", c.display_order}};
    if (c.general_value) item["general_value"] = *c.general_value;
    if (c.closed_value) item["closed_value"] = *c.closed_value;
    if (!c.reading.empty()) item["matching_display"] = c.reading;
    checks.push_back(item);
  }
  nlohmann::json counts = nlohmann::json::object();
  for (Kind kind : {Kind::Regular, Kind::RegularZero, Kind::LinearlyResolvable, Kind::NotLR}) {
    counts[std::string(kind_string(kind))] = report.count(kind);
  }
  nlohmann::json out = {{"name", report.name},
                        {"scope", report.scope},
                        {"passed", report.passed()},
                        {"counts", counts},
                        {"failures", report.failures},
                        {"notes", report.notes},
                        {"witnesses", witnesses},
                        {"nonintegers", nonintegers},
                        {"crosschecks", checks},
                        {"verdicts", verdicts}};
  if (include_timing) out["seconds"] = report.seconds;
  return out;
}

std::string to_text(const SurveyReport& report) {
  std::ostringstream out;
  out << report.name << ": " << (report.passed() ? "passed" : "FAILED") << "\n";
  out << "verdicts: " << report.verdicts.size();
  for (Kind kind : {Kind::Regular, Kind::RegularZero, Kind::LinearlyResolvable, Kind::NotLR}) {
    out << "  " << kind_string(kind) << "=" << report.count(kind);
  }
  out << "\n";
  for (const WitnessRecord& w : report.witnesses) {
    out << "witness " << w.point << " " << formula_string(w.formula) << "(" << w.k << "," << w.l << ") perm "
        << w.perm << " factor " << w.form.to_string() << "\n";
  }
  for (const NonInteger& n : report.nonintegers) {
    out << "non-integer " << n.point << " " << formula_string(n.formula) << "(" << n.k << "," << n.l
        << ") perm " << n.perm << " = " << to_string(n.value) << "\n";
  }
  for (const CrossCheck& c : report.crosschecks) {
    if (c.outcome == "match" || c.outcome == "order_only") continue;
    out << "typo-log " << c.case_id << " k=" << c.k << " l=" << c.l << " N=" << c.N << ": " << c.outcome;
    if (c.general_value && c.closed_value) {
      out << " general=" << *c.general_value << " closed=" << *c.closed_value;
    }
    if (!c.reading.empty()) out << " (display of " << c.reading << " matches)";
    out << "\n";
  }
  for (const Verdict& v : report.verdicts) {
    if (report.name == "closed_forms" && v.kind == Kind::LinearlyResolvable) {
      out << "singular (LR) " << head(v) << " n=" << v.n << " d=" << v.d << "\n";
    }
  }
  for (const std::string& n : report.notes) out << "note: " << n << "\n";
  for (const std::string& f : report.failures) out << "FAIL: " << f << "\n";
  return out.str();
}

std::string catalog_csv(const std::vector<CatalogEntry>& entries) {
  std::ostringstream out;
  out << "name,alpha,beta,gamma,dim,rank,lines,region\n";
  for (const CatalogEntry& e : entries) {
    out << e.name << "," << to_string(e.coords[0]) << "," << to_string(e.coords[1]) << "," << to_string(e.coords[2])
        << "," << (e.dim ? e.dim->get_str() : "") << "," << (e.rank ? std::to_string(*e.rank) : "") << ","
        << lines_field(e.lines) << "," << region_string(e.region) << "\n";
  }
  return out.str();
}

nlohmann::json catalog_json(const std::vector<CatalogEntry>& entries) {
  nlohmann::json out = nlohmann::json::array();
  for (const CatalogEntry& e : entries) out.push_back(to_json(e));
  return out;
}

}  // namespace vogel
