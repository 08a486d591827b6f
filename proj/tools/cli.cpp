#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "vogel/catalog.hpp"
#include "vogel/errors.hpp"
#include "vogel/formulas.hpp"
#include "vogel/laurent.hpp"
#include "vogel/resolver.hpp"
#include "vogel/scanner.hpp"
#include "vogel/serialize.hpp"
#include "vogel/trefoil.hpp"

namespace vogel::cli {

namespace {

struct FormulaOptions {
  std::string point;
  std::string formula = "adjoint";
  std::string perm = "abc";
  int k = 0;
  int l = 0;
  bool quantum = false;
  std::optional<double> at;
  bool laurent = false;
  bool json = false;
};

void add_formula_options(CLI::App* cmd, FormulaOptions& o) {
  cmd->add_option("--point", o.point, "catalog name (E8, Y:3, sl:5, exc:-2/3) or a,b,c")->required();
  cmd->add_option("--formula", o.formula, "adjoint | y2beta | cartan | Z | X");
  cmd->add_option("--perm", o.perm, "slot permutation word: abc acb bac bca cab cba");
  cmd->add_option("--k", o.k, "first power");
  cmd->add_option("--l,--n", o.l, "second power");
  cmd->add_flag("--json", o.json, "machine-readable output");
}

PPoint parse_point(const std::string& spec) {
  if (spec.find(',') != std::string::npos) return PPoint::parse(spec);
  return lookup(spec).coords;
}

SinhProduct make_formula(const FormulaOptions& o) {
  Permutation sigma = Permutation::from_word(o.perm);
  SinhProduct e;
  if (o.formula == "adjoint") {
    e = adjoint_qdim().permuted(sigma);
  } else if (o.formula == "y2beta") {
    e = y2_beta_dim().permuted(sigma);
  } else if (o.formula == "cartan") {
    e = adj2_y2_cartan_dim().permuted(sigma);
  } else if (o.formula == "Z") {
    e = build_Z(o.k, o.l, sigma);
  } else if (o.formula == "X") {
    e = build_X(o.k, o.l, sigma);
  } else {
    throw ParseError("unknown formula: " + o.formula);
  }
  if (o.quantum) e = e.with_mode(Mode::Quantum);
  return e;
}

std::string format_double(double x) {
  std::ostringstream s;
  s << std::setprecision(15) << x;
  return s.str();
}

std::string suggest_line(const PPoint& p) {
  std::vector<PLine> lines = lines_through(p);
  if (lines.empty()) return "a,b,c";
  return lines.front().label();
}

// Explicit forms and NAME:perm are taken as given. A bare name tries every
// permutation placing that line through p and keeps the first one giving a
// nonzero limit, falling back to the first one through p.
PLine pick_line(const std::string& spec, const PPoint& p, const SinhProduct& e) {
  if (spec.find(',') != std::string::npos) {
    PPoint form = PPoint::parse(spec);
    return PLine(LinForm(form[0], form[1], form[2]));
  }
  std::string name = spec;
  std::optional<Permutation> perm;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    perm = Permutation::from_word(spec.substr(colon + 1));
  }
  auto line_name = parse_line_name(name);
  if (!line_name) throw ParseError("unknown line: " + spec);
  if (perm) return PLine::named(*line_name, *perm);
  std::vector<PLine> candidates;
  for (const PLine& line : lines_through(p)) {
    if (line.name() == line_name) candidates.push_back(line);
  }
  if (candidates.empty()) throw NotOnLine("point " + p.to_string() + " lies on no " + name + " line");
  for (const PLine& line : candidates) {
    try {
      if (resolve_along(e, p, line).classical_value() != 0) return line;
    } catch (const Error&) {
    }
  }
  return candidates.front();
}

void print_laurent(const InstantiatedProduct& e, std::ostream& out, nlohmann::json* json) {
  LaurentResult r = laurent_expand(e);
  if (auto* poly = std::get_if<LaurentPoly>(&r)) {
    if (json) {
      (*json)["laurent"] = to_json(*poly);
    } else {
      out << "laurent: " << poly->to_string() << "\n";
    }
  } else {
    const auto& report = std::get<NonDivisibility>(r);
    if (json) {
      (*json)["laurent"] = {{"error", report.reason}};
    } else {
      out << "laurent: not a polynomial (" << report.reason << ")\n";
    }
  }
}

int cmd_dim(const FormulaOptions& o, std::ostream& out, std::ostream& err) {
  PPoint p = parse_point(o.point);
  SinhProduct e = make_formula(o);
  InstantiatedProduct at = e.reduced().instantiate(p);
  if (at.zero_denominator_count() > 0) {
    err << "singular; try resolve --line " << suggest_line(p) << "\n";
    if (o.json) out << nlohmann::json{{"error", "singular"}, {"line", suggest_line(p)}}.dump() << "\n";
    return kSingular;
  }
  Rational value = at.classical_limit();
  if (o.json) {
    nlohmann::json j = {{"point", p.to_string()}, {"value", to_string(value)}};
    if (o.at) j["quantum_value"] = at.eval_numeric(*o.at);
    if (o.laurent) print_laurent(at, out, &j);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << to_string(value) << "\n";
  if (o.at) out << "quantum at x=" << format_double(*o.at) << ": " << format_double(at.eval_numeric(*o.at)) << "\n";
  if (o.laurent) print_laurent(at, out, nullptr);
  return kOk;
}

int cmd_resolve(const FormulaOptions& o, const std::string& line_spec, std::ostream& out) {
  PPoint p = parse_point(o.point);
  SinhProduct e = make_formula(o);
  PLine line = pick_line(line_spec, p, e);
  Classification c = classify(e, p);
  ResolvedLimit r = resolve_along(e, p, line);
  Rational value = r.classical_value();
  InstantiatedProduct scaled = r.residual;
  scaled.mul_scale(r.prefactor);
  if (o.json) {
    nlohmann::json j = to_json(c);
    j.update(to_json(r));
    if (o.at) j["quantum_value"] = r.quantum_value(*o.at);
    if (o.laurent && !r.identically_zero) print_laurent(scaled, out, &j);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "classification: " << kind_string(c.kind) << " n=" << c.n << " d=" << c.d << "\n";
  out << "line: " << line.label() << " (" << line.form().to_string() << " = 0)\n";
  if (r.identically_zero) {
    out << "identically zero along the line\n";
  } else {
    out << "prefactor: " << to_string(r.prefactor) << "\n";
    out << "residual: " << r.residual.to_string() << "\n";
  }
  out << "classical: " << to_string(value) << "\n";
  if (o.at) out << "quantum at x=" << format_double(*o.at) << ": " << format_double(r.quantum_value(*o.at)) << "\n";
  if (o.laurent && !r.identically_zero) print_laurent(scaled, out, nullptr);
  return kOk;
}

int cmd_classify(const FormulaOptions& o, std::ostream& out) {
  PPoint p = parse_point(o.point);
  Classification c = classify(make_formula(o), p);
  if (o.json) {
    out << to_json(c).dump(2) << "\n";
    return kOk;
  }
  out << kind_string(c.kind) << " n=" << c.n << " d=" << c.d << " (raw n=" << c.raw_n << " d=" << c.raw_d << ")\n";
  for (const LinForm& w : c.witnesses) out << "witness: " << w.to_string() << "\n";
  return kOk;
}

struct ScanOptions {
  int prop = 0;
  bool integrality = false;
  bool closed_forms = false;
  std::optional<int> kmax;
  std::optional<int> lmax;
  std::optional<long> nmax;
  std::string out_path;
  bool json = false;
  bool timing = false;
};

int cmd_scan(const ScanOptions& o, std::ostream& out, std::ostream& err) {
  int selected = (o.prop != 0) + o.integrality + o.closed_forms;
  if (selected != 1) {
    err << "scan needs exactly one of --prop, --integrality, --closed-forms\n";
    return kParse;
  }
  SurveyReport report;
  if (o.prop == 1) {
    report = survey_prop1(o.nmax.value_or(12), o.kmax.value_or(6), o.lmax.value_or(o.kmax.value_or(6)));
  } else if (o.prop == 2) {
    report = survey_prop2(o.kmax.value_or(6), o.lmax.value_or(o.kmax.value_or(6)));
  } else if (o.prop == 3) {
    Prop3Bounds bounds;
    if (o.kmax) bounds.witness_kmax = bounds.regular_kmax = *o.kmax;
    if (o.lmax) {
      bounds.witness_lmax = bounds.regular_lmax = *o.lmax;
    } else if (o.kmax) {
      bounds.witness_lmax = bounds.regular_lmax = *o.kmax;
    }
    report = survey_prop3(bounds);
  } else if (o.integrality) {
    report = integrality_survey(o.kmax.value_or(6), o.lmax.value_or(o.kmax.value_or(6)));
  } else if (o.closed_forms) {
    report = closed_form_crosscheck(o.nmax.value_or(10), o.kmax.value_or(5), o.lmax.value_or(o.kmax.value_or(5)));
  } else {
    err << "unknown proposition: " << o.prop << "\n";
    return kParse;
  }
  nlohmann::json j = to_json(report, o.timing);
  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "cannot write " << o.out_path << "\n";
      return kParse;
    }
    file << j.dump(2) << "\n";
  }
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << to_text(report);
    if (o.timing) out << "seconds: " << report.seconds << "\n";
  }
  return report.passed() ? kOk : kScanFailed;
}

int cmd_trefoil(const std::string& point, const std::string& q, bool laurent, bool json, std::ostream& out) {
  PPoint p = parse_point(point);
  nlohmann::json j = {{"point", p.to_string()}};
  std::string value;
  std::optional<Rational> exact;
  try {
    exact = parse_rational(q);
  } catch (const ParseError&) {
  }
  if (exact && *exact != 0 && p.is_integral()) {
    value = to_string(trefoil_eval_exact(p, *exact));
  } else {
    value = format_double(trefoil_eval(p, std::stod(q)));
  }
  j["value"] = value;
  LaurentPoly poly = trefoil_laurent(p);
  if (json) {
    if (laurent) j["laurent"] = to_json(poly);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << value << "\n";
  if (laurent) out << "laurent: " << poly.to_string() << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal quantum-dimension formulas on Vogel's plane"};
  app.require_subcommand(1);

  FormulaOptions dim_opts;
  auto* dim = app.add_subcommand("dim", "classical value of a formula at a point");
  add_formula_options(dim, dim_opts);
  dim->add_flag("--quantum", dim_opts.quantum, "treat factors as sinh(L x/4)");
  dim->add_option("--at", dim_opts.at, "also evaluate at this x");
  dim->add_flag("--laurent", dim_opts.laurent, "expand in q = e^(x/2)");

  FormulaOptions res_opts;
  std::string line_spec;
  auto* resolve = app.add_subcommand("resolve", "limit along a line through a singular point");
  add_formula_options(resolve, res_opts);
  resolve->add_option("--line", line_spec, "sl | so | sp | exc, optionally NAME:perm, or a,b,c")->required();
  resolve->add_flag("--quantum", res_opts.quantum, "treat factors as sinh(L x/4)");
  resolve->add_option("--at", res_opts.at, "also evaluate the resolved value at this x");
  resolve->add_flag("--laurent", res_opts.laurent, "expand the resolved value in q");

  FormulaOptions cls_opts;
  auto* cls = app.add_subcommand("classify", "singularity type at a point");
  add_formula_options(cls, cls_opts);

  ScanOptions scan_opts;
  auto* scan = app.add_subcommand("scan", "batch verification sweeps");
  scan->add_option("--prop", scan_opts.prop, "1, 2 or 3")->check(CLI::IsMember({1, 2, 3}));
  scan->add_flag("--integrality", scan_opts.integrality, "integer outputs at Y:2 and Y:32");
  scan->add_flag("--closed-forms", scan_opts.closed_forms, "closed forms for the classical series");
  scan->add_option("--kmax", scan_opts.kmax);
  scan->add_option("--lmax", scan_opts.lmax);
  scan->add_option("--nmax", scan_opts.nmax);
  scan->add_option("--out", scan_opts.out_path, "also write the JSON report here");
  scan->add_flag("--json", scan_opts.json);
  scan->add_flag("--timing", scan_opts.timing);

  auto* catalog = app.add_subcommand("catalog", "embedded point tables");
  catalog->require_subcommand(1);
  std::string format = "csv";
  auto* exp = catalog->add_subcommand("export", "print the full table");
  exp->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  std::string show_name;
  auto* show = catalog->add_subcommand("show", "one entry as JSON");
  show->add_option("name", show_name)->required();

  std::string tref_point;
  std::string tref_q = "1";
  bool tref_laurent = false;
  bool tref_json = false;
  auto* tref = app.add_subcommand("trefoil", "adjoint trefoil polynomial");
  tref->add_option("--point", tref_point)->required();
  tref->add_option("--q", tref_q);
  tref->add_flag("--laurent", tref_laurent);
  tref->add_flag("--json", tref_json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*dim) return cmd_dim(dim_opts, out, err);
    if (*resolve) return cmd_resolve(res_opts, line_spec, out);
    if (*cls) return cmd_classify(cls_opts, out);
    if (*scan) return cmd_scan(scan_opts, out, err);
    if (*exp) {
      auto entries = full_catalog();
      if (format == "json") {
        out << catalog_json(entries).dump(2) << "\n";
      } else {
        out << catalog_csv(entries);
      }
      return kOk;
    }
    if (*show) {
      out << to_json(lookup(show_name)).dump(2) << "\n";
      return kOk;
    }
    if (*tref) return cmd_trefoil(tref_point, tref_q, tref_laurent, tref_json, out);
  } catch (const SingularAtPoint& e) {
    err << "singular: " << e.what() << "\n";
    return kSingular;
  } catch (const UndefinedExpression& e) {
    err << "undefined: " << e.what() << "\n";
    return kSingular;
  } catch (const IrregularLine& e) {
    err << "irregular line: " << e.what() << "\n";
    return kIrregular;
  } catch (const NotResolvable& e) {
    err << "not resolvable: " << e.what() << "\n";
    return kUnresolvable;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }
  return kParse;
}

}  // namespace vogel::cli
