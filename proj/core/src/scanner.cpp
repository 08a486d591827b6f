#include "vogel/scanner.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include "vogel/errors.hpp"
#include "vogel/formulas.hpp"

namespace vogel {

namespace {

using Clock = std::chrono::steady_clock;

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Prebuilt formulas indexed by (formula, k, l, permutation).
class FormulaCache {
 public:
  FormulaCache(int kmax, int lmax, bool with_x) : kmax_(kmax), lmax_(lmax) {
    int kinds = with_x ? 2 : 1;
    table_.resize(static_cast<std::size_t>(kinds * (kmax + 1) * (lmax + 1) * 6));
    parallel_for(table_.size(), [&](std::size_t i) {
      std::size_t s = i % 6;
      std::size_t rest = i / 6;
      int l = static_cast<int>(rest % static_cast<std::size_t>(lmax + 1));
      rest /= static_cast<std::size_t>(lmax + 1);
      int k = static_cast<int>(rest % static_cast<std::size_t>(kmax + 1));
      FormulaKind f = rest / static_cast<std::size_t>(kmax + 1) == 0 ? FormulaKind::Z : FormulaKind::X;
      table_[i] = build(f, k, l, Permutation::all()[s]);
    });
  }

  const SinhProduct& get(FormulaKind f, int k, int l, std::size_t s) const {
    std::size_t fi = f == FormulaKind::Z ? 0 : 1;
    return table_[((fi * static_cast<std::size_t>(kmax_ + 1) + static_cast<std::size_t>(k)) *
                       static_cast<std::size_t>(lmax_ + 1) +
                   static_cast<std::size_t>(l)) *
                      6 +
                  s];
  }

 private:
  int kmax_;
  int lmax_;
  std::vector<SinhProduct> table_;
};

std::vector<Verdict> sweep_point(const CatalogEntry& entry, const FormulaCache& cache,
                                 const std::vector<FormulaKind>& formulas, int kmax, int lmax) {
  std::vector<Verdict> out;
  for (FormulaKind f : formulas) {
    for (std::size_t s = 0; s < 6; ++s) {
      for (int k = 0; k <= kmax; ++k) {
        for (int l = 0; l <= lmax; ++l) {
          Classification c = classify(cache.get(f, k, l, s), entry.coords);
          out.push_back(Verdict{entry.name, f, Permutation::all()[s].word(), k, l, c.kind, c.n, c.d});
        }
      }
    }
  }
  return out;
}

SurveyReport sweep(std::string name, const std::vector<CatalogEntry>& points,
                   const std::vector<FormulaKind>& formulas, int kmax, int lmax) {
  auto start = Clock::now();
  SurveyReport report;
  report.name = std::move(name);
  bool with_x = std::find(formulas.begin(), formulas.end(), FormulaKind::X) != formulas.end();
  FormulaCache cache(kmax, lmax, with_x);
  std::vector<std::vector<Verdict>> parts(points.size());
  parallel_for(points.size(), [&](std::size_t i) { parts[i] = sweep_point(points[i], cache, formulas, kmax, lmax); });
  for (auto& part : parts) {
    for (Verdict& v : part) {
      if (v.kind == Kind::NotLR) {
        report.failures.push_back("NotLR at " + v.point + " " + std::string(formula_string(v.formula)) + "(" +
                                  std::to_string(v.k) + "," + std::to_string(v.l) + ") perm " + v.perm);
      }
      report.verdicts.push_back(std::move(v));
    }
  }
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

nlohmann::json point_names(const std::vector<CatalogEntry>& points) {
  nlohmann::json names = nlohmann::json::array();
  for (const auto& p : points) names.push_back(p.name);
  return names;
}

bool close_enough(double a, double b, double tolerance) {
  return std::fabs(a - b) <= tolerance * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace

unsigned worker_count() {
  if (const char* env = std::getenv("VOGEL_WORKERS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::string_view formula_string(FormulaKind kind) { return kind == FormulaKind::Z ? "Z" : "X"; }

SinhProduct build(FormulaKind kind, int k, int l, const Permutation& sigma) {
  return kind == FormulaKind::Z ? build_Z(k, l, sigma) : build_X(k, l, sigma);
}

std::size_t SurveyReport::count(Kind kind) const {
  return static_cast<std::size_t>(
      std::count_if(verdicts.begin(), verdicts.end(), [&](const Verdict& v) { return v.kind == kind; }));
}

SurveyReport survey_prop1(long Nmax, int kmax, int lmax) {
  std::vector<CatalogEntry> points;
  for (auto part : {enumerate_family("sl", 2, Nmax), enumerate_family("so", 5, Nmax),
                    enumerate_family("sp", 2, 2 * Nmax), enumerate_family("exc", 0, 0)}) {
    points.insert(points.end(), part.begin(), part.end());
  }
  SurveyReport report = sweep("prop1", points, {FormulaKind::Z}, kmax, lmax);
  report.scope = {{"formulas", {"Z"}}, {"points", point_names(points)}, {"nmax", Nmax},
                  {"kmax", kmax}, {"lmax", lmax}, {"permutations", 6}};
  return report;
}

SurveyReport survey_prop2(int kmax, int lmax) {
  std::vector<CatalogEntry> points = {lookup("E7.5"), lookup("X1"), lookup("X2")};
  SurveyReport report = sweep("prop2", points, {FormulaKind::Z, FormulaKind::X}, kmax, lmax);
  report.scope = {{"formulas", {"Z", "X"}}, {"points", point_names(points)},
                  {"kmax", kmax}, {"lmax", lmax}, {"permutations", 6}};
  return report;
}

std::optional<WitnessRecord> find_witness(const CatalogEntry& entry, int kmax, int lmax) {
  for (int total = 0; total <= kmax + lmax; ++total) {
    for (int k = std::max(0, total - lmax); k <= std::min(total, kmax); ++k) {
      int l = total - k;
      for (FormulaKind f : {FormulaKind::Z, FormulaKind::X}) {
        for (const Permutation& sigma : Permutation::all()) {
          Classification c = classify(build(f, k, l, sigma), entry.coords);
          if (c.kind == Kind::NotLR) return WitnessRecord{entry.name, f, sigma.word(), k, l, c.witnesses.front()};
        }
      }
    }
  }
  return std::nullopt;
}

SurveyReport survey_prop3(const Prop3Bounds& bounds) {
  auto start = Clock::now();
  const std::vector<std::string> regular_names = {"Y:2", "Y:6", "Y:32"};
  std::vector<CatalogEntry> regular;
  std::vector<CatalogEntry> others;
  for (const CatalogEntry& e : enumerate(Region::nonphysical)) {
    bool is_regular = std::find(regular_names.begin(), regular_names.end(), e.name) != regular_names.end();
    (is_regular ? regular : others).push_back(e);
  }

  SurveyReport report = sweep("prop3", regular, {FormulaKind::Z, FormulaKind::X}, bounds.regular_kmax,
                              bounds.regular_lmax);
  report.failures.clear();
  for (const Verdict& v : report.verdicts) {
    if (v.kind != Kind::Regular && v.kind != Kind::RegularZero) {
      report.failures.push_back(std::string(kind_string(v.kind)) + " at " + v.point + " " +
                                std::string(formula_string(v.formula)) + "(" + std::to_string(v.k) + "," +
                                std::to_string(v.l) + ") perm " + v.perm);
    }
  }

  std::vector<std::optional<WitnessRecord>> found(others.size());
  parallel_for(others.size(), [&](std::size_t i) {
    found[i] = find_witness(others[i], bounds.witness_kmax, bounds.witness_lmax);
  });
  for (std::size_t i = 0; i < others.size(); ++i) {
    if (found[i]) {
      report.witnesses.push_back(*found[i]);
    } else {
      report.failures.push_back("no NotLR witness within k<=" + std::to_string(bounds.witness_kmax) +
                                ", l<=" + std::to_string(bounds.witness_lmax) + " at " + others[i].name);
    }
  }
  report.scope = {{"formulas", {"Z", "X"}},
                  {"regular_points", point_names(regular)},
                  {"witness_points", point_names(others)},
                  {"regular_kmax", bounds.regular_kmax},
                  {"regular_lmax", bounds.regular_lmax},
                  {"witness_kmax", bounds.witness_kmax},
                  {"witness_lmax", bounds.witness_lmax},
                  {"permutations", 6}};
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

SurveyReport integrality_check(const std::vector<CatalogEntry>& points, int kmax, int lmax) {
  auto start = Clock::now();
  SurveyReport report;
  report.name = "integrality";
  FormulaCache cache(kmax, lmax, true);
  struct Part {
    std::vector<Verdict> verdicts;
    std::vector<NonInteger> nonintegers;
    std::vector<std::string> notes;
  };
  std::vector<Part> parts(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    const CatalogEntry& entry = points[i];
    for (FormulaKind f : {FormulaKind::Z, FormulaKind::X}) {
      for (std::size_t s = 0; s < 6; ++s) {
        for (int k = 0; k <= kmax; ++k) {
          for (int l = 0; l <= lmax; ++l) {
            const SinhProduct& e = cache.get(f, k, l, s);
            std::string perm = Permutation::all()[s].word();
            Classification c = classify(e, entry.coords);
            parts[i].verdicts.push_back(Verdict{entry.name, f, perm, k, l, c.kind, c.n, c.d});
            if (c.d > 0) {
              parts[i].notes.push_back("skipped singular " + entry.name + " " + std::string(formula_string(f)) +
                                       "(" + std::to_string(k) + "," + std::to_string(l) + ") perm " + perm);
              continue;
            }
            Rational value = e.reduced().instantiate(entry.coords).classical_limit();
            if (!is_integer(value)) parts[i].nonintegers.push_back(NonInteger{entry.name, f, perm, k, l, value});
          }
        }
      }
    }
  });
  for (Part& part : parts) {
    for (auto& v : part.verdicts) report.verdicts.push_back(std::move(v));
    for (auto& n : part.nonintegers) report.nonintegers.push_back(std::move(n));
    for (auto& n : part.notes) report.notes.push_back(std::move(n));
  }
  report.scope = {{"formulas", {"Z", "X"}}, {"points", point_names(points)}, {"kmax", kmax}, {"lmax", lmax},
                  {"permutations", 6}};
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

SurveyReport integrality_survey(int kmax, int lmax) {
  auto start = Clock::now();
  SurveyReport report = integrality_check({lookup("Y:2"), lookup("Y:32")}, kmax, lmax);
  for (const NonInteger& n : report.nonintegers) {
    report.failures.push_back("non-integer " + to_string(n.value) + " at " + n.point + " " +
                              std::string(formula_string(n.formula)) + "(" + std::to_string(n.k) + "," +
                              std::to_string(n.l) + ") perm " + n.perm);
  }
  CatalogEntry control{"control", PPoint::from_ints(1, 2, 9), std::nullopt, std::nullopt, {}, Region::nonphysical};
  SurveyReport generic = integrality_check({control}, kmax, lmax);
  report.notes.push_back("control point (1,2,9): " + std::to_string(generic.nonintegers.size()) +
                         " non-integer values");
  if (generic.nonintegers.empty()) report.failures.push_back("control point (1,2,9) produced only integers");
  report.scope["control"] = "1,2,9";
  report.scope["control_nonintegers"] = generic.nonintegers.size();
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

SurveyReport closed_form_crosscheck(long Nmax, int kmax, int lmax) {
  auto start = Clock::now();
  struct Task {
    Family family;
    std::string case_id;
    int k;
    int l;
    long N;
    bool first_rank;
  };
  std::vector<Task> tasks;
  for (Family family : {Family::A, Family::B, Family::C, Family::D}) {
    for (const std::string& id : case_ids(family)) {
      for (int k = 0; k <= kmax; ++k) {
        for (int l = 0; l <= lmax; ++l) {
          std::string covering;
          try {
            covering = case_for(family, k, l);
          } catch (const OutOfCaseRange&) {
            continue;
          }
          if (covering != id) continue;
          long first = family_setup(family).min_rank;
          for (long N = first; N <= Nmax; ++N) tasks.push_back(Task{family, id, k, l, N, N == first});
        }
      }
    }
  }

  struct Outcome {
    CrossCheck check;
    Verdict verdict;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
  };
  std::vector<Outcome> outcomes(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    const Task& task = tasks[i];
    const FamilySetup& setup = family_setup(task.family);
    Outcome& out = outcomes[i];
    CrossCheck& cc = out.check;
    cc.family = std::string(family_string(task.family));
    cc.case_id = task.case_id;
    cc.k = task.k;
    cc.l = task.l;
    cc.N = task.N;
    std::string where = task.case_id + " k=" + std::to_string(task.k) + " l=" + std::to_string(task.l) +
                        " N=" + std::to_string(task.N);

    PPoint p = family_point(task.family, task.N);
    SinhProduct general = build_Z(task.k, task.l, setup.sigma);
    Vec3 v = line_direction(setup.line, p);
    Classification c = classify(general, p);
    cc.general_kind = c.kind;
    out.verdict = Verdict{cc.family + ":" + std::to_string(task.N), FormulaKind::Z, setup.sigma.word(),
                          task.k, task.l, c.kind, c.n, c.d};
    if (c.kind == Kind::NotLR) {
      out.failures.push_back("general formula NotLR at " + where);
      return;
    }
    LeadingTerm lead;
    try {
      lead = leading_term(general, p, v);
    } catch (const IrregularLine& e) {
      out.failures.push_back("general formula irregular along the line at " + where + ": " + e.what());
      return;
    }
    cc.general_order = lead.order;
    if (lead.order + static_cast<int>(lead.line_factors.size()) != c.n - c.d || lead.residual.zero_numerator_count() + lead.residual.zero_denominator_count() > 0) {
      out.failures.push_back("leading term inconsistent with classification at " + where);
    }
    if (task.first_rank && lead.line_factors.empty()) {
      double slope = log_slope(general, p, v, 0.7);
      if (std::fabs(slope - lead.order) > 0.05) {
        out.failures.push_back("numeric order " + std::to_string(slope) + " differs from " +
                               std::to_string(lead.order) + " at " + where);
      }
    }

    ClosedForm closed = closed_form(task.family, task.case_id, task.k, task.l, task.N);
    InstantiatedProduct shown = closed.nonzero_part();
    cc.display_order = shown.zero_numerator_count();
    cc.line_factors = static_cast<int>(lead.line_factors.size());
    if (closed.flags != cc.line_factors) {
      cc.outcome = "line_factors";
      return;
    }
    for (const LinForm& form : lead.line_factors) {
      if (!(form == setup.flag_form->canonical().form)) {
        out.notes.push_back("line factor " + form.to_string() + " differs from the displayed token at " + where);
      }
    }
    if (shown.zero_denominator_count() > 0) {
      cc.outcome = "display_singular";
      return;
    }
    if (cc.display_order != lead.order) {
      cc.outcome = "order";
      return;
    }
    if (shown.zero_numerator_count() > 0) {
      cc.outcome = "order_only";
      return;
    }
    std::mt19937_64 rng(0x5eedULL + i);
    std::uniform_real_distribution<double> sample(0.2, 1.5);
    std::array<double, 5> xs;
    std::array<double, 5> gs;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      xs[j] = sample(rng);
      gs[j] = lead.prefactor.get_d() * lead.residual.eval_numeric(xs[j]);
    }
    auto compare = [&](const InstantiatedProduct& h) {
      bool equal = true;
      bool opposite = true;
      for (std::size_t j = 0; j < xs.size(); ++j) {
        double value = h.eval_numeric(xs[j]);
        equal = equal && close_enough(gs[j], value, 1e-9);
        opposite = opposite && close_enough(gs[j], -value, 1e-9);
      }
      return equal ? "match" : (opposite ? "sign" : "value");
    };
    cc.general_value = gs[0];
    cc.closed_value = shown.eval_numeric(xs[0]);
    cc.outcome = compare(shown);
    if (cc.outcome == "match") return;
    for (const std::string& other : case_ids(task.family)) {
      if (other == task.case_id) continue;
      InstantiatedProduct alt = display_reading(task.family, other, task.k, task.l, task.N).nonzero_part();
      if (alt.zero_numerator_count() + alt.zero_denominator_count() > 0) continue;
      if (std::string_view(compare(alt)) == "match") {
        cc.reading = other;
        break;
      }
    }
  });

  SurveyReport report;
  report.name = "closed_forms";
  std::map<std::string, std::map<std::string, int>> tally;
  for (Outcome& o : outcomes) {
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
    for (auto& n : o.notes) report.notes.push_back(std::move(n));
    if (!o.check.outcome.empty()) tally[o.check.case_id][o.check.outcome] += 1;
    report.verdicts.push_back(std::move(o.verdict));
    report.crosschecks.push_back(std::move(o.check));
  }
  for (const auto& [id, counts] : tally) {
    std::string line = id + ":";
    for (const auto& [outcome, n] : counts) line += " " + outcome + "=" + std::to_string(n);
    report.notes.push_back(line);
  }
  report.scope = {{"families", {"A", "B", "C", "D"}}, {"nmax", Nmax}, {"kmax", kmax}, {"lmax", lmax}};
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace vogel
