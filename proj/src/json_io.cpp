#include "mnat/json_io.hpp"

#include <algorithm>

#include "mnat/errors.hpp"

namespace mnat {

using nlohmann::json;

json point_json(const LatticePoint& p) {
  json a = json::array();
  for (auto c : p.coords()) a.push_back(c);
  return a;
}

LatticePoint point_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("point must be a JSON array");
  std::vector<std::int64_t> c;
  c.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      throw ParseError("point coordinates must be integers");
    }
    c.push_back(v.get<std::int64_t>());
  }
  return LatticePoint(std::move(c));
}

json value_json(const Rational& v) {
  if (v.is_integer()) return v.num();
  return v.to_string();
}

json value_json(const ExtendedValue& v) {
  if (!v.is_finite()) return "inf";
  return value_json(v.finite_value());
}

ExtendedValue value_from_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf") return ExtendedValue::infinity();
    return ExtendedValue(Rational::parse(s));
  }
  if (j.is_number_integer()) {
    return ExtendedValue(Rational(j.get<std::int64_t>()));
  }
  throw ParseError("expected \"inf\", integer, or \"p/q\" value, got " +
                   j.dump());
}

json halfspace_json(const Halfspace& h) {
  std::string kind;
  switch (h.kind) {
    case Halfspace::Kind::kCoordLe:
      kind = "coord-le";
      break;
    case Halfspace::Kind::kCoordGe:
      kind = "coord-ge";
      break;
    case Halfspace::Kind::kSumLe:
      kind = "sum-le";
      break;
    case Halfspace::Kind::kSumGe:
      kind = "sum-ge";
      break;
  }
  return {{"kind", kind}, {"index", h.index}, {"bound", h.bound}};
}

namespace {

json outcome_json(const ExchangeOutcome& o) {
  return {{"i", o.i},
          {"j", o.j},
          {"f_x", value_json(o.f_x)},
          {"f_y", value_json(o.f_y)},
          {"f_x_step", value_json(o.f_x_step)},
          {"f_y_step", value_json(o.f_y_step)},
          {"cond_x_improves", o.cond_x_improves},
          {"cond_y_improves", o.cond_y_improves},
          {"cond_both_equal", o.cond_both_equal},
          {"inequality_holds", o.inequality_holds}};
}

json violation_json(const AxiomViolation& v) {
  json candidates = json::array();
  for (const auto& o : v.candidates) candidates.push_back(outcome_json(o));
  return {{"x", point_json(v.x)},
          {"y", point_json(v.y)},
          {"i", v.i},
          {"candidates", candidates}};
}

}  // namespace

json report_json(const AxiomReport& r) {
  json out{{"axiom", r.axiom}, {"pass", r.pass}};
  if (!r.pass) {
    out["violation"] = violation_json(r.violations.front());
    if (r.violations.size() > 1) {
      json all = json::array();
      for (const auto& v : r.violations) all.push_back(violation_json(v));
      out["violations"] = all;
    }
  }
  return out;
}

json report_json(const ProjectedAxiomReport& r) {
  return {{"axiom", "ssqm-nat-prj"},
          {"pass", r.pass()},
          {"parts",
           {{"i", report_json(r.part_i)},
            {"ii", report_json(r.part_ii)},
            {"iii", report_json(r.part_iii)}}}};
}

json trace_json(const DescentTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"x", point_json(s.x)},
                     {"i", s.i},
                     {"j", s.j},
                     {"value", value_json(s.value)}});
  }
  return {{"start", point_json(t.start)},
          {"steps", steps},
          {"minimizer", point_json(t.minimizer)},
          {"iterations", t.iterations}};
}

json reduction_json(const ReductionResult& r) {
  json log = json::array();
  for (const auto& it : r.state.iteration_log) {
    json hs = json::array();
    for (const auto& h : it.cut.halfspaces) hs.push_back(halfspace_json(h));
    log.push_back({{"peel_point", point_json(it.peel_point)},
                   {"cut",
                    {{"at", point_json(it.cut.at)},
                     {"i", it.cut.i},
                     {"j", it.cut.j},
                     {"halfspaces", hs}}},
                   {"type_index", it.type_index}});
  }
  json candidates = json::array();
  for (const auto& p : r.state.candidate_set) candidates.push_back(point_json(p));
  return {{"minimizer", point_json(r.minimizer)},
          {"state",
           {{"box",
             {{"lower", point_json(r.state.box.lower())},
              {"upper", point_json(r.state.box.upper())}}},
            {"candidate_set", candidates},
            {"iteration_log", log}}}};
}

json snapshot_json(const GeodesicSnapshot& s) {
  json m = json::array();
  for (const auto& p : s.M_set) m.push_back(point_json(p));
  json mt = json::array();
  for (const auto& p : s.M_tilde_set) mt.push_back(point_json(p));
  return {{"x", point_json(s.x)},
          {"mu", s.mu},
          {"M_set", m},
          {"mu_tilde", s.mu_tilde},
          {"M_tilde_set", mt}};
}

json verdict_json(const TheoremVerdict& v) {
  json out{{"theorem", v.theorem},
           {"outcome", outcome_name(v.outcome)},
           {"holds", v.outcome == VerdictOutcome::kHolds},
           {"inputs", v.inputs}};
  if (v.witness) out["witness"] = point_json(*v.witness);
  if (v.outcome == VerdictOutcome::kFails) {
    out["counter_context"] = v.counter_context;
  }
  return out;
}

json audit_json(const AuditReport& r) {
  json items = json::array();
  for (const auto& item : r.items) {
    items.push_back({{"entry", item.entry},
                     {"check", item.check},
                     {"expected", item.expected},
                     {"actual", item.actual},
                     {"match", item.match}});
  }
  return {{"ok", r.ok}, {"items", items}};
}

namespace {

struct ReplaySpec {
  bool with_null = true;       // candidate pool includes the null index
  bool inequality = true;      // requirement: exchange inequality vs
                               // semi-strict disjunction
  bool indicator = false;      // evaluate on the 0/+inf domain indicator
  int sum_filter = 0;          // 0 none, 1 x>y, 2 x<=y, 3 x<y (coord sums)
  bool null_i = false;
};

ReplaySpec replay_spec(const std::string& axiom) {
  if (axiom == "mnat-exc") return {true, true, false, 0, false};
  if (axiom == "ssqm-nat") return {true, false, false, 0, false};
  if (axiom == "m-exc") return {false, true, false, 0, false};
  if (axiom == "ssqm") return {false, false, false, 0, false};
  if (axiom == "mnat-set") return {true, true, true, 0, false};
  if (axiom == "ssqm-nat-prj-i") return {true, false, false, 1, false};
  if (axiom == "ssqm-nat-prj-ii") return {false, false, false, 2, false};
  if (axiom == "ssqm-nat-prj-iii") return {false, false, false, 3, true};
  throw Error("cannot replay axiom '" + axiom + "'");
}

bool fail(std::string* out, const std::string& message) {
  if (out != nullptr) *out = message;
  return false;
}

bool same_value(const ExtendedValue& a, const json& b) {
  return value_json(a) == b;
}

bool replay_one_violation(const TabulatedFunction& f, const std::string& axiom,
                          const json& violation, std::string* mismatch) {
  LatticePoint x = point_from_json(violation.at("x"));
  LatticePoint y = point_from_json(violation.at("y"));
  int vi = violation.at("i").get<int>();
  const json& candidates = violation.at("candidates");

  const bool descent = (axiom == "descent-lemma");
  ReplaySpec spec = descent ? ReplaySpec{} : replay_spec(axiom);

  const TabulatedFunction* eval_fn = &f;
  TabulatedFunction indicator(f.dim());
  if (!descent && spec.indicator) {
    for (const auto& p : f.domain()) indicator.insert(p, Rational(0));
    eval_fn = &indicator;
  }

  if (!eval_fn->in_domain(x) || !eval_fn->in_domain(y)) {
    return fail(mismatch, "violation points are not in the domain");
  }

  LatticePoint d = x - y;
  std::vector<int> sneg = supp_neg(d);
  std::vector<int> spos = supp_pos(d);

  // Rebuild the expected candidate list.
  std::vector<std::pair<int, int>> expected;  // (i, j)
  if (descent) {
    if (!(eval_fn->eval(y) < eval_fn->eval(x))) {
      return fail(mismatch, "descent pair does not satisfy f(x) > f(y)");
    }
    std::vector<int> is = spos;
    std::vector<int> js = sneg;
    is.push_back(kNullIndex);
    js.push_back(kNullIndex);
    for (int i : is) {
      for (int j : js) expected.emplace_back(i, j);
    }
  } else {
    switch (spec.sum_filter) {
      case 1:
        if (!(x.coord_sum() > y.coord_sum())) {
          return fail(mismatch, "pair violates the coordinate-sum filter");
        }
        break;
      case 2:
        if (!(x.coord_sum() <= y.coord_sum())) {
          return fail(mismatch, "pair violates the coordinate-sum filter");
        }
        break;
      case 3:
        if (!(x.coord_sum() < y.coord_sum())) {
          return fail(mismatch, "pair violates the coordinate-sum filter");
        }
        break;
      default:
        break;
    }
    if (spec.null_i) {
      if (vi != kNullIndex) {
        return fail(mismatch, "violation index must be the null index");
      }
    } else if (std::find(spos.begin(), spos.end(), vi) == spos.end()) {
      return fail(mismatch, "violation index is not in supp+(x - y)");
    }
    for (int j : sneg) expected.emplace_back(vi, j);
    if (spec.with_null) expected.emplace_back(vi, kNullIndex);
  }

  if (candidates.size() != expected.size()) {
    return fail(mismatch, "candidate list has " +
                              std::to_string(candidates.size()) +
                              " entries, expected " +
                              std::to_string(expected.size()));
  }
  for (size_t k = 0; k < expected.size(); ++k) {
    const json& c = candidates[k];
    auto [ci, cj] = expected[k];
    if (c.at("i").get<int>() != ci || c.at("j").get<int>() != cj) {
      return fail(mismatch, "candidate " + std::to_string(k) +
                                " has unexpected indices");
    }
    ExchangeOutcome o = evaluate_exchange(*eval_fn, x, y, ci, cj);
    if (!same_value(o.f_x, c.at("f_x")) || !same_value(o.f_y, c.at("f_y")) ||
        !same_value(o.f_x_step, c.at("f_x_step")) ||
        !same_value(o.f_y_step, c.at("f_y_step"))) {
      return fail(mismatch, "candidate " + std::to_string(k) +
                                " values do not replay");
    }
    if (o.cond_x_improves != c.at("cond_x_improves").get<bool>() ||
        o.cond_y_improves != c.at("cond_y_improves").get<bool>() ||
        o.cond_both_equal != c.at("cond_both_equal").get<bool>() ||
        o.inequality_holds != c.at("inequality_holds").get<bool>()) {
      return fail(mismatch, "candidate " + std::to_string(k) +
                                " comparisons do not replay");
    }
    bool satisfied;
    if (descent) {
      satisfied = o.cond_x_improves;
    } else if (spec.inequality) {
      satisfied = o.inequality_holds;
    } else {
      satisfied =
          o.cond_x_improves || o.cond_y_improves || o.cond_both_equal;
    }
    if (satisfied) {
      return fail(mismatch, "candidate " + std::to_string(k) +
                                " satisfies the axiom; not a violation");
    }
  }
  return true;
}

}  // namespace

bool replay_axiom_report_json(const TabulatedFunction& f, const json& report,
                              std::string* mismatch) {
  if (report.contains("parts")) {
    for (const auto& key : {"i", "ii", "iii"}) {
      if (!replay_axiom_report_json(f, report.at("parts").at(key),
                                    mismatch)) {
        return false;
      }
    }
    return true;
  }
  std::string axiom = report.at("axiom").get<std::string>();
  if (report.at("pass").get<bool>()) return true;
  json violations = json::array();
  if (report.contains("violations")) {
    violations = report.at("violations");
  } else {
    violations.push_back(report.at("violation"));
  }
  for (const auto& v : violations) {
    if (!replay_one_violation(f, axiom, v, mismatch)) return false;
  }
  return true;
}

bool replay_verdict_json(const TabulatedFunction& f, const json& verdict,
                         std::string* mismatch) {
  std::string theorem = verdict.at("theorem").get<std::string>();
  const json& inputs = verdict.at("inputs");
  TheoremVerdict redo;
  if (theorem == "min-cut-weak" || theorem == "min-cut-strong" ||
      theorem == "statement-A" || theorem == "geodesic") {
    LatticePoint x = point_from_json(inputs.at("x"));
    int i = inputs.at("i").get<int>();
    int j = inputs.at("j").get<int>();
    if (theorem == "min-cut-weak") {
      redo = verify_min_cut_weak(f, x, i, j);
    } else if (theorem == "min-cut-strong") {
      redo = verify_min_cut_strong(f, x, i, j);
    } else if (theorem == "statement-A") {
      redo = verify_statement_a(f, x, i, j);
    } else {
      redo = verify_geodesic(f, x, i, j);
    }
  } else if (theorem == "min-cut-directional") {
    redo = verify_min_cut_directional(
        f, point_from_json(inputs.at("x")),
        inputs.at("variant").get<std::string>(), inputs.at("fixed").get<int>());
  } else if (theorem == "proximity") {
    ProximityRegime regime = inputs.at("regime").get<std::string>() == "m"
                                 ? ProximityRegime::kM
                                 : ProximityRegime::kMnat;
    redo = verify_proximity(f, inputs.at("alpha").get<std::int64_t>(), regime);
  } else if (theorem == "local-global") {
    redo = verify_local_global_m(f, point_from_json(inputs.at("x")));
  } else if (theorem == "projection-bridge") {
    std::string relation = inputs.at("relation").get<std::string>();
    for (const auto& v : verify_projection_bridge(f)) {
      if (v.inputs.at("relation") == relation) {
        redo = v;
        break;
      }
    }
    if (redo.theorem.empty()) {
      return fail(mismatch, "unknown bridge relation '" + relation + "'");
    }
  } else {
    return fail(mismatch, "cannot replay theorem '" + theorem + "'");
  }
  json redone = verdict_json(redo);
  if (redone != verdict) {
    return fail(mismatch, "verdict does not replay; recomputed: " +
                              redone.dump());
  }
  return true;
}

}  // namespace mnat
