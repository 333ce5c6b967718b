#include "mnat/minimize.hpp"

#include <algorithm>
#include <cassert>

#include "mnat/analysis.hpp"
#include "mnat/errors.hpp"
#include "mnat/json_io.hpp"

namespace mnat {

namespace {

Rational require_finite_at(const EvalOracle& f, const LatticePoint& x,
                           const char* who) {
  ExtendedValue v = f.eval(x);
  if (!v.is_finite()) {
    throw NotInDomainError(std::string(who) + ": point " + x.to_string() +
                           " is outside the effective domain");
  }
  return v.finite_value();
}

bool strict_enabled(MinimizeOptions::Mode mode, std::size_t table_size) {
  switch (mode) {
    case MinimizeOptions::Mode::kStrict:
      return true;
    case MinimizeOptions::Mode::kFast:
      return false;
    case MinimizeOptions::Mode::kAuto:
      return table_size <= 10'000;
  }
  return true;
}

void require_ssqm_nat(const TabulatedFunction& f) {
  AxiomReport report = check_ssqm_nat(f);
  if (!report.pass) {
    throw PreconditionError("strict mode: function fails ssqm-nat",
                            report_json(report).dump());
  }
}

std::int64_t floor_div(__int128 a, __int128 b) {
  __int128 q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return static_cast<std::int64_t>(q);
}

std::int64_t ceil_div(__int128 a, __int128 b) { return -floor_div(-a, b); }

}  // namespace

bool is_local_min(const EvalOracle& f, const LatticePoint& x) {
  Rational fx = require_finite_at(f, x, "is_local_min");
  const int n = x.dim();
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      if (f.eval(exchange_step(x, i, j)) < ExtendedValue(fx)) return false;
    }
  }
  return true;
}

std::optional<SteepestChoice> steepest_direction(const EvalOracle& f,
                                                 const LatticePoint& x,
                                                 const IntBox* bounds) {
  ExtendedValue fx(require_finite_at(f, x, "steepest_direction"));
  const int n = x.dim();
  std::optional<SteepestChoice> best;
  int best_rank = 0;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;  // the step is the identity, never improving
      LatticePoint target = exchange_step(x, i, j);
      if (bounds != nullptr && !bounds->contains(target)) continue;
      ExtendedValue v = f.eval(target);
      if (!(v < fx)) continue;
      int rank = (i != kNullIndex && j != kNullIndex) ? 0 : 1;
      bool better;
      if (!best) {
        better = true;
      } else if (v != best->value) {
        better = v < best->value;
      } else {
        better = std::tuple(rank, i, j) <
                 std::tuple(best_rank, best->i, best->j);
      }
      if (better) {
        best = SteepestChoice{i, j, v};
        best_rank = rank;
      }
    }
  }
  return best;
}

namespace {

DescentTrace run_basic(const EvalOracle& f, const LatticePoint& x0,
                       std::int64_t max_iterations) {
  require_finite_at(f, x0, "basic_steepest_descent");
  DescentTrace trace;
  trace.start = x0;
  LatticePoint x = x0;
  while (auto step = steepest_direction(f, x)) {
    x = exchange_step(x, step->i, step->j);
    trace.steps.push_back(
        {x, step->i, step->j, step->value.finite_value()});
    if (static_cast<std::int64_t>(trace.steps.size()) > max_iterations) {
      throw Error("basic_steepest_descent: no local minimum within " +
                  std::to_string(max_iterations) + " iterations");
    }
  }
  trace.minimizer = x;
  trace.iterations = static_cast<std::int64_t>(trace.steps.size());
  return trace;
}

}  // namespace

DescentTrace basic_steepest_descent(const TabulatedFunction& f,
                                    const LatticePoint& x0,
                                    const MinimizeOptions& options) {
  if (f.domain_empty()) {
    throw EmptyDomainError("basic_steepest_descent on an empty domain");
  }
  if (!f.in_domain(x0)) {
    throw NotInDomainError("start point " + x0.to_string() +
                           " is outside the effective domain");
  }
  if (strict_enabled(options.mode, f.size())) require_ssqm_nat(f);
  // Values strictly decrease, so a table can sustain at most one step
  // per distinct value.
  return run_basic(f, x0, static_cast<std::int64_t>(f.size()) + 1);
}

DescentTrace basic_steepest_descent(const EvalOracle& f,
                                    const LatticePoint& x0,
                                    std::int64_t max_iterations) {
  return run_basic(f, x0, max_iterations);
}

namespace {

DescentTrace run_modified(const EvalOracle& f, const LatticePoint& x0,
                          const IntBox& box,
                          const std::vector<LatticePoint>* audit_argmin) {
  require_finite_at(f, x0, "modified_steepest_descent");
  if (!box.contains(x0)) {
    throw Error("modified_steepest_descent: start point " + x0.to_string() +
                " is outside the box " + box.to_string());
  }
  DescentTrace trace;
  trace.start = x0;
  LatticePoint x = x0;
  IntBox b = box;
  while (auto step = steepest_direction(f, x, &b)) {
    x = exchange_step(x, step->i, step->j);
    trace.steps.push_back(
        {x, step->i, step->j, step->value.finite_value()});
    if (step->i != kNullIndex) {
      b.clamp_upper(step->i, b.upper().coord(step->i) - 1);
    }
    if (step->j != kNullIndex) {
      b.clamp_lower(step->j, b.lower().coord(step->j) + 1);
    }
    if (audit_argmin != nullptr) {
      bool kept = std::any_of(audit_argmin->begin(), audit_argmin->end(),
                              [&](const LatticePoint& m) {
                                return b.contains(m);
                              });
      if (!kept) {
        throw DiagnosticError(
            "modified_steepest_descent: tightened box " + b.to_string() +
            " lost every minimizer after the step at " + x.to_string());
      }
    }
  }
  trace.minimizer = x;
  trace.iterations = static_cast<std::int64_t>(trace.steps.size());
  return trace;
}

}  // namespace

DescentTrace modified_steepest_descent(const TabulatedFunction& f,
                                       const LatticePoint& x0,
                                       const IntBox& box,
                                       const MinimizeOptions& options) {
  if (f.domain_empty()) {
    throw EmptyDomainError("modified_steepest_descent on an empty domain");
  }
  if (!f.in_domain(x0)) {
    throw NotInDomainError("start point " + x0.to_string() +
                           " is outside the effective domain");
  }
  for (const auto& [p, v] : f.table()) {
    if (!box.contains(p)) {
      throw Error("modified_steepest_descent: domain point " + p.to_string() +
                  " lies outside the box " + box.to_string());
    }
  }
  if (strict_enabled(options.mode, f.size())) require_ssqm_nat(f);
  std::vector<LatticePoint> argmin;
  if (options.audit) argmin = argmin_set(f);
  return run_modified(f, x0, box, options.audit ? &argmin : nullptr);
}

DescentTrace modified_steepest_descent(const EvalOracle& f,
                                       const LatticePoint& x0,
                                       const IntBox& box) {
  return run_modified(f, x0, box, nullptr);
}

IntBox peel(const std::vector<LatticePoint>& points) {
  IntBox bounds = coordinate_bounds(points);
  const int n = bounds.dim();
  // The combination coefficients (1 - 1/n, 1/n) are degenerate for
  // n = 1 (they swap the endpoints); bisection is the right reading.
  const std::int64_t m = std::max<std::int64_t>(n, 2);
  std::vector<std::int64_t> lo(static_cast<size_t>(n));
  std::vector<std::int64_t> hi(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    std::int64_t l = bounds.lower().coord(i);
    std::int64_t u = bounds.upper().coord(i);
    __int128 lnum = static_cast<__int128>(m - 1) * l + u;  // m * l'
    __int128 unum = static_cast<__int128>(m - 1) * u + l;  // m * u'
    std::int64_t inner_lo = ceil_div(lnum, m);
    std::int64_t inner_hi = floor_div(unum, m);
    if (inner_lo > inner_hi) {
      // Inner integer interval is empty (possible when u - l < n);
      // round outward instead. Still within [l, u].
      inner_lo = floor_div(lnum, m);
      inner_hi = ceil_div(unum, m);
    }
    lo[static_cast<size_t>(i - 1)] = inner_lo;
    hi[static_cast<size_t>(i - 1)] = inner_hi;
  }
  return IntBox(LatticePoint(std::move(lo)), LatticePoint(std::move(hi)));
}

LatticePoint find_in_peeled(const std::vector<LatticePoint>& points) {
  if (points.empty()) {
    throw EmptyDomainError("find_in_peeled on an empty point set");
  }
  IntBox box = peel(points);
  std::vector<LatticePoint> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& p : sorted) {
    if (box.contains(p)) return p;
  }
  for (int i = 1; i <= box.dim(); ++i) {
    bool any = false;
    for (const auto& p : sorted) {
      if (p.coord(i) >= box.lower().coord(i) &&
          p.coord(i) <= box.upper().coord(i)) {
        any = true;
        break;
      }
    }
    if (!any) {
      throw DiagnosticError(
          "peeled box " + box.to_string() +
          " contains no point of the set: coordinate " + std::to_string(i) +
          " has no value in [" + std::to_string(box.lower().coord(i)) + "," +
          std::to_string(box.upper().coord(i)) +
          "]; the set is not exchange-closed");
    }
  }
  throw DiagnosticError("peeled box " + box.to_string() +
                        " contains no point of the set; the set is not "
                        "exchange-closed");
}

ReductionResult domain_reduction(const TabulatedFunction& f,
                                 const MinimizeOptions& options) {
  if (f.domain_empty()) {
    throw EmptyDomainError("domain_reduction on an empty domain");
  }
  if (strict_enabled(options.mode, f.size())) {
    require_ssqm_nat(f);
    AxiomReport set_report = check_mnat_set(f.domain());
    if (!set_report.pass) {
      throw PreconditionError(
          "strict mode: effective domain fails the set exchange axiom",
          report_json(set_report).dump());
    }
  }
  std::vector<LatticePoint> argmin;
  if (options.audit) argmin = argmin_set(f);

  ReductionResult result;
  ReductionState& state = result.state;
  std::vector<LatticePoint> candidates = f.domain();
  state.box = coordinate_bounds(candidates);

  const std::int64_t guard = static_cast<std::int64_t>(f.size()) + 1;
  for (std::int64_t iter = 0;; ++iter) {
    if (iter > guard) {
      throw DiagnosticError("domain_reduction failed to converge within " +
                            std::to_string(guard) + " iterations");
    }
    LatticePoint x = find_in_peeled(candidates);
    if (is_local_min(f, x)) {
      if (options.audit && !is_minimizer(f, x)) {
        throw DiagnosticError("domain_reduction: local minimum " +
                              x.to_string() +
                              " is not global; the function is not "
                              "semi-strictly exchange-convex");
      }
      result.minimizer = x;
      break;
    }
    auto step = steepest_direction(f, x);
    assert(step.has_value());
    CutCertificate cut;
    cut.at = x;
    cut.i = step->i;
    cut.j = step->j;
    if (step->i != kNullIndex) {
      cut.halfspaces.push_back(
          Halfspace::coord_le(step->i, x.coord(step->i) - 1));
    }
    if (step->j != kNullIndex) {
      cut.halfspaces.push_back(
          Halfspace::coord_ge(step->j, x.coord(step->j) + 1));
    }
    int type_index = step->i != kNullIndex ? step->i : step->j;

    std::vector<LatticePoint> next;
    next.reserve(candidates.size());
    for (const auto& p : candidates) {
      bool keep = true;
      for (const auto& h : cut.halfspaces) {
        if (!h.contains(p)) {
          keep = false;
          break;
        }
      }
      if (keep) next.push_back(p);
    }
    for (const auto& h : cut.halfspaces) {
      if (h.kind == Halfspace::Kind::kCoordLe) {
        state.box.clamp_upper(h.index, h.bound);
      } else if (h.kind == Halfspace::Kind::kCoordGe) {
        state.box.clamp_lower(h.index, h.bound);
      }
    }
    state.iteration_log.push_back({x, cut, type_index});
    if (next.empty()) {
      throw DiagnosticError(
          "domain_reduction: cut at " + x.to_string() +
          " emptied the candidate set; preconditions are violated");
    }
    if (options.audit) {
      bool kept = std::any_of(
          argmin.begin(), argmin.end(), [&](const LatticePoint& p) {
            return std::binary_search(next.begin(), next.end(), p);
          });
      if (!kept) {
        throw DiagnosticError("domain_reduction: cut at " + x.to_string() +
                              " removed every minimizer");
      }
    }
    candidates = std::move(next);
  }
  state.candidate_set = std::move(candidates);
  return result;
}

}  // namespace mnat
