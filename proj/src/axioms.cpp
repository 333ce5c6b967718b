#include "mnat/axioms.hpp"

#include <algorithm>
#include <thread>
#include <tuple>

#include "mnat/errors.hpp"

namespace mnat {

const AxiomViolation& AxiomReport::first_violation() const {
  if (violations.empty()) {
    throw Error("report for '" + axiom + "' has no violation");
  }
  return violations.front();
}

ExchangeOutcome evaluate_exchange(const EvalOracle& f, const LatticePoint& x,
                                  const LatticePoint& y, int i, int j) {
  ExchangeOutcome out;
  out.i = i;
  out.j = j;
  out.f_x = f.eval(x);
  out.f_y = f.eval(y);
  out.f_x_step = f.eval(exchange_step(x, i, j));
  out.f_y_step = f.eval(exchange_step(y, j, i));
  out.cond_x_improves = out.f_x_step < out.f_x;
  out.cond_y_improves = out.f_y_step < out.f_y;
  out.cond_both_equal = out.f_x_step == out.f_x && out.f_y_step == out.f_y;
  out.inequality_holds = out.f_x + out.f_y >= out.f_x_step + out.f_y_step;
  return out;
}

namespace {

enum class JPool { kWithNull, kSuppNegOnly };
enum class Requirement { kInequality, kDisjunction };
// Which ordered pairs (x, y) the quantifier ranges over, by comparing
// coordinate sums.
enum class PairFilter { kAll, kSumGreater, kSumLessEq, kSumLess };

struct ScanSpec {
  std::string axiom;
  JPool pool = JPool::kWithNull;
  Requirement requirement = Requirement::kInequality;
  PairFilter filter = PairFilter::kAll;
  bool null_i = false;  // i pinned to the null index (no loop over supp+)
};

bool satisfied(const ExchangeOutcome& o, Requirement req) {
  if (req == Requirement::kInequality) return o.inequality_holds;
  return o.cond_x_improves || o.cond_y_improves || o.cond_both_equal;
}

bool pair_admitted(const LatticePoint& x, const LatticePoint& y,
                   PairFilter filter) {
  switch (filter) {
    case PairFilter::kAll:
      return true;
    case PairFilter::kSumGreater:
      return x.coord_sum() > y.coord_sum();
    case PairFilter::kSumLessEq:
      return x.coord_sum() <= y.coord_sum();
    case PairFilter::kSumLess:
      return x.coord_sum() < y.coord_sum();
  }
  return true;
}

struct KeyedViolation {
  std::tuple<size_t, size_t, int> key;  // (x index, y index, i)
  AxiomViolation violation;
};

// Scans x indices congruent to stripe mod stride, in ascending order.
// Stops at the first violation unless exhaustive.
void scan_stripe(const TabulatedFunction& f,
                 const std::vector<LatticePoint>& dom, const ScanSpec& spec,
                 bool exhaustive, size_t stripe, size_t stride,
                 std::vector<KeyedViolation>* found) {
  for (size_t xi = stripe; xi < dom.size(); xi += stride) {
    const LatticePoint& x = dom[xi];
    for (size_t yi = 0; yi < dom.size(); ++yi) {
      const LatticePoint& y = dom[yi];
      if (!pair_admitted(x, y, spec.filter)) continue;
      LatticePoint d = x - y;
      std::vector<int> sneg = supp_neg(d);

      std::vector<int> i_range;
      if (spec.null_i) {
        if (xi == yi) continue;
        i_range.push_back(kNullIndex);
      } else {
        i_range = supp_pos(d);
      }

      for (int i : i_range) {
        bool ok = false;
        std::vector<ExchangeOutcome> outcomes;
        auto try_candidate = [&](int j) {
          ExchangeOutcome o = evaluate_exchange(f, x, y, i, j);
          outcomes.push_back(o);
          if (satisfied(o, spec.requirement)) ok = true;
          return ok;
        };
        for (int j : sneg) {
          if (try_candidate(j)) break;
        }
        if (!ok && spec.pool == JPool::kWithNull) {
          try_candidate(kNullIndex);
        }
        if (!ok) {
          found->push_back({{xi, yi, i}, {x, y, i, std::move(outcomes)}});
          if (!exhaustive) return;
        }
      }
    }
  }
}

AxiomReport run_scan(const TabulatedFunction& f, const ScanSpec& spec,
                     const CheckOptions& options) {
  if (f.domain_empty()) {
    throw EmptyDomainError("axiom check '" + spec.axiom +
                           "' on an empty domain");
  }
  std::vector<LatticePoint> dom = f.domain();
  int threads = std::max(1, options.threads);
  threads = static_cast<int>(
      std::min<size_t>(static_cast<size_t>(threads), dom.size()));

  std::vector<std::vector<KeyedViolation>> per_thread(
      static_cast<size_t>(threads));
  if (threads == 1) {
    scan_stripe(f, dom, spec, options.exhaustive, 0, 1, &per_thread[0]);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back(scan_stripe, std::cref(f), std::cref(dom),
                        std::cref(spec), options.exhaustive,
                        static_cast<size_t>(t), static_cast<size_t>(threads),
                        &per_thread[static_cast<size_t>(t)]);
    }
    for (auto& th : pool) th.join();
  }

  std::vector<KeyedViolation> all;
  for (auto& chunk : per_thread) {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(all));
  }
  std::sort(all.begin(), all.end(),
            [](const KeyedViolation& a, const KeyedViolation& b) {
              return a.key < b.key;
            });

  AxiomReport report;
  report.axiom = spec.axiom;
  report.pass = all.empty();
  if (!all.empty()) {
    if (options.exhaustive) {
      for (auto& kv : all) report.violations.push_back(std::move(kv.violation));
    } else {
      report.violations.push_back(std::move(all.front().violation));
    }
  }
  return report;
}

}  // namespace

AxiomReport check_mnat_exc(const TabulatedFunction& f,
                           const CheckOptions& options) {
  return run_scan(
      f, {"mnat-exc", JPool::kWithNull, Requirement::kInequality}, options);
}

AxiomReport check_ssqm_nat(const TabulatedFunction& f,
                           const CheckOptions& options) {
  return run_scan(
      f, {"ssqm-nat", JPool::kWithNull, Requirement::kDisjunction}, options);
}

AxiomReport check_m_exc(const TabulatedFunction& f,
                        const CheckOptions& options) {
  return run_scan(
      f, {"m-exc", JPool::kSuppNegOnly, Requirement::kInequality}, options);
}

AxiomReport check_ssqm(const TabulatedFunction& f,
                       const CheckOptions& options) {
  return run_scan(
      f, {"ssqm", JPool::kSuppNegOnly, Requirement::kDisjunction}, options);
}

ProjectedAxiomReport check_ssqm_nat_prj(const TabulatedFunction& f,
                                        const CheckOptions& options) {
  ProjectedAxiomReport r;
  r.part_i = run_scan(f,
                      {"ssqm-nat-prj-i", JPool::kWithNull,
                       Requirement::kDisjunction, PairFilter::kSumGreater},
                      options);
  r.part_ii = run_scan(f,
                       {"ssqm-nat-prj-ii", JPool::kSuppNegOnly,
                        Requirement::kDisjunction, PairFilter::kSumLessEq},
                       options);
  // x(N) < y(N) forces supp-(x - y) to be nonempty, so the candidate
  // list below is never vacuously empty.
  r.part_iii = run_scan(f,
                        {"ssqm-nat-prj-iii", JPool::kSuppNegOnly,
                         Requirement::kDisjunction, PairFilter::kSumLess,
                         /*null_i=*/true},
                        options);
  return r;
}

AxiomReport check_mnat_set(const std::vector<LatticePoint>& points,
                           const CheckOptions& options) {
  if (points.empty()) {
    throw EmptyDomainError("set exchange axiom on an empty set");
  }
  // Both exchanged points stay in S iff the 0/+inf indicator of S
  // satisfies the exchange inequality.
  TabulatedFunction indicator(points.front().dim());
  for (const auto& p : points) {
    if (!indicator.in_domain(p)) indicator.insert(p, Rational(0));
  }
  AxiomReport report = run_scan(
      indicator, {"mnat-set", JPool::kWithNull, Requirement::kInequality},
      options);
  return report;
}

AxiomReport check_descent_lemma(const TabulatedFunction& f,
                                const CheckOptions& options) {
  if (f.domain_empty()) {
    throw EmptyDomainError("descent lemma check on an empty domain");
  }
  AxiomReport report;
  report.axiom = "descent-lemma";
  std::vector<LatticePoint> dom = f.domain();
  for (const auto& x : dom) {
    for (const auto& y : dom) {
      if (!(f.eval(y) < f.eval(x))) continue;
      LatticePoint d = x - y;
      std::vector<int> is = supp_pos(d);
      std::vector<int> js = supp_neg(d);
      is.push_back(kNullIndex);
      js.push_back(kNullIndex);
      bool ok = false;
      std::vector<ExchangeOutcome> outcomes;
      for (int i : is) {
        for (int j : js) {
          ExchangeOutcome o = evaluate_exchange(f, x, y, i, j);
          outcomes.push_back(o);
          if (o.cond_x_improves) {
            ok = true;
            break;
          }
        }
        if (ok) break;
      }
      if (!ok) {
        report.violations.push_back({x, y, kNullIndex, std::move(outcomes)});
        if (!options.exhaustive) {
          report.pass = false;
          return report;
        }
      }
    }
  }
  report.pass = report.violations.empty();
  return report;
}

AxiomReport check_axiom(const TabulatedFunction& f, const std::string& axiom,
                        const CheckOptions& options) {
  if (axiom == "ssqm-nat") return check_ssqm_nat(f, options);
  if (axiom == "mnat-exc") return check_mnat_exc(f, options);
  if (axiom == "m-exc") return check_m_exc(f, options);
  if (axiom == "ssqm") return check_ssqm(f, options);
  if (axiom == "mnat-set") return check_mnat_set(f.domain(), options);
  if (axiom == "descent-lemma") return check_descent_lemma(f, options);
  throw Error("unknown axiom '" + axiom + "'");
}

std::vector<std::string> axiom_names() {
  return {"ssqm-nat", "mnat-exc", "m-exc",
          "ssqm",     "mnat-set", "descent-lemma"};
}

}  // namespace mnat
