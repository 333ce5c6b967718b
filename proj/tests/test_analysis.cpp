#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "mnat/analysis.hpp"
#include "mnat/gallery.hpp"
#include "mnat/json_io.hpp"

using namespace mnat;
using namespace mnat_tests;

namespace {

bool in_set(const std::vector<LatticePoint>& set, const LatticePoint& p) {
  return std::find(set.begin(), set.end(), p) != set.end();
}

}  // namespace

TEST_CASE("argmin sets of the catalog") {
  CHECK(argmin_set(example_2_1().function) ==
        std::vector<LatticePoint>{pt({2, 0, 1}), pt({2, 1, 0})});
  CHECK(argmin_set(example_2_2().function) ==
        std::vector<LatticePoint>{pt({2, 0}), pt({2, 1})});
  for (std::int64_t k : {2, 5, 10}) {
    CHECK(argmin_set(example_2_4(k).function) ==
          std::vector<LatticePoint>{pt({0, 1, 1})});
  }
  CHECK(argmin_set(example_4_1().function) ==
        std::vector<LatticePoint>{pt({2, 0})});
  // Always identical to the naive scan.
  for (const auto& name : gallery_names()) {
    TabulatedFunction f = gallery_build(name, 4).function;
    CHECK(argmin_set(f) == brute_argmin(f));
  }
}

TEST_CASE("geodesic snapshots") {
  TabulatedFunction e22 = example_2_2().function;
  GeodesicSnapshot s = geodesic_snapshot(e22, pt({0, 1}));
  CHECK(s.mu == 2);
  CHECK(s.M_set == std::vector<LatticePoint>{pt({2, 1})});
  CHECK(s.mu_tilde == 4);

  TabulatedFunction e21 = example_2_1().function;
  GeodesicSnapshot s2 = geodesic_snapshot(e21, pt({0, 1, 2}));
  CHECK(s2.mu == 4);
  CHECK(s2.mu_tilde == 4);
  CHECK(s2.M_tilde_set ==
        std::vector<LatticePoint>{pt({2, 0, 1}), pt({2, 1, 0})});

  GeodesicSnapshot s3 = geodesic_snapshot(e21, pt({2, 1, 0}));
  CHECK(s3.mu == 0);
  CHECK(s3.mu_tilde == 0);
  CHECK(s3.M_set == std::vector<LatticePoint>{pt({2, 1, 0})});
  CHECK(s3.M_tilde_set == std::vector<LatticePoint>{pt({2, 1, 0})});
}

TEST_CASE("snapshot distance sandwich holds everywhere") {
  for (const auto& name : gallery_names()) {
    TabulatedFunction f = gallery_build(name, 5).function;
    for (const auto& x : f.domain()) {
      GeodesicSnapshot s = geodesic_snapshot(f, x);
      CHECK(s.mu <= s.mu_tilde);
      CHECK(s.mu_tilde <= 2 * s.mu);
      CHECK(s.mu == brute_l1_to_nearest(f, x));
      CHECK(!s.M_set.empty());
      CHECK(!s.M_tilde_set.empty());
      for (const auto& m : s.M_set) CHECK(in_set(argmin_set(f), m));
    }
  }
}

TEST_CASE("weak minimizer cut verdicts") {
  TabulatedFunction e21 = example_2_1().function;
  TheoremVerdict v = verify_min_cut_weak(e21, pt({0, 1, 2}), 2, 0);
  CHECK(v.holds());
  CHECK(*v.witness == pt({2, 0, 1}));

  TabulatedFunction e22 = example_2_2().function;
  TheoremVerdict v2 = verify_min_cut_weak(e22, pt({0, 1}), 2, 1);
  CHECK(v2.holds());
  CHECK(*v2.witness == pt({2, 0}));

  // Unique minimizer one exchange step away.
  TabulatedFunction adj = make_function(2, {{{0, 1}, 1}, {{1, 0}, 0}});
  TheoremVerdict v3 = verify_min_cut_weak(adj, pt({0, 1}), 2, 1);
  CHECK(v3.holds());
  CHECK(*v3.witness == pt({1, 0}));
}

TEST_CASE("strong minimizer cut verdicts") {
  TabulatedFunction e21 = example_2_1().function;
  TheoremVerdict v = verify_min_cut_strong(e21, pt({0, 1, 2}), 2, 0);
  CHECK(v.fails());
  // No minimizer has coordinate sum <= 2.
  for (const auto& m : argmin_set(e21)) CHECK(m.coord_sum() == 3);

  // Exhaustive over an exchange-convex instance.
  TabulatedFunction e22 = example_2_2().function;
  for (const auto& verdict : sweep_theorem(e22, "min-cut-strong")) {
    CHECK(verdict.holds());
  }

  // With both indices nonnull the strong and weak cuts coincide.
  TabulatedFunction adj = make_function(2, {{{0, 1}, 1}, {{1, 0}, 0}});
  TheoremVerdict weak = verify_min_cut_weak(adj, pt({0, 1}), 2, 1);
  TheoremVerdict strong = verify_min_cut_strong(adj, pt({0, 1}), 2, 1);
  CHECK(weak.holds() == strong.holds());
  CHECK(*weak.witness == *strong.witness);
}

TEST_CASE("minimizer cut argument validation") {
  TabulatedFunction e21 = example_2_1().function;
  CHECK_THROWS(verify_min_cut_weak(e21, pt({2, 1, 0}), 2, 0));  // minimizer
  CHECK_THROWS(verify_min_cut_weak(e21, pt({0, 1, 2}), 1, 1));  // i == j
  CHECK_THROWS(verify_min_cut_weak(e21, pt({0, 1, 2}), 2, 1));  // not minimal
  CHECK_THROWS_AS(verify_min_cut_weak(e21, pt({9, 9, 9}), 2, 0),
                  NotInDomainError);
}

TEST_CASE("directional cuts refuted by the null cases") {
  TabulatedFunction e41 = example_4_1().function;
  TheoremVerdict mi = verify_min_cut_directional(e41, pt({1, 1}), "mi", 1);
  CHECK(mi.fails());
  CHECK(mi.counter_context.at("attaining") == 0);

  TheoremVerdict miii =
      verify_min_cut_directional(e41, pt({0, 1}), "miii", -1);
  CHECK(miii.fails());

  // The same rows under the q-variants have no nonnull attainer, so the
  // hypothesis is not met rather than refuted.
  TheoremVerdict qi = verify_min_cut_directional(e41, pt({1, 1}), "qi", 1);
  CHECK(qi.outcome == VerdictOutcome::kHypothesisNotMet);
  TheoremVerdict qiii =
      verify_min_cut_directional(e41, pt({0, 1}), "qiii", -1);
  CHECK(qiii.outcome == VerdictOutcome::kHypothesisNotMet);

  // Coordinate negation flips the refutation onto the mirror variants.
  TabulatedFunction neg = gallery_build("example-4-1-neg").function;
  CHECK(verify_min_cut_directional(neg, pt({-1, -1}), "mii", 1).fails());
  CHECK(verify_min_cut_directional(neg, pt({0, -1}), "miv", -1).fails());
}

TEST_CASE("directional cuts hold where the theorems apply") {
  TabulatedFunction e22 = example_2_2().function;
  // Exchange-convex: every m-variant (and hence q-variant) must hold.
  for (const auto& variant : {"mi", "mii", "miii", "miv"}) {
    for (const auto& x : e22.domain()) {
      for (int fixed = 1; fixed <= 2; ++fixed) {
        TheoremVerdict v = verify_min_cut_directional(e22, x, variant, fixed);
        INFO(variant, " at ", x.to_string(), " fixed ", fixed);
        CHECK(!v.fails());
      }
    }
  }
  // Semi-strict only: q-variants hold whenever their hypothesis is met.
  for (const auto* name : {"example-2-1", "example-4-1", "example-4-2"}) {
    TabulatedFunction f = gallery_build(name).function;
    for (const auto& variant : {"qi", "qii", "qiii", "qiv"}) {
      for (const auto& x : f.domain()) {
        for (int fixed = 1; fixed <= f.dim(); ++fixed) {
          TheoremVerdict v = verify_min_cut_directional(f, x, variant, fixed);
          INFO(variant, " at ", x.to_string(), " fixed ", fixed);
          CHECK(!v.fails());
        }
      }
    }
  }
  // Nonnull-row variants on a lifted exchange-convex function.
  TabulatedFunction lifted = project_to_m(e22);
  for (const auto& verdict :
       sweep_theorem(lifted, "min-cut-directional",
                     {.variant = "Ai"})) {
    CHECK(!verdict.fails());
  }
  for (const auto& variant : {"Aii", "Aiii"}) {
    for (const auto& verdict :
         sweep_theorem(lifted, "min-cut-directional",
                       {.variant = variant})) {
      CHECK(!verdict.fails());
    }
  }
}

TEST_CASE("statement A fails on the flat exchange-convex example") {
  TabulatedFunction e22 = example_2_2().function;
  TheoremVerdict v = verify_statement_a(e22, pt({0, 1}), 2, 1);
  CHECK(v.fails());
  CHECK(v.counter_context.at("transfer_set").empty());
  CHECK(v.counter_context.at("distance_after") == 1);
  CHECK(v.counter_context.at("expected_distance_after") == 0);

  // A unique adjacent minimizer satisfies it trivially.
  TabulatedFunction adj = make_function(2, {{{0, 1}, 1}, {{1, 0}, 0}});
  CHECK(verify_statement_a(adj, pt({0, 1}), 2, 1).holds());
}

TEST_CASE("statement A verdicts match direct enumeration") {
  // Re-derive every verdict from scratch: nearest sets by scanning the
  // brute-force argmin, the transfer set by filtering, the distance law
  // by recomputation.
  TabulatedFunction f = example_2_1().function;
  std::vector<LatticePoint> argmin = brute_argmin(f);
  for (const auto& x : f.domain()) {
    if (brute_is_global_min(f, x)) continue;
    for (auto [i, j] : minimizing_pairs(f, x)) {
      std::int64_t mu = brute_l1_to_nearest(f, x);
      std::vector<LatticePoint> nearest;
      for (const auto& m : argmin) {
        if (l1_distance(m, x) == mu) nearest.push_back(m);
      }
      std::vector<LatticePoint> transfer;
      for (const auto& m : nearest) {
        bool ok = true;
        if (i != 0 && !(m.coord(i) <= x.coord(i) - 1)) ok = false;
        if (j != 0 && !(m.coord(j) >= x.coord(j) + 1)) ok = false;
        if (ok) transfer.push_back(m);
      }
      LatticePoint x_next = exchange_step(x, i, j);
      std::int64_t mu_next = brute_l1_to_nearest(f, x_next);
      std::vector<LatticePoint> nearest_next;
      for (const auto& m : argmin) {
        if (l1_distance(m, x_next) == mu_next) nearest_next.push_back(m);
      }
      std::int64_t decrement = (i != 0 && j != 0) ? 2 : 1;
      bool expected = !transfer.empty() && mu_next == mu - decrement &&
                      nearest_next == transfer;
      TheoremVerdict v = verify_statement_a(f, x, i, j);
      INFO("x=", x.to_string(), " pair=(", i, ",", j, ")");
      CHECK(v.holds() == expected);
    }
  }
}

TEST_CASE("statement A restricted to the lifted hyperplane holds") {
  // On a constant-sum domain the minimizing pairs are nonnull and the
  // plain distance law applies at every point.
  TabulatedFunction lifted = project_to_m(example_2_2().function);
  for (const auto& verdict : sweep_theorem(lifted, "statement-A")) {
    CHECK(verdict.holds());
  }
}

TEST_CASE("geodesic law verdicts") {
  TabulatedFunction e21 = example_2_1().function;
  TheoremVerdict v = verify_geodesic(e21, pt({0, 1, 2}), 2, 0);
  CHECK(v.fails());
  CHECK(v.counter_context.at("transfer_set").empty());
  CHECK(v.counter_context.at("distance_before") == 4);
  // The lifted distance after the step stays 4; its plain L1 part to
  // the nearest minimizer is 3. Neither equals the claimed 2.
  CHECK(v.counter_context.at("distance_after") == 4);
  GeodesicSnapshot after = geodesic_snapshot(e21, pt({0, 0, 2}));
  CHECK(brute_l1_to_nearest(e21, pt({0, 0, 2})) == 3);
  CHECK(after.mu_tilde == 4);

  TabulatedFunction e22 = example_2_2().function;
  for (const auto& verdict : sweep_theorem(e22, "geodesic")) {
    CHECK(verdict.holds());
  }

  TabulatedFunction adj = make_function(2, {{{0, 1}, 1}, {{1, 0}, 0}});
  TheoremVerdict v2 = verify_geodesic(adj, pt({0, 1}), 2, 1);
  CHECK(v2.holds());
  CHECK(geodesic_snapshot(adj, pt({0, 1})).mu_tilde == 2);
  CHECK(geodesic_snapshot(adj, pt({1, 0})).mu_tilde == 0);
}

TEST_CASE("proximity verdicts") {
  for (std::int64_t k : {5, 10}) {
    TabulatedFunction f = example_2_4(k).function;
    TheoremVerdict v = verify_proximity(f, 2, ProximityRegime::kMnat);
    CHECK(v.fails());
    // The whole flat ridge (lambda,0,0) satisfies the scaled hypothesis;
    // the first point past the bound is lambda = 4.
    CHECK(v.counter_context.at("x") == point_json(pt({4, 0, 0})));
    CHECK(v.counter_context.at("min_linf_distance") == 4);
    CHECK(v.counter_context.at("bound") == 3);

    // The ridge endpoint (k,0,0) is scaled-locally minimal too, at
    // max-norm distance exactly k from the unique minimizer.
    LatticePoint ridge_end = pt({k, 0, 0});
    ExtendedValue fx = f.eval(ridge_end);
    bool hypothesis = true;
    for (int i = 1; i <= 3; ++i) {
      for (std::int64_t d : {-2, 2}) {
        LatticePoint y = ridge_end;
        y.set_coord(i, y.coord(i) + d);
        if (f.eval(y) < fx) hypothesis = false;
      }
      for (int j = 1; j <= 3; ++j) {
        if (i == j) continue;
        LatticePoint y = ridge_end;
        y.set_coord(i, y.coord(i) - 2);
        y.set_coord(j, y.coord(j) + 2);
        if (f.eval(y) < fx) hypothesis = false;
      }
    }
    CHECK(hypothesis);
    CHECK(argmin_set(f) == std::vector<LatticePoint>{pt({0, 1, 1})});
    CHECK(linf_distance(ridge_end, pt({0, 1, 1})) == k);
  }
  // Small plateaus stay within the bound.
  for (std::int64_t k : {2, 3}) {
    CHECK(verify_proximity(example_2_4(k).function, 2,
                           ProximityRegime::kMnat)
              .holds());
  }
  CHECK(verify_proximity(example_2_2().function, 2, ProximityRegime::kMnat)
            .holds());
  IntBox box(pt({0, 0}), pt({3, 3}));
  TabulatedFunction constant(2);
  for (const auto& p : box_points(box)) constant.insert(p, Rational(7));
  CHECK(verify_proximity(constant, 4, ProximityRegime::kMnat).holds());
  CHECK_THROWS(verify_proximity(constant, 1, ProximityRegime::kMnat));

  // Lifted regime on a lifted function.
  TabulatedFunction lifted = project_to_m(example_2_2().function);
  CHECK(verify_proximity(lifted, 2, ProximityRegime::kM).holds());
  CHECK(verify_proximity(lifted, 3, ProximityRegime::kM).holds());
}

TEST_CASE("sum lift of a table") {
  TabulatedFunction lift = project_to_m(example_4_1().function);
  CHECK(lift.dim() == 3);
  CHECK(lift.size() == 4);
  CHECK(lift.eval(pt({1, 0, -1})).finite_value() == Rational(1));
  CHECK(lift.eval(pt({2, 0, -2})).finite_value() == Rational(0));
  CHECK(lift.eval(pt({0, 1, -1})).finite_value() == Rational(2));
  CHECK(lift.eval(pt({1, 1, -2})).finite_value() == Rational(3));
  CHECK(!lift.eval(pt({1, 0, 0})).is_finite());

  TabulatedFunction single = make_function(2, {{{0, 0}, 5}});
  TabulatedFunction lifted_single = project_to_m(single);
  CHECK(lifted_single.domain() == std::vector<LatticePoint>{pt({0, 0, 0})});

  for (const auto& name : gallery_names()) {
    TabulatedFunction f = gallery_build(name, 3).function;
    TabulatedFunction lifted = project_to_m(f);
    CHECK(lifted.size() == f.size());
    for (const auto& p : lifted.domain()) CHECK(p.coord_sum() == 0);
  }
}

TEST_CASE("local-global equivalence on lifted functions") {
  TabulatedFunction lifted = project_to_m(example_2_2().function);
  for (const auto& x : lifted.domain()) {
    CHECK(verify_local_global_m(lifted, x).holds());
  }
  TabulatedFunction diag = make_function(2, {{{1, 0}, 2}, {{0, 1}, 2}});
  for (const auto& x : diag.domain()) {
    CHECK(verify_local_global_m(diag, x).holds());
  }
  // Strict mode requires the nonnull exchange inequality.
  TabulatedFunction not_m = example_2_2().function;
  CHECK_THROWS_AS(verify_local_global_m(not_m, pt({0, 0}), true),
                  PreconditionError);

  // On an arbitrary lift the verdict must agree with direct enumeration.
  TabulatedFunction lifted41 = project_to_m(example_4_1().function);
  for (const auto& x : lifted41.domain()) {
    bool local = true;
    for (int i = 1; i <= lifted41.dim() && local; ++i) {
      for (int j = 1; j <= lifted41.dim(); ++j) {
        if (i == j) continue;
        if (lifted41.eval(exchange_step(x, i, j)) < lifted41.eval(x)) {
          local = false;
          break;
        }
      }
    }
    bool global = brute_is_global_min(lifted41, x);
    CHECK(verify_local_global_m(lifted41, x).holds() == (local == global));
  }
}

TEST_CASE("projection bridge equivalences") {
  for (const auto& name : gallery_names()) {
    TabulatedFunction f = gallery_build(name, 4).function;
    for (const auto& verdict : verify_projection_bridge(f)) {
      INFO(name, " relation ", verdict.inputs.at("relation").dump());
      CHECK(verdict.holds());
    }
  }
}

TEST_CASE("verdicts replay from their serialized form") {
  TabulatedFunction e21 = example_2_1().function;
  TabulatedFunction e22 = example_2_2().function;
  TabulatedFunction e24 = example_2_4(5).function;
  std::vector<std::pair<const TabulatedFunction*, TheoremVerdict>> cases;
  cases.emplace_back(&e21, verify_geodesic(e21, pt({0, 1, 2}), 2, 0));
  cases.emplace_back(&e21, verify_min_cut_weak(e21, pt({0, 1, 2}), 2, 0));
  cases.emplace_back(&e21, verify_min_cut_strong(e21, pt({0, 1, 2}), 2, 0));
  cases.emplace_back(&e22, verify_statement_a(e22, pt({0, 1}), 2, 1));
  cases.emplace_back(&e24,
                     verify_proximity(e24, 2, ProximityRegime::kMnat));
  TabulatedFunction e41 = example_4_1().function;
  cases.emplace_back(&e41,
                     verify_min_cut_directional(e41, pt({1, 1}), "mi", 1));
  for (const auto& v : verify_projection_bridge(e41)) {
    cases.emplace_back(&e41, v);
  }
  for (const auto& [f, v] : cases) {
    std::string why;
    bool ok = replay_verdict_json(*f, verdict_json(v), &why);
    INFO(v.theorem, ": ", why);
    CHECK(ok);
  }
  // A tampered verdict must not replay.
  nlohmann::json doc =
      verdict_json(verify_min_cut_weak(e21, pt({0, 1, 2}), 2, 0));
  doc["witness"] = point_json(pt({2, 1, 0}));
  std::string why;
  CHECK(!replay_verdict_json(e21, doc, &why));
}
