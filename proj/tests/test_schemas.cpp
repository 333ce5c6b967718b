#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mnat/analysis.hpp"
#include "mnat/gallery.hpp"
#include "mnat/json_io.hpp"
#include "mnat/minimize.hpp"
#include "schema_check.hpp"

using namespace mnat;
using namespace mnat_tests;
using nlohmann::json;

namespace {

const SchemaSet& schemas() {
  static SchemaSet set(MNAT_SCHEMA_DIR);
  return set;
}

void expect_valid(const std::string& schema, const json& doc) {
  std::string error;
  bool ok = schemas().validate(schema, doc, &error);
  INFO(schema, ": ", error);
  CHECK(ok);
}

}  // namespace

TEST_CASE("function files validate") {
  for (const auto& name : gallery_names()) {
    TabulatedFunction f = gallery_build(name, 5).function;
    expect_valid("function.schema.json",
                 json::parse(emit_function_json(f)));
  }
  TabulatedFunction rational(1);
  rational.insert(pt({0}), Rational(1, 3));
  expect_valid("function.schema.json",
               json::parse(emit_function_json(rational)));
}

TEST_CASE("axiom reports validate") {
  TabulatedFunction e21 = example_2_1().function;
  expect_valid("axiom_report.schema.json",
               report_json(check_ssqm_nat(e21)));
  expect_valid("axiom_report.schema.json",
               report_json(check_mnat_exc(e21)));
  expect_valid(
      "axiom_report.schema.json",
      report_json(check_mnat_exc(e21, {.exhaustive = true, .threads = 1})));
  expect_valid("axiom_report.schema.json",
               report_json(check_mnat_set(e21.domain())));
  TabulatedFunction split = make_function(2, {{{0, 0}, 1}, {{1, 1}, 0}});
  expect_valid("axiom_report.schema.json",
               report_json(check_descent_lemma(split)));
  expect_valid("projected_axiom_report.schema.json",
               report_json(check_ssqm_nat_prj(example_4_2().function)));
}

TEST_CASE("traces and reduction states validate") {
  TabulatedFunction e21 = example_2_1().function;
  DescentTrace t = basic_steepest_descent(e21, pt({0, 1, 2}));
  expect_valid("descent_trace.schema.json", trace_json(t));

  ReductionResult r = domain_reduction(example_2_2().function);
  json reduction = reduction_json(r);
  expect_valid("reduction_state.schema.json", reduction["state"]);

  json minimize_result = {{"algorithm", "basic"},
                          {"minimizer", point_json(t.minimizer)},
                          {"value", value_json(e21.eval(t.minimizer))},
                          {"iterations", t.iterations},
                          {"trace", trace_json(t)}};
  expect_valid("minimize_result.schema.json", minimize_result);
}

TEST_CASE("verdicts validate") {
  TabulatedFunction e21 = example_2_1().function;
  for (const auto& theorem :
       {"min-cut-weak", "min-cut-strong", "geodesic", "statement-A",
        "min-cut-directional", "proximity", "local-global",
        "projection-bridge"}) {
    for (const auto& v : sweep_theorem(e21, theorem)) {
      expect_valid("theorem_verdict.schema.json", verdict_json(v));
    }
  }
}

TEST_CASE("audit reports validate") {
  expect_valid("audit_report.schema.json", audit_json(gallery_audit()));
}

TEST_CASE("the validator itself rejects malformed documents") {
  std::string error;
  CHECK(!schemas().validate("function.schema.json",
                            json::parse(R"({"points": []})"), &error));
  CHECK(!schemas().validate(
      "function.schema.json",
      json::parse(R"({"dim": "two", "points": []})"), &error));
  CHECK(!schemas().validate(
      "theorem_verdict.schema.json",
      json::parse(
          R"({"theorem": "x", "outcome": "maybe", "holds": true, "inputs": {}})"),
      &error));
}
