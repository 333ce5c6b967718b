#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "mnat.h"

using nlohmann::json;

namespace {

struct Str {
  char* v = nullptr;
  ~Str() { mnat_string_free(v); }
  std::string get() const { return v ? v : ""; }
};

struct Fn {
  mnat_function* v = nullptr;
  ~Fn() { mnat_function_free(v); }
};

const char* kSplit =
    R"({"dim": 2, "points": [{"x": [0,0], "f": 1}, {"x": [1,1], "f": 0}]})";

Fn build(const char* name, int64_t k = 5) {
  Fn f;
  Str err;
  REQUIRE(mnat_gallery_build(name, k, &f.v, &err.v) == MNAT_OK);
  return f;
}

}  // namespace

TEST_CASE("status names are stable") {
  CHECK(std::string(mnat_status_name(MNAT_OK)) == "ok");
  CHECK(std::string(mnat_status_name(MNAT_ERR_PARSE)) == "parse-error");
  CHECK(std::string(mnat_status_name(MNAT_ERR_PRECONDITION)) ==
        "precondition-failed");
}

TEST_CASE("parse, emit and reparse a function") {
  Fn f;
  Str err;
  CHECK(mnat_function_parse_json(kSplit, &f.v, &err.v) == MNAT_OK);
  REQUIRE(f.v != nullptr);
  CHECK(mnat_function_dim(f.v) == 2);
  CHECK(mnat_function_table_size(f.v) == 2);

  Str text;
  CHECK(mnat_function_emit_json(f.v, &text.v) == MNAT_OK);
  Fn again;
  Str err2;
  CHECK(mnat_function_parse_json(text.v, &again.v, &err2.v) == MNAT_OK);
  Str text2;
  CHECK(mnat_function_emit_json(again.v, &text2.v) == MNAT_OK);
  CHECK(text.get() == text2.get());
}

TEST_CASE("parse errors carry a message") {
  Fn f;
  Str err;
  CHECK(mnat_function_parse_json("{", &f.v, &err.v) == MNAT_ERR_PARSE);
  CHECK(f.v == nullptr);
  CHECK(!err.get().empty());

  Fn g;
  Str err2;
  CHECK(mnat_function_parse_json(
            R"({"dim": 2, "points": [{"x": [1], "f": 0}]})", &g.v,
            &err2.v) == MNAT_ERR_PARSE);
  CHECK(err2.get().find("points[0]") != std::string::npos);

  CHECK(mnat_function_parse_json(nullptr, &f.v, nullptr) ==
        MNAT_ERR_INVALID_ARGUMENT);
  Fn h;
  Str err3;
  CHECK(mnat_function_load_file("/nonexistent/path.json", &h.v, &err3.v) ==
        MNAT_ERR_PARSE);
}

TEST_CASE("axiom checks through the C surface") {
  Fn f = build("example-2-1");
  int pass = -1;
  Str report, err;
  CHECK(mnat_check_axiom(f.v, "ssqm-nat", nullptr, &pass, &report.v,
                         &err.v) == MNAT_OK);
  CHECK(pass == 1);
  json doc = json::parse(report.get());
  CHECK(doc["axiom"] == "ssqm-nat");
  CHECK(doc["pass"] == true);

  int pass2 = -1;
  Str report2, err2;
  CHECK(mnat_check_axiom(f.v, "mnat-exc", nullptr, &pass2, &report2.v,
                         &err2.v) == MNAT_OK);
  CHECK(pass2 == 0);
  json doc2 = json::parse(report2.get());
  CHECK(doc2["pass"] == false);
  CHECK(doc2.contains("violation"));

  Fn g = build("example-4-2");
  int pass3 = -1;
  Str report3, err3;
  CHECK(mnat_check_axiom(g.v, "ssqm-nat-prj", nullptr, &pass3, &report3.v,
                         &err3.v) == MNAT_OK);
  CHECK(pass3 == 0);
  json doc3 = json::parse(report3.get());
  CHECK(doc3["parts"]["ii"]["pass"] == false);
  CHECK(doc3["parts"]["ii"]["violation"]["x"] == json::array({0, 2}));
  CHECK(doc3["parts"]["ii"]["violation"]["i"] == 2);

  int pass4 = -1;
  CHECK(mnat_check_axiom(f.v, "no-such-axiom", nullptr, &pass4, nullptr,
                         nullptr) == MNAT_ERR_UNKNOWN_NAME);
}

TEST_CASE("minimization through the C surface") {
  Fn f = build("example-2-1");
  int64_t start[3] = {0, 1, 2};
  Str result, err;
  CHECK(mnat_minimize(f.v, "basic", start, 3, nullptr, &result.v, &err.v) ==
        MNAT_OK);
  json doc = json::parse(result.get());
  CHECK(doc["iterations"] == 3);
  CHECK((doc["minimizer"] == json::array({2, 0, 1}) ||
         doc["minimizer"] == json::array({2, 1, 0})));
  CHECK(doc["value"] == 0);
  CHECK(!doc.contains("trace"));

  mnat_minimize_options with_trace{-1, 0, 1};
  Str result2, err2;
  CHECK(mnat_minimize(f.v, "basic", start, 3, &with_trace, &result2.v,
                      &err2.v) == MNAT_OK);
  json doc2 = json::parse(result2.get());
  CHECK(doc2["trace"]["steps"].size() == 3);

  Str result3, err3;
  CHECK(mnat_minimize(f.v, "domain-reduction", nullptr, 0, nullptr,
                      &result3.v, &err3.v) == MNAT_OK);
  json doc3 = json::parse(result3.get());
  CHECK(doc3["value"] == 0);

  Str result4, err4;
  CHECK(mnat_minimize(f.v, "basic", start, 2, nullptr, &result4.v,
                      &err4.v) == MNAT_ERR_DIMENSION);
  int64_t outside[3] = {9, 9, 9};
  Str result5, err5;
  CHECK(mnat_minimize(f.v, "basic", outside, 3, nullptr, &result5.v,
                      &err5.v) == MNAT_ERR_NOT_IN_DOMAIN);
}

TEST_CASE("strict-mode failures return the axiom report") {
  Fn f;
  Str perr;
  REQUIRE(mnat_function_parse_json(kSplit, &f.v, &perr.v) == MNAT_OK);
  int64_t start[2] = {0, 0};
  mnat_minimize_options strict{1, 0, 0};
  Str result, err;
  CHECK(mnat_minimize(f.v, "basic", start, 2, &strict, &result.v, &err.v) ==
        MNAT_ERR_PRECONDITION);
  json doc = json::parse(result.get());
  CHECK(doc["axiom"] == "ssqm-nat");
  CHECK(doc["pass"] == false);
}

TEST_CASE("verification through the C surface") {
  Fn f = build("example-2-1");
  int all_hold = -1;
  Str verdicts, err;
  CHECK(mnat_verify(f.v, "geodesic", nullptr, &all_hold, &verdicts.v,
                    &err.v) == MNAT_OK);
  CHECK(all_hold == 0);
  json doc = json::parse(verdicts.get());
  CHECK(doc.is_array());
  bool found = false;
  for (const auto& v : doc) {
    if (v["outcome"] == "fails" &&
        v["inputs"]["x"] == json::array({0, 1, 2})) {
      found = true;
    }
  }
  CHECK(found);

  int all_hold2 = -1;
  Str verdicts2, err2;
  CHECK(mnat_verify(f.v, "min-cut-weak", nullptr, &all_hold2, &verdicts2.v,
                    &err2.v) == MNAT_OK);
  CHECK(all_hold2 == 1);

  Fn e24 = build("example-2-4", 5);
  mnat_verify_options opts{2, "mnat", nullptr};
  int all_hold3 = -1;
  Str verdicts3, err3;
  CHECK(mnat_verify(e24.v, "proximity", &opts, &all_hold3, &verdicts3.v,
                    &err3.v) == MNAT_OK);
  CHECK(all_hold3 == 0);

  CHECK(mnat_verify(f.v, "no-such-theorem", nullptr, &all_hold, nullptr,
                    nullptr) == MNAT_ERR_UNKNOWN_NAME);
}

TEST_CASE("gallery through the C surface") {
  Str names;
  CHECK(mnat_gallery_names(&names.v) == MNAT_OK);
  json doc = json::parse(names.get());
  CHECK(doc.is_array());
  CHECK(doc.size() == 6);

  Fn e24 = build("example-2-4", 7);
  CHECK(mnat_function_table_size(e24.v) == 4 * 8);

  Fn bad;
  Str err;
  CHECK(mnat_gallery_build("nope", 5, &bad.v, &err.v) ==
        MNAT_ERR_UNKNOWN_NAME);

  int ok = -1;
  Str report, err2;
  CHECK(mnat_gallery_audit(&ok, &report.v, &err2.v) == MNAT_OK);
  CHECK(ok == 1);
  json audit = json::parse(report.get());
  CHECK(audit["ok"] == true);
  CHECK(audit["items"].size() >= 20);
}
