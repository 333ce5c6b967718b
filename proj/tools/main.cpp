// Command-line front end for the mnat shared library. Talks to the
// library exclusively through the C interface in mnat.h. JSON results go
// to standard output, human-readable summaries to standard error.
//
// Exit codes: 0 success / pass, 1 semantic failure (axiom violated,
// theorem refuted, audit mismatch), 2 usage or input error, 3 strict-mode
// precondition failure.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mnat.h"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

struct StringGuard {
  char* value = nullptr;
  ~StringGuard() { mnat_string_free(value); }
  std::string str() const { return value ? value : ""; }
};

struct FunctionGuard {
  mnat_function* value = nullptr;
  ~FunctionGuard() { mnat_function_free(value); }
};

int default_threads() {
  const char* env = std::getenv("MNAT_THREADS");
  if (env == nullptr) return 1;
  int n = std::atoi(env);
  return n > 0 ? n : 1;
}

int load_function(const std::string& path, FunctionGuard* fn) {
  StringGuard err;
  mnat_status status =
      mnat_function_load_file(path.c_str(), &fn->value, &err.value);
  if (status != MNAT_OK) {
    std::cerr << "error: cannot load '" << path
              << "': " << mnat_status_name(status);
    if (err.value) std::cerr << ": " << err.str();
    std::cerr << "\n";
    return kExitUsage;
  }
  return kExitPass;
}

void write_output(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(output);
  out << text;
  if (text.empty() || text.back() != '\n') out << "\n";
}

bool parse_start(const std::string& text, std::vector<int64_t>* out) {
  out->clear();
  std::string token;
  for (char c : text + ",") {
    if (c == ',') {
      if (token.empty()) return false;
      try {
        size_t pos = 0;
        out->push_back(std::stoll(token, &pos));
        if (pos != token.size()) return false;
      } catch (const std::exception&) {
        return false;
      }
      token.clear();
    } else {
      token.push_back(c);
    }
  }
  return !out->empty();
}

int run_check(const std::string& path, const std::string& axiom,
              bool exhaustive, int threads, const std::string& output) {
  FunctionGuard fn;
  if (int rc = load_function(path, &fn); rc != kExitPass) return rc;
  mnat_check_options opts{exhaustive ? 1 : 0, threads};
  int pass = 0;
  StringGuard report, err;
  mnat_status status = mnat_check_axiom(fn.value, axiom.c_str(), &opts,
                                        &pass, &report.value, &err.value);
  if (status != MNAT_OK) {
    std::cerr << "error: " << mnat_status_name(status) << ": " << err.str()
              << "\n";
    return kExitUsage;
  }
  write_output(report.str(), output);
  std::cerr << "axiom " << axiom << ": " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitPass : kExitFail;
}

int run_minimize(const std::string& path, const std::string& algo,
                 const std::string& start_text, int strict, bool audit,
                 bool trace, const std::string& output) {
  FunctionGuard fn;
  if (int rc = load_function(path, &fn); rc != kExitPass) return rc;
  std::vector<int64_t> start;
  const int64_t* start_ptr = nullptr;
  int32_t start_len = 0;
  if (algo != "domain-reduction") {
    if (start_text.empty()) {
      std::cerr << "error: --start is required for --algo " << algo << "\n";
      return kExitUsage;
    }
    if (!parse_start(start_text, &start)) {
      std::cerr << "error: --start must be comma-separated integers\n";
      return kExitUsage;
    }
    start_ptr = start.data();
    start_len = static_cast<int32_t>(start.size());
  }
  mnat_minimize_options opts{strict, audit ? 1 : 0, trace ? 1 : 0};
  StringGuard result, err;
  mnat_status status = mnat_minimize(fn.value, algo.c_str(), start_ptr,
                                     start_len, &opts, &result.value,
                                     &err.value);
  if (status == MNAT_ERR_PRECONDITION) {
    write_output(result.str(), output);
    std::cerr << "error: strict-mode precondition failed: " << err.str()
              << "\n";
    return kExitPrecondition;
  }
  if (status != MNAT_OK) {
    std::cerr << "error: " << mnat_status_name(status) << ": " << err.str()
              << "\n";
    return kExitUsage;
  }
  write_output(result.str(), output);
  json doc = json::parse(result.str());
  std::cerr << "minimizer " << doc["minimizer"].dump() << " value "
            << doc["value"].dump() << " iterations " << doc["iterations"]
            << "\n";
  return kExitPass;
}

int run_verify(const std::string& path, const std::string& theorem,
               int64_t alpha, const std::string& regime,
               const std::string& variant, const std::string& output) {
  FunctionGuard fn;
  if (int rc = load_function(path, &fn); rc != kExitPass) return rc;
  mnat_verify_options opts{alpha, regime.empty() ? nullptr : regime.c_str(),
                           variant.empty() ? nullptr : variant.c_str()};
  int all_hold = 0;
  StringGuard verdicts, err;
  mnat_status status = mnat_verify(fn.value, theorem.c_str(), &opts,
                                   &all_hold, &verdicts.value, &err.value);
  if (status != MNAT_OK) {
    std::cerr << "error: " << mnat_status_name(status) << ": " << err.str()
              << "\n";
    return kExitUsage;
  }
  write_output(verdicts.str(), output);
  json doc = json::parse(verdicts.str());
  size_t holds = 0, fails = 0, skipped = 0;
  for (const auto& v : doc) {
    std::string outcome = v["outcome"].get<std::string>();
    if (outcome == "holds") {
      ++holds;
    } else if (outcome == "fails") {
      ++fails;
    } else {
      ++skipped;
    }
  }
  std::cerr << "theorem " << theorem << ": " << holds << " hold, " << fails
            << " fail, " << skipped << " hypothesis-not-met\n";
  return all_hold ? kExitPass : kExitFail;
}

int run_gallery(bool audit, const std::string& name, int64_t k,
                const std::string& emit, const std::string& output) {
  if (audit) {
    int ok = 0;
    StringGuard report, err;
    mnat_status status = mnat_gallery_audit(&ok, &report.value, &err.value);
    if (status != MNAT_OK) {
      std::cerr << "error: " << mnat_status_name(status) << ": " << err.str()
                << "\n";
      return kExitUsage;
    }
    write_output(report.str(), output);
    json doc = json::parse(report.str());
    std::cerr << "gallery audit: " << (ok ? "OK" : "MISMATCH") << " ("
              << doc["items"].size() << " expectations)\n";
    return ok ? kExitPass : kExitFail;
  }
  if (name.empty()) {
    std::cerr << "error: provide --name or --audit\n";
    return kExitUsage;
  }
  FunctionGuard fn;
  StringGuard err;
  mnat_status status =
      mnat_gallery_build(name.c_str(), k, &fn.value, &err.value);
  if (status != MNAT_OK) {
    std::cerr << "error: " << mnat_status_name(status) << ": " << err.str()
              << "\n";
    return kExitUsage;
  }
  StringGuard text;
  mnat_function_emit_json(fn.value, &text.value);
  write_output(text.str(), emit);
  std::cerr << "gallery " << name << ": dim " << mnat_function_dim(fn.value)
            << ", " << mnat_function_table_size(fn.value) << " points\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exchange-axiom checkers, lattice minimizers, and theorem "
               "verifiers for tabulated functions"};
  app.require_subcommand(1);

  std::string input, output = "-", axiom, algo, start, theorem;
  std::string regime, variant, name, emit = "-";
  bool exhaustive = false, audit_flag = false, trace = false;
  bool strict_flag = false, fast_flag = false, gallery_audit_flag = false;
  int threads = default_threads();
  int64_t alpha = 0, k = 5;

  CLI::App* check = app.add_subcommand("check", "run an axiom checker");
  check->add_option("--axiom", axiom, "axiom id")->required();
  check->add_flag("--exhaustive", exhaustive, "collect every violation");
  check->add_option("--threads", threads, "worker threads");
  check->add_option("--output", output, "write JSON here instead of stdout");
  check->add_option("input", input, "function file")->required();

  CLI::App* minimize = app.add_subcommand("minimize", "run a minimizer");
  minimize->add_option("--algo", algo, "basic|modified|domain-reduction")
      ->required();
  minimize->add_option("--start", start, "start point, e.g. 0,1,2");
  minimize->add_flag("--strict", strict_flag,
                     "verify axiom preconditions first");
  minimize->add_flag("--fast", fast_flag, "skip axiom preconditions");
  minimize->add_flag("--audit", audit_flag,
                     "cross-check shrink steps against brute force");
  minimize->add_flag("--trace", trace, "include the full step log");
  minimize->add_option("--output", output, "write JSON here");
  minimize->add_option("input", input, "function file")->required();

  CLI::App* verify = app.add_subcommand("verify", "run a theorem verifier");
  verify->add_option("--theorem", theorem, "theorem id")->required();
  verify->add_option("--alpha", alpha, "proximity scale (>= 2)");
  verify->add_option("--regime", regime, "proximity regime: mnat|m");
  verify->add_option("--variant", variant, "directional variant filter");
  verify->add_option("--output", output, "write JSON here");
  verify->add_option("input", input, "function file")->required();

  CLI::App* gallery = app.add_subcommand("gallery", "catalog entries");
  gallery->add_option("--name", name, "entry id");
  gallery->add_option("--k", k, "size parameter for example-2-4");
  gallery->add_option("--emit", emit, "write the function file here");
  gallery->add_flag("--audit", gallery_audit_flag,
                    "replay all embedded expectations");
  gallery->add_option("--output", output, "write audit JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (check->parsed()) {
    return run_check(input, axiom, exhaustive, threads, output);
  }
  if (minimize->parsed()) {
    if (strict_flag && fast_flag) {
      std::cerr << "error: --strict and --fast are mutually exclusive\n";
      return kExitUsage;
    }
    int strict = -1;
    if (strict_flag) strict = 1;
    if (fast_flag) strict = 0;
    return run_minimize(input, algo, start, strict, audit_flag, trace,
                        output);
  }
  if (verify->parsed()) {
    return run_verify(input, theorem, alpha, regime, variant, output);
  }
  if (gallery->parsed()) {
    return run_gallery(gallery_audit_flag, name, k, emit, output);
  }
  return kExitUsage;
}
