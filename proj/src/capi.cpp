#include "mnat.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "mnat/analysis.hpp"
#include "mnat/axioms.hpp"
#include "mnat/errors.hpp"
#include "mnat/function.hpp"
#include "mnat/gallery.hpp"
#include "mnat/json_io.hpp"
#include "mnat/minimize.hpp"

struct mnat_function {
  mnat::TabulatedFunction fn;
};

namespace {

using nlohmann::json;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_message(char** slot, const std::string& text) {
  if (slot != nullptr) *slot = dup_string(text);
}

// Runs body and maps thrown errors onto status codes. The body returns
// the status for the non-throwing path.
template <typename Fn>
mnat_status guarded(char** error_message, Fn&& body) {
  if (error_message != nullptr) *error_message = nullptr;
  try {
    return body();
  } catch (const mnat::ParseError& e) {
    set_message(error_message, e.what());
    return MNAT_ERR_PARSE;
  } catch (const mnat::DimensionError& e) {
    set_message(error_message, e.what());
    return MNAT_ERR_DIMENSION;
  } catch (const mnat::EmptyDomainError& e) {
    set_message(error_message, e.what());
    return MNAT_ERR_EMPTY_DOMAIN;
  } catch (const mnat::NotInDomainError& e) {
    set_message(error_message, e.what());
    return MNAT_ERR_NOT_IN_DOMAIN;
  } catch (const mnat::DiagnosticError& e) {
    set_message(error_message, e.what());
    return MNAT_ERR_DIAGNOSTIC;
  } catch (const mnat::PreconditionError& e) {
    set_message(error_message, e.what());
    return MNAT_ERR_PRECONDITION;
  } catch (const mnat::Error& e) {
    set_message(error_message, e.what());
    return MNAT_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_message(error_message, e.what());
    return MNAT_ERR_INTERNAL;
  }
}

bool known_name(const std::vector<std::string>& names,
                const std::string& name) {
  for (const auto& n : names) {
    if (n == name) return true;
  }
  return false;
}

}  // namespace

extern "C" {

const char* mnat_status_name(mnat_status status) {
  switch (status) {
    case MNAT_OK:
      return "ok";
    case MNAT_ERR_INVALID_ARGUMENT:
      return "invalid-argument";
    case MNAT_ERR_PARSE:
      return "parse-error";
    case MNAT_ERR_DIMENSION:
      return "dimension-mismatch";
    case MNAT_ERR_EMPTY_DOMAIN:
      return "empty-domain";
    case MNAT_ERR_NOT_IN_DOMAIN:
      return "not-in-domain";
    case MNAT_ERR_PRECONDITION:
      return "precondition-failed";
    case MNAT_ERR_DIAGNOSTIC:
      return "diagnostic";
    case MNAT_ERR_IO:
      return "io-error";
    case MNAT_ERR_UNKNOWN_NAME:
      return "unknown-name";
    case MNAT_ERR_INTERNAL:
      return "internal-error";
  }
  return "?";
}

void mnat_string_free(char* s) { std::free(s); }

mnat_status mnat_function_parse_json(const char* text, mnat_function** out,
                                     char** error_message) {
  if (text == nullptr || out == nullptr) return MNAT_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded(error_message, [&] {
    auto fn = mnat::parse_function_json(text);
    *out = new mnat_function{std::move(fn)};
    return MNAT_OK;
  });
}

mnat_status mnat_function_load_file(const char* path, mnat_function** out,
                                    char** error_message) {
  if (path == nullptr || out == nullptr) return MNAT_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded(error_message, [&] {
    auto fn = mnat::load_function_file(path);
    *out = new mnat_function{std::move(fn)};
    return MNAT_OK;
  });
}

mnat_status mnat_function_emit_json(const mnat_function* f, char** json_out) {
  if (f == nullptr || json_out == nullptr) return MNAT_ERR_INVALID_ARGUMENT;
  return guarded(nullptr, [&] {
    *json_out = dup_string(mnat::emit_function_json(f->fn));
    return MNAT_OK;
  });
}

void mnat_function_free(mnat_function* f) { delete f; }

int32_t mnat_function_dim(const mnat_function* f) {
  return f == nullptr ? 0 : f->fn.dim();
}

int64_t mnat_function_table_size(const mnat_function* f) {
  return f == nullptr ? 0 : static_cast<int64_t>(f->fn.size());
}

mnat_status mnat_check_axiom(const mnat_function* f, const char* axiom,
                             const mnat_check_options* options,
                             int* pass_out, char** report_json_out,
                             char** error_message) {
  if (f == nullptr || axiom == nullptr || pass_out == nullptr) {
    return MNAT_ERR_INVALID_ARGUMENT;
  }
  std::string id(axiom);
  bool composite = (id == "ssqm-nat-prj");
  if (!composite && !known_name(mnat::axiom_names(), id)) {
    set_message(error_message, "unknown axiom '" + id + "'");
    return MNAT_ERR_UNKNOWN_NAME;
  }
  return guarded(error_message, [&] {
    mnat::CheckOptions opts;
    if (options != nullptr) {
      opts.exhaustive = options->exhaustive != 0;
      opts.threads = options->threads > 0 ? options->threads : 1;
    }
    json report;
    bool pass;
    if (composite) {
      auto r = mnat::check_ssqm_nat_prj(f->fn, opts);
      pass = r.pass();
      report = mnat::report_json(r);
    } else {
      auto r = mnat::check_axiom(f->fn, id, opts);
      pass = r.pass;
      report = mnat::report_json(r);
    }
    *pass_out = pass ? 1 : 0;
    if (report_json_out != nullptr) {
      *report_json_out = dup_string(report.dump(2));
    }
    return MNAT_OK;
  });
}

mnat_status mnat_minimize(const mnat_function* f, const char* algorithm,
                          const int64_t* start, int32_t start_len,
                          const mnat_minimize_options* options,
                          char** result_json_out, char** error_message) {
  if (f == nullptr || algorithm == nullptr || result_json_out == nullptr) {
    return MNAT_ERR_INVALID_ARGUMENT;
  }
  std::string algo(algorithm);
  if (algo != "basic" && algo != "modified" && algo != "domain-reduction") {
    set_message(error_message, "unknown algorithm '" + algo + "'");
    return MNAT_ERR_UNKNOWN_NAME;
  }
  mnat::MinimizeOptions opts;
  bool want_trace = false;
  if (options != nullptr) {
    if (options->strict == 0) opts.mode = mnat::MinimizeOptions::Mode::kFast;
    if (options->strict == 1) opts.mode = mnat::MinimizeOptions::Mode::kStrict;
    opts.audit = options->audit != 0;
    want_trace = options->trace != 0;
  }

  mnat_status status = guarded(error_message, [&]() -> mnat_status {
    json result;
    try {
      if (algo == "domain-reduction") {
        mnat::ReductionResult r = mnat::domain_reduction(f->fn, opts);
        result = {{"algorithm", algo},
                  {"minimizer", mnat::point_json(r.minimizer)},
                  {"value", mnat::value_json(f->fn.eval(r.minimizer))},
                  {"iterations",
                   static_cast<int64_t>(r.state.iteration_log.size())}};
        if (want_trace) result["state"] = mnat::reduction_json(r)["state"];
      } else {
        if (start == nullptr || start_len != f->fn.dim()) {
          throw mnat::DimensionError("start point must have length " +
                                     std::to_string(f->fn.dim()));
        }
        mnat::LatticePoint x0(
            std::vector<std::int64_t>(start, start + start_len));
        mnat::DescentTrace trace;
        if (algo == "basic") {
          trace = mnat::basic_steepest_descent(f->fn, x0, opts);
        } else {
          mnat::IntBox box = mnat::coordinate_bounds(f->fn.domain());
          trace = mnat::modified_steepest_descent(f->fn, x0, box, opts);
        }
        result = {{"algorithm", algo},
                  {"minimizer", mnat::point_json(trace.minimizer)},
                  {"value", mnat::value_json(f->fn.eval(trace.minimizer))},
                  {"iterations", trace.iterations}};
        if (want_trace) result["trace"] = mnat::trace_json(trace);
      }
    } catch (const mnat::PreconditionError& e) {
      // Hand the failed axiom report back in place of a result.
      *result_json_out = dup_string(e.report_json);
      throw;
    }
    *result_json_out = dup_string(result.dump(2));
    return MNAT_OK;
  });
  return status;
}

mnat_status mnat_verify(const mnat_function* f, const char* theorem,
                        const mnat_verify_options* options,
                        int* all_hold_out, char** verdicts_json_out,
                        char** error_message) {
  if (f == nullptr || theorem == nullptr || all_hold_out == nullptr) {
    return MNAT_ERR_INVALID_ARGUMENT;
  }
  std::string id(theorem);
  if (!known_name(mnat::theorem_names(), id)) {
    set_message(error_message, "unknown theorem '" + id + "'");
    return MNAT_ERR_UNKNOWN_NAME;
  }
  return guarded(error_message, [&] {
    mnat::SweepOptions opts;
    if (options != nullptr) {
      if (options->alpha > 0) opts.alpha = options->alpha;
      if (options->regime != nullptr) {
        std::string regime(options->regime);
        if (regime == "m") {
          opts.regime = mnat::ProximityRegime::kM;
        } else if (regime == "mnat" || regime.empty()) {
          opts.regime = mnat::ProximityRegime::kMnat;
        } else {
          throw mnat::Error("unknown proximity regime '" + regime + "'");
        }
      }
      if (options->variant != nullptr) opts.variant = options->variant;
    }
    std::vector<mnat::TheoremVerdict> verdicts =
        mnat::sweep_theorem(f->fn, id, opts);
    bool all_hold = true;
    json arr = json::array();
    for (const auto& v : verdicts) {
      if (v.fails()) all_hold = false;
      arr.push_back(mnat::verdict_json(v));
    }
    *all_hold_out = all_hold ? 1 : 0;
    if (verdicts_json_out != nullptr) {
      *verdicts_json_out = dup_string(arr.dump(2));
    }
    return MNAT_OK;
  });
}

mnat_status mnat_gallery_build(const char* name, int64_t k,
                               mnat_function** out, char** error_message) {
  if (name == nullptr || out == nullptr) return MNAT_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  std::string id(name);
  if (!known_name(mnat::gallery_names(), id)) {
    set_message(error_message, "unknown gallery entry '" + id + "'");
    return MNAT_ERR_UNKNOWN_NAME;
  }
  return guarded(error_message, [&] {
    mnat::GalleryEntry entry = mnat::gallery_build(id, k > 0 ? k : 5);
    *out = new mnat_function{std::move(entry.function)};
    return MNAT_OK;
  });
}

mnat_status mnat_gallery_names(char** json_out) {
  if (json_out == nullptr) return MNAT_ERR_INVALID_ARGUMENT;
  json arr = json::array();
  for (const auto& n : mnat::gallery_names()) arr.push_back(n);
  *json_out = dup_string(arr.dump());
  return MNAT_OK;
}

mnat_status mnat_gallery_audit(int* ok_out, char** report_json_out,
                               char** error_message) {
  if (ok_out == nullptr) return MNAT_ERR_INVALID_ARGUMENT;
  return guarded(error_message, [&] {
    mnat::AuditReport report = mnat::gallery_audit();
    *ok_out = report.ok ? 1 : 0;
    if (report_json_out != nullptr) {
      *report_json_out = dup_string(mnat::audit_json(report).dump(2));
    }
    return MNAT_OK;
  });
}

} /* extern "C" */
