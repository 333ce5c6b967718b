#ifndef MNAT_ERRORS_HPP
#define MNAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mnat {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Lattice point or index length does not match the ambient dimension.
struct DimensionError : Error {
  using Error::Error;
};

// Operation requires a nonempty effective domain / point set.
struct EmptyDomainError : Error {
  using Error::Error;
};

// A point argument must lie in the effective domain but does not.
struct NotInDomainError : Error {
  using Error::Error;
};

// Malformed function file or JSON document.
struct ParseError : Error {
  using Error::Error;
};

// Strict-mode axiom precondition failed. The offending report is
// available as JSON for diagnostics.
struct PreconditionError : Error {
  PreconditionError(const std::string& what, std::string report)
      : Error(what), report_json(std::move(report)) {}
  std::string report_json;
};

// An algorithm detected an internally inconsistent state, which signals
// violated preconditions on the input (e.g. a cut emptied the candidate
// set, or the peeled box misses the point set).
struct DiagnosticError : Error {
  using Error::Error;
};

}  // namespace mnat

#endif  // MNAT_ERRORS_HPP
