#ifndef MNAT_JSON_IO_HPP
#define MNAT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "mnat/analysis.hpp"
#include "mnat/axioms.hpp"
#include "mnat/gallery.hpp"
#include "mnat/minimize.hpp"

// JSON renderings of every report type the library produces, plus the
// replay entry points that re-derive a serialized certificate from the
// function alone. Schemas for the output documents live under schemas/.

namespace mnat {

nlohmann::json point_json(const LatticePoint& p);
LatticePoint point_from_json(const nlohmann::json& j);

// Integers as JSON numbers, other rationals as "p/q" strings, +inf as
// the string "inf".
nlohmann::json value_json(const ExtendedValue& v);
nlohmann::json value_json(const Rational& v);
ExtendedValue value_from_json(const nlohmann::json& j);

nlohmann::json halfspace_json(const Halfspace& h);

nlohmann::json report_json(const AxiomReport& r);
nlohmann::json report_json(const ProjectedAxiomReport& r);
nlohmann::json trace_json(const DescentTrace& t);
nlohmann::json reduction_json(const ReductionResult& r);
nlohmann::json snapshot_json(const GeodesicSnapshot& s);
nlohmann::json verdict_json(const TheoremVerdict& v);
nlohmann::json audit_json(const AuditReport& r);

// Recompute every candidate outcome recorded in a serialized axiom
// report against f and compare field by field. True iff identical;
// otherwise *mismatch names the first difference.
bool replay_axiom_report_json(const TabulatedFunction& f,
                              const nlohmann::json& report,
                              std::string* mismatch = nullptr);

// Re-run the verifier named by a serialized verdict's "theorem" and
// "inputs" fields and require the identical verdict document.
bool replay_verdict_json(const TabulatedFunction& f,
                         const nlohmann::json& verdict,
                         std::string* mismatch = nullptr);

}  // namespace mnat

#endif  // MNAT_JSON_IO_HPP
