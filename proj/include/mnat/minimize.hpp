#ifndef MNAT_MINIMIZE_HPP
#define MNAT_MINIMIZE_HPP

#include <optional>
#include <vector>

#include "mnat/function.hpp"

namespace mnat {

// True iff every exchange neighbor x - chi_i + chi_j has value >= f(x).
// Throws NotInDomainError if f(x) is infinite.
bool is_local_min(const EvalOracle& f, const LatticePoint& x);

struct SteepestChoice {
  int i = 0;
  int j = 0;
  ExtendedValue value;
};

// The strictly improving exchange neighbor of minimum value, or nullopt
// if x is locally minimal (within bounds, when given). Ties are broken
// deterministically: pairs with both indices nonnull first, then smaller
// i, then smaller j.
std::optional<SteepestChoice> steepest_direction(
    const EvalOracle& f, const LatticePoint& x,
    const IntBox* bounds = nullptr);

struct DescentStep {
  LatticePoint x;  // point after the move
  int i = 0;
  int j = 0;
  Rational value;  // f(x) after the move; strictly decreasing along steps
};

struct DescentTrace {
  LatticePoint start;
  std::vector<DescentStep> steps;
  LatticePoint minimizer;
  std::int64_t iterations = 0;  // == steps.size()
};

struct MinimizeOptions {
  enum class Mode { kAuto, kStrict, kFast };
  // Strict mode verifies the semi-strict exchange axiom (and for domain
  // reduction the set exchange axiom on the domain) before running, and
  // throws PreconditionError on failure. kAuto is strict up to 10^4
  // table entries.
  Mode mode = Mode::kAuto;
  // Audit mode cross-checks the candidate region against the brute-force
  // minimizer set after every shrink step.
  bool audit = false;
};

// Repeated steepest exchange steps until local minimality. Each step
// strictly improves, so on a table the iteration count is bounded by the
// number of distinct values.
DescentTrace basic_steepest_descent(const TabulatedFunction& f,
                                    const LatticePoint& x0,
                                    const MinimizeOptions& options = {});
// Oracle variant: no strict checks; throws Error if max_iterations steps
// do not reach a local minimum.
DescentTrace basic_steepest_descent(const EvalOracle& f,
                                    const LatticePoint& x0,
                                    std::int64_t max_iterations);

// Steepest descent restricted to a shrinking box [l, u] that is kept
// guaranteed to contain a minimizer: after a move with nonnull i the
// upper bound u(i) drops by one, after a move with nonnull j the lower
// bound l(j) rises by one. Terminates within sum(u - l) iterations.
DescentTrace modified_steepest_descent(const TabulatedFunction& f,
                                       const LatticePoint& x0,
                                       const IntBox& box,
                                       const MinimizeOptions& options = {});
DescentTrace modified_steepest_descent(const EvalOracle& f,
                                       const LatticePoint& x0,
                                       const IntBox& box);

// The peeled box of a nonempty point set: per coordinate, the integer
// interval inside the convex combinations
//   l' = (1 - 1/n) l + (1/n) u,   u' = (1/n) l + (1 - 1/n) u
// computed with exact scaled-integer comparisons. When [ceil(l'),
// floor(u')] is empty in a coordinate it is widened outward to
// [floor(l'), ceil(u')], which still contains an integer and is always
// inside [l, u]. For n = 1 the combination coefficients degenerate, so
// both are taken as 1/2 (plain bisection).
IntBox peel(const std::vector<LatticePoint>& points);

// First point of the set (in canonical order) inside its peeled box.
// Throws DiagnosticError naming an offending coordinate if no point of
// the set lies in the peeled box; that cannot happen when the set
// satisfies the set exchange axiom.
LatticePoint find_in_peeled(const std::vector<LatticePoint>& points);

struct CutCertificate {
  LatticePoint at;  // the peel point the cut was derived from
  int i = 0;
  int j = 0;
  std::vector<Halfspace> halfspaces;
};

struct ReductionIteration {
  LatticePoint peel_point;
  CutCertificate cut;
  int type_index = 0;  // the coordinate whose range the cut shrinks
};

struct ReductionState {
  IntBox box;
  std::vector<LatticePoint> candidate_set;
  std::vector<ReductionIteration> iteration_log;
};

struct ReductionResult {
  LatticePoint minimizer;
  ReductionState state;
};

// Candidate-set reduction: repeatedly peel the candidate set, test the
// peel point for local (hence global) minimality, and otherwise cut the
// candidate set with the half-spaces of the weak minimizer cut at the
// steepest pair. When both cut half-spaces apply, the iteration type is
// recorded as i. Throws DiagnosticError if a cut empties the candidate
// set, which signals a violated precondition.
ReductionResult domain_reduction(const TabulatedFunction& f,
                                 const MinimizeOptions& options = {});

}  // namespace mnat

#endif  // MNAT_MINIMIZE_HPP
