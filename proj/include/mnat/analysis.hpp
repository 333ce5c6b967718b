#ifndef MNAT_ANALYSIS_HPP
#define MNAT_ANALYSIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mnat/axioms.hpp"
#include "mnat/function.hpp"

namespace mnat {

// Ground truth by full enumeration of the table. Everything else in this
// header is measured against these.
Rational min_value(const TabulatedFunction& f);
std::vector<LatticePoint> argmin_set(const TabulatedFunction& f);
bool is_minimizer(const TabulatedFunction& f, const LatticePoint& x);

// Distances from x to the minimizer set:
//   mu        min L1 distance, with M_set the minimizers attaining it;
//   mu_tilde  min of L1 distance plus |coordinate-sum gap| (the L1
//             distance in the sum-lifted embedding), with M_tilde_set.
// Always mu <= mu_tilde <= 2 * mu.
struct GeodesicSnapshot {
  LatticePoint x;
  std::int64_t mu = 0;
  std::vector<LatticePoint> M_set;
  std::int64_t mu_tilde = 0;
  std::vector<LatticePoint> M_tilde_set;
};

GeodesicSnapshot geodesic_snapshot(const TabulatedFunction& f,
                                   const LatticePoint& x);

enum class VerdictOutcome { kHolds, kFails, kHypothesisNotMet };

std::string outcome_name(VerdictOutcome o);

struct TheoremVerdict {
  std::string theorem;
  VerdictOutcome outcome = VerdictOutcome::kHolds;
  std::optional<LatticePoint> witness;
  nlohmann::json inputs;           // enough to re-run the verifier
  nlohmann::json counter_context;  // falsifying data, present iff kFails

  bool holds() const { return outcome == VerdictOutcome::kHolds; }
  bool fails() const { return outcome == VerdictOutcome::kFails; }
};

// All distinct index pairs (i, j), i != j in {0..n}, minimizing
// f(x - chi_i + chi_j). Helper for exhaustive sweeps.
std::vector<std::pair<int, int>> minimizing_pairs(const TabulatedFunction& f,
                                                  const LatticePoint& x);

// Minimizer cut at a non-minimizer x for a minimizing distinct pair
// (i, j): some minimizer must satisfy
//   weak    x*(i) <= x(i)-1 and x*(j) >= x(j)+1   (i, j nonnull)
//           x*(i) <= x(i)-1                        (j null)
//           x*(j) >= x(j)+1                        (i null)
//   strong  as weak, plus x*(N) <= x(N)-1 when j is null and
//           x*(N) >= x(N)+1 when i is null.
TheoremVerdict verify_min_cut_weak(const TabulatedFunction& f,
                                   const LatticePoint& x, int i, int j);
TheoremVerdict verify_min_cut_strong(const TabulatedFunction& f,
                                     const LatticePoint& x, int i, int j);

// Directional minimizer cuts. Variants:
//   qi/qii/qiii/qiv  rows over one index with the null option; the
//                    hypothesis requires a nonnull index to attain the
//                    row minimum, else the verdict is hypothesis-not-met.
//   mi/mii/miii/miv  same rows, null cases included with coordinate-sum
//                    conclusions (no hypothesis).
//   Ai/Aii/Aiii      rows restricted to nonnull indices; x must not be a
//                    minimizer (else hypothesis-not-met).
// "fixed" is the pinned row index for qi/qii/mi/mii/Ai/Aii and is
// ignored by the others.
TheoremVerdict verify_min_cut_directional(const TabulatedFunction& f,
                                          const LatticePoint& x,
                                          const std::string& variant,
                                          int fixed);

std::vector<std::string> directional_variants();

// Geodesic step laws at a non-minimizer x with a minimizing distinct
// pair. statement-A uses mu/M with no sum constraints and decrement 2 or
// 1; geodesic uses mu_tilde/M_tilde with sum constraints in the null
// cases and decrement always 2.
TheoremVerdict verify_statement_a(const TabulatedFunction& f,
                                  const LatticePoint& x, int i, int j);
TheoremVerdict verify_geodesic(const TabulatedFunction& f,
                               const LatticePoint& x, int i, int j);

// Proximity of scaled-local minimizers to true minimizers.
//   mnat: hypothesis f(x) <= f at all x +- alpha*chi_i and
//         x - alpha*(chi_i - chi_j); bound n*(alpha-1) on both the
//         max-norm distance and the coordinate-sum gap.
//   m:    hypothesis over the x - alpha*(chi_i - chi_j) moves only;
//         bound (n-1)*(alpha-1) on the max-norm distance.
enum class ProximityRegime { kMnat, kM };

TheoremVerdict verify_proximity(const TabulatedFunction& f,
                                std::int64_t alpha, ProximityRegime regime);

// Lift to one dimension higher: keys become (x, -x(N)), values copied.
// The lifted domain lies in the zero-coordinate-sum hyperplane.
TabulatedFunction project_to_m(const TabulatedFunction& f);

// Local optimality over nonnull exchanges only, compared against global
// optimality. Meaningful for functions whose domain lies in a constant-
// sum hyperplane (e.g. outputs of project_to_m).
TheoremVerdict verify_local_global_m(const TabulatedFunction& f,
                                     const LatticePoint& x,
                                     bool strict = false);

// Equivalences between f and its lift: the exchange inequality transfers
// exactly, and the nonnull-only semi-strict axiom on the lift matches
// the three-part projected axiom on f (which implies the plain
// semi-strict axiom but is not implied by it).
std::vector<TheoremVerdict> verify_projection_bridge(const TabulatedFunction& f);

struct SweepOptions {
  std::int64_t alpha = 2;
  ProximityRegime regime = ProximityRegime::kMnat;
  std::string variant;  // directional sweeps: restrict to one variant
};

// Run one theorem verifier over every applicable context in f. Theorem
// names: min-cut-weak, min-cut-strong, min-cut-directional, statement-A,
// geodesic, proximity, local-global, projection-bridge.
std::vector<TheoremVerdict> sweep_theorem(const TabulatedFunction& f,
                                          const std::string& theorem,
                                          const SweepOptions& options = {});

std::vector<std::string> theorem_names();

}  // namespace mnat

#endif  // MNAT_ANALYSIS_HPP
