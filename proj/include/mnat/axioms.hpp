#ifndef MNAT_AXIOMS_HPP
#define MNAT_AXIOMS_HPP

#include <string>
#include <vector>

#include "mnat/function.hpp"

namespace mnat {

// Everything observed about one exchange candidate (i, j) at a pair
// (x, y): the four evaluated values and the comparisons the axioms are
// built from. All comparisons are exact and use the extended-value
// conventions (an out-of-domain target evaluates to +inf; inf >= inf is
// true).
struct ExchangeOutcome {
  int i = 0;
  int j = 0;
  ExtendedValue f_x;
  ExtendedValue f_y;
  ExtendedValue f_x_step;  // f(x - chi_i + chi_j)
  ExtendedValue f_y_step;  // f(y + chi_i - chi_j)
  bool cond_x_improves = false;   // f(x - chi_i + chi_j) < f(x)
  bool cond_y_improves = false;   // f(y + chi_i - chi_j) < f(y)
  bool cond_both_equal = false;   // both steps keep the value unchanged
  bool inequality_holds = false;  // f(x) + f(y) >= sum of the two steps
};

ExchangeOutcome evaluate_exchange(const EvalOracle& f, const LatticePoint& x,
                                  const LatticePoint& y, int i, int j);

// A certificate for one failed quantifier instance: no candidate j (or
// (i, j) pair for the descent lemma) satisfied the axiom's requirement.
// Replaying every candidate against f reproduces the recorded outcomes.
struct AxiomViolation {
  LatticePoint x;
  LatticePoint y;
  int i = 0;
  std::vector<ExchangeOutcome> candidates;
};

struct AxiomReport {
  std::string axiom;
  bool pass = true;
  // Empty iff pass. The first entry is the violation smallest in the
  // canonical loop order (x, then y, then i), independent of threading.
  std::vector<AxiomViolation> violations;

  const AxiomViolation& first_violation() const;
};

struct CheckOptions {
  bool exhaustive = false;  // collect all violations instead of the first
  int threads = 1;          // partitions the (x, y) scan; verdicts identical
};

// Exchange axiom with the exchange inequality; candidate j ranges over
// supp-(x - y) plus the null index.
AxiomReport check_mnat_exc(const TabulatedFunction& f,
                           const CheckOptions& options = {});

// Semi-strict relaxation: candidate j must strictly improve x, strictly
// improve y, or leave both values unchanged.
AxiomReport check_ssqm_nat(const TabulatedFunction& f,
                           const CheckOptions& options = {});

// Variants with candidate j restricted to supp-(x - y), no null index.
AxiomReport check_m_exc(const TabulatedFunction& f,
                        const CheckOptions& options = {});
AxiomReport check_ssqm(const TabulatedFunction& f,
                       const CheckOptions& options = {});

// The projected form of the semi-strict axiom, split by how the
// coordinate sums of x and y compare:
//   part i   x(N) > y(N): candidates supp-(x - y) plus null,
//   part ii  x(N) <= y(N): candidates supp-(x - y) only,
//   part iii x(N) < y(N): i fixed to the null index, candidates
//            supp-(x - y) only (never empty when x(N) < y(N)).
struct ProjectedAxiomReport {
  AxiomReport part_i;
  AxiomReport part_ii;
  AxiomReport part_iii;

  bool pass() const {
    return part_i.pass && part_ii.pass && part_iii.pass;
  }
};

ProjectedAxiomReport check_ssqm_nat_prj(const TabulatedFunction& f,
                                        const CheckOptions& options = {});

// Set exchange axiom: both exchanged points must remain in S. Checked as
// the exchange inequality on the 0/+inf indicator function of S, which
// is the same condition.
AxiomReport check_mnat_set(const std::vector<LatticePoint>& points,
                           const CheckOptions& options = {});

// For every ordered pair with f(x) > f(y) there must be a descending
// exchange at x with i in supp+(x - y) plus null and j in supp-(x - y)
// plus null. Candidates carry their own (i, j).
AxiomReport check_descent_lemma(const TabulatedFunction& f,
                                const CheckOptions& options = {});

AxiomReport check_axiom(const TabulatedFunction& f, const std::string& axiom,
                        const CheckOptions& options = {});

// Identifiers accepted by check_axiom (excluding the composite
// "ssqm-nat-prj", which callers handle through check_ssqm_nat_prj).
std::vector<std::string> axiom_names();

}  // namespace mnat

#endif  // MNAT_AXIOMS_HPP
