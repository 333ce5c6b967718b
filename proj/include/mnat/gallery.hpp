#ifndef MNAT_GALLERY_HPP
#define MNAT_GALLERY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mnat/function.hpp"

namespace mnat {

// An expectation an entry makes about itself, replayable by the audit.
// check is one of
//   axiom:<id>            axiom checker on the entry's function
//   axiom:ssqm-nat-prj:i|ii|iii   one part of the projected axiom
//   proj-axiom:<id>       axiom checker on the sum-lifted function
//   theorem:<id>          theorem verifier; context fields as applicable
struct Expectation {
  std::string check;
  std::optional<LatticePoint> x;
  int i = -1;  // pair context
  int j = -1;
  std::string variant;  // directional variant
  int fixed = -1;
  std::int64_t alpha = 0;
  std::string expected;  // "pass", "fail" or "hypothesis-not-met"
};

struct GalleryEntry {
  std::string name;
  TabulatedFunction function;
  std::vector<Expectation> expected;
};

// The small counterexample catalog. Each entry embeds the verdicts it is
// known to produce so the audit is self-contained.
GalleryEntry example_2_1();
GalleryEntry example_2_2();
GalleryEntry example_2_4(std::int64_t k);  // requires k >= 2
GalleryEntry example_4_1();
GalleryEntry example_4_2();

// Coordinate negation: keys negated, values kept. Generic combinator;
// the curated "example-4-1-neg" entry adds its own expectations.
GalleryEntry example_neg_flip(const GalleryEntry& entry);

std::vector<std::string> gallery_names();
// Throws Error for unknown names; k is used by example-2-4 only.
GalleryEntry gallery_build(const std::string& name, std::int64_t k = 5);

struct AuditItem {
  std::string entry;
  std::string check;
  std::string expected;
  std::string actual;
  bool match = false;
};

struct AuditReport {
  bool ok = true;
  std::vector<AuditItem> items;
};

// Replays every expectation of every catalog entry (example-2-4 at
// k = 2 and k = 5, which sit on the two sides of the proximity bound).
AuditReport gallery_audit();

// Random instance generators for property suites. All are deterministic
// per seed.

// f(x) = sum_i phi_i(x(i)) with integer convex phi_i drawn from the
// seed. Separable convex functions on a box satisfy the exchange
// inequality; this is asserted before returning.
TabulatedFunction gen_separable_convex(const IntBox& box, std::uint64_t seed);

// Remap values through a strictly increasing map given as (from, to)
// pairs covering every value of f. The semi-strict axiom verdict only
// depends on value order, so it is preserved; this is asserted.
TabulatedFunction monotone_transform(
    const TabulatedFunction& f,
    const std::vector<std::pair<Rational, Rational>>& value_map);

// Rejection-sample a table on a random subdomain of the box with integer
// values in [value_lo, value_hi] until it passes the named axiom
// checker, or give up after max_attempts.
std::optional<TabulatedFunction> gen_random_filtered(
    const IntBox& box, std::int64_t value_lo, std::int64_t value_hi,
    std::uint64_t seed, const std::string& axiom, int max_attempts);

}  // namespace mnat

#endif  // MNAT_GALLERY_HPP
