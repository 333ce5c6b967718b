#ifndef MNAT_TESTS_HELPERS_HPP
#define MNAT_TESTS_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "mnat/function.hpp"

namespace mnat_tests {

using mnat::LatticePoint;
using mnat::Rational;
using mnat::TabulatedFunction;

struct Entry {
  std::initializer_list<std::int64_t> x;
  std::int64_t f;
};

inline TabulatedFunction make_function(int dim,
                                       std::initializer_list<Entry> entries) {
  TabulatedFunction f(dim);
  for (const auto& e : entries) {
    f.insert(LatticePoint(std::vector<std::int64_t>(e.x)), Rational(e.f));
  }
  return f;
}

inline LatticePoint pt(std::initializer_list<std::int64_t> coords) {
  return LatticePoint(std::vector<std::int64_t>(coords));
}

// Independent oracles, kept deliberately naive; the library is measured
// against these, never the other way around.

inline std::vector<LatticePoint> brute_argmin(const TabulatedFunction& f) {
  std::vector<LatticePoint> best;
  bool have = false;
  Rational best_value(0);
  for (const auto& [p, v] : f.table()) {
    if (!have || v < best_value) {
      best_value = v;
      best.clear();
      best.push_back(p);
      have = true;
    } else if (v == best_value) {
      best.push_back(p);
    }
  }
  std::sort(best.begin(), best.end());
  return best;
}

// Pairwise max-norm scan (quadratic on purpose).
inline std::int64_t brute_linf_diameter(
    const std::vector<LatticePoint>& points) {
  std::int64_t best = 0;
  for (const auto& a : points) {
    for (const auto& b : points) {
      best = std::max(best, mnat::linf_distance(a, b));
    }
  }
  return best;
}

inline std::int64_t brute_l1_to_nearest(const TabulatedFunction& f,
                                        const LatticePoint& x) {
  std::int64_t best = -1;
  for (const auto& m : brute_argmin(f)) {
    std::int64_t d = mnat::l1_distance(m, x);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

inline bool brute_is_global_min(const TabulatedFunction& f,
                                const LatticePoint& x) {
  auto best = brute_argmin(f);
  return std::find(best.begin(), best.end(), x) != best.end();
}

}  // namespace mnat_tests

#endif  // MNAT_TESTS_HELPERS_HPP
