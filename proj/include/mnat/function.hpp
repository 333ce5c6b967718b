#ifndef MNAT_FUNCTION_HPP
#define MNAT_FUNCTION_HPP

#include <map>
#include <string>
#include <vector>

#include "mnat/extended_value.hpp"
#include "mnat/lattice.hpp"

namespace mnat {

// Evaluation-only view of a function Z^n -> R u {+inf}. Algorithms that
// need nothing beyond point evaluation (local search, bounded descent)
// are written against this interface so they also run on black-box
// functions.
class EvalOracle {
 public:
  virtual ~EvalOracle() = default;
  virtual int dim() const = 0;
  virtual ExtendedValue eval(const LatticePoint& x) const = 0;
};

// A function given by a finite table of finite values; every point not in
// the table evaluates to +infinity, so the effective domain is exactly
// the key set. Immutable once built and safe for concurrent reads.
class TabulatedFunction : public EvalOracle {
 public:
  explicit TabulatedFunction(int dim);
  TabulatedFunction(int dim,
                    std::vector<std::pair<LatticePoint, Rational>> entries);

  int dim() const override { return dim_; }
  ExtendedValue eval(const LatticePoint& x) const override;

  std::size_t size() const { return table_.size(); }
  bool domain_empty() const { return table_.empty(); }

  // Keys in canonical (lexicographic) order.
  std::vector<LatticePoint> domain() const;
  const std::map<LatticePoint, Rational>& table() const { return table_; }

  bool in_domain(const LatticePoint& x) const;

  // Insertion helper for builders; duplicate points are an error.
  void insert(const LatticePoint& x, const Rational& value);

 private:
  int dim_;
  std::map<LatticePoint, Rational> table_;
};

// Function file format:
//   {"dim": n, "points": [{"x": [int, ...], "f": value}, ...]}
// where value is a JSON number or a "p/q" string. Each point appears at
// most once; unlisted points are +infinity.
TabulatedFunction parse_function_json(const std::string& text);
TabulatedFunction load_function_file(const std::string& path);
std::string emit_function_json(const TabulatedFunction& f);

}  // namespace mnat

#endif  // MNAT_FUNCTION_HPP
