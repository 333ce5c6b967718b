#ifndef MNAT_LATTICE_HPP
#define MNAT_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mnat/errors.hpp"

namespace mnat {

// Exchange indices are 1-based: 1..n select a coordinate, 0 is the null
// element whose characteristic vector is the zero vector. Every index
// parameter in the library follows this convention.
constexpr int kNullIndex = 0;

// An integer vector in Z^n. Coordinates are stored 0-based internally;
// coord(i) uses the 1-based index convention above.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<std::int64_t> coords)
      : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<std::int64_t> coords)
      : coords_(coords) {}
  static LatticePoint zeros(int dim) {
    return LatticePoint(std::vector<std::int64_t>(static_cast<size_t>(dim)));
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  // 1-based coordinate access; throws on out-of-range index.
  std::int64_t coord(int i) const;
  void set_coord(int i, std::int64_t v);

  // Sum of all coordinates, written x(N) in certificates.
  std::int64_t coord_sum() const;

  LatticePoint operator-(const LatticePoint& o) const;
  bool operator==(const LatticePoint& o) const { return coords_ == o.coords_; }
  bool operator!=(const LatticePoint& o) const { return coords_ != o.coords_; }
  // Lexicographic; defines the canonical enumeration order used for
  // deterministic certificates.
  bool operator<(const LatticePoint& o) const;

  std::string to_string() const;  // "(a,b,c)"

 private:
  std::vector<std::int64_t> coords_;
};

// x - chi_i + chi_j with chi_0 = 0. Indices must lie in {0, ..., dim}.
LatticePoint exchange_step(const LatticePoint& x, int i, int j);

// Indices (ascending, 1-based) of strictly positive / negative coordinates.
std::vector<int> supp_pos(const LatticePoint& d);
std::vector<int> supp_neg(const LatticePoint& d);

std::int64_t l1_distance(const LatticePoint& a, const LatticePoint& b);
std::int64_t linf_distance(const LatticePoint& a, const LatticePoint& b);

// Max-norm diameter of a nonempty finite set; equals the largest
// per-coordinate range. Throws EmptyDomainError on an empty set.
std::int64_t linf_diameter(const std::vector<LatticePoint>& points);

// Integer interval [lower, upper] in Z^n. Can be empty, which is
// queryable; all callers treat an empty box as "no candidates left".
class IntBox {
 public:
  IntBox() = default;
  IntBox(LatticePoint lower, LatticePoint upper);

  int dim() const { return lower_.dim(); }
  const LatticePoint& lower() const { return lower_; }
  const LatticePoint& upper() const { return upper_; }

  bool empty() const;
  bool contains(const LatticePoint& p) const;
  // Number of lattice points, 0 if empty. Saturates at int64 max.
  std::int64_t volume() const;

  // Tighten one side; may produce an empty box.
  void clamp_upper(int i, std::int64_t bound);  // upper(i) := min(upper(i), bound)
  void clamp_lower(int i, std::int64_t bound);  // lower(i) := max(lower(i), bound)

  std::string to_string() const;

 private:
  LatticePoint lower_;
  LatticePoint upper_;
};

// Componentwise min/max box of a nonempty set; throws EmptyDomainError
// otherwise.
IntBox coordinate_bounds(const std::vector<LatticePoint>& points);

// All lattice points of a box in canonical (lexicographic) order.
// Throws Error when the box holds more than max_points.
std::vector<LatticePoint> box_points(const IntBox& box,
                                     std::int64_t max_points = 2'000'000);

// One linear constraint of a minimizer cut: a bound on a single
// coordinate or on the coordinate sum.
struct Halfspace {
  enum class Kind { kCoordLe, kCoordGe, kSumLe, kSumGe };
  Kind kind = Kind::kCoordLe;
  int index = 0;  // 1-based coordinate; unused for the sum forms
  std::int64_t bound = 0;

  bool contains(const LatticePoint& p) const;
  std::string to_string() const;

  static Halfspace coord_le(int i, std::int64_t b) {
    return {Kind::kCoordLe, i, b};
  }
  static Halfspace coord_ge(int i, std::int64_t b) {
    return {Kind::kCoordGe, i, b};
  }
  static Halfspace sum_le(std::int64_t b) { return {Kind::kSumLe, 0, b}; }
  static Halfspace sum_ge(std::int64_t b) { return {Kind::kSumGe, 0, b}; }
};

}  // namespace mnat

#endif  // MNAT_LATTICE_HPP
