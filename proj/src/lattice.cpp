#include "mnat/lattice.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "mnat/extended_value.hpp"

namespace mnat {

const Rational& ExtendedValue::finite_value() const {
  if (!finite_) throw Error("finite_value() on +inf");
  return value_;
}

std::string ExtendedValue::to_string() const {
  return finite_ ? value_.to_string() : "inf";
}

std::int64_t LatticePoint::coord(int i) const {
  if (i < 1 || i > dim()) {
    throw DimensionError("coordinate index " + std::to_string(i) +
                         " out of range for dimension " +
                         std::to_string(dim()));
  }
  return coords_[static_cast<size_t>(i - 1)];
}

void LatticePoint::set_coord(int i, std::int64_t v) {
  if (i < 1 || i > dim()) {
    throw DimensionError("coordinate index " + std::to_string(i) +
                         " out of range for dimension " +
                         std::to_string(dim()));
  }
  coords_[static_cast<size_t>(i - 1)] = v;
}

std::int64_t LatticePoint::coord_sum() const {
  std::int64_t s = 0;
  for (auto c : coords_) s += c;
  return s;
}

LatticePoint LatticePoint::operator-(const LatticePoint& o) const {
  if (dim() != o.dim()) {
    throw DimensionError("difference of points of dimensions " +
                         std::to_string(dim()) + " and " +
                         std::to_string(o.dim()));
  }
  std::vector<std::int64_t> d(coords_);
  for (size_t k = 0; k < d.size(); ++k) d[k] -= o.coords_[k];
  return LatticePoint(std::move(d));
}

bool LatticePoint::operator<(const LatticePoint& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  return coords_ < o.coords_;
}

std::string LatticePoint::to_string() const {
  std::ostringstream out;
  out << "(";
  for (size_t k = 0; k < coords_.size(); ++k) {
    if (k) out << ",";
    out << coords_[k];
  }
  out << ")";
  return out.str();
}

LatticePoint exchange_step(const LatticePoint& x, int i, int j) {
  const int n = x.dim();
  if (i < 0 || i > n || j < 0 || j > n) {
    throw DimensionError("exchange indices (" + std::to_string(i) + "," +
                         std::to_string(j) + ") out of range for dimension " +
                         std::to_string(n));
  }
  LatticePoint r = x;
  if (i != kNullIndex) r.set_coord(i, r.coord(i) - 1);
  if (j != kNullIndex) r.set_coord(j, r.coord(j) + 1);
  return r;
}

std::vector<int> supp_pos(const LatticePoint& d) {
  std::vector<int> r;
  for (int i = 1; i <= d.dim(); ++i) {
    if (d.coord(i) > 0) r.push_back(i);
  }
  return r;
}

std::vector<int> supp_neg(const LatticePoint& d) {
  std::vector<int> r;
  for (int i = 1; i <= d.dim(); ++i) {
    if (d.coord(i) < 0) r.push_back(i);
  }
  return r;
}

std::int64_t l1_distance(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint d = a - b;
  std::int64_t s = 0;
  for (auto c : d.coords()) s += c < 0 ? -c : c;
  return s;
}

std::int64_t linf_distance(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint d = a - b;
  std::int64_t m = 0;
  for (auto c : d.coords()) m = std::max(m, c < 0 ? -c : c);
  return m;
}

std::int64_t linf_diameter(const std::vector<LatticePoint>& points) {
  IntBox box = coordinate_bounds(points);
  std::int64_t m = 0;
  for (int i = 1; i <= box.dim(); ++i) {
    m = std::max(m, box.upper().coord(i) - box.lower().coord(i));
  }
  return m;
}

IntBox::IntBox(LatticePoint lower, LatticePoint upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.dim() != upper_.dim()) {
    throw DimensionError("box corners of dimensions " +
                         std::to_string(lower_.dim()) + " and " +
                         std::to_string(upper_.dim()));
  }
}

bool IntBox::empty() const {
  for (int i = 1; i <= dim(); ++i) {
    if (lower_.coord(i) > upper_.coord(i)) return true;
  }
  return dim() == 0;
}

bool IntBox::contains(const LatticePoint& p) const {
  if (p.dim() != dim()) {
    throw DimensionError("point of dimension " + std::to_string(p.dim()) +
                         " against box of dimension " + std::to_string(dim()));
  }
  for (int i = 1; i <= dim(); ++i) {
    if (p.coord(i) < lower_.coord(i) || p.coord(i) > upper_.coord(i)) {
      return false;
    }
  }
  return true;
}

std::int64_t IntBox::volume() const {
  if (empty()) return 0;
  __int128 v = 1;
  for (int i = 1; i <= dim(); ++i) {
    v *= upper_.coord(i) - lower_.coord(i) + 1;
    if (v > std::numeric_limits<std::int64_t>::max()) {
      return std::numeric_limits<std::int64_t>::max();
    }
  }
  return static_cast<std::int64_t>(v);
}

void IntBox::clamp_upper(int i, std::int64_t bound) {
  upper_.set_coord(i, std::min(upper_.coord(i), bound));
}

void IntBox::clamp_lower(int i, std::int64_t bound) {
  lower_.set_coord(i, std::max(lower_.coord(i), bound));
}

std::string IntBox::to_string() const {
  return "[" + lower_.to_string() + "," + upper_.to_string() + "]";
}

IntBox coordinate_bounds(const std::vector<LatticePoint>& points) {
  if (points.empty()) {
    throw EmptyDomainError("coordinate bounds of an empty point set");
  }
  LatticePoint lo = points.front();
  LatticePoint hi = points.front();
  for (const auto& p : points) {
    if (p.dim() != lo.dim()) {
      throw DimensionError("mixed dimensions in point set");
    }
    for (int i = 1; i <= lo.dim(); ++i) {
      lo.set_coord(i, std::min(lo.coord(i), p.coord(i)));
      hi.set_coord(i, std::max(hi.coord(i), p.coord(i)));
    }
  }
  return IntBox(std::move(lo), std::move(hi));
}

std::vector<LatticePoint> box_points(const IntBox& box,
                                     std::int64_t max_points) {
  std::vector<LatticePoint> out;
  if (box.empty()) return out;
  if (box.volume() > max_points) {
    throw Error("box " + box.to_string() + " holds " +
                std::to_string(box.volume()) + " points, limit " +
                std::to_string(max_points));
  }
  out.reserve(static_cast<size_t>(box.volume()));
  LatticePoint p = box.lower();
  const int n = box.dim();
  while (true) {
    out.push_back(p);
    int i = n;
    while (i >= 1 && p.coord(i) == box.upper().coord(i)) {
      p.set_coord(i, box.lower().coord(i));
      --i;
    }
    if (i == 0) break;
    p.set_coord(i, p.coord(i) + 1);
  }
  return out;
}

bool Halfspace::contains(const LatticePoint& p) const {
  switch (kind) {
    case Kind::kCoordLe:
      return p.coord(index) <= bound;
    case Kind::kCoordGe:
      return p.coord(index) >= bound;
    case Kind::kSumLe:
      return p.coord_sum() <= bound;
    case Kind::kSumGe:
      return p.coord_sum() >= bound;
  }
  return false;
}

std::string Halfspace::to_string() const {
  std::string lhs = (kind == Kind::kSumLe || kind == Kind::kSumGe)
                        ? "y(N)"
                        : "y(" + std::to_string(index) + ")";
  std::string op =
      (kind == Kind::kCoordLe || kind == Kind::kSumLe) ? " <= " : " >= ";
  return lhs + op + std::to_string(bound);
}

}  // namespace mnat
