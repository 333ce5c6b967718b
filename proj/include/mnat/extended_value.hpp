#ifndef MNAT_EXTENDED_VALUE_HPP
#define MNAT_EXTENDED_VALUE_HPP

#include <string>

#include "mnat/rational.hpp"

namespace mnat {

// A rational value extended with +infinity. Infinity absorbs addition and
// is the unique maximum of the order; infinity == infinity, and
// infinity >= infinity holds.
class ExtendedValue {
 public:
  ExtendedValue() = default;
  ExtendedValue(Rational v) : finite_(true), value_(v) {}  // NOLINT
  static ExtendedValue infinity() { return ExtendedValue(Tag::kInf); }

  bool is_finite() const { return finite_; }
  const Rational& finite_value() const;

  ExtendedValue operator+(const ExtendedValue& o) const {
    if (!finite_ || !o.finite_) return infinity();
    return ExtendedValue(value_ + o.value_);
  }

  bool operator==(const ExtendedValue& o) const {
    if (finite_ != o.finite_) return false;
    return !finite_ || value_ == o.value_;
  }
  bool operator!=(const ExtendedValue& o) const { return !(*this == o); }
  bool operator<(const ExtendedValue& o) const {
    if (!finite_) return false;         // inf < anything is false
    if (!o.finite_) return true;        // finite < inf
    return value_ < o.value_;
  }
  bool operator<=(const ExtendedValue& o) const { return !(o < *this); }
  bool operator>(const ExtendedValue& o) const { return o < *this; }
  bool operator>=(const ExtendedValue& o) const { return !(*this < o); }

  // "inf" or the rational rendering.
  std::string to_string() const;

 private:
  enum class Tag { kInf };
  explicit ExtendedValue(Tag) : finite_(false) {}

  bool finite_ = true;
  Rational value_;
};

}  // namespace mnat

#endif  // MNAT_EXTENDED_VALUE_HPP
