#ifndef MNAT_RATIONAL_HPP
#define MNAT_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mnat {

// Exact rational on 64-bit numerator/denominator, normalized so that
// den > 0 and gcd(|num|, den) == 1. All comparisons are exact; the axiom
// checkers depend on strict-vs-equal distinctions, so no floating point
// is allowed anywhere near function values.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  // Accepts "p", "p/q" and (exactly representable) decimal strings.
  static Rational parse(const std::string& text);

 private:
  static Rational make_normalized(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace mnat

#endif  // MNAT_RATIONAL_HPP
