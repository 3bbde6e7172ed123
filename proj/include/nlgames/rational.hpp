#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace nlgames {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact probability: a reduced big-integer rational confined to [0, 1].
// All arithmetic is exact; results leaving [0, 1] are rejected.
class ExactProb {
 public:
  ExactProb() : value_(0) {}
  ExactProb(BigInt num, BigInt den);
  explicit ExactProb(BigRational value);

  static ExactProb zero() { return ExactProb(); }
  static ExactProb one() { return ExactProb(BigRational(1)); }

  BigInt num() const { return numerator(value_); }
  BigInt den() const { return denominator(value_); }
  const BigRational& value() const { return value_; }

  ExactProb operator+(const ExactProb& rhs) const { return ExactProb(value_ + rhs.value_); }
  ExactProb operator-(const ExactProb& rhs) const { return ExactProb(value_ - rhs.value_); }
  ExactProb operator*(const ExactProb& rhs) const { return ExactProb(value_ * rhs.value_); }
  ExactProb operator/(const ExactProb& rhs) const;

  bool operator==(const ExactProb& rhs) const { return value_ == rhs.value_; }
  std::strong_ordering operator<=>(const ExactProb& rhs) const {
    if (value_ < rhs.value_) return std::strong_ordering::less;
    if (value_ > rhs.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  double approx() const { return value_.convert_to<double>(); }

  // "num/den" ("0" and "1" for the endpoints).
  std::string fraction_string() const;

  // Decimal approximation, 12 significant digits by default.
  std::string decimal_string(int significant_digits = 12) const;

 private:
  BigRational value_;  // kept canonical (reduced, positive denominator) by cpp_rational
};

}  // namespace nlgames
