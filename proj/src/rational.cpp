#include "nlgames/rational.hpp"

#include <cstdio>
#include <stdexcept>

namespace nlgames {

ExactProb::ExactProb(BigInt num, BigInt den) {
  if (den <= 0) throw std::domain_error("ExactProb: denominator must be positive");
  if (num < 0) throw std::domain_error("ExactProb: numerator must be non-negative");
  if (num > den) throw std::domain_error("ExactProb: value exceeds 1");
  value_ = BigRational(std::move(num), std::move(den));
}

ExactProb::ExactProb(BigRational value) : value_(std::move(value)) {
  if (value_ < 0 || value_ > 1) throw std::domain_error("ExactProb: value outside [0, 1]");
}

ExactProb ExactProb::operator/(const ExactProb& rhs) const {
  if (rhs.value_ == 0) throw std::domain_error("ExactProb: division by zero");
  return ExactProb(value_ / rhs.value_);
}

std::string ExactProb::fraction_string() const {
  if (value_ == 0) return "0";
  if (value_ == 1) return "1";
  return num().str() + "/" + den().str();
}

std::string ExactProb::decimal_string(int significant_digits) const {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, approx());
  return std::string(buf);
}

}  // namespace nlgames
