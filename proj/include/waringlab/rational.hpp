#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace waringlab {

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
 public:
  constexpr Rational(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "n/d", or "n" when d = 1.
  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend constexpr Rational operator+(Rational x, Rational y) {
    return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
  }
  friend constexpr Rational operator-(Rational x, Rational y) {
    return {x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_};
  }
  friend constexpr bool operator==(Rational x, Rational y) = default;
  friend constexpr std::strong_ordering operator<=>(Rational x, Rational y) {
    return x.num_ * y.den_ <=> y.num_ * x.den_;
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace waringlab
