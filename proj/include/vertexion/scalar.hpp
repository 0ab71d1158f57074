#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace vertexion {

/*
 * Exact rational number.
 *
 * Always canonical: denominator > 0 and gcd(numerator, denominator) = 1.
 * Every identity in the library is a rational-function identity in its
 * parameters, so all comparisons are plain equality.
 *
 * Serialized form is "p/q", or "p" when the denominator is 1.
 */
class Scalar {
 public:
  Scalar() = default;

  template <std::integral I>
  Scalar(I value) : value_(mpz_class(static_cast<long>(value))) {}

  /// Throws DivisionByZero when den == 0.
  Scalar(long num, long den);

  explicit Scalar(mpq_class value);

  /// Accepts "p/q" or "p" with optional leading '-'. Anything else throws ParseError.
  static Scalar parse(std::string_view text);

  [[nodiscard]] std::string str() const;

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }

  /// Throws DivisionByZero on zero.
  [[nodiscard]] Scalar inverse() const;

  /// Integer power; negative exponents need a nonzero base.
  [[nodiscard]] Scalar pow(long exponent) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  mpq_class value_{0};
};

Scalar factorial(int n);

/// Product over a range of scalars; empty range gives 1.
template <typename Range>
Scalar product(const Range& values) {
  Scalar acc{1};
  for (const auto& v : values) acc *= v;
  return acc;
}

}  // namespace vertexion
