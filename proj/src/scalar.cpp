#include "vertexion/scalar.hpp"

#include <cctype>
#include <ostream>

#include "vertexion/errors.hpp"

namespace vertexion {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(mpz_class(num), mpz_class(den));
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0) throw DivisionByZero();
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw ParseError("not an exact rational \"p/q\": \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (sgn(d) == 0) throw DivisionByZero();
  return Scalar(mpq_class(n, d));
}

std::string Scalar::str() const { return value_.get_str(10); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Scalar(mpq_class(1) / value_);
}

Scalar Scalar::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Scalar(mpq_class(num, den));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  value_ += rhs.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar factorial(int n) {
  Scalar acc{1};
  for (int k = 2; k <= n; ++k) acc *= Scalar(k);
  return acc;
}

}  // namespace vertexion
