#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace novikov {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or q == 0.
  static Rational parse(std::string_view text);

  /// "p/q" with q > 0, lowest terms. Integers keep the "/1".
  std::string str() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  Rational abs() const { return Rational(::abs(value_)); }
  Rational inverse() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  /// |num * den|, used as a pivot-size measure.
  mpz_class height() const { return ::abs(value_.get_num()) * value_.get_den(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class value_{0};
};

using Vector = std::vector<Rational>;

inline Vector zero_vector(std::size_t n) { return Vector(n); }
inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Vector& axpy(Vector& y, const Rational& a, const Vector& x);  // y += a*x

}  // namespace novikov
