#include "novikov/rational.hpp"

#include <stdexcept>

namespace novikov {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + s + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v);
  for (auto& x : r) x *= s;
  return r;
}

Vector& axpy(Vector& y, const Rational& a, const Vector& x) {
  if (a.is_zero()) return y;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
  return y;
}

}  // namespace novikov
