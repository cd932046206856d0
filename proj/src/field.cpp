#include "hopfcyc/field.hpp"

#include <limits>

namespace hopfcyc {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class r = v % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw std::invalid_argument("F_p requires a prime p < 2^31, got " + std::to_string(p));
  return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (p_ == 0) return Scalar::rational(mpq_class(static_cast<long>(v)));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return Scalar::residue(static_cast<std::uint64_t>(r), p_);
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (p_ == 0) return Scalar::rational(v);
  std::uint64_t den = reduce_mpz(v.get_den(), p_);
  if (den == 0) throw std::domain_error("denominator divisible by " + std::to_string(p_));
  return Scalar::residue(reduce_mpz(v.get_num(), p_), p_) / Scalar::residue(den, p_);
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw std::invalid_argument("malformed scalar \"" + s + "\"");
    return from_rational(mpq_class(mpz_class(strip_plus(s))));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("malformed scalar \"" + s + "\"");
  mpz_class d(strip_plus(den));
  if (d == 0) throw std::invalid_argument("zero denominator in scalar \"" + s + "\"");
  mpq_class q(mpz_class(strip_plus(num)), d);
  q.canonicalize();
  return from_rational(q);
}

Scalar Scalar::rational(mpq_class v) {
  Scalar s;
  v.canonicalize();
  s.q_ = std::move(v);
  return s;
}

Scalar Scalar::residue(std::uint64_t v, std::uint64_t p) {
  Scalar s;
  s.p_ = p;
  s.r_ = v % p;
  return s;
}

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_)
    throw FieldMismatch("scalar arithmetic across fields " + field().name() + " and " +
                        o.field().name());
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_ == 0)
    q_ += o.q_;
  else
    r_ = (r_ + o.r_) % p_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (p_ == 0)
    q_ -= o.q_;
  else
    r_ = (r_ + p_ - o.r_) % p_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_ == 0)
    q_ *= o.q_;
  else
    r_ = r_ * o.r_ % p_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (p_ == 0) return rational(1 / q_);
  return residue(pow_mod(r_, p_ - 2, p_), p_);
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const { return p_ == 0 ? q_.get_str() : std::to_string(r_); }

}  // namespace hopfcyc
