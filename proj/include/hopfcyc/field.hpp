#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfcyc {

class Scalar;

/// Raised when scalars from different ground fields meet in one operation.
class FieldMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The ground field k: either Q or F_p for a prime p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& v) const;
  /// Parses "n" or "p/q"; over F_p a decimal integer reduced mod p (fractions
  /// are accepted when the denominator is invertible).
  Scalar parse(std::string_view text) const;

  bool operator==(const Field&) const = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// An exact scalar: arbitrary precision rational or residue mod p.
class Scalar {
 public:
  Scalar() = default;

  static Scalar rational(mpq_class v);
  static Scalar residue(std::uint64_t v, std::uint64_t p);

  Field field() const { return Field(p_); }
  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  const mpq_class& rational_value() const { return q_; }
  std::uint64_t residue_value() const { return r_; }
  std::uint64_t modulus() const { return p_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  bool operator==(const Scalar& o) const;

  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint64_t p_ = 0;
};

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

}  // namespace hopfcyc
