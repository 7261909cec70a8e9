#pragma once

#include <cstdint>
#include <string>

#include "hochkit/rational.hpp"

namespace hochkit {

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p
/// with p < 2^31. Elements of F_p are carried as integer Rationals in [0, p).
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(uint32_t p);
  /// Accepts "Q", "Fp:<p>" and "Fp <p>".
  static Field parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }
  uint32_t characteristic() const { return p_; }
  std::string name() const;

  /// Canonical representative of a rational in this field.
  Rational element(const Rational& v) const;

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inv(const Rational& a) const;

  friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }
  friend bool operator!=(Field a, Field b) { return a.p_ != b.p_; }

 private:
  explicit Field(uint32_t p) : p_(p) {}
  uint32_t p_ = 0;
};

bool is_prime(uint64_t n);

/// A field element tagged with its field. Arithmetic between elements of
/// different fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field f, const Rational& v) : field_(f), value_(f.element(v)) {}
  Scalar(Field f, int64_t v) : Scalar(f, Rational(v)) {}

  Field field() const { return field_; }
  const Rational& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  std::string to_string() const { return value_.to_string(); }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const { return Scalar(field_, field_.neg(value_)); }
  Scalar inverse() const { return Scalar(field_, field_.inv(value_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Field field_;
  Rational value_;
};

}  // namespace hochkit
