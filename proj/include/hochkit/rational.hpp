#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hochkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits live inline; larger
/// values are promoted to a shared immutable big rational and demoted again
/// as soon as they fit.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int64_t n, int64_t d);
  explicit Rational(const BigRational& v);
  explicit Rational(const BigInt& v) : Rational(BigRational(v)) {}

  static Rational parse(const std::string& text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  bool is_small() const { return !big_; }
  int sign() const;

  /// Inline parts; only meaningful when is_small().
  int64_t small_num() const { return num_; }
  int64_t small_den() const { return den_; }

  BigRational to_big() const;
  BigInt numerator() const;
  BigInt denominator() const;

  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  Rational inverse() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b);

  /// Residue modulo a prime p (< 2^31). The denominator must be a unit mod p.
  uint32_t mod(uint32_t p) const;

 private:
  static Rational from_wide(__int128 n, __int128 d);

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::shared_ptr<const BigRational> big_;
};

}  // namespace hochkit
