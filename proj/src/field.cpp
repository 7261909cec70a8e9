#include "hochkit/field.hpp"

#include <stdexcept>

#include "hochkit/error.hpp"

namespace hochkit {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("field modulus " + std::to_string(p) +
                                " is not a prime below 2^31");
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.rfind("Fp", 0) == 0 && text.size() > 3 &&
      (text[2] == ':' || text[2] == ' ')) {
    std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 10)
      throw std::invalid_argument("bad field modulus in '" + text + "'");
    return prime(static_cast<uint32_t>(std::stoull(digits)));
  }
  throw std::invalid_argument("unknown field '" + text +
                              "' (expected Q or Fp:<prime>)");
}

std::string Field::name() const {
  return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_);
}

Rational Field::element(const Rational& v) const {
  if (p_ == 0) return v;
  if (v.is_small() && v.small_den() == 1 && v.small_num() >= 0 &&
      v.small_num() < static_cast<int64_t>(p_))
    return v;
  return Rational(static_cast<int64_t>(v.mod(p_)));
}

namespace {
// Residue of a value that is usually, but not necessarily, canonical.
uint64_t residue(const Rational& v, uint32_t p) {
  if (v.is_small() && v.small_den() == 1 && v.small_num() >= 0 &&
      v.small_num() < static_cast<int64_t>(p))
    return static_cast<uint64_t>(v.small_num());
  return v.mod(p);
}
}  // namespace

Rational Field::add(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a + b;
  uint64_t s = residue(a, p_) + residue(b, p_);
  return Rational(static_cast<int64_t>(s % p_));
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a - b;
  uint64_t s = residue(a, p_) + p_ - residue(b, p_);
  return Rational(static_cast<int64_t>(s % p_));
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a * b;
  uint64_t s = residue(a, p_) * residue(b, p_);
  return Rational(static_cast<int64_t>(s % p_));
}

Rational Field::neg(const Rational& a) const {
  if (p_ == 0) return -a;
  uint64_t r = residue(a, p_);
  return Rational(static_cast<int64_t>(r == 0 ? 0 : p_ - r));
}

Rational Field::inv(const Rational& a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  if (p_ == 0) return a.inverse();
  uint64_t r = 1, b = residue(a, p_), e = p_ - 2;
  if (b == 0) throw std::domain_error("inverse of zero");
  while (e) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return Rational(static_cast<int64_t>(r));
}

namespace {
void require_same(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field())
    throw FieldMismatch("scalar arithmetic across fields " + a.field().name() +
                        " and " + b.field().name());
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return Scalar(a.field_, a.field_.add(a.value_, b.value_));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return Scalar(a.field_, a.field_.sub(a.value_, b.value_));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return Scalar(a.field_, a.field_.mul(a.value_, b.value_));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return Scalar(a.field_, a.field_.mul(a.value_, a.field_.inv(b.value_)));
}

}  // namespace hochkit
