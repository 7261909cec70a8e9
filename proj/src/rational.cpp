#include "hochkit/rational.hpp"

#include <limits>
#include <stdexcept>

#include "hochkit/error.hpp"

namespace hochkit {

namespace {

constexpr int64_t kMin = std::numeric_limits<int64_t>::min();

bool fits(__int128 v) {
  return v > static_cast<__int128>(kMin) &&
         v <= static_cast<__int128>(std::numeric_limits<int64_t>::max());
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt to_bigint(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<uint64_t>(u);
  return neg ? BigInt(-r) : r;
}

uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Rational::Rational(int64_t n, int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational::Rational(const BigRational& v) {
  const BigInt& n = boost::multiprecision::numerator(v);
  const BigInt& d = boost::multiprecision::denominator(v);
  if (n > kMin && n <= std::numeric_limits<int64_t>::max() &&
      d <= std::numeric_limits<int64_t>::max()) {
    num_ = static_cast<int64_t>(n);
    den_ = static_cast<int64_t>(d);
  } else {
    big_ = std::make_shared<const BigRational>(v);
  }
}

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  if (d != 1) {
    __int128 g = gcd128(n, d);
    if (g != 1) {
      n /= g;
      d /= g;
    }
  }
  Rational r;
  if (fits(n) && fits(d)) {
    r.num_ = static_cast<int64_t>(n);
    r.den_ = static_cast<int64_t>(d);
  } else {
    r.big_ = std::make_shared<const BigRational>(
        BigRational(to_bigint(n), to_bigint(d)));
  }
  return r;
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number in '" + text + "'");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad number '" + text + "'");
    for (size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9')
        throw std::invalid_argument("bad number '" + text + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt n = parse_int(text.substr(0, slash));
  BigInt d = parse_int(text.substr(slash + 1));
  if (d == 0) throw std::domain_error("rational with zero denominator");
  return Rational(BigRational(n, d));
}

bool Rational::is_integer() const {
  return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return big_->sign();
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

BigRational Rational::to_big() const {
  if (big_) return *big_;
  return BigRational(BigInt(num_), BigInt(den_));
}

BigInt Rational::numerator() const {
  return big_ ? BigInt(boost::multiprecision::numerator(*big_)) : BigInt(num_);
}

BigInt Rational::denominator() const {
  return big_ ? BigInt(boost::multiprecision::denominator(*big_))
              : BigInt(den_);
}

std::string Rational::to_string() const {
  if (big_) {
    BigInt n = boost::multiprecision::numerator(*big_);
    BigInt d = boost::multiprecision::denominator(*big_);
    return d == 1 ? n.str() : n.str() + "/" + d.str();
  }
  return den_ == 1 ? std::to_string(num_)
                   : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != kMin) {
        Rational r;
        r.num_ = s;
        return r;
      }
      return Rational::from_wide(static_cast<__int128>(a.num_) + b.num_, 1);
    }
    __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                 static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::from_wide(n, d);
  }
  return Rational(a.to_big() + b.to_big());
}

Rational Rational::operator-() const {
  if (big_) return Rational(BigRational(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      int64_t p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != kMin) {
        Rational r;
        r.num_ = p;
        return r;
      }
    }
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_,
                               static_cast<__int128>(a.den_) * b.den_);
  }
  return Rational(a.to_big() * b.to_big());
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (big_) return Rational(BigRational(1) / *big_);
  return from_wide(den_, num_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return a * b.inverse();
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  // Canonical form: a promoted value never fits inline.
  return false;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_)
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  return a.to_big() < b.to_big();
}

uint32_t Rational::mod(uint32_t p) const {
  uint64_t n, d;
  if (big_) {
    BigInt bn = boost::multiprecision::numerator(*big_) % p;
    if (bn < 0) bn += p;
    BigInt bd = boost::multiprecision::denominator(*big_) % p;
    n = static_cast<uint64_t>(bn);
    d = static_cast<uint64_t>(bd);
  } else {
    int64_t r = num_ % static_cast<int64_t>(p);
    if (r < 0) r += p;
    n = static_cast<uint64_t>(r);
    d = static_cast<uint64_t>(den_ % static_cast<int64_t>(p));
  }
  if (d == 0)
    throw FieldMismatch("denominator of " + to_string() +
                        " is not invertible modulo " + std::to_string(p));
  if (d == 1) return static_cast<uint32_t>(n);
  return static_cast<uint32_t>(n * pow_mod(d, p - 2, p) % p);
}

}  // namespace hochkit
