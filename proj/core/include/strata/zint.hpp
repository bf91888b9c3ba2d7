#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

namespace strata {

using bigint = boost::multiprecision::cpp_int;

// Exact integer with an inline int64 fast path. Values are promoted to a
// heap-allocated bigint on overflow, so arithmetic never wraps. All matrix
// entries in the engine are of this type.
class zint {
  long long s_ = 0;
  std::unique_ptr<bigint> big_;  // non-null iff value does not fit in s_

  explicit zint(bigint b) : big_(std::make_unique<bigint>(std::move(b))) { demote(); }

  void demote() {
    if (big_ && *big_ >= INT64_MIN && *big_ <= INT64_MAX) {
      s_ = static_cast<long long>(*big_);
      big_.reset();
    }
  }

 public:
  zint() = default;
  zint(int v) : s_(v) {}
  zint(long long v) : s_(v) {}
  zint(const zint& o) : s_(o.s_) {
    if (o.big_) big_ = std::make_unique<bigint>(*o.big_);
  }
  zint(zint&&) noexcept = default;
  zint& operator=(const zint& o) {
    s_ = o.s_;
    big_ = o.big_ ? std::make_unique<bigint>(*o.big_) : nullptr;
    return *this;
  }
  zint& operator=(zint&&) noexcept = default;

  static zint from_big(bigint b) { return zint(std::move(b)); }

  bool is_small() const { return !big_; }
  long long small() const { return s_; }  // valid only when is_small()
  bigint to_big() const { return big_ ? *big_ : bigint(s_); }

  bool is_zero() const { return !big_ && s_ == 0; }
  bool is_one() const { return !big_ && s_ == 1; }
  bool is_unit() const { return !big_ && (s_ == 1 || s_ == -1); }

  int sign() const {
    if (big_) return big_->sign();
    return s_ > 0 ? 1 : (s_ < 0 ? -1 : 0);
  }

  friend zint operator-(const zint& a) {
    if (a.big_) return zint(-*a.big_);
    if (a.s_ == INT64_MIN) return zint(-bigint(a.s_));
    return zint(-a.s_);
  }

  friend zint operator+(const zint& a, const zint& b) {
    if (!a.big_ && !b.big_) {
      long long r;
      if (!__builtin_add_overflow(a.s_, b.s_, &r)) return zint(r);
    }
    return zint(a.to_big() + b.to_big());
  }
  friend zint operator-(const zint& a, const zint& b) {
    if (!a.big_ && !b.big_) {
      long long r;
      if (!__builtin_sub_overflow(a.s_, b.s_, &r)) return zint(r);
    }
    return zint(a.to_big() - b.to_big());
  }
  friend zint operator*(const zint& a, const zint& b) {
    if (!a.big_ && !b.big_) {
      long long r;
      if (!__builtin_mul_overflow(a.s_, b.s_, &r)) return zint(r);
    }
    return zint(a.to_big() * b.to_big());
  }

  zint& operator+=(const zint& b) { return *this = *this + b; }
  zint& operator-=(const zint& b) { return *this = *this - b; }
  zint& operator*=(const zint& b) { return *this = *this * b; }

  // Truncated division (C semantics), exact when remainder is zero.
  friend zint operator/(const zint& a, const zint& b) {
    if (!a.big_ && !b.big_ && !(a.s_ == INT64_MIN && b.s_ == -1)) return zint(a.s_ / b.s_);
    return zint(a.to_big() / b.to_big());
  }
  friend zint operator%(const zint& a, const zint& b) {
    if (!a.big_ && !b.big_ && !(a.s_ == INT64_MIN && b.s_ == -1)) return zint(a.s_ % b.s_);
    return zint(a.to_big() % b.to_big());
  }

  friend bool operator==(const zint& a, const zint& b) {
    if (!a.big_ && !b.big_) return a.s_ == b.s_;
    return a.to_big() == b.to_big();
  }
  friend bool operator==(const zint& a, long long b) { return !a.big_ && a.s_ == b; }
  friend std::strong_ordering operator<=>(const zint& a, const zint& b) {
    if (!a.big_ && !b.big_) return a.s_ <=> b.s_;
    bigint x = a.to_big(), y = b.to_big();
    return x < y ? std::strong_ordering::less
                 : (x > y ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  zint abs() const { return sign() < 0 ? -*this : *this; }

  // |a| <=> |b| without materializing absolute values in the common case.
  static int cmp_abs(const zint& a, const zint& b) {
    if (!a.big_ && !b.big_ && a.s_ != INT64_MIN && b.s_ != INT64_MIN) {
      long long x = a.s_ < 0 ? -a.s_ : a.s_, y = b.s_ < 0 ? -b.s_ : b.s_;
      return x < y ? -1 : (x > y ? 1 : 0);
    }
    bigint x = boost::multiprecision::abs(a.to_big()), y = boost::multiprecision::abs(b.to_big());
    return x < y ? -1 : (x > y ? 1 : 0);
  }

  std::string str() const { return big_ ? big_->str() : std::to_string(s_); }

  // Value reduced mod m into [0, m).
  long long mod(long long m) const {
    if (!big_) {
      long long r = s_ % m;
      return r < 0 ? r + m : r;
    }
    bigint r = *big_ % m;
    if (r < 0) r += m;
    return static_cast<long long>(r);
  }
};

inline zint gcd(const zint& a, const zint& b) {
  if (a.is_small() && b.is_small() && a.small() != INT64_MIN && b.small() != INT64_MIN) {
    long long x = a.small() < 0 ? -a.small() : a.small();
    long long y = b.small() < 0 ? -b.small() : b.small();
    while (y) {
      long long t = x % y;
      x = y;
      y = t;
    }
    return zint(x);
  }
  return zint::from_big(boost::multiprecision::gcd(a.to_big(), b.to_big()));
}

inline zint lcm(const zint& a, const zint& b) {
  if (a.is_zero() || b.is_zero()) return zint(0);
  return (a / gcd(a, b) * b).abs();
}

// g = gcd(a,b) together with x, y such that a*x + b*y = g, g >= 0.
inline void gcdext(const zint& a, const zint& b, zint& g, zint& x, zint& y) {
  zint r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (!r1.is_zero()) {
    zint q = r0 / r1;
    zint r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    zint x2 = x0 - q * x1;
    x0 = x1;
    x1 = x2;
    zint y2 = y0 - q * y1;
    y0 = y1;
    y1 = y2;
  }
  if (r0.sign() < 0) {
    r0 = -r0;
    x0 = -x0;
    y0 = -y0;
  }
  g = r0;
  x = x0;
  y = y0;
}

// Quotient of an exact division; throws if the division has a remainder.
inline zint divexact(const zint& a, const zint& b) {
  zint q = a / b;
  if (!(q * b == a)) throw std::runtime_error("divexact: inexact division");
  return q;
}

std::ostream& operator<<(std::ostream& os, const zint& v);

}  // namespace strata
