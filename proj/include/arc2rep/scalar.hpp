// Exact scalars: the two-element field and arbitrary-precision rationals.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace arc2rep {

struct F2 {
  std::uint8_t v = 0;

  F2() = default;
  explicit F2(long long x) : v(static_cast<std::uint8_t>(x & 1)) {}

  bool is_zero() const { return v == 0; }
  bool is_one() const { return v == 1; }
  F2 inverse() const {
    if (v == 0) throw std::domain_error("F2: inverse of zero");
    return *this;
  }
  std::string str() const { return v ? "1" : "0"; }

  friend F2 operator+(F2 a, F2 b) { F2 r; r.v = a.v ^ b.v; return r; }
  friend F2 operator-(F2 a, F2 b) { return a + b; }
  friend F2 operator-(F2 a) { return a; }
  friend F2 operator*(F2 a, F2 b) { F2 r; r.v = a.v & b.v; return r; }
  F2& operator+=(F2 b) { v ^= b.v; return *this; }
  F2& operator-=(F2 b) { v ^= b.v; return *this; }
  F2& operator*=(F2 b) { v &= b.v; return *this; }
  friend bool operator==(F2 a, F2 b) { return a.v == b.v; }
  friend bool operator!=(F2 a, F2 b) { return a.v != b.v; }
  friend std::ostream& operator<<(std::ostream& os, F2 a) { return os << int(a.v); }

  static const char* name() { return "f2"; }
  static constexpr int characteristic = 2;
};

// Reduced fractions over arbitrary-precision integers.
class Q {
 public:
  using rep = boost::multiprecision::cpp_rational;

  Q() = default;
  explicit Q(long long x) : v_(x) {}
  Q(long long num, long long den) : v_(rep(num) / rep(den)) {
    if (den == 0) throw std::domain_error("Q: zero denominator");
  }
  explicit Q(rep r) : v_(std::move(r)) {}

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }
  Q inverse() const {
    if (is_zero()) throw std::domain_error("Q: inverse of zero");
    return Q(rep(1) / v_);
  }
  const rep& value() const { return v_; }
  std::string str() const { return v_.str(); }

  friend Q operator+(const Q& a, const Q& b) { return Q(rep(a.v_ + b.v_)); }
  friend Q operator-(const Q& a, const Q& b) { return Q(rep(a.v_ - b.v_)); }
  friend Q operator-(const Q& a) { return Q(rep(-a.v_)); }
  friend Q operator*(const Q& a, const Q& b) { return Q(rep(a.v_ * b.v_)); }
  Q& operator+=(const Q& b) { v_ += b.v_; return *this; }
  Q& operator-=(const Q& b) { v_ -= b.v_; return *this; }
  Q& operator*=(const Q& b) { v_ *= b.v_; return *this; }
  friend bool operator==(const Q& a, const Q& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Q& a, const Q& b) { return a.v_ != b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const Q& a) { return os << a.v_; }

  static const char* name() { return "q"; }
  static constexpr int characteristic = 0;

 private:
  rep v_;
};

template <class F>
inline F field_one() { return F(1); }
template <class F>
inline F field_zero() { return F(0); }

}  // namespace arc2rep
