// Laurent polynomials in q with integer coefficients.
#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

namespace arc2rep {

class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(long long c) { add_term(0, c); }

  static Laurent monomial(int power, long long c = 1) {
    Laurent p;
    p.add_term(power, c);
    return p;
  }
  // The quantum integer [m] = q^{m-1} + q^{m-3} + ... + q^{1-m}; negative m gives -[|m|].
  static Laurent quantum_int(int m) {
    Laurent p;
    int s = m < 0 ? -1 : 1;
    int a = m < 0 ? -m : m;
    for (int j = 0; j < a; ++j) p.add_term(a - 1 - 2 * j, s);
    return p;
  }

  void add_term(int power, long long c) {
    if (c == 0) return;
    auto it = c_.find(power);
    if (it == c_.end()) {
      c_.emplace(power, c);
    } else {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }

  long long coeff(int power) const {
    auto it = c_.find(power);
    return it == c_.end() ? 0 : it->second;
  }
  const std::map<int, long long>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  // Value at q = 1.
  long long at_one() const {
    long long s = 0;
    for (const auto& [p, c] : c_) s += c;
    return s;
  }

  // The bar involution q -> q^{-1}.
  Laurent bar() const {
    Laurent r;
    for (const auto& [p, c] : c_) r.add_term(-p, c);
    return r;
  }
  bool is_bar_symmetric() const { return bar() == *this; }

  Laurent shifted(int s) const {
    Laurent r;
    for (const auto& [p, c] : c_) r.c_.emplace(p + s, c);
    return r;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [p, c] : o.c_) add_term(p, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [p, c] : o.c_) add_term(p, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(const Laurent& a) { return Laurent() - a; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [p, c] : a.c_)
      for (const auto& [p2, c2] : b.c_) r.add_term(p + p2, c * c2);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : c_) {
      long long a = c < 0 ? -c : c;
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (p == 0) {
        out += std::to_string(a);
        continue;
      }
      if (a != 1) out += std::to_string(a) + "*";
      out += "q";
      if (p != 1) out += "^" + std::to_string(p);
    }
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.str(); }

 private:
  std::map<int, long long> c_;
};

}  // namespace arc2rep
