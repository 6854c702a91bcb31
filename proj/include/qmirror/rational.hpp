#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qmirror {

// Exact rational number backed by GMP. Always canonical: gcd(num, den) = 1
// and den > 0. All operations are exact; division by zero throws.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(int n) : v_(static_cast<signed long>(n)) {}
  Rat(long num, long den) : v_(mpz_class(num), mpz_class(den)) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
  }
  // Accepts "p" or "p/q" in base 10.
  explicit Rat(const std::string& s) : v_(s) {
    if (v_.get_den() == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
  }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rat inv() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(mpq_class(1 / v_));
  }

  Rat abs() const { return sign() < 0 ? -*this : *this; }

  // Integer exponent; negative exponents invert (zero base throws).
  Rat pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Rat base = *this, out(1);
    while (e > 0) {
      if (e & 1) out *= base;
      base *= base;
      e >>= 1;
    }
    return out;
  }

  // "p/q" in lowest terms with q > 0, or "p" when q = 1.
  std::string str() const { return v_.get_str(); }
  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

// Binomial coefficient C(n, k) as an exact rational (0 for k < 0 or k > n).
inline Rat binomial(long n, long k) {
  if (k < 0 || k > n) return Rat(0);
  Rat out(1);
  for (long j = 1; j <= k; ++j) out = out * Rat(n - k + j) / Rat(j);
  return out;
}

}  // namespace qmirror
