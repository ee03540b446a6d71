#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "nonperiod/errors.hpp"
#include "nonperiod/nat.hpp"

namespace nonperiod {

// Exact rational, always canonical: gcd(num, den) = 1, den >= 1. The sign
// lives on the numerator. Every comparison and arithmetic op is exact.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(const Nat& n) : v_(n.raw()) {}
  explicit Rat(const Int& n) : v_(n) {}
  Rat(const Int& num, const Int& den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rat(const Nat& num, const Nat& den) : Rat(num.raw(), den.raw()) {}

  // Accepts "p", "-p", "p/q" with optional sign on p.
  static Rat from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(Int(s, 10), Int(1));
      return Rat(Int(s.substr(0, slash), 10), Int(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
      throw Error("not a rational: '" + s + "'");
    }
  }

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw Error("rational division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
  }
  Rat& operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  // Display-only decimal rendering: round-to-nearest-even at `places`
  // fractional digits, computed in exact integer arithmetic.
  std::string decimal(std::size_t places) const;

 private:
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  mpq_class v_;
};

inline Rat abs(const Rat& x) { return x.sign() < 0 ? Rat(0) - x : x; }

inline Rat pow_int(const Rat& x, std::size_t e) {
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), x.num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), x.den().get_mpz_t(), e);
  return Rat(n, d);
}

inline std::string Rat::decimal(std::size_t places) const {
  Int p = num(), q = den();
  const bool neg = p < 0;
  if (neg) p = -p;
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  Int shifted = p * scale;
  Int quo, rem;
  mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), shifted.get_mpz_t(), q.get_mpz_t());
  // round half to even
  Int twice = rem * 2;
  if (twice > q || (twice == q && mpz_odd_p(quo.get_mpz_t()))) quo += 1;
  Int ip, fp;
  mpz_fdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), quo.get_mpz_t(), scale.get_mpz_t());
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), places - frac.size(), '0');
  std::string out = (neg ? "-" : "") + ip.get_str();
  if (places > 0) out += "." + frac;
  return out;
}

}  // namespace nonperiod
