#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "nonperiod/errors.hpp"

namespace nonperiod {

// Signed arbitrary-precision integer (polynomial coefficients etc.).
using Int = mpz_class;

// Arbitrary-precision nonnegative integer.
class Nat {
 public:
  Nat() : v_(0) {}
  Nat(unsigned long x) : v_(x) {}
  explicit Nat(const Int& v) : v_(v) {
    if (v_ < 0) throw Error("Nat from negative integer");
  }

  static Nat from_string(const std::string& s) {
    if (s.empty()) throw Error("Nat: empty string");
    for (char ch : s)
      if (ch < '0' || ch > '9') throw Error("Nat: not a nonnegative decimal integer: '" + s + "'");
    Nat n;
    n.v_ = Int(s, 10);
    return n;
  }

  const Int& raw() const { return v_; }
  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return v_ == 0; }
  bool fits_u64() const { return v_.fits_ulong_p(); }
  std::uint64_t to_u64() const {
    if (!fits_u64()) throw Error("Nat does not fit in 64 bits");
    return v_.get_ui();
  }

  // Number of bits of the binary representation (1 for zero, as GMP counts).
  std::size_t bit_length() const { return mpz_sizeinbase(v_.get_mpz_t(), 2); }

  friend Nat operator+(const Nat& a, const Nat& b) { return Nat(Int(a.v_ + b.v_)); }
  friend Nat operator*(const Nat& a, const Nat& b) { return Nat(Int(a.v_ * b.v_)); }
  Nat& operator+=(const Nat& o) {
    v_ += o.v_;
    return *this;
  }
  Nat& operator++() {
    ++v_;
    return *this;
  }

  friend bool operator==(const Nat& a, const Nat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Nat& a, const Nat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Nat& a, const Nat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Nat& a, const Nat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Nat& a, const Nat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Nat& a, const Nat& b) { return a.v_ >= b.v_; }

 private:
  Int v_;
};

// x ∸ y, the modified subtraction: max(x − y, 0).
inline Nat monus(const Nat& x, const Nat& y) {
  if (x <= y) return Nat(0ul);
  return Nat(Int(x.raw() - y.raw()));
}

// ⌊x / (y + 1)⌋; total because the denominator is never zero.
inline Nat quot(const Nat& x, const Nat& y) {
  Int q;
  Int d = y.raw() + 1;
  mpz_fdiv_q(q.get_mpz_t(), x.raw().get_mpz_t(), d.get_mpz_t());
  return Nat(q);
}

// base^exp with 0^0 = 1; exponent must fit in a machine word.
inline Nat pow_u(const Nat& base, std::uint64_t exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), static_cast<unsigned long>(exp));
  return Nat(r);
}

// base^exp with 0^0 = 1, refusing results whose bit-length must exceed
// max_bits. The pre-check keeps towers from being materialized at all.
inline Nat pow_within(const Nat& base, const Nat& exp, std::uint64_t max_bits) {
  if (exp.is_zero()) return Nat(1ul);
  if (base.is_zero()) return Nat(0ul);
  if (base.raw() == 1) return Nat(1ul);
  // base >= 2: result bit-length >= exp + 1.
  if (!exp.fits_u64() || exp.to_u64() > max_bits)
    throw BudgetExceeded("max_bits: exponent " + exp.str() + " forces more than " +
                         std::to_string(max_bits) + " bits");
  const std::uint64_t e = exp.to_u64();
  const unsigned __int128 low = static_cast<unsigned __int128>(e) * (base.bit_length() - 1) + 1;
  if (low > max_bits)
    throw BudgetExceeded("max_bits: power needs at least " + std::to_string(std::uint64_t(low)) +
                         " bits, cap is " + std::to_string(max_bits));
  Nat r = pow_u(base, e);
  if (r.bit_length() > max_bits)
    throw BudgetExceeded("max_bits: power has " + std::to_string(r.bit_length()) +
                         " bits, cap is " + std::to_string(max_bits));
  return r;
}

}  // namespace nonperiod
