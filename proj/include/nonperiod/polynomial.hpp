#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "nonperiod/nat.hpp"
#include "nonperiod/rat.hpp"

namespace nonperiod {

// Sparse multivariate polynomial with integer coefficients. Exponent
// vectors always have length dim(); zero coefficients are never stored.
class IntPolynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;

  explicit IntPolynomial(std::size_t dim) : dim_(dim) {
    if (dim < 1) throw Error("IntPolynomial: dimension must be >= 1");
  }

  std::size_t dim() const { return dim_; }
  const std::map<Exponents, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Accumulating insert; cancelling terms disappear.
  void add_term(const Int& coeff, Exponents exps) {
    if (exps.size() != dim_)
      throw Error("IntPolynomial: exponent vector of length " + std::to_string(exps.size()) +
                  " in dimension " + std::to_string(dim_));
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(exps), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Largest exponent appearing per dimension (all zero for the zero poly).
  Exponents degree_per_dim() const {
    Exponents deg(dim_, 0);
    for (const auto& [exps, coeff] : terms_)
      for (std::size_t i = 0; i < dim_; ++i)
        if (exps[i] > deg[i]) deg[i] = exps[i];
    return deg;
  }

  std::uint32_t total_degree() const {
    std::uint32_t deg = 0;
    for (const auto& [exps, coeff] : terms_) {
      std::uint32_t t = 0;
      for (auto e : exps) t += e;
      if (t > deg) deg = t;
    }
    return deg;
  }

  // Exact evaluation (test oracles, point sampling).
  Rat eval_at(std::span<const Rat> point) const {
    if (point.size() != dim_) throw Error("IntPolynomial::eval_at: wrong point dimension");
    Rat acc;
    for (const auto& [exps, coeff] : terms_) {
      Rat term{coeff};
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::uint32_t k = 0; k < exps[i]; ++k) term = term * point[i];
      acc += term;
    }
    return acc;
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t dim_;
  std::map<Exponents, Int> terms_;
};

}  // namespace nonperiod
