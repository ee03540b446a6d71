#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nonperiod/domain.hpp"
#include "nonperiod/polynomial.hpp"
#include "nonperiod/rat.hpp"

namespace nonperiod {

// Small dense tensor, row-major with the last dimension fastest.
template <class T>
struct Tensor {
  std::vector<std::uint32_t> sizes;
  std::vector<T> data;

  explicit Tensor() = default;
  explicit Tensor(std::vector<std::uint32_t> s) : sizes(std::move(s)) {
    std::size_t total = 1;
    for (auto v : sizes) total *= v;
    data.assign(total, T{});
  }

  std::size_t rank() const { return sizes.size(); }

  std::size_t flat_index(std::span<const std::uint32_t> idx) const {
    std::size_t f = 0;
    for (std::size_t a = 0; a < sizes.size(); ++a) f = f * sizes[a] + idx[a];
    return f;
  }
  const T& at(std::span<const std::uint32_t> idx) const { return data[flat_index(idx)]; }
  T& at(std::span<const std::uint32_t> idx) { return data[flat_index(idx)]; }
};

// Exact Bernstein coefficients of p restricted to the cube (side r/n),
// reparameterized to [0,1]^dim, in the tensor basis of p's per-dimension
// degrees. Corner entries equal p's values at the cube's corners.
Tensor<Rat> bernstein_coefficients(const IntPolynomial& p, const GridCube& cube, const Rat& r);

namespace bern {

// Integer-scaled pipeline used by the certification engine: every tensor
// holds c·(true Bernstein coefficients) for some positive constant c, so
// sign decisions are exact.

struct Factorials {
  std::vector<Int> fact;
  std::vector<std::vector<Int>> binom;
  explicit Factorials(std::uint32_t max_n);
};

// Scaled Bernstein tensor of p on C_n(k) with box scale r
// (scale: (den(r)·n)^total_degree · Π_a degree_a!).
Tensor<Int> scaled_bernstein(const IntPolynomial& p, std::span<const std::uint64_t> k,
                             std::uint64_t n, const Rat& r, const Factorials& tables);

// Midpoint de Casteljau split along one axis; children are scaled by an
// extra 2^degree_axis relative to the parent.
void split_axis(const Tensor<Int>& src, std::size_t axis, Tensor<Int>& lo, Tensor<Int>& hi);

bool all_positive(const Tensor<Int>& t);
bool all_nonpositive(const Tensor<Int>& t);
// Some vertex of the box has a value <= 0 (corner coefficients are exact
// vertex values).
bool corner_nonpositive(const Tensor<Int>& t);

}  // namespace bern

}  // namespace nonperiod
