#pragma once

#include <cstdint>
#include <vector>

#include "nonperiod/polynomial.hpp"
#include "nonperiod/rat.hpp"

namespace nonperiod {

// D = {x ∈ [0, r]^ℓ : G_k(x) > 0 for every constraint G_k}. The definition
// set only; nonemptiness is not checked.
struct BasicDomain {
  std::size_t dim = 1;
  Rat box_scale{1};
  std::vector<IntPolynomial> constraints;

  void validate() const {
    if (dim < 1) throw Error("domain: dimension must be >= 1");
    if (!(box_scale > Rat(0))) throw Error("domain: box_scale must be positive");
    if (constraints.empty()) throw Error("domain: needs at least one constraint");
    for (const auto& g : constraints)
      if (g.dim() != dim) throw Error("domain: constraint dimension mismatch");
  }
};

// Grid cube C_n(k) = Π_i [k_i·r/n, (k_i+1)·r/n], with 0 <= k_i < n.
struct GridCube {
  std::uint64_t n = 1;
  std::vector<std::uint64_t> k;

  void validate(std::size_t dim) const {
    if (n < 1) throw Error("cube: n must be >= 1");
    if (k.size() != dim) throw Error("cube: index vector has wrong dimension");
    for (auto ki : k)
      if (ki >= n) throw Error("cube: index out of range");
  }
};

enum class Verdict { Contained, NotContained, Unknown };

// Three-valued containment answer. Contained and NotContained are sound;
// Unknown only occurs at subdivision-depth exhaustion.
struct Certificate {
  Verdict verdict = Verdict::Unknown;
  std::uint32_t depth_used = 0;
};

}  // namespace nonperiod
