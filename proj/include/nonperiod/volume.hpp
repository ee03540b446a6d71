#pragma once

#include <cstdint>

#include "nonperiod/domain.hpp"
#include "nonperiod/rat.hpp"

namespace nonperiod {

// Decides whether the closed cube is contained in the open domain by
// Bernstein-coefficient positivity with recursive midpoint bisection.
// Contained and NotContained are sound; Unknown only at depth exhaustion
// (such cubes count as excluded, preserving the inner approximation).
Certificate cube_contained(const BasicDomain& domain, const GridCube& cube,
                           std::uint32_t max_depth = 6);

struct VolumeResult {
  Rat volume;                   // (r/n)^dim · #Contained, exact
  std::uint64_t contained = 0;
  std::uint64_t unknown = 0;
};

// Inner Riemann sum over the n^dim grid. Certification of distinct cubes is
// independent; rows are distributed over `threads` workers (0 = hardware
// concurrency) and the counts are order-independent, so the result does not
// depend on the thread count.
VolumeResult riemann_volume(const BasicDomain& domain, std::uint64_t n, std::uint32_t max_depth = 6,
                            unsigned threads = 0);

struct ApproxResult {
  Rat value;
  std::uint64_t n_used = 0;
  std::uint64_t unknown = 0;
};

// Doubling schedule n0, 2n0, 4n0, ... until successive grid values differ by
// less than tol/2; returns the later value (always a certified lower bound
// of vol(D)). Throws NoConvergenceAtBudget when max_n is passed first.
ApproxResult approximate_volume(const BasicDomain& domain, const Rat& tol, std::uint64_t n0 = 16,
                                std::uint64_t max_n = 4096, std::uint32_t max_depth = 6,
                                unsigned threads = 0);

}  // namespace nonperiod
