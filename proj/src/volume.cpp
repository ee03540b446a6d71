#include "nonperiod/volume.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "nonperiod/bernstein.hpp"
#include "nonperiod/errors.hpp"

namespace nonperiod {

namespace {

using bern::Factorials;

enum class Positivity { Positive, NonPositive, Unknown };

struct Certifier {
  const Factorials& tables;
  std::uint32_t max_depth;
  std::uint32_t depth_used = 0;

  Positivity certify(const Tensor<Int>& t, std::uint32_t depth) {
    depth_used = std::max(depth_used, depth);
    if (bern::corner_nonpositive(t)) return Positivity::NonPositive;
    if (bern::all_positive(t)) return Positivity::Positive;
    if (bern::all_nonpositive(t)) return Positivity::NonPositive;
    if (depth >= max_depth) return Positivity::Unknown;

    // split every axis: 2^dim children
    std::vector<Tensor<Int>> boxes;
    boxes.push_back(t);
    for (std::size_t axis = 0; axis < t.sizes.size(); ++axis) {
      std::vector<Tensor<Int>> next;
      next.reserve(boxes.size() * 2);
      for (const auto& b : boxes) {
        Tensor<Int> lo, hi;
        bern::split_axis(b, axis, lo, hi);
        next.push_back(std::move(lo));
        next.push_back(std::move(hi));
      }
      boxes = std::move(next);
    }

    bool all_pos = true;
    for (const auto& b : boxes) {
      const Positivity sub = certify(b, depth + 1);
      if (sub == Positivity::NonPositive) return Positivity::NonPositive;
      if (sub != Positivity::Positive) all_pos = false;
    }
    return all_pos ? Positivity::Positive : Positivity::Unknown;
  }
};

Certificate certify_cube(const BasicDomain& domain, std::span<const std::uint64_t> k,
                         std::uint64_t n, std::uint32_t max_depth, const Factorials& tables) {
  Certificate cert;
  bool all_contained = true;
  for (const auto& g : domain.constraints) {
    if (g.is_zero()) {
      // the zero polynomial is nowhere > 0
      return Certificate{Verdict::NotContained, cert.depth_used};
    }
    Tensor<Int> t = bern::scaled_bernstein(g, k, n, domain.box_scale, tables);
    Certifier certifier{tables, max_depth};
    const Positivity res = certifier.certify(t, 0);
    cert.depth_used = std::max(cert.depth_used, certifier.depth_used);
    if (res == Positivity::NonPositive) {
      cert.verdict = Verdict::NotContained;
      return cert;
    }
    if (res != Positivity::Positive) all_contained = false;
  }
  cert.verdict = all_contained ? Verdict::Contained : Verdict::Unknown;
  return cert;
}

Factorials make_tables(const BasicDomain& domain) {
  std::uint32_t max_deg = 1;
  for (const auto& g : domain.constraints)
    for (auto d : g.degree_per_dim()) max_deg = std::max(max_deg, d);
  return Factorials(max_deg);
}

}  // namespace

Certificate cube_contained(const BasicDomain& domain, const GridCube& cube,
                           std::uint32_t max_depth) {
  domain.validate();
  cube.validate(domain.dim);
  const Factorials tables = make_tables(domain);
  return certify_cube(domain, cube.k, cube.n, max_depth, tables);
}

VolumeResult riemann_volume(const BasicDomain& domain, std::uint64_t n, std::uint32_t max_depth,
                            unsigned threads) {
  domain.validate();
  if (n < 1) throw Error("riemann_volume: n must be >= 1");
  const std::size_t dim = domain.dim;
  const Factorials tables = make_tables(domain);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  std::atomic<std::uint64_t> next_row{0};
  std::vector<std::uint64_t> contained_per(threads, 0), unknown_per(threads, 0);
  std::vector<std::exception_ptr> errors(threads);

  auto worker = [&](unsigned tid) {
    try {
      std::vector<std::uint64_t> k(dim, 0);
      for (;;) {
        const std::uint64_t row = next_row.fetch_add(1, std::memory_order_relaxed);
        if (row >= n) return;
        k.assign(dim, 0);
        k[0] = row;
        // odometer over dims 1..dim-1
        for (;;) {
          const Certificate cert = certify_cube(domain, k, n, max_depth, tables);
          if (cert.verdict == Verdict::Contained) ++contained_per[tid];
          if (cert.verdict == Verdict::Unknown) ++unknown_per[tid];
          std::size_t a = dim;
          bool done = true;
          while (a-- > 1) {
            if (++k[a] < n) {
              done = false;
              break;
            }
            k[a] = 0;
          }
          if (done) break;
        }
      }
    } catch (...) {
      errors[tid] = std::current_exception();
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  VolumeResult result;
  for (unsigned t = 0; t < threads; ++t) {
    result.contained += contained_per[t];
    result.unknown += unknown_per[t];
  }
  const Rat side(domain.box_scale.num(), domain.box_scale.den() * static_cast<unsigned long>(n));
  result.volume = Rat(Int(result.contained)) * pow_int(side, dim);
  return result;
}

ApproxResult approximate_volume(const BasicDomain& domain, const Rat& tol, std::uint64_t n0,
                                std::uint64_t max_n, std::uint32_t max_depth, unsigned threads) {
  if (!(tol > Rat(0))) throw Error("approximate_volume: tol must be positive");
  if (n0 < 1) throw Error("approximate_volume: n0 must be >= 1");
  if (n0 > max_n)
    throw NoConvergenceAtBudget("schedule start " + std::to_string(n0) + " already exceeds max_n " +
                                std::to_string(max_n));
  const Rat half_tol = tol / Rat(2);
  VolumeResult prev = riemann_volume(domain, n0, max_depth, threads);
  for (std::uint64_t n = n0 * 2; n <= max_n; n *= 2) {
    VolumeResult cur = riemann_volume(domain, n, max_depth, threads);
    if (abs(cur.volume - prev.volume) < half_tol)
      return ApproxResult{cur.volume, n, cur.unknown};
    prev = std::move(cur);
  }
  throw NoConvergenceAtBudget("doubled grids still differ by >= tol/2 at max_n = " +
                              std::to_string(max_n));
}

}  // namespace nonperiod
