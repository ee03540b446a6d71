#include "nonperiod/bernstein.hpp"

namespace nonperiod {

namespace bern {

Factorials::Factorials(std::uint32_t max_n) {
  fact.resize(max_n + 1);
  fact[0] = 1;
  for (std::uint32_t i = 1; i <= max_n; ++i) fact[i] = fact[i - 1] * i;
  binom.resize(max_n + 1);
  for (std::uint32_t n = 0; n <= max_n; ++n) {
    binom[n].resize(n + 1);
    binom[n][0] = 1;
    for (std::uint32_t k = 1; k <= n; ++k)
      binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : Int(0));
  }
}

namespace {

// In-place power-basis -> scaled Bernstein along `axis` (degree d = size-1):
// b_j = Σ_{i<=j} C(j,i)·i!·(d-i)!·a_i, which is d!·(true coefficients).
void to_bernstein_axis(Tensor<Int>& t, std::size_t axis, const Factorials& tables) {
  const std::uint32_t size = t.sizes[axis];
  const std::uint32_t d = size - 1;
  std::size_t stride = 1;
  for (std::size_t a = axis + 1; a < t.sizes.size(); ++a) stride *= t.sizes[a];
  const std::size_t block = stride * size;

  std::vector<Int> line(size), out(size);
  for (std::size_t base = 0; base < t.data.size(); base += block) {
    for (std::size_t off = 0; off < stride; ++off) {
      Int* p0 = &t.data[base + off];
      for (std::uint32_t i = 0; i < size; ++i)
        line[i] = tables.fact[i] * tables.fact[d - i] * p0[i * stride];
      for (std::uint32_t j = 0; j < size; ++j) {
        out[j] = 0;
        for (std::uint32_t i = 0; i <= j; ++i) out[j] += tables.binom[j][i] * line[i];
      }
      for (std::uint32_t i = 0; i < size; ++i) p0[i * stride] = out[i];
    }
  }
}

}  // namespace

Tensor<Int> scaled_bernstein(const IntPolynomial& p, std::span<const std::uint64_t> k,
                             std::uint64_t n, const Rat& r, const Factorials& tables) {
  const std::size_t dim = p.dim();
  const auto deg = p.degree_per_dim();
  const std::uint32_t total_deg = p.total_degree();

  std::vector<std::uint32_t> sizes(dim);
  for (std::size_t a = 0; a < dim; ++a) sizes[a] = deg[a] + 1;
  Tensor<Int> t(sizes);

  const Int rp = r.num();
  const Int base = r.den() * static_cast<unsigned long>(n);
  std::vector<Int> rp_pow(total_deg + 1), base_pow(total_deg + 1);
  rp_pow[0] = 1;
  base_pow[0] = 1;
  for (std::uint32_t i = 1; i <= total_deg; ++i) {
    rp_pow[i] = rp_pow[i - 1] * rp;
    base_pow[i] = base_pow[i - 1] * base;
  }

  // k_a^t for t up to deg[a]
  std::vector<std::vector<Int>> k_pow(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    k_pow[a].resize(deg[a] + 1);
    k_pow[a][0] = 1;
    for (std::uint32_t tdeg = 1; tdeg <= deg[a]; ++tdeg)
      k_pow[a][tdeg] = k_pow[a][tdeg - 1] * static_cast<unsigned long>(k[a]);
  }

  // (den(r)·n)^D · Σ_J a_J (r/n)^{|J|} Π_a (k_a + u_a)^{j_a}, expanded in u
  const auto next_leq = [](std::vector<std::uint32_t>& s, const IntPolynomial::Exponents& bound) {
    for (std::size_t a = s.size(); a-- > 0;) {
      if (s[a] < bound[a]) {
        ++s[a];
        return true;
      }
      s[a] = 0;
    }
    return false;
  };

  std::vector<std::uint32_t> s(dim);
  Int coeff, w;
  for (const auto& [J, a_J] : p.terms()) {
    std::uint32_t abs_J = 0;
    for (auto j : J) abs_J += j;
    coeff = a_J * rp_pow[abs_J] * base_pow[total_deg - abs_J];

    std::fill(s.begin(), s.end(), 0);
    do {
      w = coeff;
      for (std::size_t a = 0; a < dim; ++a)
        w *= tables.binom[J[a]][s[a]] * k_pow[a][J[a] - s[a]];
      t.at(s) += w;
    } while (next_leq(s, J));
  }

  for (std::size_t a = 0; a < dim; ++a) to_bernstein_axis(t, a, tables);
  return t;
}

void split_axis(const Tensor<Int>& src, std::size_t axis, Tensor<Int>& lo, Tensor<Int>& hi) {
  const std::uint32_t size = src.sizes[axis];
  const std::uint32_t d = size - 1;
  std::size_t stride = 1;
  for (std::size_t a = axis + 1; a < src.sizes.size(); ++a) stride *= src.sizes[a];
  const std::size_t block = stride * size;

  if (lo.sizes != src.sizes) lo = Tensor<Int>(src.sizes);
  if (hi.sizes != src.sizes) hi = Tensor<Int>(src.sizes);

  std::vector<Int> tri(size);
  for (std::size_t base = 0; base < src.data.size(); base += block) {
    for (std::size_t off = 0; off < stride; ++off) {
      const Int* in = &src.data[base + off];
      Int* out_lo = &lo.data[base + off];
      Int* out_hi = &hi.data[base + off];
      for (std::uint32_t i = 0; i < size; ++i) tri[i] = in[i * stride];
      // U^t_i = U^{t-1}_i + U^{t-1}_{i+1} carries 2^t·(de Casteljau level t);
      // rescaling children uniformly by 2^d keeps one positive scale.
      out_lo[0] = tri[0] << d;
      out_hi[d * stride] = tri[d] << d;
      for (std::uint32_t lev = 1; lev <= d; ++lev) {
        for (std::uint32_t i = 0; i + lev <= d; ++i) tri[i] += tri[i + 1];
        out_lo[lev * stride] = tri[0] << (d - lev);
        out_hi[(d - lev) * stride] = tri[d - lev] << (d - lev);
      }
    }
  }
}

bool all_positive(const Tensor<Int>& t) {
  for (const Int& v : t.data)
    if (v <= 0) return false;
  return true;
}

bool all_nonpositive(const Tensor<Int>& t) {
  for (const Int& v : t.data)
    if (v > 0) return false;
  return true;
}

bool corner_nonpositive(const Tensor<Int>& t) {
  const std::size_t dim = t.sizes.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
    std::size_t f = 0;
    for (std::size_t a = 0; a < dim; ++a)
      f = f * t.sizes[a] + ((mask >> a) & 1 ? t.sizes[a] - 1 : 0);
    if (t.data[f] <= 0) return true;
  }
  return false;
}

}  // namespace bern

Tensor<Rat> bernstein_coefficients(const IntPolynomial& p, const GridCube& cube, const Rat& r) {
  cube.validate(p.dim());
  if (!(r > Rat(0))) throw Error("bernstein_coefficients: box scale must be positive");
  const auto deg = p.degree_per_dim();
  std::uint32_t max_deg = 0;
  for (auto d : deg)
    if (d > max_deg) max_deg = d;
  bern::Factorials tables(std::max<std::uint32_t>(max_deg, 1));
  Tensor<Int> scaled = bern::scaled_bernstein(p, cube.k, cube.n, r, tables);

  // scale = (den(r)·n)^total_degree · Π_a deg_a!
  Int scale;
  Int base = r.den() * static_cast<unsigned long>(cube.n);
  mpz_pow_ui(scale.get_mpz_t(), base.get_mpz_t(), p.total_degree());
  for (auto d : deg) scale *= tables.fact[d];

  Tensor<Rat> out(scaled.sizes);
  for (std::size_t i = 0; i < scaled.data.size(); ++i) out.data[i] = Rat(scaled.data[i], scale);
  return out;
}

}  // namespace nonperiod
