#include <doctest.h>

#include "nonperiod/builtins.hpp"
#include "nonperiod/cauchy.hpp"
#include "nonperiod/errors.hpp"

using namespace nonperiod;

namespace {

const Budget kBudget;

Nat N(unsigned long v) { return Nat(v); }

Rat seventh_radius(std::size_t n) { return Rat(Nat(1ul), Nat(6ul) * pow_u(N(7), n)); }

}  // namespace

TEST_CASE("enforcement examples") {
  CHECK(enforce(N(40), N(0), kBudget) == Rat(N(2), N(3)));
  CHECK(enforce(N(40), N(5), kBudget) == Rat(N(3), N(4)));
  CHECK(enforce(N(1), N(9), kBudget) == Rat(1));
}

TEST_CASE("truncation metadata") {
  FastSeq s40(N(40));
  s40.enforced(5, kBudget);
  REQUIRE(s40.truncation().has_value());
  CHECK(*s40.truncation() == 1);  // |g(1) - g(2)| = 1/20 >= 7^-2

  FastSeq s0(N(0));
  s0.enforced(5, kBudget);
  REQUIRE(s0.truncation().has_value());
  CHECK(*s0.truncation() == 0);

  FastSeq s1(N(1));
  s1.enforced(20, kBudget);
  CHECK(!s1.truncation().has_value());
}

TEST_CASE("beta examples, exact") {
  const RealApprox b40 = beta(N(40), N(10), kBudget);
  CHECK(b40.value == Rat(N(3), N(4)));
  CHECK(b40.radius == seventh_radius(10));

  const RealApprox b4 = beta(N(4), N(20), kBudget);
  CHECK(abs(b4.value - Rat(N(1), N(2))) < seventh_radius(20));

  CHECK(beta(N(0), N(5), kBudget).value == Rat(0));
  CHECK(beta(N(1), N(10), kBudget).value == Rat(1));
  CHECK(beta(N(2), N(10), kBudget).value == Rat(0));
  CHECK(beta(N(3), N(10), kBudget).value == Rat(0));
}

TEST_CASE("enforced sequences are fast (e <= 60, n <= 20)") {
  for (unsigned long e = 0; e <= 60; ++e) {
    FastSeq seq(N(e));
    for (std::size_t n = 0; n <= 20; ++n) {
      const Rat gap = abs(seq.enforced(n, kBudget) - seq.enforced(n + 1, kBudget));
      const Rat bound(Nat(1ul), pow_u(N(7), n + 1));
      INFO("e = " << e << ", n = " << n);
      CHECK(gap < bound);
    }
  }
}

TEST_CASE("enforcement fixes fast sequences") {
  // g_1 = 1 and g_11 = 0/(x+2) are fast; enforcement must be the identity
  for (std::size_t n = 0; n <= 20; ++n) {
    CHECK(enforce(N(1), N(n), kBudget) == g(N(1), N(n), kBudget));
    CHECK(enforce(N(11), N(n), kBudget) == g(N(11), N(n), kBudget));
  }
}

TEST_CASE("enforcement is eventually constant after truncation") {
  const Rat v40 = g(N(40), N(1), kBudget);
  for (std::size_t n = 2; n <= 15; ++n) CHECK(enforce(N(40), N(n), kBudget) == v40);
  for (std::size_t n = 1; n <= 15; ++n) CHECK(enforce(N(0), N(n), kBudget) == Rat(0));
}

TEST_CASE("bracket consistency of certified intervals (e <= 100, n,m <= 30)") {
  for (unsigned long e = 0; e <= 100; ++e) {
    FastSeq seq(N(e));
    std::vector<Rat> value(31);
    for (std::size_t n = 0; n <= 30; ++n) value[n] = seq.enforced(n, kBudget);
    for (std::size_t n = 0; n <= 30; ++n)
      for (std::size_t m = n + 1; m <= 30; ++m) {
        INFO("e = " << e << ", n = " << n << ", m = " << m);
        CHECK(abs(value[n] - value[m]) < seventh_radius(n) + seventh_radius(m));
      }
  }
}

TEST_CASE("reindexing examples") {
  using E = ElemExpr;
  auto id = E::proj(1, 1);
  auto one = E::succ(E::zero(1));

  SUBCASE("floor((m+1)/2) / (m+1) converges fast to 1/2") {
    auto a = E::quot(E::succ(id), one);  // floor((x+1)/2)
    auto b = id;
    auto c = id;
    const Rat v = reindex_fast(a, b, c, N(3), kBudget);
    // direct substitution oracle at m = 8^4
    const Nat m = pow_u(N(8), 4);
    const Nat num = quot(m + N(1), N(1));
    CHECK(v == Rat(num, m + N(1)));
    CHECK(abs(v - Rat(N(1), N(2))) < Rat(Nat(1ul), pow_u(N(8), 4)));
  }

  SUBCASE("zero triple") {
    auto z = E::zero(1);
    for (unsigned long x = 0; x <= 5; ++x) CHECK(reindex_fast(z, z, z, N(x), kBudget) == Rat(0));
  }

  SUBCASE("constant 3 over constant 1 gives 3/2") {
    auto three = E::succ(E::succ(E::succ(E::zero(1))));
    for (unsigned long x = 0; x <= 5; ++x)
      CHECK(reindex_fast(three, one, id, N(x), kBudget) == Rat(N(3), N(2)));
  }

  SUBCASE("arity is checked") {
    auto two_ary = E::proj(2, 1);
    CHECK_THROWS_AS(reindex_fast(two_ary, id, id, N(1), kBudget), ArityMismatch);
  }

  SUBCASE("index budget") {
    CHECK_THROWS_AS(reindex_fast(id, id, id, N(1'000'000), Budget{1 << 10, 1 << 20}),
                    BudgetExceeded);
  }
}
