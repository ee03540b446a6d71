#include <doctest.h>

#include <thread>

#include "nonperiod/enumeration.hpp"
#include "nonperiod/pairing.hpp"

using namespace nonperiod;

namespace {
const Budget kBudget;

Nat N(unsigned long v) { return Nat(v); }
}  // namespace

TEST_CASE("pairing inverse identifies the decoder's example codes") {
  // hand-decode anchors for the golden expressions below
  CHECK(cantor_join(N(1), N(0)) == N(1));
  CHECK(cantor_join(N(0), N(1)) == N(2));
  CHECK(cantor_join(N(2), N(0)) == N(3));
  CHECK(cantor_join(N(1), N(1)) == N(4));
  CHECK(cantor_join(N(4), N(0)) == N(10));
  CHECK(cantor_join(N(4), N(1)) == N(16));
  CHECK(cantor_join(N(1), N(16)) == N(169));
  CHECK(cantor_join(N(4), N(4)) == N(40));
}

TEST_CASE("decode reproduces the example closed forms") {
  auto f0 = decode(N(0));
  auto f1 = decode(N(1));
  auto f2 = decode(N(2));
  auto f3 = decode(N(3));
  auto f4 = decode(N(4));
  for (unsigned long x = 0; x <= 100; ++x) {
    CHECK(eval1(f0, N(x), kBudget) == N(x));
    CHECK(eval1(f1, N(x), kBudget) == N(x + 1));
    CHECK(eval1(f2, N(x), kBudget) == N(x));
    CHECK(eval1(f3, N(x), kBudget) == N(0));
    CHECK(eval1(f4, N(x), kBudget) == N(x + 2));
  }
}

TEST_CASE("decode(169) denotes (x+1)^x + 1") {
  auto f = decode(N(169));
  for (unsigned long x = 0; x <= 20; ++x) {
    Nat expected = pow_u(N(x + 1), x) + N(1);
    CHECK(eval1(f, N(x), kBudget) == expected);
  }
}

TEST_CASE("decode(10) denotes x^x with 0^0 = 1") {
  // 10 = J(4, 0); k = 0 has L(0) = R(0) = 0, so both operands are the identity
  CHECK(cantor_left(N(10)) == N(4));
  CHECK(cantor_right(N(10)) == N(0));
  auto f = decode(N(10));
  CHECK(eval1(f, N(0), kBudget) == N(1));
  for (unsigned long x = 1; x <= 12; ++x) CHECK(eval1(f, N(x), kBudget) == pow_u(N(x), x));
}

TEST_CASE("decode(3) is the pointwise monus of two identities") {
  auto f = decode(N(3));
  CHECK(f->kind() == ExprKind::Monus);
  CHECK(f->child(0)->kind() == ExprKind::Proj);
  CHECK(f->child(1)->kind() == ExprKind::Proj);
  CHECK(f->arity() == 1);
}

TEST_CASE("g examples") {
  CHECK(g(N(40), N(0), kBudget) == Rat(N(2), N(3)));
  CHECK(g(N(0), N(5), kBudget) == Rat(N(5), N(6)));
  CHECK(g(N(1), N(7), kBudget) == Rat(1));
}

TEST_CASE("decode is total for e <= 10^4") {
  Decoder decoder;
  for (unsigned long e = 0; e <= 10'000; ++e) {
    auto f = decoder.decode(N(e));
    REQUIRE(f != nullptr);
    CHECK(f->arity() == 1);
  }
}

TEST_CASE("the memo table is safe under concurrent decode") {
  Decoder decoder;
  Decoder reference(0);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&decoder] {
      for (unsigned long e = 0; e < 2000; ++e) decoder.decode(N(e));
    });
  for (auto& th : pool) th.join();
  for (unsigned long e = 0; e < 2000; ++e)
    CHECK(structurally_equal(*decoder.decode(N(e)), *reference.decode(N(e))));
}

TEST_CASE("memoization never changes decoded structure") {
  Decoder cached(10'000);
  Decoder uncached(0);
  for (unsigned long e = 0; e < 500; ++e)
    CHECK(structurally_equal(*cached.decode(N(e)), *uncached.decode(N(e))));
  // repeated decode through the cache returns the same structure too
  for (unsigned long e = 0; e < 100; ++e)
    CHECK(structurally_equal(*cached.decode(N(e)), *cached.decode(N(e))));
}
