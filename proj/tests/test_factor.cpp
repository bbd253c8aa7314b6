#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "liouville/factor.hpp"

using namespace liouville;

namespace {

// Independent oracle: plain trial division by every integer d = 2, 3, 4, ...
// Deliberately naive and separate from the library's wheel/table paths.
std::vector<std::pair<u64, u32>> oracle_factorize(u64 n) {
  std::vector<std::pair<u64, u32>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    u32 e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int oracle_lambda(u64 n) {
  u64 omega = 0;
  for (const auto& [p, e] : oracle_factorize(n)) omega += e;
  return omega % 2 == 0 ? +1 : -1;
}

}  // namespace

TEST_CASE("spf table basics", "[factor]") {
  const SpfTable t10 = build_spf_table(10);
  CHECK(t10.spf(4) == 2);
  CHECK(t10.spf(9) == 3);
  CHECK(t10.spf(7) == 7);

  const SpfTable t2 = build_spf_table(2);
  CHECK(t2.spf(2) == 2);

  const SpfTable t30 = build_spf_table(30);
  for (u64 n = 2; n <= 30; ++n) {
    const u64 expected = oracle_factorize(n).front().first;
    CHECK(t30.spf(n) == expected);
  }

  CHECK_THROWS_AS(build_spf_table(1), std::invalid_argument);
  CHECK_THROWS_AS(t30.spf(31), std::invalid_argument);
  CHECK_THROWS_AS(t30.spf(1), std::invalid_argument);
}

TEST_CASE("spf table invariants", "[factor]") {
  const SpfTable t = build_spf_table(1000);
  for (u64 n = 2; n <= 1000; ++n) {
    const u64 p = t.spf(n);
    CHECK(n % p == 0);
    CHECK(t.spf(p) == p);  // p is prime
  }
}

TEST_CASE("factorize known values", "[factor]") {
  using factors_t = std::vector<std::pair<u64, u32>>;
  CHECK(factorize(2160).factors == factors_t{{2, 4}, {3, 3}, {5, 1}});
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(1002001).factors == factors_t{{7, 2}, {11, 2}, {13, 2}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);

  const SpfTable table = build_spf_table(3000);
  CHECK(factorize(2160, &table).factors == factorize(2160).factors);
}

TEST_CASE("factorize matches the trial-division oracle up to 1e5", "[factor]") {
  const SpfTable table = build_spf_table(100000);
  for (u64 n = 1; n <= 100000; ++n) {
    const auto via_table = factorize(n, &table).factors;
    if (via_table != oracle_factorize(n)) {
      FAIL("mismatch at n = " << n);
    }
  }
  // spot-check the no-table fallback against the oracle as well
  for (u64 n : {2ull, 97ull, 1024ull, 99991ull, 1002001ull, 73573500ull})
    CHECK(factorize(n).factors == oracle_factorize(n));
}

TEST_CASE("lambda point values", "[factor]") {
  CHECK(lambda(1) == +1);
  CHECK(lambda(2) == -1);
  CHECK(lambda(1002001) == oracle_lambda(1002001));
  CHECK(lambda(1002001) == +1);
  CHECK_THROWS_AS(lambda(0), std::invalid_argument);
}

TEST_CASE("lambda_segment windows", "[factor]") {
  SECTION("first ten integers") {
    const LambdaTable t = lambda_segment(1, 10);
    const std::vector<i8> expected{+1, -1, -1, +1, -1, +1, -1, -1, +1, +1};
    CHECK(t.values == expected);
    CHECK(t.sum() == 0);
  }
  SECTION("reference window sums to -42") {
    CHECK(lambda_segment(25000001, 25005000).sum() == -42);
  }
  SECTION("degenerate single-entry window") {
    for (u64 a : {1ull, 2ull, 1000003ull, 999999937ull})
      CHECK(lambda_segment(a, a).at(a) == lambda(a));
  }
  SECTION("argument validation") {
    CHECK_THROWS_AS(lambda_segment(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(lambda_segment(7, 3), std::invalid_argument);
    SegmentOptions tiny;
    tiny.cap = 10;
    CHECK_THROWS_AS(lambda_segment(1, 100, tiny), std::invalid_argument);
  }
}

TEST_CASE("lambda is completely multiplicative", "[factor]") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<u64> dist(1, 31623);  // products stay below 1e9
  for (int i = 0; i < 1000; ++i) {
    const u64 m = dist(rng), n = dist(rng);
    REQUIRE(lambda(m * n) == lambda(m) * lambda(n));
  }
}

TEST_CASE("segment agrees with pointwise lambda on random windows", "[factor]") {
  std::mt19937_64 rng(7041776);
  std::uniform_int_distribution<u64> dist(1, 999999000);
  for (int i = 0; i < 100; ++i) {
    const u64 a = dist(rng);
    const LambdaTable t = lambda_segment(a, a + 999);
    for (u64 n = a; n <= a + 999; n += 97)  // sampled stride keeps this fast
      REQUIRE(t.at(n) == lambda(n));
  }
}

TEST_CASE("segment results are independent of the thread count", "[factor]") {
  SegmentOptions one, many;
  one.threads = 1;
  many.threads = 4;
  many.block = 1 << 10;
  const LambdaTable a = lambda_segment(999000, 1100000, one);
  const LambdaTable b = lambda_segment(999000, 1100000, many);
  CHECK(a.values == b.values);
}
