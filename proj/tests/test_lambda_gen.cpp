#include <catch2/catch_amalgamated.hpp>

#include "liouville/lambda_gen.hpp"

using namespace liouville;

TEST_CASE("one doubling step", "[lambda-gen]") {
  LambdaTable seed;
  seed.start = 1;
  seed.values = {+1, -1};

  SECTION("from N = 2: a gap at 3, a product at 4") {
    const DoublingResult r = double_lambda(seed);
    CHECK(r.table.values == std::vector<i8>{+1, -1, -1, +1});
    CHECK(r.new_primes == std::vector<u64>{3});
  }
  SECTION("from N = 4") {
    DoublingResult four = double_lambda(seed);
    const DoublingResult r = double_lambda(four.table);
    CHECK(r.table.values == std::vector<i8>{+1, -1, -1, +1, -1, +1, -1, -1});
    CHECK(r.new_primes == std::vector<u64>{5, 7});
  }
  SECTION("partial target") {
    const DoublingResult r = double_lambda(seed, 3);
    CHECK(r.table.values == std::vector<i8>{+1, -1, -1});
    CHECK(r.new_primes == std::vector<u64>{3});
  }
  SECTION("argument validation") {
    LambdaTable shifted;
    shifted.start = 2;
    shifted.values = {-1, -1};
    CHECK_THROWS_AS(double_lambda(shifted), std::invalid_argument);
    CHECK_THROWS_AS(double_lambda(seed, 5), std::invalid_argument);
    CHECK_THROWS_AS(double_lambda(seed, 2), std::invalid_argument);
  }
}

TEST_CASE("generated sequence matches the sieve", "[lambda-gen]") {
  SECTION("first ten values") {
    const GeneratedTable g = generate_to(10);
    CHECK(g.table.values == std::vector<i8>{+1, -1, -1, +1, -1, +1, -1, -1, +1, +1});
  }
  SECTION("N = 2 keeps the seed") {
    const GeneratedTable g = generate_to(2);
    CHECK(g.table.values == std::vector<i8>{+1, -1});
    CHECK(g.primes == std::vector<u64>{2});
  }
  SECTION("entrywise equality with the sieve at 1e5") {
    const GeneratedTable g = generate_to(100000);
    const LambdaTable sieved = lambda_segment(1, 100000);
    REQUIRE(g.table.values == sieved.values);
    REQUIRE(g.primes == primes_up_to(100000));
  }
  SECTION("non-power-of-two target") {
    const GeneratedTable g = generate_to(77777);
    const LambdaTable sieved = lambda_segment(1, 77777);
    REQUIRE(g.table.values == sieved.values);
  }
  CHECK_THROWS_AS(generate_to(1), std::invalid_argument);
}

TEST_CASE("every factorization witness agrees", "[lambda-gen]") {
  const LambdaTable lam = lambda_segment(1, 100000);
  for (u64 m = 4; m <= 100000; ++m) {
    const int expected = lam.at(m);
    for (u64 n = 2; n * n <= m; ++n) {
      if (m % n != 0) continue;
      if (lam.at(n) * lam.at(m / n) != expected) {
        FAIL("witness (" << n << ", " << m / n << ") disagrees at m = " << m);
      }
    }
  }
  SUCCEED("all witnesses consistent");
}
