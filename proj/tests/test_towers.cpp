#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "liouville/summatory.hpp"
#include "liouville/towers.hpp"

using namespace liouville;

TEST_CASE("triad labeling of known integers", "[towers]") {
  CHECK(triad_of(2160) == Triad{16, 3, 3, 5});
  CHECK(triad_of(663) == Triad{39, 17, 1, 1});
  CHECK(triad_of(73573500) == Triad{1500, 7, 3, 143});
  CHECK(triad_of(1) == kTrivialTriad);
  CHECK(triad_of(12) == Triad{1, 2, 2, 3});
  CHECK(triad_of(81) == Triad{1, 3, 4, 1});
  CHECK(triad_of(4845) == Triad{255, 19, 1, 1});
  CHECK_THROWS_AS(triad_of(0), std::invalid_argument);
}

TEST_CASE("integer_of reconstructs and validates", "[towers]") {
  CHECK(integer_of(Triad{39, 17, 1, 1}) == 663);
  CHECK(integer_of(kTrivialTriad) == 1);
  CHECK(integer_of(Triad{4, 3, 2, 1}) == 36);

  SECTION("violated clauses are named") {
    CHECK_THROWS_WITH(integer_of(Triad{9, 2, 2, 1}),
                      Catch::Matchers::ContainsSubstring("m must be < p"));
    CHECK_THROWS_WITH(integer_of(Triad{1, 5, 2, 3}),
                      Catch::Matchers::ContainsSubstring("u must be > p"));
    CHECK_THROWS_WITH(integer_of(Triad{1, 3, 2, 25}),
                      Catch::Matchers::ContainsSubstring("squarefree"));
    CHECK_THROWS_WITH(integer_of(Triad{1, 4, 2, 1}),
                      Catch::Matchers::ContainsSubstring("prime"));
    CHECK_THROWS_WITH(integer_of(Triad{1, 5, 1, 7}),
                      Catch::Matchers::ContainsSubstring("k >= 2"));
    CHECK_THROWS_WITH(integer_of(Triad{4, 3, 1, 1}),
                      Catch::Matchers::ContainsSubstring("squarefree m"));
    CHECK_THROWS_WITH(integer_of(Triad{1, 2, 0, 1}),
                      Catch::Matchers::ContainsSubstring("trivial"));
  }
  SECTION("overflow is detected") {
    CHECK_THROWS_AS(integer_of(Triad{1, 2, 64, 1}), std::range_error);
  }
}

TEST_CASE("tower_of and base_of", "[towers]") {
  CHECK(tower_of(12) == TowerLabel{1, 2, 3});
  CHECK(base_of(TowerLabel{1, 2, 3}) == std::pair<u64, u32>{12, 2});
  CHECK(base_of(TowerLabel{39, 17, 1}) == std::pair<u64, u32>{663, 1});
  CHECK(base_of(TowerLabel{16, 3, 5}) == std::pair<u64, u32>{720, 2});
  CHECK(base_of(TowerLabel{1, 2, 1}) == std::pair<u64, u32>{2, 1});
  CHECK(base_of(kTrivialTower) == std::pair<u64, u32>{1, 0});
}

TEST_CASE("members_up_to", "[towers]") {
  CHECK(members_up_to(TowerLabel{1, 2, 3}, 50) == std::vector<u64>{12, 24, 48});
  CHECK(members_up_to(TowerLabel{1, 3, 1}, 30) == std::vector<u64>{3, 9, 27});
  CHECK(members_up_to(TowerLabel{39, 17, 1}, 600).empty());
  CHECK(members_up_to(kTrivialTower, 5) == std::vector<u64>{1});
}

TEST_CASE("towers_up_to groups every integer once", "[towers]") {
  SECTION("N = 2") {
    const auto towers = towers_up_to(2);
    REQUIRE(towers.size() == 1);
    CHECK(towers[0].first == TowerLabel{1, 2, 1});
    CHECK(towers[0].second == 1);
  }
  SECTION("N = 7") {
    const auto towers = towers_up_to(7);
    std::map<std::string, u64> got;
    for (const auto& [label, count] : towers) got[format_label(label)] = count;
    const std::map<std::string, u64> expected{
        {"1:2:1", 2}, {"1:3:1", 1}, {"1:5:1", 1}, {"2:3:1", 1}, {"1:7:1", 1}};
    CHECK(got == expected);
  }
  SECTION("N = 12 contains the (1,2,3) tower") {
    for (const auto& [label, count] : towers_up_to(12)) {
      if (label == TowerLabel{1, 2, 3}) {
        CHECK(count == 1);
        return;
      }
    }
    FAIL("tower 1:2:3 missing");
  }
  CHECK_THROWS_AS(towers_up_to(1), std::invalid_argument);
}

TEST_CASE("triad bijection on an initial range", "[towers]") {
  const SpfTable table(100000);
  for (u64 n = 2; n <= 100000; ++n) {
    const Triad t = triad_of(n, &table);
    REQUIRE(integer_of(t, &table) == n);
    REQUIRE(triad_of(integer_of(t, &table), &table) == t);
  }
}

TEST_CASE("tower partition covers 2..N without omissions or duplicates", "[towers]") {
  const SpfTable table(10000);
  for (u64 N : {100ull, 1000ull, 10000ull}) {
    const auto towers = towers_up_to(N, &table);
    u64 total = 0;
    std::vector<u8> seen(N + 1, 0);
    for (const auto& [label, count] : towers) {
      total += count;
      const auto members = members_up_to(label, N, &table);
      REQUIRE(members.size() == count);
      for (u64 m : members) {
        REQUIRE(m <= N);
        REQUIRE(seen[m] == 0);
        seen[m] = 1;
      }
    }
    CHECK(total == N - 1);
    for (u64 n = 2; n <= N; ++n) REQUIRE(seen[n] == 1);
  }
}

TEST_CASE("lambda alternates along every tower", "[towers]") {
  const SpfTable table(10000);
  const LambdaTable lam = lambda_segment(1, 10000);
  for (const auto& [label, count] : towers_up_to(10000, &table)) {
    if (count < 2) continue;
    const auto members = members_up_to(label, 10000, &table);
    for (std::size_t i = 0; i + 1 < members.size(); ++i)
      REQUIRE(lam.at(members[i]) == -lam.at(members[i + 1]));
  }
}

TEST_CASE("twin_integer is a lambda-flipping involution", "[towers]") {
  CHECK(twin_integer(3) == 6);
  CHECK(twin_integer(6) == 3);
  CHECK(twin_integer(12) == 24);
  CHECK(twin_integer(24) == 12);
  CHECK(twin_integer(1) == 2);
  CHECK(twin_integer(2) == 1);
  CHECK_THROWS_AS(twin_integer(0), std::invalid_argument);
  const u64 huge = (u64(1) << 63) + 1;  // odd, even 2-adic valuation
  CHECK_THROWS_AS(twin_integer(huge), std::range_error);

  const LambdaTable lam = lambda_segment(1, 20000);
  for (u64 n = 1; n <= 10000; ++n) {
    const u64 t = twin_integer(n);
    REQUIRE(twin_integer(t) == n);
    REQUIRE(lam.at(t) == -lam.at(n));
  }
}

TEST_CASE("twin_tower pairs bases of opposite lambda", "[towers]") {
  CHECK(twin_tower(TowerLabel{1, 5, 1}) == TowerLabel{2, 5, 1});
  CHECK(twin_tower(TowerLabel{2, 5, 1}) == TowerLabel{1, 5, 1});
  CHECK(twin_tower(TowerLabel{3, 7, 1}) == TowerLabel{6, 7, 1});
  CHECK(twin_tower(TowerLabel{4, 3, 1}) == TowerLabel{8, 3, 1});
  CHECK(twin_tower(TowerLabel{1, 2, 1}) == kTrivialTower);
  CHECK(twin_tower(kTrivialTower) == TowerLabel{1, 2, 1});
  CHECK_THROWS_AS(twin_tower(TowerLabel{1, 2, 3}), std::domain_error);

  // involution with base-lambda flip over all towers reachable below 1e4, p >= 3
  const SpfTable table(100000);
  for (const auto& [label, count] : towers_up_to(10000, &table)) {
    if (label.p < 3) continue;
    const TowerLabel partner = twin_tower(label, &table);
    REQUIRE(twin_tower(partner, &table) == label);
    REQUIRE(lambda(base_of(partner, &table).first, &table) ==
            -lambda(base_of(label, &table).first, &table));
  }
}

TEST_CASE("label formatting round-trips", "[towers]") {
  CHECK(format_label(TowerLabel{39, 17, 1}) == "39:17:1");
  CHECK(parse_label("39:17:1") == TowerLabel{39, 17, 1});
  CHECK(parse_label(format_label(TowerLabel{1500, 7, 143})) == TowerLabel{1500, 7, 143});
  CHECK_THROWS_AS(parse_label("39:17"), std::invalid_argument);
  CHECK_THROWS_AS(parse_label("a:b:c"), std::invalid_argument);
  CHECK_THROWS_AS(parse_label("39:17:1:2"), std::invalid_argument);
}
