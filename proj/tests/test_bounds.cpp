#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <set>
#include <random>

#include "dupcodes/bounds.hpp"
#include "dupcodes/error.hpp"
#include "dupcodes/mis.hpp"
#include "support.hpp"

using namespace dupcodes;

TEST_CASE("run-length-limited weight counts") {
  CHECK(rll_weight_count(1, 1, 0, 2) == 1);
  CHECK(rll_weight_count(3, 1, 1, 2) == 1);
  CHECK(rll_weight_count(3, 1, 2, 2) == 3);
  CHECK(rll_weight_count(0, 0, 0, 2) == 1);
  CHECK(rll_weight_count(4, 1, 5, 3) == 0);
}

TEST_CASE("run-length-limited counts match enumeration") {
  for (unsigned q : {2u, 3u}) {
    for (std::size_t n = 0; n <= 10; ++n) {
      // table[w][r]: words of weight w whose longest zero run is r
      std::vector<std::vector<std::uint64_t>> table(n + 1, std::vector<std::uint64_t>(n + 1, 0));
      for (const auto& v : oracle::all_words(n, q)) {
        std::size_t weight = 0, run = 0, worst = 0;
        for (unsigned s : v) {
          weight += s != 0;
          run = s == 0 ? run + 1 : 0;
          worst = std::max(worst, run);
        }
        ++table[weight][worst];
      }
      for (std::size_t l = 0; l <= 4; ++l) {
        for (std::size_t weight = 0; weight <= n; ++weight) {
          std::uint64_t expected = 0;
          for (std::size_t r = 0; r <= std::min(l, n); ++r) expected += table[weight][r];
          REQUIRE_MESSAGE(rll_weight_count(n, l, weight, q) == expected,
                          "n=" << n << " l=" << l << " w=" << weight << " q=" << q);
        }
      }
    }
  }
}

TEST_CASE("deletion histogram examples") {
  const auto h = deletion_histogram(2, 1, 2);
  CHECK(h.size() == 2);
  CHECK(h.at(0) == 2);
  CHECK(h.at(1) == 2);
  const auto short_words = deletion_histogram(3, 2, 3);
  CHECK(short_words.size() == 1);
  CHECK(short_words.at(0) == 27);
  CHECK(irreducible_count(2, 1, 2) == 2);
  CHECK(irreducible_count(3, 1, 2) == 2);
  CHECK(irreducible_count(5, 3, 3) == 243);
}

TEST_CASE("deletion histogram matches enumeration") {
  for (unsigned q : {2u, 3u}) {
    for (std::size_t n = 1; n <= 10; ++n) {
      for (std::size_t l = 1; l <= 3 && l <= n; ++l) {
        const auto expected = oracle::deletion_histogram(n, l, q);
        const auto got = deletion_histogram(n, l, q);
        REQUIRE(got.size() == expected.size());
        BigInt total = 0;
        for (const auto& [i, count] : expected) {
          REQUIRE(got.count(i) == 1);
          REQUIRE(got.at(i) == count);
          total += got.at(i);
        }
        REQUIRE(total == big_pow(q, n));
        REQUIRE(irreducible_count(n, l, q) == (expected.count(0) ? expected.at(0) : 0));
      }
    }
  }
}

TEST_CASE("sphere-packing bound value") {
  // IRR(2) + IRR(1) + sum_i N(1, i) / i for l = 1, q = 2
  std::uint64_t irr2 = 0, irr1 = 0;
  for (const auto& v : oracle::all_words(2, 2)) irr2 += oracle::sphere(v, oracle::Op::tdel, 1, 1).empty();
  for (const auto& v : oracle::all_words(1, 2)) irr1 += oracle::sphere(v, oracle::Op::tdel, 1, 1).empty();
  CHECK(gsp_bound_tandem(2, 1, 2) == Rational(irr2 + irr1));
  CHECK(gsp_bound_tandem(2, 1, 2) == 4);
  CHECK(exact_optimum(2, 1, 1, 2, ErrorOp::tandem_dup) == 4);
  // length-l words: all q^l irreducible plus the empty word
  CHECK(gsp_bound_tandem(2, 2, 2) == 5);
  CHECK(gsp_bound_tandem(3, 3, 3) == 28);
  CHECK(gsp_bound_tandem(6, 2, 2) >= Rational(exact_optimum(6, 2, 1, 2, ErrorOp::tandem_dup)));
}

TEST_CASE("bound is sound against exact optimum") {
  for (std::size_t l : {1u, 2u}) {
    for (std::size_t n = l; n <= 9; ++n) {
      const auto dup = exact_optimum(n, l, 1, 2, ErrorOp::tandem_dup);
      const auto del = exact_optimum(n, l, 1, 2, ErrorOp::tandem_del);
      CHECK(dup == del);
      CHECK(gsp_bound_tandem(n, l, 2) >= Rational(dup));
    }
  }
}

TEST_CASE("exact optimum edge cases") {
  CHECK(exact_optimum(4, 1, 0, 3, ErrorOp::pal_dup) == 81);
  CHECK_THROWS_AS(exact_optimum(30, 1, 1, 4, ErrorOp::tandem_dup), GuardExceeded);
  const auto code = optimal_code(5, 1, 2, {ErrorOp::tandem_del, 1});
  for (std::size_t a = 0; a < code.size(); ++a) {
    for (std::size_t b = a + 1; b < code.size(); ++b) {
      CHECK_FALSE(balls_intersect(code[a], code[b], {ErrorOp::tandem_del, 1}, 1));
    }
  }
}

TEST_CASE("exact optimum agrees with subset search on tiny spaces") {
  for (auto op : {ErrorOp::tandem_dup, ErrorOp::pal_dup, ErrorOp::pal_del}) {
    for (std::size_t n = 2; n <= 4; ++n) {
      for (std::size_t l = 1; l <= 2; ++l) {
        const auto words = oracle::all_words(n, 2);
        std::vector<std::set<oracle::Vec>> balls;
        for (const auto& v : words) balls.push_back(oracle::ball(v, support::to_op(op), l, 1));
        std::vector<std::vector<bool>> adj(words.size(), std::vector<bool>(words.size(), false));
        for (std::size_t a = 0; a < words.size(); ++a) {
          for (std::size_t b = 0; b < words.size(); ++b) {
            adj[a][b] = a != b && oracle::intersect(balls[a], balls[b]);
          }
        }
        CHECK(exact_optimum(n, l, 1, 2, op) == oracle::max_independent_set(adj));
      }
    }
  }
}

TEST_CASE("maximum independent set on random graphs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + rng() % 14;
    const unsigned density = 1 + rng() % 8;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    AdjacencyList graph(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (rng() % 10 < density) {
          adj[a][b] = adj[b][a] = true;
          graph[a].push_back(b);
          graph[b].push_back(a);
        }
      }
    }
    const auto set = maximum_independent_set(graph);
    CHECK(set.size() == oracle::max_independent_set(adj));
    for (std::size_t a : set) {
      for (std::size_t b : set) CHECK_FALSE(adj[a][b]);
    }
  }
}

TEST_CASE("fractional transversal is feasible") {
  for (auto [n, l, t] : std::vector<std::array<std::size_t, 3>>{{6, 2, 1}, {8, 1, 1}, {5, 2, 2}}) {
    const auto result = transversal_check(n, l, t, 2);
    CHECK(result.feasible);
    CHECK(result.deficits.empty());
  }
  for (std::size_t l : {1u, 2u}) {
    for (std::size_t n = l; n <= 9; ++n) {
      const auto result = transversal_check(n, l, 1, 2);
      CHECK(result.feasible);
      CHECK(result.total == gsp_bound_tandem(n, l, 2));
    }
  }
}

TEST_CASE("bound report") {
  const BoundReport r = bound_report(6, 2, 2);
  CHECK(r.t == 1);
  CHECK(r.irreducible_counts.size() == 2);
  BigInt total = 0;
  Rational value = Rational(r.irreducible_counts[0] + r.irreducible_counts[1]);
  for (const auto& [i, count] : r.histogram) {
    total += count;
    if (i >= 1) value += Rational(count, BigInt(i));
  }
  CHECK(total == 16);
  CHECK(value == r.bound_value);
  CHECK(r.redundancy_lower_bound == doctest::Approx(6.0 - std::log2(to_double(r.bound_value))));
}

TEST_CASE("redundancy table") {
  const auto rows = redundancy_table({2, 8, 16}, 2, 2);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].gsp_raw < 0);
  CHECK(rows[0].gsp == 0.0);
  CHECK(rows[1].c2 == std::log2(8.0) + std::log2(10.0));
  CHECK(rows[1].c2 == doctest::Approx(6.32193).epsilon(1e-5));
  CHECK(rows[2].burst == 7.0);
  for (const auto& row : rows) {
    CHECK(row.gsp >= 0.0);
    CHECK(row.gsp <= row.c1 + 1e-12);
  }
  CHECK_THROWS_AS(redundancy_table({30}, 1, 4), GuardExceeded);
}
