#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dupcodes/error.hpp"
#include "dupcodes/formulas.hpp"
#include "support.hpp"

using namespace dupcodes;
using support::w;

namespace {

std::size_t enumerated(const Word& x, oracle::Op op, std::size_t l, std::size_t t) {
  return oracle::sphere(support::to_vec(x), op, l, t).size();
}

}  // namespace

TEST_CASE("tandem duplication sphere size") {
  CHECK(tandem_dup_sphere_size(w("21010121", 3), 2, 1) == 3);
  CHECK(tandem_dup_sphere_size(w("21010121", 3), 2, 2) == 6);
  CHECK(tandem_dup_sphere_size(w("0000"), 1, 1) == 1);
  CHECK(enumerated(w("21010121", 3), oracle::Op::tdup, 2, 1) == 3);
  CHECK(enumerated(w("21010121", 3), oracle::Op::tdup, 2, 2) == 6);
  CHECK_THROWS_AS(tandem_dup_sphere_size(w("0"), 2, 1), Error);
}

TEST_CASE("tandem deletion sphere size") {
  CHECK(tandem_del_sphere_size(w("2121010121", 3), 2, 1) == 2);
  CHECK(tandem_del_sphere_size(w("0101"), 1, 3) == 0);
  CHECK(tandem_del_sphere_size(w("0000"), 1, 2) == 1);
  CHECK(enumerated(w("2121010121", 3), oracle::Op::tdel, 2, 1) == 2);
  CHECK(enumerated(w("0000"), oracle::Op::tdel, 1, 2) == 1);
}

TEST_CASE("palindromic duplication sphere sizes") {
  CHECK(pal_dup_sphere_size_l1(w("001")) == 2);
  CHECK(pal_dup_sphere_size_l1(w("11110220", 3)) == 4);
  CHECK(pal_dup_sphere_size_l1(w("00000")) == 1);
  CHECK(pal_dup_sphere_size_l2(w("11110220", 3)) == 5);
  CHECK(enumerated(w("11110220", 3), oracle::Op::pdup, 2, 1) == 5);
  CHECK(pal_dup_sphere_size_l2(w("01")) == 1);
  CHECK(pal_dup_sphere_size_l2(w("000000")) == 1);
  CHECK_THROWS_AS(pal_dup_sphere_size_l2(w("0")), Error);

  CHECK(pal_dup_sphere_upper_bound(w("010010"), 3) == 4);
  CHECK(enumerated(w("010010"), oracle::Op::pdup, 3, 1) == 3);
  CHECK(pal_dup_sphere_upper_bound(w("0000000"), 3) == 1);
  CHECK(pal_dup_sphere_upper_bound(w("11110220", 3), 2) == 5);
}

TEST_CASE("palindromic deletion sphere sizes") {
  CHECK(pal_del_sphere_size_l1(w("001")) == 1);
  CHECK(pal_del_sphere_size_l1(w("0101")) == 0);
  CHECK(pal_del_sphere_size_l1(w("11110220", 3)) == 2);
  CHECK(pal_del_sphere_size_l2_binary(w("01100001")) == 2);
  CHECK(enumerated(w("01100001"), oracle::Op::pdel, 2, 1) == 2);
  CHECK(pal_del_sphere_size_l2_binary(w("0101")) == 0);
  CHECK(pal_del_sphere_size_l2_binary(w("1100")) == 0);
  CHECK(pal_del_sphere_size_l2_binary(w("011")) == 0);
  CHECK_THROWS_WITH_AS(pal_del_sphere_size_l2_binary(w("0110", 3)), doctest::Contains("binary only"),
                       Error);
}

TEST_CASE("palindrome matrix") {
  const Word x = w("21011012210", 3);
  const PalindromeMatrix m = palindrome_matrix(x, 3);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 6);
  CHECK(m.zero_columns() == std::vector<std::size_t>{2, 6});
  CHECK(pal_del_sphere_upper_bound(x, 3) == 2);
  CHECK(enumerated(x, oracle::Op::pdel, 3, 1) == 2);

  CHECK(palindrome_matrix(w("012012", 3), 2).zero_columns().empty());
  CHECK(pal_del_sphere_upper_bound(w("012012", 3), 2) == 0);
  CHECK(palindrome_matrix(w("0000"), 2).zero_columns() == std::vector<std::size_t>{1});
  CHECK(pal_del_sphere_upper_bound(w("00000"), 2) == 1);
  CHECK_THROWS_AS(palindrome_matrix(w("000"), 2), Error);

  // a zero column at c is a length-l palindrome starting at prefix length c - 1
  for (const auto& v : oracle::all_words(8, 2)) {
    const Word y = support::to_word(v, 2);
    for (std::size_t l = 1; l <= 4; ++l) {
      const auto zeros = palindrome_matrix(y, l).zero_columns();
      std::vector<std::size_t> expected;
      for (std::size_t p = 0; p + 2 * l <= 8; ++p) {
        if (oracle::apply(v, oracle::Op::pdel, l, p)) expected.push_back(p + 1);
      }
      REQUIRE(zeros == expected);
    }
  }
}

TEST_CASE("closed forms equal enumeration") {
  for (Symbol q : {2u, 3u}) {
    for (std::size_t n = 1; n <= (q == 2 ? 10u : 7u); ++n) {
      for (const auto& v : oracle::all_words(n, q)) {
        const Word x = support::to_word(v, q);
        for (std::size_t l = 1; l <= 3 && l <= n; ++l) {
          for (std::size_t t = 1; t <= 2; ++t) {
            REQUIRE(tandem_dup_sphere_size(x, l, t) == oracle::sphere(v, oracle::Op::tdup, l, t).size());
            REQUIRE(tandem_del_sphere_size(x, l, t) == oracle::sphere(v, oracle::Op::tdel, l, t).size());
          }
        }
        REQUIRE(pal_dup_sphere_size_l1(x) == oracle::sphere(v, oracle::Op::pdup, 1, 1).size());
        REQUIRE(pal_del_sphere_size_l1(x) == oracle::sphere(v, oracle::Op::pdel, 1, 1).size());
        if (n >= 2) REQUIRE(pal_dup_sphere_size_l2(x) == oracle::sphere(v, oracle::Op::pdup, 2, 1).size());
        if (q == 2) {
          REQUIRE(pal_del_sphere_size_l2_binary(x) == oracle::sphere(v, oracle::Op::pdel, 2, 1).size());
        }
      }
    }
  }
}

TEST_CASE("bounds dominate enumeration") {
  for (Symbol q : {2u, 3u}) {
    for (std::size_t n = 1; n <= (q == 2 ? 10u : 7u); ++n) {
      for (const auto& v : oracle::all_words(n, q)) {
        const Word x = support::to_word(v, q);
        for (std::size_t l = 2; l <= 4; ++l) {
          if (n >= l) REQUIRE(pal_dup_sphere_upper_bound(x, l) >= oracle::sphere(v, oracle::Op::pdup, l, 1).size());
          if (n >= 2 * l) {
            REQUIRE(pal_del_sphere_upper_bound(x, l) >= oracle::sphere(v, oracle::Op::pdel, l, 1).size());
          }
        }
      }
    }
  }
}

TEST_CASE("tandem deletion spheres are monotone") {
  for (Symbol q : {2u, 3u}) {
    for (std::size_t n = 1; n <= (q == 2 ? 9u : 6u); ++n) {
      for (const auto& v : oracle::all_words(n, q)) {
        const Word x = support::to_word(v, q);
        for (std::size_t l = 1; l <= 3 && l <= n; ++l) {
          for (std::size_t t = 1; t <= 2; ++t) {
            const auto parent = tandem_del_sphere_size(x, l, t);
            for (const auto& nu : oracle::ball(v, oracle::Op::tdel, l, t)) {
              if (nu.size() < l) continue;
              REQUIRE(tandem_del_sphere_size(support::to_word(nu, q), l, t) <= parent);
            }
          }
        }
      }
    }
  }
}
