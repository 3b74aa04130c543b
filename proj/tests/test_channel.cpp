#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dupcodes/channel.hpp"
#include "dupcodes/error.hpp"
#include "support.hpp"

using namespace dupcodes;
using support::texts;
using support::w;

TEST_CASE("single error operations") {
  const Word x = w("11110220", 3);
  CHECK(tandem_duplicate(x, 2, 3) == w("1111010220", 3));
  CHECK(palindromic_duplicate(x, 2, 3) == w("1111001220", 3));
  CHECK(tandem_delete(x, 2, 0) == w("110220", 3));
  CHECK(palindromic_delete(x, 2, 4) == w("111102", 3));

  CHECK(tandem_duplicate(w("0110"), 4, 0) == w("01100110"));
  CHECK(tandem_duplicate(w("01"), 1, 1) == w("011"));
  CHECK(palindromic_duplicate(w("010010"), 3, 0) == w("010010010"));
  CHECK(palindromic_duplicate(w("010010"), 3, 3) == w("010010010"));
  CHECK(palindromic_duplicate(w("1"), 1, 0) == w("11"));
  CHECK(tandem_delete(w("00"), 1, 0) == w("0"));
  CHECK(palindromic_delete(w("0110"), 2, 0) == w("01"));
}

TEST_CASE("error operations reject bad positions and patterns") {
  CHECK_THROWS_WITH_AS(tandem_duplicate(w("01"), 2, 1), doctest::Contains("invalid position"), Error);
  CHECK_THROWS_WITH_AS(tandem_delete(w("01"), 1, 0), doctest::Contains("not a tandem at p"), Error);
  CHECK_THROWS_WITH_AS(palindromic_delete(w("0101"), 2, 0), doctest::Contains("not a palindrome at p"),
                       Error);
  CHECK_THROWS_WITH_AS(palindromic_delete(w("0101"), 2, 1), doctest::Contains("invalid position"), Error);
  CHECK_FALSE(try_apply(w("01"), {ErrorOp::tandem_del, 1}, 0).has_value());
}

TEST_CASE("deletion positions") {
  CHECK(deletion_positions(w("010011"), {ErrorOp::tandem_del, 1}) == std::vector<std::size_t>{2, 4});
  CHECK(deletion_positions(w("01"), {ErrorOp::tandem_del, 1}).empty());
  CHECK(deletion_positions(w("01100001"), {ErrorOp::pal_del, 2}) == std::vector<std::size_t>{0, 3});
}

TEST_CASE("spheres and balls") {
  CHECK(texts(error_sphere(w("01"), {ErrorOp::tandem_dup, 1}, 1).members) ==
        std::vector<std::string>{"001", "011"});
  CHECK(error_sphere(w("01"), {ErrorOp::tandem_del, 1}, 1).members.empty());
  CHECK(texts(error_sphere(w("21011012210", 3), {ErrorOp::pal_del, 3}, 1).members) ==
        std::vector<std::string>{"21011012", "21012210"});
  CHECK(texts(error_ball(w("010101"), {ErrorOp::pal_del, 2}, 1)) == std::vector<std::string>{"010101"});
  CHECK(texts(error_ball(w("010011"), {ErrorOp::pal_del, 2}, 1)) ==
        std::vector<std::string>{"0101", "010011"});
  CHECK(texts(error_ball(w("0120", 3), {ErrorOp::pal_dup, 2}, 0)) == std::vector<std::string>{"0120"});
  CHECK(error_sphere(w("0110"), {ErrorOp::tandem_dup, 2}, 0).members == std::vector<Word>{w("0110")});
}

TEST_CASE("ball intersections") {
  const ErrorKind pdup{ErrorOp::pal_dup, 2};
  const auto witness = ball_intersection_witness(w("010101"), w("010011"), pdup, 1);
  REQUIRE(witness.has_value());
  CHECK(*witness == w("01001101"));
  CHECK_FALSE(balls_intersect(w("011010"), w("011110"), pdup, 1));
  CHECK(balls_intersect(w("011010"), w("011110"), {ErrorOp::pal_del, 2}, 1));
  CHECK(balls_intersect(w("0110"), w("0110"), {ErrorOp::tandem_del, 1}, 3));
  CHECK_THROWS_AS(balls_intersect(w("011"), w("0110"), pdup, 1), Error);
}

TEST_CASE("spheres match the brute-force oracle") {
  for (Symbol q : {2u, 3u}) {
    for (std::size_t n = 0; n <= (q == 2 ? 7u : 5u); ++n) {
      for (const auto& v : oracle::all_words(n, q)) {
        const Word x = support::to_word(v, q);
        for (auto op : {ErrorOp::tandem_dup, ErrorOp::tandem_del, ErrorOp::pal_dup, ErrorOp::pal_del}) {
          for (std::size_t l = 1; l <= 3; ++l) {
            for (std::size_t t = 0; t <= 2; ++t) {
              const auto members = error_sphere(x, {op, l}, t).members;
              const auto expected = oracle::sphere(v, support::to_op(op), l, t);
              std::vector<Word> want;
              for (const auto& e : expected) want.push_back(support::to_word(e, q));
              std::sort(want.begin(), want.end());
              REQUIRE(members == want);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("round trips: delete(duplicate(x, l, p), l, p) = x") {
  for (Symbol q : {2u, 3u}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (const auto& v : oracle::all_words(n, q)) {
        const Word x = support::to_word(v, q);
        for (std::size_t l = 1; l <= n; ++l) {
          for (std::size_t p = 0; p + l <= n; ++p) {
            CHECK(tandem_delete(tandem_duplicate(x, l, p), l, p) == x);
            CHECK(palindromic_delete(palindromic_duplicate(x, l, p), l, p) == x);
          }
        }
      }
    }
  }
}

namespace {

bool direct_same(const Word& x, const Word& y, std::size_t l, std::size_t i, std::size_t j, PalOp op) {
  const ErrorKind kind{op == PalOp::duplication ? ErrorOp::pal_dup : ErrorOp::pal_del, l};
  const auto a = try_apply(x, kind, i);
  const auto b = try_apply(y, kind, i + j);
  return a && b && *a == *b;
}

void check_all_positions(const Word& x, const Word& y, std::size_t l) {
  const std::size_t n = x.size();
  for (auto op : {PalOp::duplication, PalOp::deletion}) {
    const std::size_t span = op == PalOp::duplication ? l : 2 * l;
    if (n < span + 1) continue;
    for (std::size_t i = 0; i + 1 <= n - span; ++i) {
      for (std::size_t j = 1; i + j <= n - span; ++j) {
        REQUIRE_MESSAGE(same_outcome_predicate(x, y, l, i, j, op) == direct_same(x, y, l, i, j, op),
                        format_word(x) << " " << format_word(y) << " l=" << l << " i=" << i
                                       << " j=" << j << " op=" << int(op));
      }
    }
  }
}

}  // namespace

TEST_CASE("same-outcome predicate: examples") {
  CHECK(same_outcome_predicate(w("010010"), w("010010"), 3, 0, 3, PalOp::duplication));
  CHECK(same_outcome_predicate(w("000111"), w("000111"), 1, 0, 2, PalOp::duplication));
  CHECK_FALSE(same_outcome_predicate(w("01"), w("01"), 1, 0, 1, PalOp::duplication));
  CHECK_THROWS_AS(same_outcome_predicate(w("01"), w("01"), 1, 0, 0, PalOp::duplication), Error);
  CHECK_THROWS_AS(same_outcome_predicate(w("0110"), w("0110"), 2, 0, 1, PalOp::deletion), Error);
}

TEST_CASE("same-outcome predicate: one word, exhaustive") {
  for (Symbol q : {2u, 3u}) {
    for (std::size_t n = 2; n <= 8; ++n) {
      for (const auto& v : oracle::all_words(n, q)) {
        const Word x = support::to_word(v, q);
        for (std::size_t l = 1; l <= 3; ++l) check_all_positions(x, x, l);
      }
    }
  }
}

TEST_CASE("same-outcome predicate: two words") {
  // exhaustive on small lengths
  for (Symbol q : {2u, 3u}) {
    for (std::size_t n = 2; n <= (q == 2 ? 6u : 4u); ++n) {
      const auto words = oracle::all_words(n, q);
      for (const auto& a : words) {
        for (const auto& b : words) {
          for (std::size_t l = 1; l <= 3; ++l) {
            check_all_positions(support::to_word(a, q), support::to_word(b, q), l);
          }
        }
      }
    }
  }
  // pairs built to collide, up to length 8
  std::mt19937_64 rng(11);
  for (Symbol q : {2u, 3u}) {
    for (std::size_t n = 5; n <= 8; ++n) {
      const auto words = oracle::all_words(n, q);
      for (std::size_t l = 1; l <= 3; ++l) {
        for (const auto& v : words) {
          const Word x = support::to_word(v, q);
          if (rng() % 4) continue;
          // y derived from x by moving the duplication, plus random pairs
          for (std::size_t i = 0; i + l <= n; ++i) {
            const Word z = palindromic_duplicate(x, l, i);
            for (std::size_t p = 0; p + 2 * l <= z.size(); ++p) {
              if (auto y = try_apply(z, {ErrorOp::pal_del, l}, p); y && *y != x) {
                check_all_positions(x, *y, l);
                check_all_positions(*y, x, l);
              }
            }
          }
          check_all_positions(x, support::to_word(words[rng() % words.size()], q), l);
        }
      }
    }
  }
}

TEST_CASE("tandem duplication and deletion balls intersect together") {
  for (std::size_t l : {1u, 2u}) {
    for (std::size_t n = l; n <= 8; ++n) {
      const auto words = oracle::all_words(n, 2);
      std::vector<std::vector<Word>> dup_balls, del_balls;
      for (const auto& v : words) {
        const Word x = support::to_word(v, 2);
        dup_balls.push_back(error_ball(x, {ErrorOp::tandem_dup, l}, 1));
        del_balls.push_back(error_ball(x, {ErrorOp::tandem_del, l}, 1));
      }
      for (std::size_t a = 0; a < words.size(); ++a) {
        for (std::size_t b = a + 1; b < words.size(); ++b) {
          const bool dup = !intersect_sorted(dup_balls[a], dup_balls[b]).empty();
          const bool del = !intersect_sorted(del_balls[a], del_balls[b]).empty();
          REQUIRE(dup == del);
        }
      }
    }
  }
}
