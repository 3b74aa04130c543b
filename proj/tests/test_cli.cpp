#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dupcodes/cli.hpp"
#include "dupcodes/error.hpp"
#include "dupcodes/report.hpp"

using namespace dupcodes;

namespace {

struct Run {
  int status = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "dupcodes_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::size_t lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("list parsing") {
  CHECK(parse_size_list("5") == std::vector<std::size_t>{5});
  CHECK(parse_size_list("2..4") == std::vector<std::size_t>{2, 3, 4});
  CHECK(parse_size_list("2,8,3..4") == std::vector<std::size_t>{2, 8, 3, 4});
  const auto lengths = parse_length_list("2,inf");
  REQUIRE(lengths.size() == 2);
  CHECK_FALSE(lengths[1].has_value());
  CHECK(parse_alphabet_list("2,3") == std::vector<Symbol>{2, 3});
  CHECK_THROWS_AS(parse_size_list("4..2"), Error);
  CHECK_THROWS_AS(parse_size_list("x"), Error);
  CHECK_THROWS_AS(parse_alphabet_list("1"), Error);
}

TEST_CASE("sphere command") {
  auto r = run({"sphere", "--word", "11110220", "--q", "3", "--kind", "pal-dup", "--l", "2", "--t", "1"});
  CHECK(r.status == 0);
  CHECK(r.out.find("size     5") != std::string::npos);
  CHECK(r.out.find("1111001220") != std::string::npos);

  r = run({"sphere", "--word", "01", "--q", "2", "--kind", "tandem-del", "--l", "1", "--t", "1"});
  CHECK(r.status == 0);
  CHECK(r.out.find("sphere is empty") != std::string::npos);

  r = run({"sphere", "--word", "21011012210", "--q", "3", "--kind", "pal-del", "--l", "3", "--t", "1"});
  CHECK(r.status == 0);
  CHECK(r.out.find("size     2") != std::string::npos);
  CHECK(r.out.find("bound    2") != std::string::npos);

  r = run({"sphere", "--word", "0130", "--q", "3", "--kind", "pal-dup"});
  CHECK(r.status == 2);
  r = run({"sphere", "--word", "0110", "--kind", "sideways"});
  CHECK(r.status == 2);
}

TEST_CASE("sphere machine output") {
  const auto r = run({"sphere", "--word", "0110", "--kind", "tandem-dup", "--l", "1", "--format", "json"});
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("size") == 3);
  CHECK(j.at("formula") == 3);
  CHECK(j.at("members").size() == 3);
}

TEST_CASE("bound command") {
  const auto path = scratch("bounds.csv");
  auto r = run({"bound", "--n", "2..10", "--l", "2", "--q", "2", "--out", path.string()});
  CHECK(r.status == 0);
  const std::string csv = slurp(path);
  CHECK(lines(csv) == 10);
  CHECK(csv.rfind("n,l,q,bound,", 0) == 0);

  r = run({"bound", "--n", "2", "--l", "1", "--q", "2"});
  CHECK(r.status == 0);
  CHECK(r.out.find("4/1") != std::string::npos);

  r = run({"bound", "--n", "30", "--l", "1", "--q", "4"});
  CHECK(r.status == 2);
  CHECK(r.err.find("guard") != std::string::npos);
}

TEST_CASE("bound JSON round trips") {
  const auto r = run({"bound", "--n", "6..7", "--l", "2", "--format", "json"});
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j.size() == 2);
  const BoundReport parsed = bound_report_from_json(j[0]);
  const BoundReport direct = bound_report(6, 2, 2);
  CHECK(parsed.bound_value == direct.bound_value);
  CHECK(parsed.histogram == direct.histogram);
  CHECK(parsed.irreducible_counts == direct.irreducible_counts);
  CHECK(to_json(parsed).dump() == to_json(direct).dump());
  for (const char* key : {"n", "l", "q", "t", "bound_numerator", "bound_denominator", "redundancy_lb_bits",
                          "histogram"}) {
    CHECK(j[0].contains(key));
  }
}

TEST_CASE("verify command") {
  auto r = run({"verify", "--code", "c2", "--n", "8"});
  CHECK(r.status == 0);
  CHECK(r.out.find("correcting 85/85") != std::string::npos);
  CHECK(r.out.find("best size  10") != std::string::npos);

  r = run({"verify", "--code", "cpf", "--n", "8", "--q", "2"});
  CHECK(r.status == 0);
  CHECK(r.out.find("count      56") != std::string::npos);

  r = run({"verify", "--code", "c1", "--n", "6", "--l", "2", "--q", "2"});
  CHECK(r.status == 0);
  CHECK(r.out.find("verify: pass") != std::string::npos);

  r = run({"verify", "--code", "c3", "--n", "6"});
  CHECK(r.status == 2);
}

TEST_CASE("verify writes codebooks and parameters") {
  const auto path = scratch("c1.txt");
  auto r = run({"verify", "--code", "c1", "--n", "6", "--l", "2", "--out", path.string()});
  REQUIRE(r.status == 0);
  const auto book = parse_codebook_text(slurp(path), 2);
  CHECK(book.size() == 44);

  const auto json_path = scratch("c1.json");
  r = run({"verify", "--code", "c1", "--n", "6", "--l", "2", "--out", json_path.string(), "--format", "json"});
  REQUIRE(r.status == 0);
  const auto code = tandem_vt_code_from_json(Json::parse(slurp(json_path)));
  CHECK(c1_codebook(code) == book);
}

TEST_CASE("rates command") {
  auto r = run({"rates", "--q", "2,3,4,5", "--n", "2,4,8,16,32,64,128,256"});
  CHECK(r.status == 0);
  CHECK(r.out.find("0.896") != std::string::npos);
  CHECK(r.out.find("0.979") != std::string::npos);

  r = run({"rates", "--q", "2", "--n", "inf", "--format", "csv"});
  CHECK(r.status == 0);
  CHECK(r.out == "q,n,rate\n2,inf,0.551463\n");

  r = run({"rates", "--q", "1000000", "--n", "inf"});
  CHECK(r.status == 0);
  CHECK(r.out.find("1.000") != std::string::npos);
}

TEST_CASE("simulate command") {
  auto r = run({"simulate", "--code", "c2", "--n", "12", "--trials", "1000", "--seed", "7"});
  CHECK(r.status == 0);
  CHECK(r.out.find("1000/1000") != std::string::npos);
  r = run({"simulate", "--code", "cpf", "--n", "10", "--q", "3", "--trials", "500", "--seed", "1"});
  CHECK(r.status == 0);
  CHECK(r.out.find("500/500") != std::string::npos);
  r = run({"simulate", "--code", "c1", "--n", "8", "--l", "1", "--q", "2", "--trials", "1000", "--seed", "0"});
  CHECK(r.status == 0);
  CHECK(r.out.find("1000/1000") != std::string::npos);
}

TEST_CASE("identical flags give identical machine output") {
  const std::vector<std::string> args{"--seed", "42", "simulate", "--code", "c2", "--n", "10",
                                      "--trials", "200", "--format", "json"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out).at("seed") == 42);

  const auto x = run({"bound", "--n", "4..8", "--l", "1", "--format", "csv"});
  const auto y = run({"bound", "--n", "4..8", "--l", "1", "--format", "csv"});
  CHECK(x.out == y.out);
}

TEST_CASE("report helpers") {
  CHECK(format_real(6.321928094887363) == "6.32193");
  CHECK(format_real(7.0) == "7");
  CHECK(rational_string(Rational(86, 5)) == "86/5");
  CHECK(rational_string(Rational(4)) == "4/1");
  const PalindromicL2Code code{8, 4, 13};
  const auto back = palindromic_l2_code_from_json(code_params_json(code));
  CHECK(back.a == 4);
  CHECK(back.b == 13);
  const std::vector<Word> book{parse_word("12,0,11", 13), parse_word("0,0,1", 13)};
  CHECK(parse_codebook_text(codebook_text(book), 13) == book);
}
