#include "dupcodes/report.hpp"

#include <cstdio>
#include <sstream>

#include "dupcodes/error.hpp"

namespace dupcodes {

namespace {

Json big_to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return value.convert_to<std::uint64_t>();
  }
  return value.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::uint64_t>());
}

std::string csv_join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) line += ',';
    line += cells[k];
  }
  return line + '\n';
}

}  // namespace

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

Json to_json(const BoundReport& report) {
  Json histogram = Json::object();
  for (const auto& [size, count] : report.histogram) histogram[std::to_string(size)] = big_to_json(count);
  Json irreducible = Json::array();
  for (const auto& c : report.irreducible_counts) irreducible.push_back(big_to_json(c));
  return {{"n", report.n},
          {"l", report.l},
          {"q", report.q},
          {"t", report.t},
          {"irreducible_counts", irreducible},
          {"bound_numerator", big_to_json(numerator(report.bound_value))},
          {"bound_denominator", big_to_json(denominator(report.bound_value))},
          {"redundancy_lb_bits", report.redundancy_lower_bound},
          {"histogram", histogram}};
}

BoundReport bound_report_from_json(const Json& j) {
  BoundReport report;
  report.n = j.at("n").get<std::size_t>();
  report.l = j.at("l").get<std::size_t>();
  report.q = j.at("q").get<Symbol>();
  report.t = j.at("t").get<std::size_t>();
  if (j.contains("irreducible_counts")) {
    for (const auto& c : j.at("irreducible_counts")) report.irreducible_counts.push_back(big_from_json(c));
  }
  report.bound_value =
      Rational(big_from_json(j.at("bound_numerator")), big_from_json(j.at("bound_denominator")));
  report.redundancy_lower_bound = j.at("redundancy_lb_bits").get<double>();
  for (const auto& [key, value] : j.at("histogram").items()) {
    report.histogram.emplace(std::stoull(key), big_from_json(value));
  }
  return report;
}

Json bound_table_json(const std::vector<BoundReport>& reports,
                      const std::vector<RedundancyRow>& rows) {
  if (reports.size() != rows.size()) throw Error("bound table: report/row count mismatch");
  Json out = Json::array();
  for (std::size_t k = 0; k < reports.size(); ++k) {
    Json entry = to_json(reports[k]);
    entry["gsp_redundancy_bits"] = rows[k].gsp;
    entry["c1_size"] = rows[k].c1_size;
    entry["c1_redundancy_bits"] = rows[k].c1;
    entry["c2_redundancy_bits"] = rows[k].c2;
    entry["burst_redundancy_bits"] = rows[k].burst;
    out.push_back(std::move(entry));
  }
  return out;
}

std::string bound_table_csv(const std::vector<BoundReport>& reports,
                            const std::vector<RedundancyRow>& rows) {
  if (reports.size() != rows.size()) throw Error("bound table: report/row count mismatch");
  std::string out = csv_join({"n", "l", "q", "bound", "gsp_redundancy_raw", "gsp_redundancy",
                              "c1_size", "c1_redundancy", "c2_redundancy", "burst_redundancy"});
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = reports[k];
    const auto& row = rows[k];
    out += csv_join({std::to_string(r.n), std::to_string(r.l), std::to_string(r.q),
                     rational_string(r.bound_value), format_real(row.gsp_raw), format_real(row.gsp),
                     std::to_string(row.c1_size), format_real(row.c1), format_real(row.c2),
                     format_real(row.burst)});
  }
  return out;
}

Json rate_table_json(const std::vector<RateCell>& cells) {
  Json out = Json::array();
  for (const auto& cell : cells) {
    out.push_back({{"q", cell.q},
                   {"n", cell.n ? Json(*cell.n) : Json("inf")},
                   {"rate", cell.rate}});
  }
  return out;
}

std::string rate_table_csv(const std::vector<RateCell>& cells) {
  std::string out = csv_join({"q", "n", "rate"});
  for (const auto& cell : cells) {
    out += csv_join({std::to_string(cell.q), cell.n ? std::to_string(*cell.n) : "inf",
                     format_real(cell.rate)});
  }
  return out;
}

Json code_params_json(const TandemVTCode& code) {
  return {{"construction", "c1"}, {"n", code.n}, {"q", code.q}, {"l", code.l},
          {"residues", code.residues}};
}

Json code_params_json(const PalindromicL2Code& code) {
  return {{"construction", "c2"}, {"n", code.n}, {"q", 2}, {"l", 2},
          {"residues", {{"a", code.a}, {"b", code.b}}}};
}

Json code_params_json_cpf(std::size_t n, Symbol q) {
  return {{"construction", "cpf"}, {"n", n}, {"q", q}, {"l", nullptr}, {"residues", Json::array()}};
}

TandemVTCode tandem_vt_code_from_json(const Json& j) {
  if (j.at("construction") != "c1") throw Error("not a construction 1 parameter set");
  TandemVTCode code{j.at("n").get<std::size_t>(), j.at("q").get<Symbol>(),
                    j.at("l").get<std::size_t>(), j.at("residues").get<std::vector<std::size_t>>()};
  code.validate();
  return code;
}

PalindromicL2Code palindromic_l2_code_from_json(const Json& j) {
  if (j.at("construction") != "c2") throw Error("not a construction 2 parameter set");
  PalindromicL2Code code{j.at("n").get<std::size_t>(), j.at("residues").at("a").get<std::size_t>(),
                         j.at("residues").at("b").get<std::size_t>()};
  code.validate();
  return code;
}

std::string codebook_text(const std::vector<Word>& codebook) {
  std::string out;
  for (const auto& w : codebook) out += format_word(w) + '\n';
  return out;
}

std::vector<Word> parse_codebook_text(const std::string& text, Symbol q) {
  std::vector<Word> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(parse_word(line, q));
  }
  return out;
}

}  // namespace dupcodes
