#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dupcodes/bounds.hpp"
#include "dupcodes/codes.hpp"

namespace dupcodes {

using Json = nlohmann::json;

/// printf("%.6g") in the C locale.
std::string format_real(double value);

Json to_json(const BoundReport& report);
BoundReport bound_report_from_json(const Json& j);

/// One row per n: the report keys followed by the redundancy columns.
Json bound_table_json(const std::vector<BoundReport>& reports,
                      const std::vector<RedundancyRow>& rows);
std::string bound_table_csv(const std::vector<BoundReport>& reports,
                            const std::vector<RedundancyRow>& rows);

Json rate_table_json(const std::vector<RateCell>& cells);
std::string rate_table_csv(const std::vector<RateCell>& cells);

Json code_params_json(const TandemVTCode& code);
Json code_params_json(const PalindromicL2Code& code);
Json code_params_json_cpf(std::size_t n, Symbol q);
TandemVTCode tandem_vt_code_from_json(const Json& j);
PalindromicL2Code palindromic_l2_code_from_json(const Json& j);

/// One word per line in the text word format.
std::string codebook_text(const std::vector<Word>& codebook);
std::vector<Word> parse_codebook_text(const std::string& text, Symbol q);

}  // namespace dupcodes
