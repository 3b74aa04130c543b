#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dupcodes/word.hpp"

namespace dupcodes {

/// Entry point of the dupcodes tool. Exit status: 0 when every requested
/// check passed, 1 when a check failed, 2 on usage, parse or guard errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "5", "2..10" or "2,4,8"
std::vector<std::size_t> parse_size_list(std::string_view text);
/// Like parse_size_list, with "inf" mapped to nullopt.
std::vector<std::optional<std::size_t>> parse_length_list(std::string_view text);
std::vector<Symbol> parse_alphabet_list(std::string_view text);

}  // namespace dupcodes
