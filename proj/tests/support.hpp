#pragma once

#include <string>
#include <vector>

#include "dupcodes/channel.hpp"
#include "dupcodes/word.hpp"
#include "oracles.hpp"

namespace support {

inline dupcodes::Word w(const std::string& digits, dupcodes::Symbol q = 2) {
  return dupcodes::parse_word(digits, q);
}

inline dupcodes::Word to_word(const oracle::Vec& v, dupcodes::Symbol q) {
  return dupcodes::Word(std::vector<dupcodes::Symbol>(v.begin(), v.end()), q);
}

inline oracle::Vec to_vec(const dupcodes::Word& x) { return oracle::Vec(x.begin(), x.end()); }

inline oracle::Op to_op(dupcodes::ErrorOp op) {
  switch (op) {
    case dupcodes::ErrorOp::tandem_dup: return oracle::Op::tdup;
    case dupcodes::ErrorOp::tandem_del: return oracle::Op::tdel;
    case dupcodes::ErrorOp::pal_dup: return oracle::Op::pdup;
    default: return oracle::Op::pdel;
  }
}

inline std::vector<std::string> texts(const std::vector<dupcodes::Word>& words) {
  std::vector<std::string> out;
  for (const auto& x : words) out.push_back(dupcodes::format_word(x));
  return out;
}

}  // namespace support
