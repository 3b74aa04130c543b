#include "dupcodes/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "dupcodes/error.hpp"

namespace dupcodes {

Word::Word(std::vector<Symbol> symbols, Symbol q) : symbols_(std::move(symbols)), q_(q) {
  if (q_ < 2) throw Error("alphabet size must be at least 2, got " + std::to_string(q_));
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] >= q_) {
      throw Error("symbol x_" + std::to_string(i + 1) + " = " + std::to_string(symbols_[i]) +
                  " is outside Z_" + std::to_string(q_));
    }
  }
}

Word Word::unchecked(std::vector<Symbol> symbols, Symbol q) {
  Word w;
  w.symbols_ = std::move(symbols);
  w.q_ = q;
  return w;
}

Word Word::zeros(std::size_t length, Symbol q) {
  return Word(std::vector<Symbol>(length, 0), q);
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  if (pos + len > symbols_.size()) throw Error("slice out of range");
  return unchecked(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                       symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len)),
                   q_);
}

Word Word::reversed() const {
  return unchecked(std::vector<Symbol>(symbols_.rbegin(), symbols_.rend()), q_);
}

std::size_t Word::hamming_weight() const noexcept {
  return static_cast<std::size_t>(std::count_if(symbols_.begin(), symbols_.end(),
                                                [](Symbol s) { return s != 0; }));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.q_ <=> b.q_; c != 0) return c;
  if (auto c = a.symbols_.size() <=> b.symbols_.size(); c != 0) return c;
  return a.symbols_ <=> b.symbols_;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ (w.q() * 0x9E3779B97F4A7C15ULL);
  for (Symbol s : w) {
    h ^= s + 1;
    h *= 1099511628211ULL;
  }
  h ^= w.size();
  return static_cast<std::size_t>(h);
}

void require_same_alphabet(const Word& a, const Word& b) {
  if (a.q() != b.q()) {
    throw Error("alphabet mismatch: q = " + std::to_string(a.q()) + " vs q = " +
                std::to_string(b.q()));
  }
}

Word concat(std::initializer_list<std::span<const Symbol>> pieces, Symbol q) {
  std::vector<Symbol> out;
  std::size_t total = 0;
  for (auto piece : pieces) total += piece.size();
  out.reserve(total);
  for (auto piece : pieces) out.insert(out.end(), piece.begin(), piece.end());
  return Word::unchecked(std::move(out), q);
}

RunProfile::RunProfile(std::vector<std::size_t> lengths) : lengths_(std::move(lengths)) {
  for (std::size_t len : lengths_) {
    if (len == 0) throw Error("run lengths must be positive");
  }
}

std::size_t RunProfile::count_of_length(std::size_t i) const noexcept {
  return static_cast<std::size_t>(std::count(lengths_.begin(), lengths_.end(), i));
}

std::size_t RunProfile::count_at_least(std::size_t i) const noexcept {
  return static_cast<std::size_t>(std::count_if(lengths_.begin(), lengths_.end(),
                                                [i](std::size_t len) { return len >= i; }));
}

std::size_t RunProfile::total_length() const noexcept {
  std::size_t total = 0;
  for (std::size_t len : lengths_) total += len;
  return total;
}

RunProfile run_profile(const Word& x) {
  if (x.empty()) throw Error("empty input");
  std::vector<std::size_t> lengths;
  std::size_t current = 1;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] == x[i - 1]) {
      ++current;
    } else {
      lengths.push_back(current);
      current = 1;
    }
  }
  lengths.push_back(current);
  return RunProfile(std::move(lengths));
}

std::size_t run_count_of_length(const Word& x, std::size_t i) {
  if (i == 0) throw Error("run length must be positive");
  return run_profile(x).count_of_length(i);
}

std::size_t run_count_at_least(const Word& x, std::size_t i) {
  if (i == 0) throw Error("run length must be positive");
  return run_profile(x).count_at_least(i);
}

std::uint64_t run_checksum(const Word& x) {
  const RunProfile profile = run_profile(x);
  std::uint64_t sum = 0;
  for (std::size_t i = 1; i <= profile.run_count(); ++i) sum += i * profile.run_length(i);
  return sum;
}

namespace {

Symbol parse_number(std::string_view token, Symbol q) {
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
  Symbol value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error("cannot parse symbol '" + std::string(token) + "'");
  }
  if (value >= q) {
    throw Error("symbol " + std::to_string(value) + " is outside Z_" + std::to_string(q));
  }
  return value;
}

Symbol parse_char(char c, Symbol q) {
  if (q == 4) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'A': return 0;
      case 'C': return 1;
      case 'G': return 2;
      case 'T': return 3;
      default: break;
    }
  }
  if (c < '0' || c > '9') throw Error(std::string("cannot parse symbol '") + c + "'");
  const Symbol value = static_cast<Symbol>(c - '0');
  if (value >= q) {
    throw Error("symbol " + std::to_string(value) + " is outside Z_" + std::to_string(q));
  }
  return value;
}

}  // namespace

Word parse_word(std::string_view text, Symbol q) {
  if (q < 2) throw Error("alphabet size must be at least 2");
  std::vector<Symbol> symbols;
  if (text.find(',') != std::string_view::npos || q > 10) {
    if (!text.empty()) {
      std::size_t start = 0;
      while (true) {
        const std::size_t comma = text.find(',', start);
        symbols.push_back(parse_number(text.substr(start, comma - start), q));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }
  } else {
    symbols.reserve(text.size());
    for (char c : text) symbols.push_back(parse_char(c, q));
  }
  return Word::unchecked(std::move(symbols), q);
}

std::string format_word(const Word& x) {
  std::string out;
  if (x.q() <= 10) {
    out.reserve(x.size());
    for (Symbol s : x) out.push_back(static_cast<char>('0' + s));
    return out;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(x[i]);
  }
  return out;
}

void fill_word_from_index(std::uint64_t index, std::size_t n, Symbol q, std::vector<Symbol>& out) {
  out.resize(n);
  for (std::size_t i = n; i-- > 0;) {
    out[i] = static_cast<Symbol>(index % q);
    index /= q;
  }
}

Word word_from_index(std::uint64_t index, std::size_t n, Symbol q) {
  std::vector<Symbol> symbols;
  fill_word_from_index(index, n, q, symbols);
  return Word::unchecked(std::move(symbols), q);
}

}  // namespace dupcodes
