#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dupcodes {

using Symbol = std::uint32_t;

/// A finite word over Z_q. The alphabet size travels with the word; words of
/// different alphabets never compare equal and are rejected by operations
/// that combine them.
///
/// Positions: symbols are 1-indexed in documentation and messages (x_1..x_n),
/// while error positions are 0-based prefix lengths p = |u|.
class Word {
 public:
  Word() = default;
  Word(std::vector<Symbol> symbols, Symbol q);
  Word(std::initializer_list<Symbol> symbols, Symbol q)
      : Word(std::vector<Symbol>(symbols), q) {}

  /// Skips the range check; callers guarantee every symbol is below q.
  static Word unchecked(std::vector<Symbol> symbols, Symbol q);
  static Word zeros(std::size_t length, Symbol q);

  Symbol q() const noexcept { return q_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  /// Symbols [pos, pos + len).
  Word slice(std::size_t pos, std::size_t len) const;
  Word reversed() const;

  std::size_t hamming_weight() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;
  /// Orders by alphabet, then length, then lexicographically.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Symbol> symbols_;
  Symbol q_ = 2;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Throws dupcodes::Error when the alphabets differ.
void require_same_alphabet(const Word& a, const Word& b);

/// Concatenation of the given pieces; all must share an alphabet.
Word concat(std::initializer_list<std::span<const Symbol>> pieces, Symbol q);

/// Maximal runs of equal symbols, left to right.
class RunProfile {
 public:
  explicit RunProfile(std::vector<std::size_t> lengths);

  /// r(x)
  std::size_t run_count() const noexcept { return lengths_.size(); }
  /// r_i(x), 1-based
  std::size_t run_length(std::size_t i) const { return lengths_.at(i - 1); }
  std::span<const std::size_t> lengths() const noexcept { return lengths_; }

  /// r^{(i)}(x)
  std::size_t count_of_length(std::size_t i) const noexcept;
  /// r^{(>=i)}(x)
  std::size_t count_at_least(std::size_t i) const noexcept;
  std::size_t total_length() const noexcept;

 private:
  std::vector<std::size_t> lengths_;
};

RunProfile run_profile(const Word& x);
std::size_t run_count_of_length(const Word& x, std::size_t i);
std::size_t run_count_at_least(const Word& x, std::size_t i);

/// C(x) = sum_i i * r_i(x), unreduced.
std::uint64_t run_checksum(const Word& x);

/// Text format: digit string for q <= 10, comma-separated integers above.
/// Comma-separated input is accepted for any q; for q = 4 the letters
/// A/C/G/T (any case) alias 0/1/2/3.
Word parse_word(std::string_view text, Symbol q);
std::string format_word(const Word& x);

/// Word number `index` in lexicographic order of Z_q^n (x_1 most significant).
Word word_from_index(std::uint64_t index, std::size_t n, Symbol q);
void fill_word_from_index(std::uint64_t index, std::size_t n, Symbol q, std::vector<Symbol>& out);

}  // namespace dupcodes
