#include "dupcodes/channel.hpp"

#include <algorithm>
#include <unordered_set>

#include "dupcodes/error.hpp"

namespace dupcodes {

ErrorKind ErrorKind::inverse() const noexcept {
  switch (op) {
    case ErrorOp::tandem_dup: return {ErrorOp::tandem_del, length};
    case ErrorOp::tandem_del: return {ErrorOp::tandem_dup, length};
    case ErrorOp::pal_dup: return {ErrorOp::pal_del, length};
    case ErrorOp::pal_del: return {ErrorOp::pal_dup, length};
  }
  return *this;
}

std::string_view to_string(ErrorOp op) noexcept {
  switch (op) {
    case ErrorOp::tandem_dup: return "tandem-dup";
    case ErrorOp::tandem_del: return "tandem-del";
    case ErrorOp::pal_dup: return "pal-dup";
    case ErrorOp::pal_del: return "pal-del";
  }
  return "?";
}

ErrorOp parse_error_op(std::string_view name) {
  for (ErrorOp op : {ErrorOp::tandem_dup, ErrorOp::tandem_del, ErrorOp::pal_dup, ErrorOp::pal_del}) {
    if (name == to_string(op)) return op;
  }
  throw Error("unknown error kind '" + std::string(name) +
              "' (expected tandem-dup, tandem-del, pal-dup or pal-del)");
}

namespace {

void check_length(std::size_t length) {
  if (length == 0) throw Error("duplication length must be at least 1");
}

std::string position_message(std::size_t position, std::size_t max_position) {
  return "invalid position p = " + std::to_string(position) + " (valid range 0.." +
         std::to_string(max_position) + ")";
}

bool is_tandem_at(std::span<const Symbol> s, std::size_t length, std::size_t p) {
  return std::equal(s.begin() + static_cast<std::ptrdiff_t>(p),
                    s.begin() + static_cast<std::ptrdiff_t>(p + length),
                    s.begin() + static_cast<std::ptrdiff_t>(p + length));
}

bool is_palindrome_at(std::span<const Symbol> s, std::size_t length, std::size_t p) {
  for (std::size_t m = 0; m < length; ++m) {
    if (s[p + length - 1 - m] != s[p + length + m]) return false;
  }
  return true;
}

Word duplicate(const Word& x, std::size_t length, std::size_t position, bool reverse) {
  const auto s = x.symbols();
  std::vector<Symbol> out;
  out.reserve(s.size() + length);
  out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(position + length));
  if (reverse) {
    for (std::size_t m = 0; m < length; ++m) out.push_back(s[position + length - 1 - m]);
  } else {
    out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(position),
               s.begin() + static_cast<std::ptrdiff_t>(position + length));
  }
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(position + length), s.end());
  return Word::unchecked(std::move(out), x.q());
}

Word remove_second_block(const Word& x, std::size_t length, std::size_t position) {
  const auto s = x.symbols();
  std::vector<Symbol> out;
  out.reserve(s.size() - length);
  out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(position + length));
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(position + 2 * length), s.end());
  return Word::unchecked(std::move(out), x.q());
}

bool deletion_defined(const Word& x, ErrorKind kind, std::size_t p) {
  if (x.size() < 2 * kind.length || p > x.size() - 2 * kind.length) return false;
  return kind.op == ErrorOp::tandem_del ? is_tandem_at(x.symbols(), kind.length, p)
                                        : is_palindrome_at(x.symbols(), kind.length, p);
}

}  // namespace

Word tandem_duplicate(const Word& x, std::size_t length, std::size_t position) {
  check_length(length);
  if (x.size() < length || position > x.size() - length) {
    throw Error(position_message(position, x.size() >= length ? x.size() - length : 0));
  }
  return duplicate(x, length, position, false);
}

Word palindromic_duplicate(const Word& x, std::size_t length, std::size_t position) {
  check_length(length);
  if (x.size() < length || position > x.size() - length) {
    throw Error(position_message(position, x.size() >= length ? x.size() - length : 0));
  }
  return duplicate(x, length, position, true);
}

Word tandem_delete(const Word& x, std::size_t length, std::size_t position) {
  check_length(length);
  if (x.size() < 2 * length || position > x.size() - 2 * length) {
    throw Error(position_message(position, x.size() >= 2 * length ? x.size() - 2 * length : 0));
  }
  if (!is_tandem_at(x.symbols(), length, position)) {
    throw Error("not a tandem at p = " + std::to_string(position));
  }
  return remove_second_block(x, length, position);
}

Word palindromic_delete(const Word& x, std::size_t length, std::size_t position) {
  check_length(length);
  if (x.size() < 2 * length || position > x.size() - 2 * length) {
    throw Error(position_message(position, x.size() >= 2 * length ? x.size() - 2 * length : 0));
  }
  if (!is_palindrome_at(x.symbols(), length, position)) {
    throw Error("not a palindrome at p = " + std::to_string(position));
  }
  return remove_second_block(x, length, position);
}

std::optional<Word> try_apply(const Word& x, ErrorKind kind, std::size_t position) {
  check_length(kind.length);
  if (kind.is_deletion()) {
    if (!deletion_defined(x, kind, position)) return std::nullopt;
    return remove_second_block(x, kind.length, position);
  }
  if (x.size() < kind.length || position > x.size() - kind.length) return std::nullopt;
  return duplicate(x, kind.length, position, kind.op == ErrorOp::pal_dup);
}

std::vector<std::size_t> deletion_positions(const Word& x, ErrorKind kind) {
  if (!kind.is_deletion()) throw Error("deletion_positions requires a deletion kind");
  check_length(kind.length);
  std::vector<std::size_t> positions;
  if (x.size() < 2 * kind.length) return positions;
  for (std::size_t p = 0; p + 2 * kind.length <= x.size(); ++p) {
    if (deletion_defined(x, kind, p)) positions.push_back(p);
  }
  return positions;
}

namespace {

using WordSet = std::unordered_set<Word, WordHash>;

WordSet next_level(const WordSet& level, ErrorKind kind) {
  WordSet out;
  for (const Word& w : level) {
    if (w.size() < kind.length) continue;
    const std::size_t last = kind.is_deletion()
                                 ? (w.size() >= 2 * kind.length ? w.size() - 2 * kind.length + 1 : 0)
                                 : w.size() - kind.length + 1;
    for (std::size_t p = 0; p < last; ++p) {
      if (auto next = try_apply(w, kind, p)) out.insert(std::move(*next));
    }
  }
  return out;
}

std::vector<Word> sorted(const WordSet& set) {
  std::vector<Word> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ErrorSphere error_sphere(const Word& x, ErrorKind kind, std::size_t t) {
  check_length(kind.length);
  WordSet level{x};
  for (std::size_t step = 0; step < t && !level.empty(); ++step) level = next_level(level, kind);
  return ErrorSphere{x, kind, t, sorted(level)};
}

std::vector<Word> error_ball(const Word& x, ErrorKind kind, std::size_t t) {
  check_length(kind.length);
  WordSet ball{x};
  WordSet level{x};
  for (std::size_t step = 0; step < t && !level.empty(); ++step) {
    level = next_level(level, kind);
    ball.insert(level.begin(), level.end());
  }
  return sorted(ball);
}

std::vector<Word> intersect_sorted(const std::vector<Word>& a, const std::vector<Word>& b) {
  std::vector<Word> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::optional<Word> ball_intersection_witness(const Word& x, const Word& y, ErrorKind kind,
                                              std::size_t t) {
  require_same_alphabet(x, y);
  if (x.size() != y.size()) {
    throw Error("length mismatch: |x| = " + std::to_string(x.size()) + ", |y| = " +
                std::to_string(y.size()));
  }
  const auto common = intersect_sorted(error_ball(x, kind, t), error_ball(y, kind, t));
  if (common.empty()) return std::nullopt;
  return common.front();
}

bool balls_intersect(const Word& x, const Word& y, ErrorKind kind, std::size_t t) {
  return ball_intersection_witness(x, y, kind, t).has_value();
}

namespace {

// 1-based accessors matching the index arithmetic of the condition systems.
struct Indexed {
  std::span<const Symbol> s;
  Symbol operator()(std::size_t k) const { return s[k - 1]; }
};

bool one_word_conditions(Indexed x, std::size_t l, std::size_t i, std::size_t j, PalOp op) {
  if (op == PalOp::duplication) {
    if (j < l) {
      for (std::size_t m = 0; m < j; ++m)
        if (x(i + l + 1 + m) != x(i + l - m)) return false;
      for (std::size_t m = j; m < l; ++m)
        if (x(i + l + 2 * j - m) != x(i + l - m)) return false;
      for (std::size_t m = l; m < l + j; ++m)
        if (x(i + l + 2 * j - m) != x(i + 1 + m)) return false;
      return true;
    }
    for (std::size_t m = 0; m < l; ++m)
      if (x(i + l + 1 + m) != x(i + l - m)) return false;
    for (std::size_t m = l; m < j; ++m)
      if (x(i + l + 1 + m) != x(i + 1 + m)) return false;
    for (std::size_t m = j; m < l + j; ++m)
      if (x(i + l + 2 * j - m) != x(i + 1 + m)) return false;
    return true;
  }
  for (std::size_t m = 0; m < l; ++m)
    if (x(i + l + 1 + m) != x(i + l - m)) return false;
  for (std::size_t m = 0; m < l; ++m)
    if (x(i + l + j + 1 + m) != x(i + l + j - m)) return false;
  for (std::size_t m = 0; m < j; ++m)
    if (x(i + 2 * l + 1 + m) != x(i + l + 1 + m)) return false;
  return true;
}

bool outer_agree(Indexed x, Indexed y, std::size_t head_end, std::size_t tail_start) {
  const std::size_t n = x.s.size();
  for (std::size_t m = 1; m <= head_end; ++m)
    if (x(m) != y(m)) return false;
  for (std::size_t m = tail_start; m <= n; ++m)
    if (x(m) != y(m)) return false;
  return true;
}

}  // namespace

namespace detail {

bool two_word_conditions(const Word& xw, const Word& yw, std::size_t l, std::size_t i,
                         std::size_t j, PalOp op) {
  const Indexed x{xw.symbols()};
  const Indexed y{yw.symbols()};
  if (op == PalOp::duplication) {
    if (!outer_agree(x, y, i + l, i + j + l + 1)) return false;
    if (j < l) {
      for (std::size_t m = 0; m < j; ++m)
        if (x(i + l - m) != y(i + l + 1 + m)) return false;
      for (std::size_t m = 0; m + j < l; ++m)
        if (x(i + 1 + m) != y(i + 2 * j + 1 + m)) return false;
      for (std::size_t m = 0; m < j; ++m)
        if (x(i + l + 1 + m) != y(i + 2 * j - m)) return false;
      return true;
    }
    for (std::size_t m = 0; m < l; ++m)
      if (x(i + l - m) != y(i + l + 1 + m)) return false;
    for (std::size_t m = 0; m + l < j; ++m)
      if (x(i + l + 1 + m) != y(i + 2 * l + 1 + m)) return false;
    for (std::size_t m = 0; m < l; ++m)
      if (x(i + j + 1 + m) != y(i + j + l - m)) return false;
    return true;
  }
  if (!outer_agree(x, y, i + l, i + j + 2 * l + 1)) return false;
  for (std::size_t m = 0; m < l; ++m)
    if (x(i + l - m) != x(i + l + 1 + m)) return false;
  for (std::size_t m = 0; m < l; ++m)
    if (y(i + j + l - m) != y(i + j + l + 1 + m)) return false;
  for (std::size_t m = 0; m < j; ++m)
    if (x(i + 2 * l + 1 + m) != y(i + l + 1 + m)) return false;
  return true;
}

}  // namespace detail

bool same_outcome_predicate(const Word& x, const Word& y, std::size_t length, std::size_t i,
                            std::size_t j, PalOp op) {
  check_length(length);
  require_same_alphabet(x, y);
  if (x.size() != y.size()) throw Error("length mismatch");
  if (j == 0) throw Error("offset j must be positive");
  const std::size_t n = x.size();
  const std::size_t span = op == PalOp::duplication ? length : 2 * length;
  if (n < span || i + j > n - span) {
    throw Error("invalid positions i = " + std::to_string(i) + ", i + j = " +
                std::to_string(i + j) + " for n = " + std::to_string(n));
  }
  if (x == y) return one_word_conditions(Indexed{x.symbols()}, length, i, j, op);
  return detail::two_word_conditions(x, y, length, i, j, op);
}

}  // namespace dupcodes
