#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dupcodes/word.hpp"

namespace dupcodes {

enum class ErrorOp { tandem_dup, tandem_del, pal_dup, pal_del };

/// One error type together with its block length.
struct ErrorKind {
  ErrorOp op = ErrorOp::tandem_dup;
  std::size_t length = 1;

  bool is_deletion() const noexcept { return op == ErrorOp::tandem_del || op == ErrorOp::pal_del; }
  bool is_tandem() const noexcept { return op == ErrorOp::tandem_dup || op == ErrorOp::tandem_del; }
  /// Duplication <-> deletion of the same family and length.
  ErrorKind inverse() const noexcept;

  friend bool operator==(const ErrorKind&, const ErrorKind&) = default;
};

/// "tandem-dup", "tandem-del", "pal-dup", "pal-del"
std::string_view to_string(ErrorOp op) noexcept;
ErrorOp parse_error_op(std::string_view name);

Word tandem_duplicate(const Word& x, std::size_t length, std::size_t position);
Word palindromic_duplicate(const Word& x, std::size_t length, std::size_t position);
Word tandem_delete(const Word& x, std::size_t length, std::size_t position);
Word palindromic_delete(const Word& x, std::size_t length, std::size_t position);

/// Applies one error; nullopt when the position is out of range or, for
/// deletions, the required pattern is absent.
std::optional<Word> try_apply(const Word& x, ErrorKind kind, std::size_t position);

/// Sorted positions p at which the deletion `kind` is defined.
std::vector<std::size_t> deletion_positions(const Word& x, ErrorKind kind);

/// Words reached by exactly t errors (nested composition), sorted and
/// deduplicated. Enumeration is breadth-first with one set per level, so
/// memory is O(|sphere| * n).
struct ErrorSphere {
  Word center;
  ErrorKind kind;
  std::size_t t = 0;
  std::vector<Word> members;

  std::size_t size() const noexcept { return members.size(); }
};

ErrorSphere error_sphere(const Word& x, ErrorKind kind, std::size_t t);

/// Union of the spheres of radius 0..t, sorted.
std::vector<Word> error_ball(const Word& x, ErrorKind kind, std::size_t t);

/// Smallest common element of the two balls (in Word order), if any.
std::optional<Word> ball_intersection_witness(const Word& x, const Word& y, ErrorKind kind,
                                              std::size_t t);
bool balls_intersect(const Word& x, const Word& y, ErrorKind kind, std::size_t t);

/// Sorted intersection of two sorted word lists.
std::vector<Word> intersect_sorted(const std::vector<Word>& a, const std::vector<Word>& b);

enum class PalOp { duplication, deletion };

/// Evaluates the index-condition systems deciding whether
/// rho(x, i) == rho(y, i + j) (or the deletion counterpart) without
/// performing the operations. When x == y the one-word systems are used,
/// otherwise the two-word systems. j must be positive.
bool same_outcome_predicate(const Word& x, const Word& y, std::size_t length, std::size_t i,
                            std::size_t j, PalOp op);

namespace detail {
/// The two-word system evaluated unconditionally (also for x == y).
bool two_word_conditions(const Word& x, const Word& y, std::size_t length, std::size_t i,
                         std::size_t j, PalOp op);
}  // namespace detail

}  // namespace dupcodes
