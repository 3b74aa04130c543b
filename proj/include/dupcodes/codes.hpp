#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dupcodes/channel.hpp"
#include "dupcodes/numeric.hpp"
#include "dupcodes/word.hpp"

namespace dupcodes {

// ---------------------------------------------------------------------------
// Construction 1: tandem duplications of length l via a VT constraint on the
// zero signature of the l-step derivative.

/// sum_k k * s_k mod (|s| + 1), k 1-based.
std::size_t vt_checksum(std::span<const std::uint32_t> s);
bool vt_member(std::span<const std::uint32_t> s, std::size_t a);

struct TandemVTCode {
  std::size_t n = 0;
  Symbol q = 2;
  std::size_t l = 1;
  /// residues[s - 1] = a_s for signature length s = 1..n-l+1, 0 <= a_s <= s.
  std::vector<std::size_t> residues;

  /// All-zero residues; throws when l is 0 or exceeds n.
  static TandemVTCode with_zero_residues(std::size_t n, std::size_t l, Symbol q);
  void validate() const;
};

bool c1_member(const Word& x, const TandemVTCode& code);
/// Accepts |y| = n (returned when it is a codeword) or |y| = n + l.
Word c1_decode(const Word& y, const TandemVTCode& code);
std::vector<Word> c1_codebook(const TandemVTCode& code, std::uint64_t guard = kDefaultGuard,
                              bool force = false);

struct C1Params {
  TandemVTCode code;
  std::uint64_t cardinality = 0;
};

/// Per signature length the most populated residue; ties go to the smallest.
C1Params c1_best_params(std::size_t n, std::size_t l, Symbol q,
                        std::uint64_t guard = kDefaultGuard, bool force = false);
/// q^l sum_nu sum_w A(n - (nu+1) l, l - 1, w) binom(w + nu, nu) / (w + 2)
Rational c1_size_lower_bound(std::size_t n, std::size_t l, Symbol q);

// ---------------------------------------------------------------------------
// Construction 2: binary, single palindromic duplication of length 2.

struct PalindromicL2Code {
  std::size_t n = 0;
  std::size_t a = 0;  // r^{(1)}(x) mod 5
  std::size_t b = 0;  // C(x) mod 2n + 1

  void validate() const;
};

bool c2_member(const Word& x, const PalindromicL2Code& code);

struct C2Decoding {
  Word word;
  /// 0 when no error was present, otherwise 1..5.
  int error_case = 0;
  /// Run index the checksum pointed at (1-based); 0 for case 1.b or no error.
  std::size_t run = 0;
};

C2Decoding c2_decode_detailed(const Word& y, const PalindromicL2Code& code);
Word c2_decode(const Word& y, const PalindromicL2Code& code);
std::vector<Word> c2_codebook(const PalindromicL2Code& code, std::uint64_t guard = kDefaultGuard,
                              bool force = false);

struct C2Params {
  PalindromicL2Code code;
  std::uint64_t cardinality = 0;
};

/// Largest class over all 5(2n + 1) parameter pairs; ties to smallest (a, b).
C2Params c2_best_params(std::size_t n, std::uint64_t guard = kDefaultGuard, bool force = false);
/// 2^n / (5 (2n + 1))
Rational c2_size_lower_bound(std::size_t n);

// ---------------------------------------------------------------------------
// Generic decoding by exhaustive search over deletions.

using Membership = std::function<bool(const Word&)>;

/// The unique member among words reached from y by (|y| - n) / l deletions of
/// the given kind. Throws DecodingFailure("uncorrectable") when none exists and
/// Error("code is not correcting") when several do.
Word oracle_decode(const Word& y, std::size_t n, ErrorKind kind, const Membership& member);

// ---------------------------------------------------------------------------
// Construction 3: 2-palindrome-free words.

bool cpf_member(const Word& x);
/// Duplication length is |y| - n; length 1 is not supported.
Word cpf_decode(const Word& y, std::size_t n);
std::vector<Word> cpf_codebook(std::size_t n, Symbol q, std::uint64_t guard = kDefaultGuard,
                               bool force = false);

/// Exact count from the five-state transfer recursion.
BigInt cpf_count_recursive(std::size_t n, Symbol q);

/// Roots of -x^3 + (q-1)x^2 + (q-2)x + (q-1), sorted by decreasing real part.
std::array<std::complex<long double>, 3> cpf_characteristic_roots(Symbol q);
/// sum_i c_i(q) lambda_i^{n-3}; n >= 3.
double cpf_count_closed(std::size_t n, Symbol q);
/// Dominant root in radicals.
long double cpf_lambda(double q);

struct RateCell {
  Symbol q = 2;
  /// nullopt is the n -> infinity column.
  std::optional<std::size_t> n;
  double rate = 0.0;
};

double cpf_rate(std::size_t n, Symbol q);
double cpf_asymptotic_rate(Symbol q);
std::vector<RateCell> cpf_rate_table(const std::vector<Symbol>& q_values,
                                     const std::vector<std::optional<std::size_t>>& n_values);

// ---------------------------------------------------------------------------

/// First pair of codewords (ascending indices) whose t-balls of the given kind
/// intersect; nullopt when the code corrects t errors of that kind.
std::optional<std::pair<Word, Word>> first_ball_collision(const std::vector<Word>& codebook,
                                                          ErrorKind kind, std::size_t t);

/// Maps message indices to codewords of an enumerated codebook (sorted order).
class CodebookEncoder {
 public:
  explicit CodebookEncoder(std::vector<Word> codebook);

  std::uint64_t size() const noexcept { return codebook_.size(); }
  const Word& encode(std::uint64_t message) const;
  std::uint64_t index_of(const Word& codeword) const;
  const std::vector<Word>& codebook() const noexcept { return codebook_; }

 private:
  std::vector<Word> codebook_;
};

}  // namespace dupcodes
