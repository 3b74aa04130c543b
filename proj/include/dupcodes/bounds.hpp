#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "dupcodes/channel.hpp"
#include "dupcodes/numeric.hpp"
#include "dupcodes/word.hpp"

namespace dupcodes {

/// Words in Z_q^{n'} with all zero runs of length <= l' and Hamming weight w.
BigInt rll_weight_count(std::size_t n_prime, std::size_t l_prime, std::size_t weight, Symbol q);

/// i -> number of words of length n whose single tandem deletion sphere has
/// size i. Only nonzero entries are stored; entry 0 is the irreducible count.
std::map<std::size_t, BigInt> deletion_histogram(std::size_t n, std::size_t length, Symbol q);

/// Words of length n admitting no tandem deletion of length l.
BigInt irreducible_count(std::size_t n, std::size_t length, Symbol q);

/// Sphere-packing style upper bound on single tandem duplication correcting
/// codes: IRR(n) + IRR(n - l) + sum_{i >= 1} N(n - l, i) / i.
Rational gsp_bound_tandem(std::size_t n, std::size_t length, Symbol q);

struct TransversalResult {
  bool feasible = false;
  /// Words whose ball carries weight below 1.
  std::vector<Word> deficits;
  /// Total weight sum_nu T(nu) over all vertices.
  Rational total;
};

/// Builds the explicit fractional transversal for t tandem deletions of
/// length l and checks the ball condition for every x in Z_q^n.
TransversalResult transversal_check(std::size_t n, std::size_t length, std::size_t t, Symbol q,
                                    std::uint64_t guard = kDefaultGuard, bool force = false);

/// Largest code in Z_q^n whose t-balls of the given kind are pairwise
/// disjoint, by exact maximum independent set. Lexicographically smallest
/// among the optima the solver meets first; deterministic.
std::vector<Word> optimal_code(std::size_t n, std::size_t t, Symbol q, ErrorKind kind,
                               std::uint64_t guard = kDefaultGuard, bool force = false);
std::uint64_t exact_optimum(std::size_t n, std::size_t length, std::size_t t, Symbol q, ErrorOp op,
                            std::uint64_t guard = kDefaultGuard, bool force = false);

struct BoundReport {
  std::size_t n = 0;
  std::size_t l = 0;
  Symbol q = 2;
  std::size_t t = 1;
  /// |IRR ∩ Z_q^{n - i l}| for i = 0..t
  std::vector<BigInt> irreducible_counts;
  /// Sphere-size histogram at length n - t l.
  std::map<std::size_t, BigInt> histogram;
  Rational bound_value;
  /// n log2 q - log2 bound, unclamped.
  double redundancy_lower_bound = 0.0;
};

BoundReport bound_report(std::size_t n, std::size_t length, Symbol q);

struct RedundancyRow {
  std::size_t n = 0;
  Rational gsp_bound;
  double gsp_raw = 0.0;
  /// max(gsp_raw, 0)
  double gsp = 0.0;
  std::uint64_t c1_size = 0;
  double c1 = 0.0;
  double c2 = 0.0;
  double burst = 0.0;
};

RedundancyRow redundancy_row(std::size_t n, std::size_t length, Symbol q,
                             std::uint64_t guard = kDefaultGuard, bool force = false);
std::vector<RedundancyRow> redundancy_table(const std::vector<std::size_t>& n_values,
                                            std::size_t length, Symbol q,
                                            std::uint64_t guard = kDefaultGuard,
                                            bool force = false);

}  // namespace dupcodes
