#pragma once

// Exhaustive word-space kernels. Every kernel walks Z_q^n by word index and
// reduces into integer tallies, so results do not depend on the schedule.
// The functions in dupcodes::kernels run under OpenMP; dupcodes::kernels::serial holds
// plain-loop reference versions that the tests compare against.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "dupcodes/word.hpp"

namespace dupcodes::kernels {

/// sphere size -> number of words of length n with that single tandem
/// deletion sphere size (spheres enumerated, not computed by formula).
using Histogram = std::map<std::uint64_t, std::uint64_t>;

/// tally[s - 1][a]: words whose l-zero signature has length s and weighted
/// checksum sum_k k * sigma_k = a (mod s + 1).
using ResidueTally = std::vector<std::vector<std::uint64_t>>;

Histogram tally_deletion_sphere_sizes(std::size_t n, std::size_t length, Symbol q);
ResidueTally tally_c1_residues(std::size_t n, std::size_t length, Symbol q);
/// Entry a * (2n + 1) + b counts binary words with r^{(1)} = a (mod 5) and
/// C(x) = b (mod 2n + 1).
std::vector<std::uint64_t> tally_c2_classes(std::size_t n);
std::uint64_t count_palindrome_free(std::size_t n, Symbol q);
/// Words x in Z_q^n whose t-ball under tandem deletions of length l carries
/// total transversal weight below 1, in ascending index order.
std::vector<Word> transversal_deficits(std::size_t n, std::size_t length, std::size_t t, Symbol q);

namespace serial {
Histogram tally_deletion_sphere_sizes(std::size_t n, std::size_t length, Symbol q);
ResidueTally tally_c1_residues(std::size_t n, std::size_t length, Symbol q);
std::vector<std::uint64_t> tally_c2_classes(std::size_t n);
std::uint64_t count_palindrome_free(std::size_t n, Symbol q);
std::vector<Word> transversal_deficits(std::size_t n, std::size_t length, std::size_t t, Symbol q);
}  // namespace serial

/// Per-word building blocks shared by both versions.
namespace detail {
std::uint64_t deletion_sphere_size(const Word& x, std::size_t length);
/// (signature length, weighted checksum residue)
std::pair<std::size_t, std::size_t> c1_class(const Word& x, std::size_t length);
std::pair<std::size_t, std::size_t> c2_class(const Word& x);
bool palindrome_free(std::span<const Symbol> x);
bool transversal_covered(const Word& x, std::size_t n, std::size_t length, std::size_t t);
}  // namespace detail

}  // namespace dupcodes::kernels
