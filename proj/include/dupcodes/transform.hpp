#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dupcodes/word.hpp"

namespace dupcodes {

/// Number of whole l-blocks of zeros in each gap of a difference word.
/// Entry k (0-based here, gap k+1 in 1-based terms) is the gap before the
/// (k+1)-th nonzero symbol; the last entry is the trailing gap.
using Signature = std::vector<std::uint32_t>;

/// l-step derivative: head = first l symbols, tail_i = x_{i+l} - x_i (mod q).
struct DerivativePair {
  Word head;
  Word tail;
};

struct SignatureDecomposition {
  Word trunk;
  Signature signature;
};

DerivativePair derive(const Word& x, std::size_t length);
Word integrate(const DerivativePair& pair);

/// Every maximal zero run of length m shortened to m mod l.
Word trunk(const Word& v, std::size_t length);
Signature zero_signature(const Word& v, std::size_t length);
SignatureDecomposition decompose(const Word& v, std::size_t length);

/// Inverse of decompose(): inserts signature[k] * l zeros into gap k.
/// Throws "incompatible decomposition" when the signature length is not
/// wt_H(trunk) + 1 or the trunk holds a zero run of length >= l.
Word assemble(const Word& trunk, std::span<const std::uint32_t> signature, std::size_t length);

std::uint64_t l1_norm(std::span<const std::uint32_t> signature) noexcept;
std::size_t support_size(std::span<const std::uint32_t> signature) noexcept;

}  // namespace dupcodes
