#include "dupcodes/transform.hpp"

#include <numeric>

#include "dupcodes/error.hpp"

namespace dupcodes {

DerivativePair derive(const Word& x, std::size_t length) {
  if (length == 0) throw Error("derivative step must be at least 1");
  if (x.size() < length) {
    throw Error("word of length " + std::to_string(x.size()) + " is shorter than l = " +
                std::to_string(length));
  }
  const Symbol q = x.q();
  std::vector<Symbol> tail(x.size() - length);
  for (std::size_t i = 0; i < tail.size(); ++i) tail[i] = (x[i + length] + q - x[i]) % q;
  return {x.slice(0, length), Word::unchecked(std::move(tail), q)};
}

Word integrate(const DerivativePair& pair) {
  require_same_alphabet(pair.head, pair.tail);
  const Symbol q = pair.head.q();
  const std::size_t length = pair.head.size();
  if (length == 0 && !pair.tail.empty()) throw Error("empty head with nonempty tail");
  std::vector<Symbol> x(pair.head.begin(), pair.head.end());
  x.reserve(length + pair.tail.size());
  for (std::size_t i = 0; i < pair.tail.size(); ++i) x.push_back((x[i] + pair.tail[i]) % q);
  return Word::unchecked(std::move(x), q);
}

SignatureDecomposition decompose(const Word& v, std::size_t length) {
  if (length == 0) throw Error("signature block length must be at least 1");
  std::vector<Symbol> trunk_symbols;
  Signature signature;
  std::size_t zeros = 0;
  auto close_gap = [&] {
    signature.push_back(static_cast<std::uint32_t>(zeros / length));
    trunk_symbols.insert(trunk_symbols.end(), zeros % length, 0);
    zeros = 0;
  };
  for (Symbol s : v) {
    if (s == 0) {
      ++zeros;
    } else {
      close_gap();
      trunk_symbols.push_back(s);
    }
  }
  close_gap();
  return {Word::unchecked(std::move(trunk_symbols), v.q()), std::move(signature)};
}

Word trunk(const Word& v, std::size_t length) { return decompose(v, length).trunk; }

Signature zero_signature(const Word& v, std::size_t length) {
  return decompose(v, length).signature;
}

Word assemble(const Word& trunk_word, std::span<const std::uint32_t> signature,
              std::size_t length) {
  if (length == 0) throw Error("signature block length must be at least 1");
  if (signature.size() != trunk_word.hamming_weight() + 1) {
    throw Error("incompatible decomposition: signature has " + std::to_string(signature.size()) +
                " entries, trunk weight is " + std::to_string(trunk_word.hamming_weight()));
  }
  std::vector<Symbol> out;
  std::size_t gap = 0;
  std::size_t zero_run = 0;
  auto open_gap = [&] { out.insert(out.end(), std::size_t{signature[gap]} * length, 0); };
  open_gap();
  for (Symbol s : trunk_word) {
    if (s == 0) {
      if (++zero_run >= length) {
        throw Error("incompatible decomposition: trunk has a zero run of length >= l");
      }
      out.push_back(0);
    } else {
      zero_run = 0;
      out.push_back(s);
      ++gap;
      open_gap();
    }
  }
  return Word::unchecked(std::move(out), trunk_word.q());
}

std::uint64_t l1_norm(std::span<const std::uint32_t> signature) noexcept {
  return std::accumulate(signature.begin(), signature.end(), std::uint64_t{0});
}

std::size_t support_size(std::span<const std::uint32_t> signature) noexcept {
  std::size_t count = 0;
  for (auto s : signature) count += s != 0;
  return count;
}

}  // namespace dupcodes
