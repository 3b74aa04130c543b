#include "dupcodes/kernels.hpp"

#include <algorithm>

#include "dupcodes/channel.hpp"
#include "dupcodes/error.hpp"
#include "dupcodes/numeric.hpp"
#include "dupcodes/transform.hpp"

namespace dupcodes::kernels {

namespace detail {

std::uint64_t deletion_sphere_size(const Word& x, std::size_t length) {
  return error_sphere(x, {ErrorOp::tandem_del, length}, 1).size();
}

std::pair<std::size_t, std::size_t> c1_class(const Word& x, std::size_t length) {
  const Signature sigma = zero_signature(derive(x, length).tail, length);
  const std::size_t s = sigma.size();
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k < s; ++k) sum += (k + 1) * std::uint64_t{sigma[k]};
  return {s, static_cast<std::size_t>(sum % (s + 1))};
}

std::pair<std::size_t, std::size_t> c2_class(const Word& x) {
  const RunProfile runs = run_profile(x);
  std::uint64_t checksum = 0;
  for (std::size_t i = 1; i <= runs.run_count(); ++i) checksum += i * runs.run_length(i);
  return {runs.count_of_length(1) % 5, static_cast<std::size_t>(checksum % (2 * x.size() + 1))};
}

bool palindrome_free(std::span<const Symbol> x) {
  for (std::size_t p = 0; p + 4 <= x.size(); ++p) {
    if (x[p] == x[p + 3] && x[p + 1] == x[p + 2]) return false;
  }
  return true;
}

bool transversal_covered(const Word& x, std::size_t n, std::size_t length, std::size_t t) {
  const ErrorKind kind{ErrorOp::tandem_del, length};
  const std::size_t outer = n >= t * length ? n - t * length : n + 1;
  Rational sum = 0;
  for (const Word& nu : error_ball(x, kind, t)) {
    const std::size_t size = error_sphere(nu, kind, t).size();
    if (size == 0) return true;
    if (nu.size() == outer) sum += Rational(1, size);
  }
  return sum >= 1;
}

}  // namespace detail

namespace {

std::uint64_t word_count(std::size_t n, Symbol q) {
  const std::uint64_t total = checked_pow(q, n);
  if (total == UINT64_MAX) throw GuardExceeded("word space does not fit 64 bits", UINT64_MAX);
  return total;
}

template <class Fn>
void for_each_word(std::size_t n, Symbol q, Fn&& fn) {
  const std::uint64_t total = word_count(n, q);
  std::vector<Symbol> buffer;
  for (std::uint64_t index = 0; index < total; ++index) {
    fill_word_from_index(index, n, q, buffer);
    fn(index, Word::unchecked(buffer, q));
  }
}

}  // namespace

namespace serial {

Histogram tally_deletion_sphere_sizes(std::size_t n, std::size_t length, Symbol q) {
  Histogram out;
  for_each_word(n, q, [&](std::uint64_t, const Word& x) {
    ++out[detail::deletion_sphere_size(x, length)];
  });
  return out;
}

ResidueTally tally_c1_residues(std::size_t n, std::size_t length, Symbol q) {
  ResidueTally out(n - length + 1);
  for (std::size_t s = 1; s <= out.size(); ++s) out[s - 1].assign(s + 1, 0);
  for_each_word(n, q, [&](std::uint64_t, const Word& x) {
    const auto [s, a] = detail::c1_class(x, length);
    ++out[s - 1][a];
  });
  return out;
}

std::vector<std::uint64_t> tally_c2_classes(std::size_t n) {
  const std::size_t modulus = 2 * n + 1;
  std::vector<std::uint64_t> out(5 * modulus, 0);
  for_each_word(n, 2, [&](std::uint64_t, const Word& x) {
    const auto [a, b] = detail::c2_class(x);
    ++out[a * modulus + b];
  });
  return out;
}

std::uint64_t count_palindrome_free(std::size_t n, Symbol q) {
  std::uint64_t count = 0;
  for_each_word(n, q, [&](std::uint64_t, const Word& x) { count += detail::palindrome_free(x.symbols()); });
  return count;
}

std::vector<Word> transversal_deficits(std::size_t n, std::size_t length, std::size_t t, Symbol q) {
  std::vector<Word> out;
  for_each_word(n, q, [&](std::uint64_t, const Word& x) {
    if (!detail::transversal_covered(x, n, length, t)) out.push_back(x);
  });
  return out;
}

}  // namespace serial

Histogram tally_deletion_sphere_sizes(std::size_t n, std::size_t length, Symbol q) {
  const auto total = static_cast<std::int64_t>(word_count(n, q));
  Histogram merged;
#pragma omp parallel
  {
    Histogram local;
    std::vector<Symbol> buffer;
#pragma omp for schedule(static)
    for (std::int64_t index = 0; index < total; ++index) {
      fill_word_from_index(static_cast<std::uint64_t>(index), n, q, buffer);
      ++local[detail::deletion_sphere_size(Word::unchecked(buffer, q), length)];
    }
#pragma omp critical(dup_histogram_merge)
    for (const auto& [size, count] : local) merged[size] += count;
  }
  return merged;
}

ResidueTally tally_c1_residues(std::size_t n, std::size_t length, Symbol q) {
  const auto total = static_cast<std::int64_t>(word_count(n, q));
  ResidueTally merged(n - length + 1);
  for (std::size_t s = 1; s <= merged.size(); ++s) merged[s - 1].assign(s + 1, 0);
#pragma omp parallel
  {
    ResidueTally local = merged;
    std::vector<Symbol> buffer;
#pragma omp for schedule(static)
    for (std::int64_t index = 0; index < total; ++index) {
      fill_word_from_index(static_cast<std::uint64_t>(index), n, q, buffer);
      const auto [s, a] = detail::c1_class(Word::unchecked(buffer, q), length);
      ++local[s - 1][a];
    }
#pragma omp critical(dup_residue_merge)
    for (std::size_t s = 0; s < merged.size(); ++s) {
      for (std::size_t a = 0; a < merged[s].size(); ++a) merged[s][a] += local[s][a];
    }
  }
  return merged;
}

std::vector<std::uint64_t> tally_c2_classes(std::size_t n) {
  const auto total = static_cast<std::int64_t>(word_count(n, 2));
  const std::size_t modulus = 2 * n + 1;
  std::vector<std::uint64_t> merged(5 * modulus, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(merged.size(), 0);
    std::vector<Symbol> buffer;
#pragma omp for schedule(static)
    for (std::int64_t index = 0; index < total; ++index) {
      fill_word_from_index(static_cast<std::uint64_t>(index), n, 2, buffer);
      const auto [a, b] = detail::c2_class(Word::unchecked(buffer, 2));
      ++local[a * modulus + b];
    }
#pragma omp critical(dup_class_merge)
    for (std::size_t k = 0; k < merged.size(); ++k) merged[k] += local[k];
  }
  return merged;
}

std::uint64_t count_palindrome_free(std::size_t n, Symbol q) {
  const auto total = static_cast<std::int64_t>(word_count(n, q));
  std::uint64_t count = 0;
#pragma omp parallel
  {
    std::vector<Symbol> buffer;
#pragma omp for schedule(static) reduction(+ : count)
    for (std::int64_t index = 0; index < total; ++index) {
      fill_word_from_index(static_cast<std::uint64_t>(index), n, q, buffer);
      count += detail::palindrome_free(buffer);
    }
  }
  return count;
}

std::vector<Word> transversal_deficits(std::size_t n, std::size_t length, std::size_t t, Symbol q) {
  const auto total = static_cast<std::int64_t>(word_count(n, q));
  std::vector<std::uint64_t> failing;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
    std::vector<Symbol> buffer;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t index = 0; index < total; ++index) {
      fill_word_from_index(static_cast<std::uint64_t>(index), n, q, buffer);
      if (!detail::transversal_covered(Word::unchecked(buffer, q), n, length, t)) {
        local.push_back(static_cast<std::uint64_t>(index));
      }
    }
#pragma omp critical(dup_deficit_merge)
    failing.insert(failing.end(), local.begin(), local.end());
  }
  std::sort(failing.begin(), failing.end());
  std::vector<Word> out;
  out.reserve(failing.size());
  for (auto index : failing) out.push_back(word_from_index(index, n, q));
  return out;
}

}  // namespace dupcodes::kernels
