#include "dupcodes/formulas.hpp"

#include "dupcodes/error.hpp"
#include "dupcodes/numeric.hpp"
#include "dupcodes/transform.hpp"

namespace dupcodes {

std::uint64_t tandem_dup_sphere_size(const Word& x, std::size_t length, std::size_t t) {
  const auto weight = derive(x, length).tail.hamming_weight();
  return binomial_u64(static_cast<std::int64_t>(weight + t), static_cast<std::int64_t>(t));
}

std::uint64_t tandem_del_sphere_size(const Word& x, std::size_t length, std::size_t t) {
  const Signature sigma = zero_signature(derive(x, length).tail, length);
  // ways[k]: number of bounded vectors over the coordinates seen so far with sum k
  std::vector<std::uint64_t> ways(t + 1, 0);
  ways[0] = 1;
  for (std::uint32_t bound : sigma) {
    std::vector<std::uint64_t> next(t + 1, 0);
    for (std::size_t sum = 0; sum <= t; ++sum) {
      if (!ways[sum]) continue;
      for (std::size_t s = 0; s <= bound && sum + s <= t; ++s) next[sum + s] += ways[sum];
    }
    ways = std::move(next);
  }
  return ways[t];
}

std::uint64_t pal_dup_sphere_size_l1(const Word& x) { return run_profile(x).run_count(); }

std::uint64_t pal_dup_sphere_size_l2(const Word& x) {
  if (x.size() < 2) throw Error("palindromic duplication of length 2 needs |x| >= 2");
  const RunProfile runs = run_profile(x);
  return 2 * runs.run_count() - runs.count_of_length(1) - 1;
}

std::uint64_t pal_dup_sphere_upper_bound(const Word& x, std::size_t length) {
  if (length == 0) throw Error("duplication length must be at least 1");
  if (x.size() < length) throw Error("word shorter than the duplication length");
  std::uint64_t value = x.size() - length + 1;
  const RunProfile runs = run_profile(x);
  for (std::size_t run : runs.lengths()) {
    if (run > length) value -= run - length;
  }
  return value;
}

std::uint64_t pal_del_sphere_size_l1(const Word& x) { return run_profile(x).count_at_least(2); }

std::uint64_t pal_del_sphere_size_l2_binary(const Word& x) {
  if (x.q() != 2) throw Error("binary only: palindromic deletion sphere formula needs q = 2");
  if (x.size() < 4) return 0;
  const RunProfile runs = run_profile(x);
  std::uint64_t count = 0;
  for (std::size_t k = 1; k <= runs.run_count(); ++k) {
    const std::size_t len = runs.run_length(k);
    const bool interior = k > 1 && k < runs.run_count();
    if ((len == 2 && interior) || len >= 4) ++count;
  }
  return count;
}

PalindromeMatrix::PalindromeMatrix(const Word& x, std::size_t length) : rows_(length), cols_(0) {
  if (length == 0) throw Error("palindrome length must be at least 1");
  if (x.size() < 2 * length) {
    throw Error("palindrome matrix needs |x| >= 2l (|x| = " + std::to_string(x.size()) +
                ", l = " + std::to_string(length) + ")");
  }
  cols_ = x.size() - 2 * length + 1;
  data_.resize(rows_ * cols_);
  const Symbol q = x.q();
  for (std::size_t r = 1; r <= rows_; ++r) {
    for (std::size_t c = 1; c <= cols_; ++c) {
      const Symbol hi = x[c + 2 * length - r - 1];
      const Symbol lo = x[c + r - 2];
      data_[(r - 1) * cols_ + (c - 1)] = (hi + q - lo) % q;
    }
  }
}

std::vector<std::size_t> PalindromeMatrix::zero_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 1; c <= cols_; ++c) {
    bool zero = true;
    for (std::size_t r = 1; r <= rows_ && zero; ++r) zero = entry(r, c) == 0;
    if (zero) out.push_back(c);
  }
  return out;
}

std::size_t PalindromeMatrix::zero_column_runs() const {
  const auto zeros = zero_columns();
  std::size_t runs = 0;
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    if (k == 0 || zeros[k] != zeros[k - 1] + 1) ++runs;
  }
  return runs;
}

PalindromeMatrix palindrome_matrix(const Word& x, std::size_t length) {
  return PalindromeMatrix(x, length);
}

std::uint64_t pal_del_sphere_upper_bound(const Word& x, std::size_t length) {
  return PalindromeMatrix(x, length).zero_column_runs();
}

}  // namespace dupcodes
