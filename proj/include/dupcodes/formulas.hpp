#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dupcodes/word.hpp"

namespace dupcodes {

/// |S^{tau_l}_t(x)| = binom(wt_H(v_x) + t, t).
std::uint64_t tandem_dup_sphere_size(const Word& x, std::size_t length, std::size_t t);

/// Number of s <= sigma_l(v_x) (coordinatewise) with |s|_1 = t.
std::uint64_t tandem_del_sphere_size(const Word& x, std::size_t length, std::size_t t);

/// r(x)
std::uint64_t pal_dup_sphere_size_l1(const Word& x);
/// 2 r(x) - r^{(1)}(x) - 1
std::uint64_t pal_dup_sphere_size_l2(const Word& x);
/// n - l + 1 - sum_{i > l} (i - l) r^{(i)}(x); an upper bound on |S^{rho_l}_1(x)|.
std::uint64_t pal_dup_sphere_upper_bound(const Word& x, std::size_t length);

/// r^{(>=2)}(x)
std::uint64_t pal_del_sphere_size_l1(const Word& x);
/// Interior runs of length exactly 2 plus runs of length >= 4. Binary only;
/// words shorter than 4 have no window and yield 0.
std::uint64_t pal_del_sphere_size_l2_binary(const Word& x);

/// l x (n - 2l + 1) matrix over Z_q whose column c (1-based) is zero exactly
/// when a length-l palindrome starts at prefix length c - 1:
/// entry(r, c) = x_{c + 2l - r} - x_{c + r - 1}.
class PalindromeMatrix {
 public:
  PalindromeMatrix(const Word& x, std::size_t length);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  /// 1-based row and column.
  Symbol entry(std::size_t r, std::size_t c) const { return data_.at((r - 1) * cols_ + (c - 1)); }

  /// 1-based indices of all-zero columns, ascending.
  std::vector<std::size_t> zero_columns() const;
  /// Maximal blocks of consecutive all-zero columns.
  std::size_t zero_column_runs() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Symbol> data_;
};

PalindromeMatrix palindrome_matrix(const Word& x, std::size_t length);

/// Number of zero-column runs of the palindrome matrix; bounds |S^{rho^D_l}_1(x)|.
std::uint64_t pal_del_sphere_upper_bound(const Word& x, std::size_t length);

}  // namespace dupcodes
