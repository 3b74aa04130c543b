#include "dupcodes/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "dupcodes/codes.hpp"
#include "dupcodes/error.hpp"
#include "dupcodes/kernels.hpp"
#include "dupcodes/mis.hpp"

namespace dupcodes {

namespace {

using I = std::int64_t;

BigInt rll_count(I n, I l, I w, Symbol q) {
  if (n < 0 || w < 0 || w > n) return 0;
  const BigInt scale = big_pow(q - 1, static_cast<std::uint64_t>(w));
  if (n <= l) return scale * binomial(n, w);
  if (w == 0) return 0;
  if (w == 1) return BigInt(q - 1) * std::max<I>(0, 2 * (l + 1) - n);
  BigInt sum = 0;
  for (I p = 0; p <= l; ++p) {
    for (I j = 0; j < w; ++j) {
      const BigInt term = binomial(w - 1, j) * (binomial(n - p - 1 - j * (l + 1), w - 1) -
                                                binomial(n - p - 1 - (j + 1) * (l + 1), w - 1));
      if (j % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
  }
  return scale * sum;
}

BigInt histogram_entry(I n, I l, I i, Symbol q) {
  const BigInt head = big_pow(q, static_cast<std::uint64_t>(l));
  if (i == 0) {
    if (n < l) return big_pow(q, static_cast<std::uint64_t>(std::max<I>(n, 0)));
    BigInt sum = 0;
    for (I w = 0; w <= n - l; ++w) sum += rll_count(n - l, l - 1, w, q);
    return head * sum;
  }
  BigInt sum = 0;
  for (I nu = i; nu <= n / l - 1; ++nu) {
    const I rest = n - (nu + 1) * l;
    for (I w = std::max<I>(0, i - 1); w <= rest; ++w) {
      sum += rll_count(rest, l - 1, w, q) * binomial(w + 1, i) * binomial(nu - 1, i - 1);
    }
  }
  return head * sum;
}

void require_length(std::size_t length) {
  if (length == 0) throw Error("duplication length must be at least 1");
}

}  // namespace

BigInt rll_weight_count(std::size_t n_prime, std::size_t l_prime, std::size_t weight, Symbol q) {
  if (q < 2) throw Error("alphabet size must be at least 2");
  return rll_count(static_cast<I>(n_prime), static_cast<I>(l_prime), static_cast<I>(weight), q);
}

std::map<std::size_t, BigInt> deletion_histogram(std::size_t n, std::size_t length, Symbol q) {
  require_length(length);
  std::map<std::size_t, BigInt> out;
  for (std::size_t i = 0; i <= n; ++i) {
    BigInt value = histogram_entry(static_cast<I>(n), static_cast<I>(length), static_cast<I>(i), q);
    if (value != 0) out.emplace(i, std::move(value));
  }
  return out;
}

BigInt irreducible_count(std::size_t n, std::size_t length, Symbol q) {
  require_length(length);
  return histogram_entry(static_cast<I>(n), static_cast<I>(length), 0, q);
}

Rational gsp_bound_tandem(std::size_t n, std::size_t length, Symbol q) {
  require_length(length);
  if (n < length) throw Error("bound needs n >= l");
  Rational value = Rational(irreducible_count(n, length, q)) +
                   Rational(irreducible_count(n - length, length, q));
  for (const auto& [i, count] : deletion_histogram(n - length, length, q)) {
    if (i >= 1) value += Rational(count, BigInt(i));
  }
  return value;
}

TransversalResult transversal_check(std::size_t n, std::size_t length, std::size_t t, Symbol q,
                                    std::uint64_t guard, bool force) {
  require_length(length);
  enforce_guard(q, n, guard, force, "transversal check");
  TransversalResult result;
  result.deficits = kernels::transversal_deficits(n, length, t, q);
  result.feasible = result.deficits.empty();

  const ErrorKind kind{ErrorOp::tandem_del, length};
  for (std::size_t i = 0; i <= t && i * length <= n; ++i) {
    const std::size_t m = n - i * length;
    const std::uint64_t total = checked_pow(q, m);
    for (std::uint64_t index = 0; index < total; ++index) {
      const std::size_t size = error_sphere(word_from_index(index, m, q), kind, t).size();
      if (size == 0) {
        result.total += 1;
      } else if (i == t) {
        result.total += Rational(1, size);
      }
    }
  }
  return result;
}

std::vector<Word> optimal_code(std::size_t n, std::size_t t, Symbol q, ErrorKind kind,
                               std::uint64_t guard, bool force) {
  require_length(kind.length);
  enforce_guard(q, n, guard, force, "exact optimum");
  const std::uint64_t total = checked_pow(q, n);
  std::vector<Word> words;
  words.reserve(total);
  for (std::uint64_t index = 0; index < total; ++index) words.push_back(word_from_index(index, n, q));
  if (t == 0) return words;

  std::vector<std::vector<Word>> balls(total);
  const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t index = 0; index < count; ++index) {
    balls[index] = error_ball(words[index], kind, t);
  }

  std::unordered_map<Word, std::vector<std::size_t>, WordHash> owners;
  for (std::size_t index = 0; index < total; ++index) {
    for (const Word& w : balls[index]) owners[w].push_back(index);
  }
  balls.clear();
  AdjacencyList graph(total);
  for (const auto& entry : owners) {
    const auto& group = entry.second;
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        graph[group[a]].push_back(group[b]);
        graph[group[b]].push_back(group[a]);
      }
    }
  }
  for (auto& list : graph) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  std::vector<Word> code;
  for (std::size_t index : maximum_independent_set(graph)) code.push_back(words[index]);
  return code;
}

std::uint64_t exact_optimum(std::size_t n, std::size_t length, std::size_t t, Symbol q, ErrorOp op,
                            std::uint64_t guard, bool force) {
  if (t == 0) {
    enforce_guard(q, n, guard, force, "exact optimum");
    return checked_pow(q, n);
  }
  return optimal_code(n, t, q, {op, length}, guard, force).size();
}

BoundReport bound_report(std::size_t n, std::size_t length, Symbol q) {
  BoundReport report;
  report.n = n;
  report.l = length;
  report.q = q;
  report.t = 1;
  report.bound_value = gsp_bound_tandem(n, length, q);
  report.irreducible_counts = {irreducible_count(n, length, q),
                               irreducible_count(n - length, length, q)};
  report.histogram = deletion_histogram(n - length, length, q);
  report.redundancy_lower_bound =
      static_cast<double>(n) * std::log2(static_cast<double>(q)) - log2_rational(report.bound_value);
  return report;
}

RedundancyRow redundancy_row(std::size_t n, std::size_t length, Symbol q, std::uint64_t guard,
                             bool force) {
  if (n < 2) throw Error("redundancy table needs n >= 2");
  RedundancyRow row;
  row.n = n;
  const double bits = static_cast<double>(n) * std::log2(static_cast<double>(q));
  row.gsp_bound = gsp_bound_tandem(n, length, q);
  row.gsp_raw = bits - log2_rational(row.gsp_bound);
  row.gsp = std::max(row.gsp_raw, 0.0);
  row.c1_size = c1_best_params(n, length, q, guard, force).cardinality;
  row.c1 = bits - std::log2(static_cast<double>(row.c1_size));
  const double log_n = std::log2(static_cast<double>(n));
  row.c2 = log_n + std::log2(10.0);
  row.burst = log_n + std::log2(log_n) + 1.0;
  return row;
}

std::vector<RedundancyRow> redundancy_table(const std::vector<std::size_t>& n_values,
                                            std::size_t length, Symbol q, std::uint64_t guard,
                                            bool force) {
  for (std::size_t n : n_values) enforce_guard(q, n, guard, force, "redundancy table");
  std::vector<RedundancyRow> rows;
  rows.reserve(n_values.size());
  for (std::size_t n : n_values) rows.push_back(redundancy_row(n, length, q, guard, force));
  return rows;
}

}  // namespace dupcodes
