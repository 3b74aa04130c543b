#include "dupcodes/codes.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "dupcodes/bounds.hpp"
#include "dupcodes/error.hpp"
#include "dupcodes/kernels.hpp"
#include "dupcodes/transform.hpp"

namespace dupcodes {

namespace {

std::vector<Word> enumerate_members(std::size_t n, Symbol q, std::uint64_t guard, bool force,
                                    const std::function<bool(const Word&)>& member,
                                    const char* what) {
  enforce_guard(q, n, guard, force, what);
  const std::uint64_t total = checked_pow(q, n);
  std::vector<Word> out;
  std::vector<Symbol> buffer;
  for (std::uint64_t index = 0; index < total; ++index) {
    fill_word_from_index(index, n, q, buffer);
    Word x = Word::unchecked(buffer, q);
    if (member(x)) out.push_back(std::move(x));
  }
  return out;
}

void require_binary(const Word& x) {
  if (x.q() != 2) throw Error("construction 2 is binary only (q = " + std::to_string(x.q()) + ")");
}

}  // namespace

// --- Construction 1 --------------------------------------------------------

std::size_t vt_checksum(std::span<const std::uint32_t> s) {
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k < s.size(); ++k) sum += (k + 1) * std::uint64_t{s[k]};
  return static_cast<std::size_t>(sum % (s.size() + 1));
}

bool vt_member(std::span<const std::uint32_t> s, std::size_t a) {
  return vt_checksum(s) == a % (s.size() + 1);
}

TandemVTCode TandemVTCode::with_zero_residues(std::size_t n, std::size_t l, Symbol q) {
  TandemVTCode code{n, q, l, {}};
  if (l == 0 || l > n) throw Error("construction 1 needs 1 <= l <= n");
  code.residues.assign(n - l + 1, 0);
  return code;
}

void TandemVTCode::validate() const {
  if (q < 2) throw Error("alphabet size must be at least 2");
  if (l == 0 || l > n) throw Error("construction 1 needs 1 <= l <= n");
  if (residues.size() != n - l + 1) {
    throw Error("construction 1 needs " + std::to_string(n - l + 1) + " residues, got " +
                std::to_string(residues.size()));
  }
  for (std::size_t s = 1; s <= residues.size(); ++s) {
    if (residues[s - 1] > s) {
      throw Error("residue a_" + std::to_string(s) + " = " + std::to_string(residues[s - 1]) +
                  " exceeds " + std::to_string(s));
    }
  }
}

bool c1_member(const Word& x, const TandemVTCode& code) {
  if (x.size() != code.n) {
    throw Error("length mismatch: |x| = " + std::to_string(x.size()) + ", n = " +
                std::to_string(code.n));
  }
  if (x.q() != code.q) throw Error("alphabet mismatch");
  const Signature sigma = zero_signature(derive(x, code.l).tail, code.l);
  return vt_member(sigma, code.residues.at(sigma.size() - 1));
}

Word c1_decode(const Word& y, const TandemVTCode& code) {
  if (y.q() != code.q) throw Error("alphabet mismatch");
  if (y.size() == code.n) {
    if (c1_member(y, code)) return y;
    throw DecodingFailure("decoding failure: received word of length n is not a codeword");
  }
  if (y.size() != code.n + code.l) {
    throw DecodingFailure("decoding failure: length " + std::to_string(y.size()) +
                          " is neither n nor n + l");
  }
  const DerivativePair pair = derive(y, code.l);
  SignatureDecomposition parts = decompose(pair.tail, code.l);
  const std::size_t m = parts.signature.size();
  if (m > code.residues.size()) throw DecodingFailure("decoding failure: signature too long");
  const std::size_t modulus = m + 1;
  const std::size_t d = (vt_checksum(parts.signature) + modulus - code.residues[m - 1] % modulus) %
                        modulus;
  if (d == 0 || parts.signature[d - 1] == 0) {
    throw DecodingFailure("decoding failure: no coordinate matches the syndrome");
  }
  --parts.signature[d - 1];
  const Word tail = assemble(parts.trunk, parts.signature, code.l);
  Word x = integrate({pair.head, tail});
  if (!c1_member(x, code)) throw DecodingFailure("decoding failure: result is not a codeword");
  return x;
}

std::vector<Word> c1_codebook(const TandemVTCode& code, std::uint64_t guard, bool force) {
  code.validate();
  return enumerate_members(code.n, code.q, guard, force,
                           [&](const Word& x) { return c1_member(x, code); }, "construction 1");
}

C1Params c1_best_params(std::size_t n, std::size_t l, Symbol q, std::uint64_t guard, bool force) {
  C1Params out{TandemVTCode::with_zero_residues(n, l, q), 0};
  enforce_guard(q, n, guard, force, "construction 1 parameter search");
  const auto tally = kernels::tally_c1_residues(n, l, q);
  for (std::size_t s = 0; s < tally.size(); ++s) {
    const auto best = std::max_element(tally[s].begin(), tally[s].end());
    out.code.residues[s] = static_cast<std::size_t>(best - tally[s].begin());
    out.cardinality += *best;
  }
  return out;
}

Rational c1_size_lower_bound(std::size_t n, std::size_t l, Symbol q) {
  if (l == 0 || l > n) throw Error("construction 1 needs 1 <= l <= n");
  Rational sum = 0;
  for (std::size_t nu = 0; (nu + 1) * l <= n; ++nu) {
    const std::size_t rest = n - (nu + 1) * l;
    for (std::size_t w = 0; w <= rest; ++w) {
      const BigInt count = rll_weight_count(rest, l - 1, w, q);
      if (count == 0) continue;
      sum += Rational(count * binomial(static_cast<std::int64_t>(w + nu), static_cast<std::int64_t>(nu)),
                      BigInt(w + 2));
    }
  }
  return sum * Rational(big_pow(q, l));
}

// --- Construction 2 --------------------------------------------------------

void PalindromicL2Code::validate() const {
  if (n < 1) throw Error("construction 2 needs n >= 1");
  if (a > 4) throw Error("residue a must lie in 0..4");
  if (b > 2 * n) throw Error("residue b must lie in 0.." + std::to_string(2 * n));
}

bool c2_member(const Word& x, const PalindromicL2Code& code) {
  require_binary(x);
  if (x.size() != code.n) {
    throw Error("length mismatch: |x| = " + std::to_string(x.size()) + ", n = " +
                std::to_string(code.n));
  }
  const auto [a, b] = kernels::detail::c2_class(x);
  return a == code.a && b == code.b;
}

namespace {

struct Runs {
  std::vector<std::size_t> length;  // R_1..R_r at index 1..r
  std::vector<std::size_t> start;   // S_k, 0-based symbol index
  std::size_t count = 0;
};

Runs runs_of(const Word& y) {
  const RunProfile profile = run_profile(y);
  Runs out;
  out.count = profile.run_count();
  out.length.assign(out.count + 2, 0);
  out.start.assign(out.count + 2, 0);
  std::size_t pos = 0;
  for (std::size_t k = 1; k <= out.count; ++k) {
    out.length[k] = profile.run_length(k);
    out.start[k] = pos;
    pos += out.length[k];
  }
  return out;
}

struct Candidate {
  std::size_t position;
  std::size_t run;
};

}  // namespace

C2Decoding c2_decode_detailed(const Word& y, const PalindromicL2Code& code) {
  require_binary(y);
  code.validate();
  if (y.size() == code.n) {
    if (c2_member(y, code)) return {y, 0, 0};
    throw DecodingFailure("decoding failure: received word of length n is not a codeword");
  }
  if (y.size() != code.n + 2) {
    throw DecodingFailure("decoding failure: length " + std::to_string(y.size()) +
                          " is neither n nor n + 2");
  }
  const std::size_t modulus = 2 * code.n + 1;
  const Runs runs = runs_of(y);
  const std::size_t r = runs.count;
  const std::size_t singles = run_count_of_length(y, 1);
  const std::size_t delta = (singles % 5 + 5 - code.a) % 5;
  const std::size_t checksum = (run_checksum(y) % modulus + modulus - code.b) % modulus;
  static constexpr int kCaseOf[5] = {1, 5, 4, 3, 2};
  const int error_case = kCaseOf[delta];

  auto suffix = [&](std::size_t from) {
    std::size_t sum = 0;
    for (std::size_t k = from; k <= r; ++k) sum += runs.length[k];
    return sum;
  };

  std::vector<Candidate> candidates;
  switch (error_case) {
    case 1:
      if (checksum != 0 && checksum % 2 == 0) {
        const std::size_t j = checksum / 2;
        if (j <= r && runs.length[j] >= 4) candidates.push_back({runs.start[j], j});
      }
      if (y.size() >= 4) candidates.push_back({y.size() - 4, 0});
      break;
    case 2:
    case 3:
      if (checksum >= 3 && checksum % 2 == 1) {
        const std::size_t j = (checksum - 3) / 2;
        if (j >= 1 && j < r) candidates.push_back({runs.start[j + 1] - 1, j});
      }
      break;
    case 4:
      for (std::size_t j = 1; j + 3 <= r; ++j) {
        if (runs.length[j + 1] != 2 || runs.length[j + 2] != 1 || runs.length[j + 3] != 1) continue;
        if ((2 * j + 5 + 2 * suffix(j + 4)) % modulus != checksum) continue;
        candidates.push_back({runs.start[j + 1] - 1, j});
      }
      break;
    default:
      for (std::size_t j = 1; j + 2 <= r; ++j) {
        if (runs.length[j + 1] != 2 || runs.length[j + 2] != 1) continue;
        if ((2 * j + 3 + 2 * suffix(j + 3)) % modulus != checksum) continue;
        candidates.push_back({runs.start[j + 1] - 1, j});
      }
      break;
  }

  for (const Candidate& c : candidates) {
    auto x = try_apply(y, {ErrorOp::pal_del, 2}, c.position);
    if (x && c2_member(*x, code)) return {std::move(*x), error_case, c.run};
  }
  throw DecodingFailure("decoding failure: no run matches the checksum (case " +
                        std::to_string(error_case) + ")");
}

Word c2_decode(const Word& y, const PalindromicL2Code& code) {
  return c2_decode_detailed(y, code).word;
}

std::vector<Word> c2_codebook(const PalindromicL2Code& code, std::uint64_t guard, bool force) {
  code.validate();
  return enumerate_members(code.n, 2, guard, force,
                           [&](const Word& x) { return c2_member(x, code); }, "construction 2");
}

C2Params c2_best_params(std::size_t n, std::uint64_t guard, bool force) {
  if (n < 1) throw Error("construction 2 needs n >= 1");
  enforce_guard(2, n, guard, force, "construction 2 parameter search");
  const auto tally = kernels::tally_c2_classes(n);
  const std::size_t modulus = 2 * n + 1;
  const auto best = std::max_element(tally.begin(), tally.end());
  const auto index = static_cast<std::size_t>(best - tally.begin());
  return {{n, index / modulus, index % modulus}, *best};
}

Rational c2_size_lower_bound(std::size_t n) {
  return Rational(big_pow(2, n), BigInt(5 * (2 * n + 1)));
}

// --- oracle ----------------------------------------------------------------

Word oracle_decode(const Word& y, std::size_t n, ErrorKind kind, const Membership& member) {
  if (kind.length == 0) throw Error("error length must be at least 1");
  if (y.size() < n) throw Error("received word shorter than n");
  const std::size_t excess = y.size() - n;
  if (excess % kind.length != 0) throw DecodingFailure("uncorrectable");
  const ErrorKind deletion = kind.is_deletion() ? kind : kind.inverse();
  std::vector<Word> found;
  for (const Word& c : error_sphere(y, deletion, excess / kind.length).members) {
    if (member(c)) found.push_back(c);
  }
  if (found.empty()) throw DecodingFailure("uncorrectable");
  if (found.size() > 1) {
    throw Error("code is not correcting: " + format_word(found[0]) + " and " +
                format_word(found[1]) + " both explain " + format_word(y));
  }
  return found.front();
}

// --- Construction 3 --------------------------------------------------------

bool cpf_member(const Word& x) { return kernels::detail::palindrome_free(x.symbols()); }

Word cpf_decode(const Word& y, std::size_t n) {
  if (y.size() < n) throw Error("received word shorter than n");
  const std::size_t l = y.size() - n;
  if (l == 0) {
    if (cpf_member(y)) return y;
    throw DecodingFailure("decoding failure: received word of length n is not a codeword");
  }
  if (l == 1) throw Error("unsupported duplication length 1 for the palindrome-free code");
  std::set<Word> survivors;
  for (std::size_t p : deletion_positions(y, {ErrorOp::pal_del, l})) {
    Word x = palindromic_delete(y, l, p);
    if (cpf_member(x)) survivors.insert(std::move(x));
  }
  if (survivors.size() != 1) {
    throw DecodingFailure("decoding failure: " + std::to_string(survivors.size()) +
                          " palindrome-free candidates");
  }
  return *survivors.begin();
}

std::vector<Word> cpf_codebook(std::size_t n, Symbol q, std::uint64_t guard, bool force) {
  return enumerate_members(n, q, guard, force, cpf_member, "palindrome-free code");
}

BigInt cpf_count_recursive(std::size_t n, Symbol q) {
  if (q < 2) throw Error("alphabet size must be at least 2");
  if (n <= 3) return big_pow(q, n);
  // states by the last three symbols: aaa, aab, aba, abb, abc
  const BigInt Q = q;
  std::array<BigInt, 5> m = {Q, Q * (Q - 1), Q * (Q - 1), Q * (Q - 1), Q * (Q - 1) * (Q - 2)};
  for (std::size_t len = 3; len < n; ++len) {
    const BigInt open = m[1] + m[2] + m[4];
    m = {m[3], (Q - 1) * m[0] + (Q - 2) * m[3], open, open, (Q - 2) * open};
  }
  return m[0] + m[1] + m[2] + m[3] + m[4];
}

namespace {

using Complex = std::complex<long double>;

Complex cubic(Complex x, long double q) {
  return ((x - (q - 1)) * x - (q - 2)) * x - (q - 1);
}

Complex cubic_derivative(Complex x, long double q) {
  return (3.0L * x - 2.0L * (q - 1)) * x - (q - 2);
}

}  // namespace

std::array<Complex, 3> cpf_characteristic_roots(Symbol q) {
  const long double Q = q;
  const long double scale = std::max(1.0L, Q);
  std::array<Complex, 3> z;
  const Complex seed(0.4L, 0.9L);
  z[0] = scale * seed;
  z[1] = z[0] * seed;
  z[2] = z[1] * seed;
  bool converged = false;
  for (int iter = 0; iter < 500 && !converged; ++iter) {
    long double shift = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      Complex denom = 1;
      for (std::size_t k = 0; k < 3; ++k) {
        if (k != i) denom *= z[i] - z[k];
      }
      const Complex step = cubic(z[i], Q) / denom;
      z[i] -= step;
      shift = std::max(shift, std::abs(step));
    }
    converged = shift <= 1e-18L * scale;
  }
  for (auto& root : z) {
    for (int iter = 0; iter < 5; ++iter) {
      const Complex d = cubic_derivative(root, Q);
      if (std::abs(d) == 0) break;
      root -= cubic(root, Q) / d;
    }
    // residual of the cubic normalised by q^3
    if (std::abs(cubic(root, Q)) / (scale * scale * scale) > 1e-12L) {
      throw Error("characteristic root finding did not converge for q = " + std::to_string(q));
    }
    if (std::abs(root.imag()) < 1e-15L * scale) root = Complex(root.real(), 0);
  }
  std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return z;
}

double cpf_count_closed(std::size_t n, Symbol q) {
  if (n < 3) throw Error("closed form needs n >= 3");
  const long double Q = q;
  Complex total = 0;
  for (const Complex& lambda : cpf_characteristic_roots(q)) {
    const Complex numer = Q * (Q - 1) *
                          ((Q * Q + Q) * lambda * lambda + (Q * Q - 1) * lambda + Q * Q);
    const Complex denom = (Q - 1) * lambda * lambda + (2 * Q - 4) * lambda + (3 * Q - 3);
    total += numer / denom * std::pow(lambda, static_cast<int>(n - 3));
  }
  const long double tolerance = 1e-9L * std::max(1.0L, std::abs(total.real()));
  if (std::abs(total.imag()) > tolerance) {
    throw Error("closed form left an imaginary residue of " + std::to_string((double)total.imag()));
  }
  return static_cast<double>(total.real());
}

long double cpf_lambda(double q) {
  const long double Q = q;
  const long double A = (Q - 1) / 2 + (Q - 1) * (Q - 2) / 6 + (Q - 1) * (Q - 1) * (Q - 1) / 27;
  const long double B = (Q - 2) / 3 + (Q - 1) * (Q - 1) / 9;
  const long double D = A * A - B * B * B;
  if (D >= 0) {
    const long double root = std::sqrt(D);
    return (Q - 1) / 3 + std::cbrt(A + root) + std::cbrt(A - root);
  }
  // three real roots: the principal cube roots of A +- i sqrt(-D) are conjugate
  const Complex w = std::pow(Complex(A, std::sqrt(-D)), 1.0L / 3.0L);
  return (Q - 1) / 3 + 2 * w.real();
}

double cpf_rate(std::size_t n, Symbol q) {
  if (n == 0) throw Error("rate needs n >= 1");
  return log2_big(cpf_count_recursive(n, q)) / (static_cast<double>(n) * std::log2(double(q)));
}

double cpf_asymptotic_rate(Symbol q) {
  return static_cast<double>(std::log(cpf_lambda(q)) / std::log(static_cast<long double>(q)));
}

std::vector<RateCell> cpf_rate_table(const std::vector<Symbol>& q_values,
                                     const std::vector<std::optional<std::size_t>>& n_values) {
  std::vector<RateCell> cells;
  for (Symbol q : q_values) {
    if (q < 2) throw Error("alphabet size must be at least 2");
    for (const auto& n : n_values) {
      cells.push_back({q, n, n ? cpf_rate(*n, q) : cpf_asymptotic_rate(q)});
    }
  }
  return cells;
}

// --- verification ----------------------------------------------------------

std::optional<std::pair<Word, Word>> first_ball_collision(const std::vector<Word>& codebook,
                                                          ErrorKind kind, std::size_t t) {
  std::vector<std::vector<Word>> balls(codebook.size());
  const auto count = static_cast<std::int64_t>(codebook.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t k = 0; k < count; ++k) balls[k] = error_ball(codebook[k], kind, t);

  std::unordered_map<Word, std::size_t, WordHash> owner;
  std::optional<std::pair<std::size_t, std::size_t>> clash;
  for (std::size_t k = 0; k < codebook.size(); ++k) {
    for (const Word& w : balls[k]) {
      const auto [it, fresh] = owner.emplace(w, k);
      if (!fresh && it->second != k) {
        const std::pair<std::size_t, std::size_t> pair{it->second, k};
        if (!clash || pair < *clash) clash = pair;
      }
    }
  }
  if (!clash) return std::nullopt;
  return std::make_pair(codebook[clash->first], codebook[clash->second]);
}

// --- encoder ---------------------------------------------------------------

CodebookEncoder::CodebookEncoder(std::vector<Word> codebook) : codebook_(std::move(codebook)) {
  std::sort(codebook_.begin(), codebook_.end());
  codebook_.erase(std::unique(codebook_.begin(), codebook_.end()), codebook_.end());
}

const Word& CodebookEncoder::encode(std::uint64_t message) const {
  if (message >= codebook_.size()) {
    throw Error("message index " + std::to_string(message) + " out of range (codebook size " +
                std::to_string(codebook_.size()) + ")");
  }
  return codebook_[message];
}

std::uint64_t CodebookEncoder::index_of(const Word& codeword) const {
  const auto it = std::lower_bound(codebook_.begin(), codebook_.end(), codeword);
  if (it == codebook_.end() || *it != codeword) throw Error("not a codeword: " + format_word(codeword));
  return static_cast<std::uint64_t>(it - codebook_.begin());
}

}  // namespace dupcodes
