#include "dupcodes/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "dupcodes/bounds.hpp"
#include "dupcodes/channel.hpp"
#include "dupcodes/codes.hpp"
#include "dupcodes/error.hpp"
#include "dupcodes/formulas.hpp"
#include "dupcodes/report.hpp"

namespace dupcodes {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::size_t parse_size(std::string_view text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error("not a nonnegative integer: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

struct Globals {
  std::string q = "2";
  std::string out_path;
  std::string format;
  bool force = false;
  std::uint64_t seed = 0;
};

Symbol single_q(const Globals& g) {
  const std::size_t q = parse_size(g.q);
  if (q < 2 || q > std::numeric_limits<Symbol>::max()) throw Error("alphabet size must be >= 2");
  return static_cast<Symbol>(q);
}

// Machine output goes to --out when given, else to stdout in place of the
// human report when --format was requested explicitly.
class Sink {
 public:
  Sink(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

  bool json() const { return g_.format == "json"; }
  bool human() const { return !g_.out_path.empty() || g_.format.empty(); }

  void emit(const std::string& csv, const Json& js) {
    const std::string text = json() ? js.dump(2) + '\n' : csv;
    if (!g_.out_path.empty()) {
      std::ofstream file(g_.out_path, std::ios::binary);
      if (!file) throw Error("cannot write " + g_.out_path);
      file << text;
    } else if (!g_.format.empty()) {
      out_ << text;
    }
  }

 private:
  const Globals& g_;
  std::ostream& out_;
};

std::string fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

// --- sphere ------------------------------------------------------------------

struct SphereFigures {
  std::optional<std::uint64_t> formula;
  std::optional<std::uint64_t> bound;
};

SphereFigures sphere_figures(const Word& x, ErrorKind kind, std::size_t t) {
  SphereFigures f;
  const std::size_t l = kind.length;
  switch (kind.op) {
    case ErrorOp::tandem_dup:
      if (x.size() >= l) f.formula = tandem_dup_sphere_size(x, l, t);
      break;
    case ErrorOp::tandem_del:
      if (x.size() >= l) f.formula = tandem_del_sphere_size(x, l, t);
      break;
    case ErrorOp::pal_dup:
      if (t != 1 || x.empty()) break;
      if (l == 1) f.formula = pal_dup_sphere_size_l1(x);
      if (l == 2 && x.size() >= 2) f.formula = pal_dup_sphere_size_l2(x);
      if (x.size() >= l) f.bound = pal_dup_sphere_upper_bound(x, l);
      break;
    case ErrorOp::pal_del:
      if (t != 1 || x.empty()) break;
      if (l == 1) f.formula = pal_del_sphere_size_l1(x);
      if (l == 2 && x.q() == 2) f.formula = pal_del_sphere_size_l2_binary(x);
      if (x.size() >= 2 * l) f.bound = pal_del_sphere_upper_bound(x, l);
      break;
  }
  return f;
}

int cmd_sphere(const Globals& g, const std::string& word_text, const std::string& kind_text,
               std::size_t l, std::size_t t, std::ostream& out) {
  const Word x = parse_word(word_text, single_q(g));
  const ErrorKind kind{parse_error_op(kind_text), l};
  if (l == 0) throw Error("l must be at least 1");
  const ErrorSphere sphere = error_sphere(x, kind, t);
  const SphereFigures f = sphere_figures(x, kind, t);
  bool ok = true;
  if (f.formula && *f.formula != sphere.size()) ok = false;
  if (f.bound && *f.bound < sphere.size()) ok = false;

  Sink sink(g, out);
  if (sink.human()) {
    out << "word     " << format_word(x) << " (q = " << x.q() << ")\n";
    out << "kind     " << to_string(kind.op) << ", l = " << l << ", t = " << t << "\n";
    out << "size     " << sphere.size() << " (enumerated)\n";
    out << "formula  " << (f.formula ? std::to_string(*f.formula) : "n/a") << "\n";
    out << "bound    " << (f.bound ? std::to_string(*f.bound) : "n/a") << "\n";
    if (sphere.members.empty()) {
      out << "sphere is empty\n";
    } else {
      out << "members:\n";
      for (const Word& w : sphere.members) out << "  " << format_word(w) << "\n";
    }
    out << (ok ? "check: pass\n" : "check: FAIL\n");
  }
  std::string csv = "member\n";
  Json members = Json::array();
  for (const Word& w : sphere.members) {
    csv += format_word(w) + '\n';
    members.push_back(format_word(w));
  }
  sink.emit(csv, {{"word", format_word(x)},
                  {"q", x.q()},
                  {"kind", std::string(to_string(kind.op))},
                  {"l", l},
                  {"t", t},
                  {"size", sphere.size()},
                  {"formula", f.formula ? Json(*f.formula) : Json(nullptr)},
                  {"bound", f.bound ? Json(*f.bound) : Json(nullptr)},
                  {"members", members},
                  {"pass", ok}});
  return ok ? kPass : kFail;
}

// --- bound -------------------------------------------------------------------

int cmd_bound(const Globals& g, const std::string& n_text, std::size_t l, std::ostream& out) {
  const Symbol q = single_q(g);
  if (l == 0) throw Error("l must be at least 1");
  const auto n_values = parse_size_list(n_text);
  for (std::size_t n : n_values) {
    if (n < l) throw Error("bound needs n >= l (n = " + std::to_string(n) + ")");
  }
  const auto rows = redundancy_table(n_values, l, q, kDefaultGuard, g.force);
  std::vector<BoundReport> reports;
  for (std::size_t n : n_values) reports.push_back(bound_report(n, l, q));

  bool ok = true;
  for (const auto& row : rows) ok = ok && row.gsp <= row.c1 + 1e-9;

  Sink sink(g, out);
  if (sink.human()) {
    out << "tandem duplication bounds, l = " << l << ", q = " << q << "\n";
    out << "n\tbound\tgsp_bits\tc1_size\tc1_bits\tc2_bits\tburst_bits\n";
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto& row = rows[k];
      out << row.n << '\t' << rational_string(row.gsp_bound) << '\t' << format_real(row.gsp) << '\t'
          << row.c1_size << '\t' << format_real(row.c1) << '\t' << format_real(row.c2) << '\t'
          << format_real(row.burst) << "\n";
    }
    out << rows.size() << " rows" << (ok ? "" : "; bound exceeds an achieved redundancy") << "\n";
  }
  sink.emit(bound_table_csv(reports, rows), bound_table_json(reports, rows));
  return ok ? kPass : kFail;
}

// --- verify ------------------------------------------------------------------

struct Tally {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++trials;
    if (!ok) {
      if (failures++ == 0) first_failure = what;
    }
  }
};

template <class Decoder>
void check_round_trips(const std::vector<Word>& codebook, std::size_t n, ErrorKind kind,
                       const Membership& member, Decoder decode, Tally& tally) {
  for (const Word& c : codebook) {
    bool ok = false;
    try {
      ok = decode(c) == c;
    } catch (const Error&) {
    }
    tally.record(ok, "no-error decode of " + format_word(c));
    for (std::size_t p = 0; p + kind.length <= n; ++p) {
      const Word y = *try_apply(c, kind, p);
      std::optional<Word> fast;
      std::optional<Word> slow;
      try {
        fast = decode(y);
      } catch (const Error&) {
      }
      try {
        slow = oracle_decode(y, n, kind, member);
      } catch (const Error&) {
      }
      tally.record(fast && slow && *fast == c && *slow == c,
                   format_word(c) + " -> " + format_word(y));
    }
  }
}

int verify_c1(const Globals& g, std::size_t n, std::size_t l, std::ostream& out) {
  const Symbol q = single_q(g);
  const C1Params params = c1_best_params(n, l, q, kDefaultGuard, g.force);
  const auto codebook = c1_codebook(params.code, kDefaultGuard, g.force);
  const ErrorKind kind{ErrorOp::tandem_dup, l};
  const auto clash = first_ball_collision(codebook, kind, 1);
  Tally tally;
  check_round_trips(
      codebook, n, kind, [&](const Word& x) { return c1_member(x, params.code); },
      [&](const Word& y) { return c1_decode(y, params.code); }, tally);
  const Rational lower = c1_size_lower_bound(n, l, q);
  const bool size_ok = Rational(params.cardinality) >= lower;
  const bool ok = !clash && tally.failures == 0 && size_ok;

  Sink sink(g, out);
  if (sink.human()) {
    out << "construction 1: n = " << n << ", l = " << l << ", q = " << q << "\n";
    out << "residues   ";
    for (auto a : params.code.residues) out << ' ' << a;
    out << "\n";
    out << "size       " << params.cardinality << " (lower bound " << rational_string(lower) << " ~ "
        << format_real(to_double(lower)) << ")\n";
    out << "balls      " << (clash ? "intersect: " + format_word(clash->first) + " / " +
                                         format_word(clash->second)
                                   : std::string("pairwise disjoint"))
        << "\n";
    out << "decoding   " << tally.trials - tally.failures << "/" << tally.trials << " round trips"
        << (tally.failures ? " (first failure " + tally.first_failure + ")" : "") << "\n";
    out << (ok ? "verify: pass\n" : "verify: FAIL\n");
  }
  Json js = code_params_json(params.code);
  js["size"] = params.cardinality;
  js["pass"] = ok;
  sink.emit(codebook_text(codebook), js);
  return ok ? kPass : kFail;
}

int verify_c2(const Globals& g, std::size_t n, std::optional<std::size_t> a,
              std::optional<std::size_t> b, std::ostream& out) {
  if (single_q(g) != 2) throw Error("construction 2 is binary only");
  enforce_guard(2, n, kDefaultGuard, g.force, "construction 2 verification");
  const std::size_t modulus = 2 * n + 1;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Word>> classes;
  for (std::size_t av = 0; av < 5; ++av) {
    for (std::size_t bv = 0; bv < modulus; ++bv) {
      if ((!a || *a == av) && (!b || *b == bv)) classes[{av, bv}];
    }
  }
  for (std::uint64_t index = 0; index < checked_pow(2, n); ++index) {
    Word x = word_from_index(index, n, 2);
    const RunProfile runs = run_profile(x);
    const std::pair<std::size_t, std::size_t> key{runs.count_of_length(1) % 5,
                                                  run_checksum(x) % modulus};
    auto it = classes.find(key);
    if (it != classes.end()) it->second.push_back(std::move(x));
  }

  const ErrorKind kind{ErrorOp::pal_dup, 2};
  std::size_t passed = 0;
  std::uint64_t best = 0;
  Tally tally;
  std::string first_clash;
  Json per_code = Json::array();
  for (const auto& [key, codebook] : classes) {
    const PalindromicL2Code code{n, key.first, key.second};
    const auto clash = first_ball_collision(codebook, kind, 1);
    const std::uint64_t before = tally.failures;
    check_round_trips(
        codebook, n, kind, [&](const Word& x) { return c2_member(x, code); },
        [&](const Word& y) { return c2_decode(y, code); }, tally);
    const bool ok = !clash && tally.failures == before;
    if (clash && first_clash.empty()) {
      first_clash = format_word(clash->first) + " / " + format_word(clash->second);
    }
    passed += ok;
    best = std::max<std::uint64_t>(best, codebook.size());
    per_code.push_back({{"a", key.first}, {"b", key.second}, {"size", codebook.size()}, {"pass", ok}});
  }
  const Rational lower = c2_size_lower_bound(n);
  const BigInt ceiling = (numerator(lower) + denominator(lower) - 1) / denominator(lower);
  const bool size_ok = a || b || BigInt(best) >= ceiling;
  const bool ok = passed == classes.size() && size_ok;

  Sink sink(g, out);
  if (sink.human()) {
    out << "construction 2: n = " << n << ", " << classes.size() << " parameter pairs\n";
    out << "correcting " << passed << "/" << classes.size()
        << (first_clash.empty() ? "" : " (first clash " + first_clash + ")") << "\n";
    out << "decoding   " << tally.trials - tally.failures << "/" << tally.trials << " round trips"
        << (tally.failures ? " (first failure " + tally.first_failure + ")" : "") << "\n";
    out << "best size  " << best << " (lower bound " << rational_string(lower) << ", ceiling "
        << ceiling << ")\n";
    out << (ok ? "verify: pass\n" : "verify: FAIL\n");
  }
  std::string csv = "a,b,size,pass\n";
  for (const auto& entry : per_code) {
    csv += std::to_string(entry["a"].get<std::size_t>()) + ',' +
           std::to_string(entry["b"].get<std::size_t>()) + ',' +
           std::to_string(entry["size"].get<std::size_t>()) + ',' +
           (entry["pass"].get<bool>() ? "1" : "0") + '\n';
  }
  sink.emit(csv, {{"construction", "c2"}, {"n", n}, {"best_size", best}, {"codes", per_code},
                  {"pass", ok}});
  return ok ? kPass : kFail;
}

int verify_cpf(const Globals& g, std::size_t n, std::ostream& out) {
  const Symbol q = single_q(g);
  const auto codebook = cpf_codebook(n, q, kDefaultGuard, g.force);
  const BigInt recursive = cpf_count_recursive(n, q);
  bool count_ok = BigInt(codebook.size()) == recursive;
  std::string first_clash;
  Tally tally;
  for (std::size_t l = 2; l <= n; ++l) {
    const ErrorKind kind{ErrorOp::pal_dup, l};
    const auto clash = first_ball_collision(codebook, kind, 1);
    if (clash && first_clash.empty()) {
      first_clash = "l = " + std::to_string(l) + ": " + format_word(clash->first) + " / " +
                    format_word(clash->second);
    }
    for (const Word& c : codebook) {
      for (std::size_t p = 0; p + l <= n; ++p) {
        const Word y = palindromic_duplicate(c, l, p);
        std::optional<Word> fast;
        try {
          fast = cpf_decode(y, n);
        } catch (const Error&) {
        }
        tally.record(fast && *fast == c, format_word(c) + " -> " + format_word(y));
      }
    }
  }
  const bool ok = count_ok && first_clash.empty() && tally.failures == 0;

  Sink sink(g, out);
  if (sink.human()) {
    out << "palindrome-free code: n = " << n << ", q = " << q << "\n";
    out << "count      " << codebook.size() << " (recursion " << recursive << ")\n";
    out << "balls      "
        << (first_clash.empty() ? std::string("pairwise disjoint for l = 2..n") : first_clash) << "\n";
    out << "decoding   " << tally.trials - tally.failures << "/" << tally.trials << " round trips"
        << (tally.failures ? " (first failure " + tally.first_failure + ")" : "") << "\n";
    out << (ok ? "verify: pass\n" : "verify: FAIL\n");
  }
  Json js = code_params_json_cpf(n, q);
  js["size"] = codebook.size();
  js["pass"] = ok;
  sink.emit(codebook_text(codebook), js);
  return ok ? kPass : kFail;
}

// --- rates -------------------------------------------------------------------

int cmd_rates(const Globals& g, bool q_given, const std::string& n_text, std::ostream& out) {
  const auto q_values = q_given ? parse_alphabet_list(g.q) : std::vector<Symbol>{2, 3, 4, 5};
  const auto n_values = parse_length_list(n_text);
  const auto cells = cpf_rate_table(q_values, n_values);

  Sink sink(g, out);
  if (sink.human()) {
    out << "q\\n";
    for (const auto& n : n_values) out << '\t' << (n ? std::to_string(*n) : "inf");
    out << "\n";
    std::size_t k = 0;
    for (Symbol q : q_values) {
      out << q;
      for (std::size_t c = 0; c < n_values.size(); ++c) out << '\t' << fixed(cells[k++].rate, 3);
      out << "\n";
    }
  }
  sink.emit(rate_table_csv(cells), rate_table_json(cells));
  return kPass;
}

// --- simulate ----------------------------------------------------------------

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t draw = rng();
    if (draw < limit) return draw % bound;
  }
}

Word random_member(std::mt19937_64& rng, std::size_t n, Symbol q, const Membership& member) {
  std::vector<Symbol> buffer(n);
  for (std::uint64_t attempt = 0; attempt < (std::uint64_t{1} << 24); ++attempt) {
    for (auto& s : buffer) s = static_cast<Symbol>(uniform_below(rng, q));
    Word x = Word::unchecked(buffer, q);
    if (member(x)) return x;
  }
  throw Error("rejection sampling found no codeword");
}

int cmd_simulate(const Globals& g, const std::string& code_name, std::size_t n, std::size_t l,
                 std::optional<std::size_t> a, std::optional<std::size_t> b, std::uint64_t trials,
                 std::ostream& out) {
  const Symbol q = single_q(g);
  std::mt19937_64 rng(g.seed);
  Membership member;
  std::function<Word(const Word&)> decode;
  std::function<Word(const Word&)> corrupt;
  Json params;

  if (code_name == "c1") {
    TandemVTCode code = c1_best_params(n, l, q, kDefaultGuard, g.force).code;
    params = code_params_json(code);
    member = [code](const Word& x) { return c1_member(x, code); };
    decode = [code](const Word& y) { return c1_decode(y, code); };
    corrupt = [&rng, n, l](const Word& x) {
      return tandem_duplicate(x, l, uniform_below(rng, n - l + 1));
    };
  } else if (code_name == "c2") {
    if (q != 2) throw Error("construction 2 is binary only");
    PalindromicL2Code code = (a || b) ? PalindromicL2Code{n, a.value_or(0), b.value_or(0)}
                                      : c2_best_params(n, kDefaultGuard, g.force).code;
    code.validate();
    params = code_params_json(code);
    member = [code](const Word& x) { return c2_member(x, code); };
    decode = [code](const Word& y) { return c2_decode(y, code); };
    corrupt = [&rng, n](const Word& x) {
      return palindromic_duplicate(x, 2, uniform_below(rng, n - 1));
    };
  } else if (code_name == "cpf") {
    if (n < 2) throw Error("palindrome-free simulation needs n >= 2");
    params = code_params_json_cpf(n, q);
    member = cpf_member;
    decode = [n](const Word& y) { return cpf_decode(y, n); };
    corrupt = [&rng, n](const Word& x) {
      const std::size_t len = 2 + uniform_below(rng, n - 1);
      return palindromic_duplicate(x, len, uniform_below(rng, n - len + 1));
    };
  } else {
    throw Error("unknown code '" + code_name + "' (expected c1, c2 or cpf)");
  }

  std::uint64_t successes = 0;
  std::string counterexample;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const Word x = random_member(rng, n, q, member);
    const Word y = corrupt(x);
    bool ok = false;
    try {
      ok = decode(y) == x;
    } catch (const Error&) {
    }
    if (ok) {
      ++successes;
    } else if (counterexample.empty()) {
      counterexample = format_word(x) + " -> " + format_word(y);
    }
  }
  const bool ok = successes == trials;

  Sink sink(g, out);
  if (sink.human()) {
    out << "simulate " << code_name << ": n = " << n << ", q = " << q << ", seed = " << g.seed << "\n";
    out << successes << "/" << trials << " decoded"
        << (counterexample.empty() ? "" : " (counterexample " + counterexample + ")") << "\n";
  }
  const std::string csv = "code,n,q,seed,trials,successes\n" + code_name + ',' + std::to_string(n) +
                          ',' + std::to_string(q) + ',' + std::to_string(g.seed) + ',' +
                          std::to_string(trials) + ',' + std::to_string(successes) + '\n';
  sink.emit(csv, {{"code", params},
                  {"seed", g.seed},
                  {"trials", trials},
                  {"successes", successes},
                  {"counterexample", counterexample.empty() ? Json(nullptr) : Json(counterexample)}});
  return ok ? kPass : kFail;
}

}  // namespace

std::vector<std::size_t> parse_size_list(std::string_view text) {
  std::vector<std::size_t> out;
  for (auto part : split(text, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_size(part));
      continue;
    }
    const std::size_t lo = parse_size(part.substr(0, dots));
    const std::size_t hi = parse_size(part.substr(dots + 2));
    if (lo > hi) throw Error("empty range '" + std::string(part) + "'");
    for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::vector<std::optional<std::size_t>> parse_length_list(std::string_view text) {
  std::vector<std::optional<std::size_t>> out;
  for (auto part : split(text, ',')) {
    if (part == "inf") {
      out.emplace_back(std::nullopt);
    } else {
      for (std::size_t v : parse_size_list(part)) out.emplace_back(v);
    }
  }
  return out;
}

std::vector<Symbol> parse_alphabet_list(std::string_view text) {
  std::vector<Symbol> out;
  for (std::size_t q : parse_size_list(text)) {
    if (q < 2 || q > std::numeric_limits<Symbol>::max()) throw Error("alphabet size must be >= 2");
    out.push_back(static_cast<Symbol>(q));
  }
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Duplication-correcting codes: spheres, bounds and constructions", "dupcodes"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--q", g.q, "alphabet size (a list for rates)");
  app.add_option("--out", g.out_path, "write machine output to this file");
  app.add_option("--format", g.format, "machine output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--force", g.force, "lift the q^n <= 2^20 guard");
  app.add_option("--seed", g.seed, "random seed");

  std::string word_text, kind_text;
  std::size_t l = 1, t = 1;
  auto* sphere = app.add_subcommand("sphere", "enumerate an error sphere next to its formula");
  sphere->add_option("--word", word_text, "center word")->required();
  sphere->add_option("--kind", kind_text, "tandem-dup | tandem-del | pal-dup | pal-del")->required();
  sphere->add_option("--l", l, "error length");
  sphere->add_option("--t", t, "number of errors");

  std::string n_text;
  auto* bound = app.add_subcommand("bound", "tandem duplication bounds and redundancy table");
  bound->add_option("--n", n_text, "length, list or range a..b")->required();
  bound->add_option("--l", l, "duplication length");

  std::string code_name;
  std::size_t n = 0;
  std::optional<std::size_t> a, b;
  auto* verify = app.add_subcommand("verify", "exhaustive correction and decoder check");
  verify->add_option("--code", code_name, "c1 | c2 | cpf")->required();
  verify->add_option("--n", n, "code length")->required();
  verify->add_option("--l", l, "duplication length (c1)");
  verify->add_option("--a", a, "c2 residue mod 5 (default: all)");
  verify->add_option("--b", b, "c2 residue mod 2n+1 (default: all)");

  std::string rate_n = "2,4,8,16,32,64,128,256,inf";
  auto* rates = app.add_subcommand("rates", "rates of the palindrome-free code");
  rates->add_option("--n", rate_n, "lengths, 'inf' for the limit");

  std::uint64_t trials = 1000;
  auto* simulate = app.add_subcommand("simulate", "random single errors through a decoder");
  simulate->add_option("--code", code_name, "c1 | c2 | cpf")->required();
  simulate->add_option("--n", n, "code length")->required();
  simulate->add_option("--l", l, "duplication length (c1)");
  simulate->add_option("--a", a, "c2 residue mod 5");
  simulate->add_option("--b", b, "c2 residue mod 2n+1");
  simulate->add_option("--trials", trials, "number of trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*sphere) return cmd_sphere(g, word_text, kind_text, l, t, out);
    if (*bound) return cmd_bound(g, n_text, l, out);
    if (*verify) {
      if (code_name == "c1") return verify_c1(g, n, l, out);
      if (code_name == "c2") return verify_c2(g, n, a, b, out);
      if (code_name == "cpf") return verify_cpf(g, n, out);
      throw Error("unknown code '" + code_name + "' (expected c1, c2 or cpf)");
    }
    if (*rates) return cmd_rates(g, app.count("--q") > 0, rate_n, out);
    if (*simulate) return cmd_simulate(g, code_name, n, l, a, b, trials, out);
  } catch (const GuardExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"dupcodes"};
  for (const auto& s : args) argv.push_back(s.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dupcodes
