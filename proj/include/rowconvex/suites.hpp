#ifndef ROWCONVEX_SUITES_HPP
#define ROWCONVEX_SUITES_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rowconvex/rowconvex.hpp"

namespace rowconvex::suites {

struct Config {
  int max_cells = 6;
  std::vector<Alphabet> alphabets; // empty: every sign pattern of size 1..3
  std::uint64_t seed = 0;
  // 0 runs every case; otherwise a seeded sample of this many tableaux
  // (or pairs) per shape and alphabet
  std::size_t sample = 0;
  // degree-2 checks run over every pair of straight tableaux up to this
  // many cells and over pair_sample seeded pairs above it
  int exhaustive_pair_cells = 4;
  std::size_t pair_sample = 8;
};

struct Result {
  std::string name;
  bool passed = true;
  long cases = 0;
  long failures = 0;
  std::vector<std::string> messages; // first few failures
  double seconds = 0;

  void fail(const std::string& msg)
  {
    passed = false;
    ++failures;
    if (messages.size() < 10) messages.push_back(msg);
  }
};

// Every alphabet with 1..n letters and every sign pattern.
inline std::vector<Alphabet> sign_pattern_alphabets(int n)
{
  std::vector<Alphabet> out;
  const char* names = "abcdefgh";
  for (int k = 1; k <= n; ++k)
    for (int mask = 0; mask < (1 << k); ++mask) {
      Alphabet a;
      for (int i = 0; i < k; ++i) a.add(std::string(1, names[i]), (mask >> i) & 1 ? Sign::minus : Sign::plus);
      out.push_back(a);
    }
  return out;
}

// The budget, lowered by ROWCONVEX_MAX_CELLS when that is set.
inline int effective_max_cells(int requested)
{
  if (const char* env = std::getenv("ROWCONVEX_MAX_CELLS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 0) return std::min<long>(requested, cap);
  }
  return requested;
}

namespace detail {

inline std::vector<Alphabet> alphabets_of(const Config& cfg)
{
  return cfg.alphabets.empty() ? sign_pattern_alphabets(3) : cfg.alphabets;
}

inline bool all_minus(const Alphabet& a)
{
  for (const auto& l : a.letters())
    if (l.is_plus()) return false;
  return true;
}

template <class T>
std::vector<T> sampled(std::vector<T> v, const Config& cfg, std::mt19937_64& rng)
{
  if (cfg.sample == 0 || v.size() <= cfg.sample) return v;
  std::shuffle(v.begin(), v.end(), rng);
  v.resize(cfg.sample);
  return v;
}

inline std::string where(const RowConvexShape& d, const Alphabet& a) { return d.describe() + " over " + a.spec(); }

// Run body over shapes x alphabets, timing the whole suite and turning
// library errors into failures.
inline Result run(const std::string& name, const Config& cfg,
                  const std::function<void(const RowConvexShape&, const Alphabet&, Result&, std::mt19937_64&)>& body,
                  bool skew_only = false)
{
  Result res;
  res.name = name;
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(cfg.seed);
  const auto shapes = enumerate_shapes(effective_max_cells(cfg.max_cells));
  for (const auto& a : alphabets_of(cfg)) {
    rowconvex::detail::straighten_memo(SyzygyMethod::polarization).clear();
    for (const auto& d : shapes) {
      if (skew_only && !d.is_skew()) continue;
      try {
        body(d, a, res, rng);
      } catch (const Error& e) {
        res.fail(where(d, a) + ": " + error_code_name(e.code()) + " " + e.message() + " " + e.witness());
      }
    }
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

// weakly increasing words of length n over the letters
inline std::vector<Word> weak_words(const Word& letters, int n)
{
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = from; k < letters.size(); ++k) {
      cur.push_back(letters[k]);
      self(self, k);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

} // namespace detail

// Initial monomials of straight tableaux are distinct with +-1 pivots.
inline Result echelon(const Config& cfg)
{
  return detail::run("echelon", cfg, [](const RowConvexShape& d, const Alphabet& a, Result& res, std::mt19937_64&) {
    ++res.cases;
    echelon_certificate(d, a);
  });
}

// Straightening of every row-standard tableau: exact expansion identity,
// straight output, no decrease of the modified column word, and no
// recursion inside row_straighten over all-minus alphabets.
inline Result straightening_oracle(const Config& cfg)
{
  return detail::run("straightening-oracle", cfg,
                     [&cfg](const RowConvexShape& d, const Alphabet& a, Result& res, std::mt19937_64& rng) {
                       StraightenStats stats;
                       StraightenOptions opt;
                       opt.verify_result = true;
                       for (const auto& t : detail::sampled(enumerate_row_standard(d, a), cfg, rng)) {
                         ++res.cases;
                         FormalTableauSum s = straighten_tableau(t, opt, &stats);
                         const Word wt = column_word(t, ColumnWord::modified);
                         for (const auto& [u, c] : s.terms()) {
                           if (!is_straight(u).straight) res.fail("non-straight output for " + describe(t, &a));
                           if (word_less(column_word(u, ColumnWord::modified), wt))
                             res.fail("column word decreased for " + describe(t, &a));
                         }
                       }
                       if (detail::all_minus(a) && stats.max_depth > 1)
                         res.fail("row_straighten recursed (depth " + std::to_string(stats.max_depth) + ") on " +
                                  detail::where(d, a));
                     });
}

// Skew shapes: straight iff standard, and the fake-letter straightening
// lands on standard tableaux with the right expansion.
inline Result skew_classical(const Config& cfg)
{
  return detail::run(
      "skew-classical", cfg,
      [&cfg](const RowConvexShape& d, const Alphabet& a, Result& res, std::mt19937_64& rng) {
        StraightenOptions opt;
        opt.verify_result = true;
        for (const auto& t : detail::sampled(enumerate_row_standard(d, a), cfg, rng)) {
          ++res.cases;
          if (is_straight(t).straight != is_standard(t)) res.fail("straight and standard disagree on " + describe(t, &a));
          const FormalTableauSum s = straighten_tableau(t, opt);
          for (const auto& [u, c] : s.terms())
            if (!is_standard(u)) res.fail("non-standard output for " + describe(t, &a));
        }
      },
      true);
}

// Flagged and doubly flagged bases: flags kill non-flagged row-standard
// tableaux, and flagged straight images have full rank.
inline Result flagged(const Config& cfg)
{
  return detail::run("flagged", cfg, [&cfg](const RowConvexShape& d, const Alphabet& a, Result& res, std::mt19937_64& rng) {
    const Word letters = a.letters();
    const int cols = d.max_column();
    auto words = detail::weak_words(letters, cols);
    std::vector<Flags> flags;
    for (const auto& g : words)
      for (const auto& f : words) {
        bool ok = true;
        for (int c = 0; c < cols && ok; ++c) ok = g[c].rank <= f[c].rank;
        if (ok) flags.push_back({g, f});
      }
    flags = detail::sampled(flags, cfg, rng);
    auto row_standard = enumerate_row_standard(d, a);
    std::vector<Polynomial> images;
    for (const auto& t : row_standard) images.push_back(tableau_to_polynomial(t));
    for (const auto& fl : flags) {
      ++res.cases;
      for (std::size_t k = 0; k < row_standard.size(); ++k)
        if (!is_flagged(row_standard[k], fl) && !apply_flag(images[k], fl).is_zero())
          res.fail("flag does not kill " + describe(row_standard[k], &a));
      RankAccumulator acc;
      std::size_t count = 0;
      for (const auto& t : enumerate_straight(d, a, fl)) {
        ++count;
        acc.add(apply_flag(tableau_to_polynomial(t), fl));
      }
      if (acc.rank() != count)
        res.fail("flagged rank " + std::to_string(acc.rank()) + " != " + std::to_string(count) + " on " +
                 detail::where(d, a));
    }
  });
}

// Degree-2 relations: a lead x*y has a relation exactly when x o y is not
// straight; every relation vanishes under T -> [T]; products of two
// straight tableaux subduce to zero. On exhaustive shapes the number of
// standard degree-2 monomials also matches the rank of the degree-2 span.
inline Result porism(const Config& cfg)
{
  return detail::run("porism", cfg, [&cfg](const RowConvexShape& d, const Alphabet& a, Result& res, std::mt19937_64& rng) {
    auto straight = enumerate_straight(d, a);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < straight.size(); ++x)
      for (std::size_t y = 0; y < straight.size(); ++y) pairs.emplace_back(x, y);
    const bool exhaustive = d.num_cells() <= cfg.exhaustive_pair_cells;
    if (!exhaustive && pairs.size() > cfg.pair_sample) {
      std::shuffle(pairs.begin(), pairs.end(), rng);
      pairs.resize(cfg.pair_sample);
    }
    if (cfg.sample && pairs.size() > cfg.sample) pairs.resize(cfg.sample);
    std::vector<Polynomial> images;
    for (const auto& t : straight) images.push_back(tableau_to_polynomial(t));
    RelationOptions opt;
    opt.verify = true;
    for (const auto& [i, j] : pairs) {
      ++res.cases;
      const Tableau& x = straight[i];
      const Tableau& y = straight[j];
      const bool straight_pair = is_straight(interleave(x, y)).straight;
      const auto rels = relations_for_pair(x, y, opt);
      if (straight_pair != rels.empty())
        res.fail("relation presence disagrees with straightness of " + describe(x, &a) + " o " + describe(y, &a));
      auto sub = sagbi_subduct(images[i] * images[j], d, a);
      if (!sub.member) res.fail("subduction left a remainder for " + describe(x, &a) + " * " + describe(y, &a));
    }
    if (exhaustive) {
      RankAccumulator acc;
      std::size_t standard = 0;
      for (std::size_t x = 0; x < straight.size(); ++x)
        for (std::size_t y = x; y < straight.size(); ++y) {
          acc.add(images[x] * images[y]);
          auto m = TableauMonomial::make({straight[x], straight[y]});
          if (is_straight(interleave(m.factors[0], m.factors[1])).straight) ++standard;
        }
      if (acc.rank() != standard)
        res.fail("standard monomials " + std::to_string(standard) + " != degree-2 rank " + std::to_string(acc.rank()) +
                 " on " + detail::where(d, a));
    }
  });
}

// Character branching with the t_a^{|E|} factor, strip reconstruction
// from column multisets, and the restriction of straight tableaux.
inline Result branching(const Config& cfg)
{
  return detail::run("branching", cfg, [](const RowConvexShape& d, const Alphabet& a, Result& res, std::mt19937_64&) {
    ++res.cases;
    const Letter removed = a.letters().front();
    auto rep = branching_check(d, a, removed);
    if (!rep.holds_with_factor) res.fail("branching identity fails on " + detail::where(d, a));
    for (const auto& s : rep.strips) {
      auto back = strip_from_columns(d, s.strip.kind, s.strip.columns);
      if (!back || !(*back == s.strip)) res.fail("strip not recovered from its columns on " + detail::where(d, a));
      if (s.restriction_failures) res.fail("restriction to D/E not straight on " + detail::where(d, a));
    }
  });
}

// Filtration by strips: quotient ranks and telescoping.
inline Result filtration(const Config& cfg)
{
  return detail::run("filtration", cfg, [](const RowConvexShape& d, const Alphabet& a, Result& res, std::mt19937_64&) {
    ++res.cases;
    auto rep = filtration_ranks(d, a, a.letters().front());
    if (!rep.quotients_match) res.fail("filtration quotient rank mismatch on " + detail::where(d, a));
    if (!rep.telescopes) res.fail("filtration does not telescope on " + detail::where(d, a));
  });
}

inline const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names{"echelon", "straightening-oracle", "skew-classical", "flagged",
                                              "porism",  "branching",            "filtration"};
  return names;
}

inline Result run_suite(const std::string& name, const Config& cfg)
{
  if (name == "echelon") return echelon(cfg);
  if (name == "straightening-oracle") return straightening_oracle(cfg);
  if (name == "skew-classical") return skew_classical(cfg);
  if (name == "flagged") return flagged(cfg);
  if (name == "porism") return porism(cfg);
  if (name == "branching") return branching(cfg);
  if (name == "filtration") return filtration(cfg);
  throw Error(ErrorCode::ParseError, "unknown suite", name);
}

} // namespace rowconvex::suites

#endif // ROWCONVEX_SUITES_HPP
