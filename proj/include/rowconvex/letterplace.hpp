#ifndef ROWCONVEX_LETTERPLACE_HPP
#define ROWCONVEX_LETTERPLACE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rowconvex/alphabet.hpp"
#include "rowconvex/rational.hpp"
#include "rowconvex/tableau.hpp"

namespace rowconvex {

// The letterplace variable (l|p), of parity |l| + |p|.
struct Var {
  Letter letter;
  Letter place;

  int parity() const { return (letter.parity() + place.parity()) & 1; }
  bool odd() const { return parity() == 1; }

  bool operator==(const Var&) const = default;
};

// Canonical storage order: places ascending; inside a plus place letters
// ascending, inside a minus place letters descending.
inline bool canonical_less(const Var& a, const Var& b)
{
  if (a.place.rank != b.place.rank) return a.place.rank < b.place.rank;
  if (a.place.sign != b.place.sign) return a.place.sign < b.place.sign;
  if (a.letter.rank != b.letter.rank)
    return a.place.is_plus() ? a.letter.rank < b.letter.rank : a.letter.rank > b.letter.rank;
  return a.letter.sign < b.letter.sign;
}

struct Factor {
  Var var;
  int exp = 1;

  bool operator==(const Factor&) const = default;
};

// A sorted monomial. Odd variables carry exponent 1.
struct Monomial {
  std::vector<Factor> factors;

  int degree() const
  {
    int d = 0;
    for (const auto& f : factors) d += f.exp;
    return d;
  }

  int parity() const
  {
    int p = 0;
    for (const auto& f : factors) p += f.var.parity() * f.exp;
    return p & 1;
  }

  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial& o) const
  {
    std::size_t n = std::min(factors.size(), o.factors.size());
    for (std::size_t k = 0; k < n; ++k) {
      const Factor& x = factors[k];
      const Factor& y = o.factors[k];
      if (!(x.var == y.var)) return canonical_less(x.var, y.var);
      if (x.exp != y.exp) return x.exp < y.exp;
    }
    return factors.size() < o.factors.size();
  }
};

// c(M)!: product of factorials of the exponents of variables (l|p) with
// both l and p plus. Only those carry divided powers; (minus|minus)
// variables are even but live in an ordinary symmetric algebra.
inline Integer divided_power_factor(const Monomial& m)
{
  Integer r = 1;
  for (const auto& f : m.factors)
    if (f.var.letter.is_plus() && f.var.place.is_plus() && f.exp > 1) r *= factorial(f.exp);
  return r;
}

struct NormalizedMonomial {
  int sign = 0; // 0 means the product vanishes
  Monomial monomial;
};

// Bubble the factors into canonical order; every swap of two odd variables
// flips the sign and a repeated odd variable kills the product.
inline NormalizedMonomial normalize_monomial(std::vector<Var> vars)
{
  int sign = 1;
  for (std::size_t i = 1; i < vars.size(); ++i)
    for (std::size_t k = i; k > 0 && canonical_less(vars[k], vars[k - 1]); --k) {
      if (vars[k].odd() && vars[k - 1].odd()) sign = -sign;
      std::swap(vars[k], vars[k - 1]);
    }
  Monomial m;
  for (const auto& v : vars) {
    if (!m.factors.empty() && m.factors.back().var == v) {
      if (v.odd()) return {0, {}};
      ++m.factors.back().exp;
    } else {
      m.factors.push_back({v, 1});
    }
  }
  return {sign, std::move(m)};
}

// Product of two sorted monomials by merging; each odd factor of b moves
// past the odd factors of a that are larger than it.
inline NormalizedMonomial multiply_monomials(const Monomial& a, const Monomial& b)
{
  Monomial out;
  out.factors.reserve(a.factors.size() + b.factors.size());
  int swaps = 0;
  int odd_a_remaining = 0;
  for (const auto& f : a.factors)
    if (f.var.odd()) ++odd_a_remaining;
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    if (j == b.factors.size() || (i < a.factors.size() && canonical_less(a.factors[i].var, b.factors[j].var))) {
      if (a.factors[i].var.odd()) --odd_a_remaining;
      out.factors.push_back(a.factors[i++]);
    } else if (i == a.factors.size() || canonical_less(b.factors[j].var, a.factors[i].var)) {
      if (b.factors[j].var.odd()) swaps += odd_a_remaining;
      out.factors.push_back(b.factors[j++]);
    } else {
      if (a.factors[i].var.odd()) return {0, {}};
      out.factors.push_back({a.factors[i].var, a.factors[i].exp + b.factors[j].exp});
      ++i;
      ++j;
    }
  }
  return {(swaps & 1) ? -1 : 1, std::move(out)};
}

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;

  static Polynomial one()
  {
    Polynomial p;
    p.terms_[Monomial{}] = 1;
    return p;
  }

  static Polynomial variable(const Var& v)
  {
    Polynomial p;
    p.terms_[Monomial{{{v, 1}}}] = 1;
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const
  {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c)
  {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // accumulate c * q
  void add_scaled(const Polynomial& q, const Rational& c)
  {
    if (c == 0) return;
    for (const auto& [m, x] : q.terms_) add_term(m, c * x);
  }

  Polynomial& operator+=(const Polynomial& q)
  {
    for (const auto& [m, x] : q.terms_) add_term(m, x);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& q)
  {
    for (const auto& [m, x] : q.terms_) add_term(m, -x);
    return *this;
  }

  Polynomial& operator*=(const Rational& c)
  {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [m, x] : terms_) x *= c;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
  {
    Polynomial r;
    for (const auto& [m, x] : a.terms_)
      for (const auto& [n, y] : b.terms_) {
        auto prod = multiply_monomials(m, n);
        if (prod.sign == 0) continue;
        Rational c = x * y;
        if (prod.sign < 0) c = -c;
        r.add_term(prod.monomial, c);
      }
    return r;
  }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

inline Polynomial multiply(const Polynomial& p, const Polynomial& q) { return p * q; }

// c(w)!: product of factorials of the multiplicities of plus letters
inline Integer word_factor(const Word& w)
{
  std::map<Letter, int> counts;
  for (const auto& l : w)
    if (l.is_plus()) ++counts[l];
  Integer r = 1;
  for (const auto& [l, n] : counts)
    if (n > 1) r *= factorial(n);
  return r;
}

inline Polynomial biproduct(const Word& w, const Word& v)
{
  if (w.size() != v.size()) throw Error(ErrorCode::LengthMismatch, "biproduct words differ in length");
  const int k = static_cast<int>(w.size());
  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> inverse(k);
  Polynomial out;
  std::vector<Var> vars(k);
  do {
    for (int pos = 0; pos < k; ++pos) inverse[sigma[pos]] = pos;
    int n = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (inverse[i] > inverse[j] && w[i].is_minus() && w[j].is_minus()) ++n;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < i; ++j)
        if (w[sigma[i]].is_minus() && v[j].is_minus()) ++n;
    for (int t = 0; t < k; ++t) vars[t] = Var{w[sigma[t]], v[t]};
    auto norm = normalize_monomial(vars);
    if (norm.sign == 0) continue;
    out.add_term(norm.monomial, Rational(((n & 1) ? -1 : 1) * norm.sign));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

namespace detail {
inline std::map<std::pair<Word, Word>, Polynomial>& tab_cache()
{
  thread_local std::map<std::pair<Word, Word>, Polynomial> cache;
  return cache;
}
} // namespace detail

// (w|v) normalized so diagonal divided-powers coefficients are +-1
inline Polynomial tab(const Word& w, const Word& v)
{
  if (w.size() != v.size()) throw Error(ErrorCode::LengthMismatch, "tab words differ in length");
  auto& cache = detail::tab_cache();
  auto key = std::make_pair(w, v);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  int e = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (w[i].is_minus() && v[j].is_plus()) ++e;
  Rational scale(Integer((e & 1) ? -1 : 1), word_factor(w) * word_factor(v));
  scale.canonicalize();
  Polynomial p = biproduct(w, v) * scale;
  if (cache.size() > 200000) cache.clear();
  cache.emplace(std::move(key), p);
  return p;
}

// Product of Tab over rows given as (letters, places) pairs
inline Polynomial bitableau(const std::vector<std::pair<Word, Word>>& rows)
{
  Polynomial p = Polynomial::one();
  for (const auto& [w, v] : rows) {
    p = p * tab(w, v);
    if (p.is_zero()) break;
  }
  return p;
}

// [T] with places given by the column indices as minus letters
inline Polynomial tableau_to_polynomial(const Tableau& t)
{
  Polynomial p = Polynomial::one();
  for (int i = 0; i < t.shape.num_rows(); ++i) {
    Word places;
    for (int c = t.shape.row(i).start; c <= t.shape.row(i).end; ++c) places.push_back(minus_letter(c));
    p = p * tab(t.rows[i], places);
    if (p.is_zero()) break;
  }
  return p;
}

// Same, with an explicit place alphabet whose symbols are column numbers.
inline Polynomial tableau_to_polynomial(const Tableau& t, const Alphabet& places)
{
  Polynomial p = Polynomial::one();
  for (int i = 0; i < t.shape.num_rows(); ++i) {
    Word v;
    for (int c = t.shape.row(i).start; c <= t.shape.row(i).end; ++c) {
      const auto* e = places.find(std::to_string(c));
      if (!e || !e->letter.is_minus())
        throw Error(ErrorCode::MissingPlace, "place alphabet lacks a minus letter for a column",
                    std::to_string(c) + "-");
      v.push_back(e->letter);
    }
    p = p * tab(t.rows[i], v);
  }
  return p;
}

inline bool integral_divided_powers(const Polynomial& p)
{
  for (const auto& [m, c] : p.terms()) {
    Rational x = c * Rational(divided_power_factor(m));
    if (!is_integer(x)) return false;
  }
  return true;
}

// A diagonal term order is the lexicographic order induced by a total
// order on variables: compare by the largest variable whose exponents
// differ; the monomial with the higher power is larger.
class DiagonalOrder {
 public:
  using VarGreater = std::function<bool(const Var&, const Var&)>;

  // (i|j) > (i'|j') iff j < j', or j = j' and i > i'
  static DiagonalOrder place_major()
  {
    return DiagonalOrder("place-major", [](const Var& a, const Var& b) {
      if (a.place.rank != b.place.rank) return a.place.rank < b.place.rank;
      if (a.place.sign != b.place.sign) return a.place.sign < b.place.sign;
      if (a.letter.rank != b.letter.rank) return a.letter.rank > b.letter.rank;
      return a.letter.sign > b.letter.sign;
    });
  }

  // (i|j) > (i'|j') iff i > i', or i = i' and j < j'
  static DiagonalOrder letter_major()
  {
    return DiagonalOrder("letter-major", [](const Var& a, const Var& b) {
      if (a.letter.rank != b.letter.rank) return a.letter.rank > b.letter.rank;
      if (a.letter.sign != b.letter.sign) return a.letter.sign > b.letter.sign;
      if (a.place.rank != b.place.rank) return a.place.rank < b.place.rank;
      return a.place.sign < b.place.sign;
    });
  }

  DiagonalOrder(std::string name, VarGreater greater) : name_(std::move(name)), greater_(std::move(greater)) {}

  const std::string& name() const { return name_; }
  bool var_greater(const Var& a, const Var& b) const { return greater_(a, b); }

  // -1, 0, 1 for less, equal, greater
  int compare(const Monomial& m, const Monomial& n) const
  {
    std::vector<std::pair<Var, std::pair<int, int>>> all;
    for (const auto& f : m.factors) all.push_back({f.var, {f.exp, 0}});
    for (const auto& f : n.factors) {
      auto it = std::find_if(all.begin(), all.end(), [&](const auto& e) { return e.first == f.var; });
      if (it == all.end()) all.push_back({f.var, {0, f.exp}});
      else it->second.second = f.exp;
    }
    std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) { return greater_(a.first, b.first); });
    for (const auto& [v, e] : all)
      if (e.first != e.second) return e.first > e.second ? 1 : -1;
    return 0;
  }

 private:
  std::string name_;
  VarGreater greater_;
};

enum class Ordering { less, equal, greater };

inline Ordering compare_diag(const Monomial& m, const Monomial& n,
                             const DiagonalOrder& order = DiagonalOrder::place_major())
{
  int c = order.compare(m, n);
  return c < 0 ? Ordering::less : (c > 0 ? Ordering::greater : Ordering::equal);
}

struct InitialTerm {
  Rational coefficient; // coefficient of the divided-powers monomial M / c(M)!
  Monomial monomial;
};

inline InitialTerm initial_monomial(const Polynomial& p, const DiagonalOrder& order = DiagonalOrder::place_major())
{
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "initial monomial of the zero polynomial");
  const Monomial* best = nullptr;
  const Rational* coeff = nullptr;
  for (const auto& [m, c] : p.terms())
    if (!best || order.compare(m, *best) < 0) {
      best = &m;
      coeff = &c;
    }
  return {*coeff * Rational(divided_power_factor(*best)), *best};
}

// Letters of M in descending variable order: places ascending, letters
// descending inside a place.
inline Word psi(const Monomial& m)
{
  std::vector<Factor> fs = m.factors;
  std::stable_sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) {
    if (a.var.place.rank != b.var.place.rank) return a.var.place.rank < b.var.place.rank;
    if (a.var.place.sign != b.var.place.sign) return a.var.place.sign < b.var.place.sign;
    return a.var.letter.rank > b.var.letter.rank;
  });
  Word w;
  for (const auto& f : fs)
    for (int e = 0; e < f.exp; ++e) w.push_back(f.var.letter);
  return w;
}

// The letter polarization D_{a,b}: the superderivation of parity |a|+|b|
// sending (b|p) to (a|p) and killing every other variable.
inline Polynomial polarize(const Letter& a, const Letter& b, const Polynomial& p)
{
  const int d = (a.parity() + b.parity()) & 1;
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Var> vars;
    for (const auto& f : m.factors)
      for (int e = 0; e < f.exp; ++e) vars.push_back(f.var);
    int prefix = 0;
    for (std::size_t t = 0; t < vars.size(); ++t) {
      if (vars[t].letter == b) {
        std::vector<Var> changed = vars;
        changed[t].letter = a;
        auto norm = normalize_monomial(changed);
        if (norm.sign != 0) {
          int s = norm.sign * (((d * prefix) & 1) ? -1 : 1);
          out.add_term(norm.monomial, s > 0 ? c : Rational(-c));
        }
      }
      prefix += vars[t].parity();
    }
  }
  return out;
}

} // namespace rowconvex

#endif // ROWCONVEX_LETTERPLACE_HPP
