#ifndef ROWCONVEX_BASIS_HPP
#define ROWCONVEX_BASIS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rowconvex/letterplace.hpp"
#include "rowconvex/straightening.hpp"
#include "rowconvex/tableau.hpp"

namespace rowconvex {

// Rank of a family of polynomials by fraction-free elimination: each row
// is scaled to integer coefficients, reduced by cross-multiplication and
// divided by its content.
class RankAccumulator {
 public:
  // returns true when p is independent of the rows seen so far
  bool add(const Polynomial& p)
  {
    std::map<Monomial, Integer> row = integral_row(p);
    while (!row.empty()) {
      auto lead = row.begin();
      auto piv = pivots_.find(lead->first);
      if (piv == pivots_.end()) {
        pivots_.emplace(lead->first, std::move(row));
        return true;
      }
      const Integer a = piv->second.begin()->second;
      const Integer b = lead->second;
      std::map<Monomial, Integer> next;
      for (const auto& [m, c] : row) next[m] = c * a;
      for (const auto& [m, c] : piv->second) {
        Integer& x = next[m];
        x -= c * b;
      }
      std::map<Monomial, Integer> cleaned;
      Integer g = 0;
      for (auto& [m, c] : next)
        if (c != 0) {
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
          cleaned.emplace(m, c);
        }
      if (g > 1)
        for (auto& [m, c] : cleaned) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      row = std::move(cleaned);
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  static std::map<Monomial, Integer> integral_row(const Polynomial& p)
  {
    Integer l = 1;
    for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::map<Monomial, Integer> row;
    for (const auto& [m, c] : p.terms()) {
      Rational x = c * Rational(l);
      row.emplace(m, x.get_num());
    }
    return row;
  }

  std::map<Monomial, std::map<Monomial, Integer>> pivots_;
};

inline std::size_t rank(const std::vector<Polynomial>& ps)
{
  RankAccumulator acc;
  for (const auto& p : ps) acc.add(p);
  return acc.rank();
}

struct PivotEntry {
  Tableau tableau;
  Monomial monomial;
  Rational coefficient;
};

// Initial monomials of the straight basis: pairwise distinct, coefficient
// +-1, and psi of each equals the modified column word. Sorted by w_T.
inline std::vector<PivotEntry> echelon_certificate(const RowConvexShape& d, const Alphabet& a,
                                                   const DiagonalOrder& order = DiagonalOrder::place_major())
{
  std::vector<PivotEntry> table;
  std::map<Monomial, Tableau> seen;
  for (const auto& t : enumerate_straight(d, a)) {
    Polynomial p = tableau_to_polynomial(t);
    if (p.is_zero()) throw Error(ErrorCode::CertificateFailure, "[T] vanishes for a straight tableau", describe(t, &a));
    auto init = initial_monomial(p, order);
    if (init.coefficient != 1 && init.coefficient != -1)
      throw Error(ErrorCode::CertificateFailure, "pivot coefficient is " + init.coefficient.get_str(), describe(t, &a));
    if (psi(init.monomial) != column_word(t, ColumnWord::modified))
      throw Error(ErrorCode::CertificateFailure, "psi of the pivot differs from the modified column word",
                  describe(t, &a));
    auto [it, inserted] = seen.emplace(init.monomial, t);
    if (!inserted)
      throw Error(ErrorCode::CertificateFailure, "two straight tableaux share a pivot",
                  describe(it->second, &a) + " / " + describe(t, &a));
    table.push_back({t, init.monomial, init.coefficient});
  }
  return table;
}

// Kill every monomial containing (l|p) with l > upper_p or l < lower_p.
// Places are columns; bound p-1 applies to column p.
inline Polynomial apply_flag(const Polynomial& p, const std::optional<Word>& lower, const std::optional<Word>& upper)
{
  auto check = [](const Word& f) {
    for (std::size_t j = 1; j < f.size(); ++j)
      if (f[j].rank < f[j - 1].rank)
        throw Error(ErrorCode::BadFlag, "flag is not weakly increasing", "column " + std::to_string(j + 1));
  };
  if (lower) check(*lower);
  if (upper) check(*upper);
  if (lower && upper) {
    for (std::size_t j = 0; j < std::min(lower->size(), upper->size()); ++j)
      if ((*lower)[j].rank > (*upper)[j].rank)
        throw Error(ErrorCode::BadFlag, "lower flag exceeds upper flag", "column " + std::to_string(j + 1));
  }
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    bool keep = true;
    for (const auto& f : m.factors) {
      const int col = f.var.place.rank;
      const int r = f.var.letter.rank;
      for (const auto* flag : {&lower, &upper}) {
        if (!*flag) continue;
        if (col < 1 || col > static_cast<int>((*flag)->size()))
          throw Error(ErrorCode::BadFlag, "flag does not cover a place", "column " + std::to_string(col));
      }
      if (upper && r > (*upper)[col - 1].rank) keep = false;
      if (lower && r < (*lower)[col - 1].rank) keep = false;
      if (!keep) break;
    }
    if (keep) out.add_term(m, c);
  }
  return out;
}

inline Polynomial apply_flag(const Polynomial& p, const Flags& fl) { return apply_flag(p, fl.lower, fl.upper); }

using Coordinates = std::map<Tableau, Integer>;

inline Coordinates coordinates(const FormalTableauSum& s)
{
  FormalTableauSum acc(s.shape());
  StraightenOptions opt;
  opt.verify_result = false;
  for (const auto& [t, c] : s.terms()) acc.add_scaled(straighten_tableau(t, opt), c);
  return Coordinates(acc.terms().begin(), acc.terms().end());
}

// Eliminate against the pivot table in ascending diagonal order.
inline Coordinates coordinates(const Polynomial& p, const RowConvexShape& d, const Alphabet& a)
{
  auto table = echelon_certificate(d, a);
  std::map<Monomial, const PivotEntry*> by_monomial;
  for (const auto& e : table) by_monomial.emplace(e.monomial, &e);
  std::map<Tableau, Rational> coords;
  Polynomial rest = p;
  while (!rest.is_zero()) {
    auto init = initial_monomial(rest);
    auto it = by_monomial.find(init.monomial);
    if (it == by_monomial.end())
      throw Error(ErrorCode::NotInModule, "initial monomial matches no straight tableau",
                  std::to_string(rest.size()) + " monomials left");
    Rational scale = init.coefficient / it->second->coefficient;
    coords[it->second->tableau] += scale;
    rest.add_scaled(tableau_to_polynomial(it->second->tableau), -scale);
  }
  Coordinates out;
  for (const auto& [t, c] : coords) {
    if (c == 0) continue;
    if (!is_integer(c)) throw Error(ErrorCode::NotInModule, "non-integral coordinate " + c.get_str(), describe(t, &a));
    out.emplace(t, c.get_num());
  }
  return out;
}

// Exponent vectors over a fixed list of variables (one per letter).
class CharacterPolynomial {
 public:
  CharacterPolynomial() = default;
  explicit CharacterPolynomial(Word variables) : vars_(std::move(variables)) {}

  const Word& variables() const { return vars_; }
  const std::map<std::vector<int>, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int index_of(const Letter& l) const
  {
    for (std::size_t k = 0; k < vars_.size(); ++k)
      if (vars_[k] == l) return static_cast<int>(k);
    return -1;
  }

  void add(const std::vector<int>& exps, const Integer& c)
  {
    if (c == 0) return;
    Integer& x = terms_[exps];
    x += c;
    if (x == 0) terms_.erase(exps);
  }

  void add_tableau(const Tableau& t)
  {
    std::vector<int> e(vars_.size(), 0);
    for (const auto& row : t.rows)
      for (const auto& l : row) {
        int k = index_of(l);
        if (k < 0) throw Error(ErrorCode::UnknownLetter, "letter outside the character's variables");
        ++e[k];
      }
    add(e, 1);
  }

  // Re-express over a larger variable list and multiply by t_l^power.
  CharacterPolynomial embedded(const Word& variables, const Letter& l, int power) const
  {
    CharacterPolynomial out(variables);
    int lk = out.index_of(l);
    for (const auto& [e, c] : terms_) {
      std::vector<int> f(variables.size(), 0);
      for (std::size_t k = 0; k < vars_.size(); ++k) {
        int idx = out.index_of(vars_[k]);
        if (idx < 0) throw Error(ErrorCode::UnknownLetter, "variable lost while embedding a character");
        f[idx] += e[k];
      }
      if (power) {
        if (lk < 0) throw Error(ErrorCode::UnknownLetter, "variable lost while embedding a character");
        f[lk] += power;
      }
      out.add(f, c);
    }
    return out;
  }

  Integer total() const
  {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  CharacterPolynomial& operator+=(const CharacterPolynomial& o)
  {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }

  bool operator==(const CharacterPolynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

 private:
  Word vars_;
  std::map<std::vector<int>, Integer> terms_;
};

inline CharacterPolynomial character(const RowConvexShape& d, const Alphabet& a,
                                     const std::optional<Flags>& flags = std::nullopt)
{
  CharacterPolynomial ch(a.letters());
  for (const auto& t : enumerate_straight(d, a, flags)) ch.add_tableau(t);
  return ch;
}

} // namespace rowconvex

#endif // ROWCONVEX_BASIS_HPP
