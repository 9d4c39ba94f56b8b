#ifndef ROWCONVEX_RING_HPP
#define ROWCONVEX_RING_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rowconvex/basis.hpp"
#include "rowconvex/letterplace.hpp"
#include "rowconvex/straightening.hpp"
#include "rowconvex/tableau.hpp"

namespace rowconvex {

// Rows T1_1, T2_1, ..., Tk_1, T1_2, ... on the shape D^{o k}.
inline Tableau interleave(const std::vector<Tableau>& factors)
{
  if (factors.empty()) throw Error(ErrorCode::ShapeMismatch, "nothing to interleave");
  const RowConvexShape& d = factors.front().shape;
  for (const auto& t : factors)
    if (t.shape != d) throw Error(ErrorCode::ShapeMismatch, "interleaved tableaux need a common shape", t.shape.describe());
  const int k = static_cast<int>(factors.size());
  std::vector<Word> rows;
  for (int i = 0; i < d.num_rows(); ++i)
    for (int r = 0; r < k; ++r) rows.push_back(factors[r].rows[i]);
  return Tableau(power_shape(d, k), rows);
}

inline Tableau interleave(const Tableau& a, const Tableau& b) { return interleave(std::vector<Tableau>{a, b}); }

// Inverse of interleave for a tableau on D^{o k}.
inline std::vector<Tableau> split_interleaved(const Tableau& t, int k)
{
  std::vector<Row> base;
  for (int i = 0; i < t.shape.num_rows(); i += k) base.push_back(t.shape.row(i));
  auto d = RowConvexShape::from_sorted(base);
  std::vector<Tableau> out;
  for (int r = 0; r < k; ++r) {
    std::vector<Word> rows;
    for (int i = 0; i < d.num_rows(); ++i) rows.push_back(t.rows[i * k + r]);
    out.emplace_back(d, rows);
  }
  return out;
}

// parity of [T]: number of plus letters
inline int tableau_parity(const Tableau& t)
{
  int n = 0;
  for (const auto& r : t.rows) n += count_plus(r);
  return n & 1;
}

inline Polynomial product_polynomial(const std::vector<Tableau>& factors)
{
  Polynomial p = Polynomial::one();
  for (const auto& t : factors) p = p * tableau_to_polynomial(t);
  return p;
}

// Column i of T read bottom to top.
inline Word column_bottom_up(const Tableau& t, int col)
{
  Word w;
  auto rows = t.shape.rows_in_column(col);
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) w.push_back(t.at(*it, col));
  return w;
}

// A product of tableaux of one shape, factors sorted ascending by plain
// column word. The sign records the reordering of odd factors.
struct TableauMonomial {
  std::vector<Tableau> factors;
  int sign = 1;

  static TableauMonomial make(std::vector<Tableau> fs)
  {
    TableauMonomial m;
    for (std::size_t i = 1; i < fs.size(); ++i)
      for (std::size_t k = i; k > 0; --k) {
        if (!word_less(column_word(fs[k], ColumnWord::plain), column_word(fs[k - 1], ColumnWord::plain))) break;
        if (tableau_parity(fs[k]) && tableau_parity(fs[k - 1])) m.sign = -m.sign;
        std::swap(fs[k], fs[k - 1]);
      }
    m.factors = std::move(fs);
    return m;
  }

  // concatenation of c_1(T_k), ..., c_1(T_1), c_2(T_k), ...
  Word order_key() const
  {
    Word key;
    if (factors.empty()) return key;
    for (int c : factors.front().shape.columns())
      for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        Word w = column_bottom_up(*it, c);
        key.insert(key.end(), w.begin(), w.end());
      }
    return key;
  }
};

// Graded order: degree first, then the column key lexicographically.
inline int compare_tableau_monomials(const TableauMonomial& a, const TableauMonomial& b)
{
  if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size() ? -1 : 1;
  Word x = a.order_key(), y = b.order_key();
  if (word_less(x, y)) return -1;
  if (word_less(y, x)) return 1;
  return 0;
}

struct RelationTerm {
  Integer coefficient;
  Tableau left;
  Tableau right;
};

// [lead_left][lead_right] = sum of coefficient * [left][right]
struct QuadraticRelation {
  Tableau lead_left;
  Tableau lead_right;
  int upper_row = 0;       // row index in the upper factor
  int lower_row = 0;       // row index in the lower factor
  bool upper_is_left = true; // which factor supplies the upper row
  std::vector<RelationTerm> tail;

  Polynomial image() const
  {
    Polynomial p = tableau_to_polynomial(lead_left) * tableau_to_polynomial(lead_right);
    for (const auto& t : tail)
      p.add_scaled(tableau_to_polynomial(t.left) * tableau_to_polynomial(t.right), Rational(-t.coefficient));
    return p;
  }
};

struct RelationOptions {
  bool verify = true;
  // every consecutive marking allowed by the exchange identity, not only the
  // one row_straighten picks
  bool full_family = false;
};

namespace detail {

// sign of moving row i of x and row j of y to the front of [x][y]
inline int front_sign(const std::vector<Word>& x, int i, const std::vector<Word>& y, int j)
{
  auto p = [](const Word& w) { return count_plus(w) & 1; };
  int e = 0;
  for (int r = 0; r < i; ++r) e += p(x[i]) * p(x[r]);
  int rest = 0;
  for (int r = 0; r < static_cast<int>(x.size()); ++r)
    if (r != i) rest += p(x[r]);
  for (int r = 0; r < j; ++r) rest += p(y[r]);
  e += p(y[j]) * rest;
  return (e & 1) ? -1 : 1;
}

inline std::vector<FormalTableauSum> pair_expansions(const Tableau& pair, const RelationOptions& opt)
{
  std::vector<FormalTableauSum> out;
  StraightenOptions so;
  so.verify_result = opt.verify;
  out.push_back(row_straighten(pair, so));
  if (!opt.full_family || pair.shape.row(0).start >= pair.shape.row(1).start) return out;
  const Row& top = pair.shape.row(0);
  const Row& bottom = pair.shape.row(1);
  for (int a0 = top.start; a0 <= top.end; ++a0)
    for (int b0 = bottom.start; b0 <= bottom.end; ++b0)
      for (int b1 = b0 - 1; b1 <= bottom.end; ++b1) {
        SyzygySpec spec;
        for (int c = a0; c <= top.end; ++c) spec.top.push_back(c);
        for (int c = b0; c <= b1; ++c) spec.bottom.push_back(c);
        try {
          out.push_back(syzygy(pair, spec));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NonUnitPivot && e.code() != ErrorCode::BadSpec) throw;
        }
      }
  return out;
}

} // namespace detail

// Relations for the lead x*y from one non-straight stacked row pair:
// upper row i of `upper`, lower row j of `lower`.
inline std::vector<QuadraticRelation> relations_for_pair(const Tableau& x, const Tableau& y, const RelationOptions& opt = {})
{
  std::vector<QuadraticRelation> out;
  const RowConvexShape& d = x.shape;
  const int sign_xy = (tableau_parity(x) && tableau_parity(y)) ? -1 : 1;
  for (int pass = 0; pass < 2; ++pass) {
    const Tableau& upper = pass == 0 ? x : y;
    const Tableau& lower = pass == 0 ? y : x;
    for (int i = 0; i < d.num_rows(); ++i)
      for (int j = pass == 0 ? i : i + 1; j < d.num_rows(); ++j) {
        Tableau pair(RowConvexShape::from_sorted({d.row(i), d.row(j)}), {upper.rows[i], lower.rows[j]});
        if (detail::two_row_straight(pair)) continue;
        const int eps = detail::front_sign(upper.rows, i, lower.rows, j);
        for (const auto& expansion : detail::pair_expansions(pair, opt)) {
          QuadraticRelation rel{x, y, i, j, pass == 0, {}};
          for (const auto& [s, c] : expansion.terms()) {
            Tableau u = upper, l = lower;
            u.rows[i] = s.rows[0];
            l.rows[j] = s.rows[1];
            int sgn = eps * detail::front_sign(u.rows, i, l.rows, j);
            if (pass == 1) sgn *= sign_xy;
            Integer coef = sgn > 0 ? c : Integer(-c);
            rel.tail.push_back({coef, u, l});
          }
          if (opt.verify && !rel.image().is_zero())
            throw Error(ErrorCode::OracleMismatch, "quadratic relation does not vanish",
                        describe(x) + " * " + describe(y));
          out.push_back(std::move(rel));
        }
      }
  }
  return out;
}

inline std::vector<QuadraticRelation> groebner_relations_deg2(const RowConvexShape& d, const Alphabet& a,
                                                              const RelationOptions& opt = {})
{
  std::vector<QuadraticRelation> out;
  auto straight = enumerate_straight(d, a);
  for (const auto& x : straight)
    for (const auto& y : straight) {
      auto rels = relations_for_pair(x, y, opt);
      out.insert(out.end(), rels.begin(), rels.end());
    }
  return out;
}

// The tail rewritten in products of straight tableaux, as sorted monomials.
inline std::vector<std::pair<TableauMonomial, Integer>> straight_tail(const QuadraticRelation& rel)
{
  std::map<std::vector<Tableau>, std::pair<TableauMonomial, Integer>> acc;
  StraightenOptions so;
  so.verify_result = false;
  for (const auto& term : rel.tail) {
    auto l = straighten_tableau(term.left, so);
    auto r = straighten_tableau(term.right, so);
    for (const auto& [s, c] : l.terms())
      for (const auto& [u, e] : r.terms()) {
        auto m = TableauMonomial::make({s, u});
        Integer coef = term.coefficient * c * e * m.sign;
        auto& slot = acc[m.factors];
        if (slot.first.factors.empty()) slot.first = m;
        slot.second += coef;
      }
  }
  std::vector<std::pair<TableauMonomial, Integer>> out;
  for (auto& [k, v] : acc)
    if (v.second != 0) out.push_back(v);
  return out;
}

struct SubductionTerm {
  Rational coefficient;
  std::vector<Tableau> factors;
};

struct SubductionResult {
  bool member = false;
  std::vector<SubductionTerm> expression;
  Polynomial remainder; // nonzero when not a member
};

enum class SubductionBasis { straight, row_standard };

namespace detail {

inline bool divides(const Monomial& m, const Monomial& n)
{
  std::size_t k = 0;
  for (const auto& f : m.factors) {
    while (k < n.factors.size() && !(n.factors[k].var == f.var)) ++k;
    if (k == n.factors.size() || n.factors[k].exp < f.exp) return false;
  }
  return true;
}

inline Monomial divide(const Monomial& n, const Monomial& m)
{
  Monomial out;
  for (const auto& f : n.factors) {
    int e = f.exp;
    for (const auto& g : m.factors)
      if (g.var == f.var) e -= g.exp;
    if (e > 0) out.factors.push_back({f.var, e});
  }
  return out;
}

// factors via straight-filling on D^{o k}
inline std::optional<std::vector<Tableau>> match_straight(const Monomial& init, const RowConvexShape& d, const Alphabet& a,
                                                          int k)
{
  RowConvexShape dk = power_shape(d, k);
  std::map<int, Word> by_column;
  for (const auto& f : init.factors) {
    if (!f.var.place.is_minus() || !a.contains(f.var.letter)) return std::nullopt;
    for (int e = 0; e < f.exp; ++e) by_column[f.var.place.rank].push_back(f.var.letter);
  }
  Word wprime;
  for (int c : dk.columns()) {
    auto it = by_column.find(c);
    if (it == by_column.end() || static_cast<int>(it->second.size()) != dk.column_height(c)) return std::nullopt;
    Word w = it->second;
    std::sort(w.begin(), w.end(), [](const Letter& x, const Letter& y) { return x.rank < y.rank; });
    wprime.insert(wprime.end(), w.begin(), w.end());
    by_column.erase(it);
  }
  if (!by_column.empty()) return std::nullopt;
  auto t = straight_filling(wprime, dk);
  if (!t || !is_straight(*t).straight) return std::nullopt;
  auto fs = split_interleaved(*t, k);
  for (const auto& f : fs)
    if (!is_straight(f).straight) return std::nullopt;
  return fs;
}

struct Generator {
  Tableau tableau;
  Monomial init;
};

inline bool search_generators(const std::vector<Generator>& gens, const Monomial& rest, int k, std::size_t from,
                              std::vector<Tableau>& chosen, const Monomial& target)
{
  if (k == 0) {
    if (!rest.factors.empty()) return false;
    Polynomial q = product_polynomial(chosen);
    return !q.is_zero() && initial_monomial(q).monomial == target;
  }
  for (std::size_t g = from; g < gens.size(); ++g) {
    if (!divides(gens[g].init, rest)) continue;
    chosen.push_back(gens[g].tableau);
    if (search_generators(gens, divide(rest, gens[g].init), k - 1, g, chosen, target)) return true;
    chosen.pop_back();
  }
  return false;
}

} // namespace detail

inline SubductionResult sagbi_subduct(const Polynomial& p, const RowConvexShape& d, const Alphabet& a,
                                      SubductionBasis basis = SubductionBasis::straight)
{
  SubductionResult res;
  if (p.is_zero()) {
    res.member = true;
    return res;
  }
  const int deg = p.terms().begin()->first.degree();
  for (const auto& [m, c] : p.terms())
    if (m.degree() != deg) throw Error(ErrorCode::NotHomogeneous, "monomials of different degrees", std::to_string(deg));
  const int n = d.num_cells();
  if (deg % n != 0) {
    res.remainder = p;
    return res;
  }
  const int k = deg / n;
  std::vector<detail::Generator> gens;
  if (basis == SubductionBasis::row_standard)
    for (const auto& t : enumerate_row_standard(d, a)) {
      Polynomial q = tableau_to_polynomial(t);
      if (!q.is_zero()) gens.push_back({t, initial_monomial(q).monomial});
    }
  Polynomial rest = p;
  std::map<std::vector<Tableau>, Rational> expr;
  while (!rest.is_zero()) {
    auto init = initial_monomial(rest);
    std::optional<std::vector<Tableau>> fs;
    if (basis == SubductionBasis::straight) {
      fs = detail::match_straight(init.monomial, d, a, k);
    } else {
      std::vector<Tableau> chosen;
      if (detail::search_generators(gens, init.monomial, k, 0, chosen, init.monomial)) fs = chosen;
    }
    if (!fs) {
      res.remainder = rest;
      break;
    }
    Polynomial q = product_polynomial(*fs);
    if (q.is_zero()) {
      res.remainder = rest;
      break;
    }
    auto qi = initial_monomial(q);
    if (!(qi.monomial == init.monomial)) {
      res.remainder = rest;
      break;
    }
    Rational scale = init.coefficient / qi.coefficient;
    rest.add_scaled(q, -scale);
    expr[*fs] += scale;
  }
  if (rest.is_zero()) {
    res.member = true;
    for (const auto& [fs, c] : expr)
      if (c != 0) res.expression.push_back({c, fs});
  }
  return res;
}

} // namespace rowconvex

#endif // ROWCONVEX_RING_HPP
