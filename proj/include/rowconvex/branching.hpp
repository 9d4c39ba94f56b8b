#ifndef ROWCONVEX_BRANCHING_HPP
#define ROWCONVEX_BRANCHING_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rowconvex/basis.hpp"
#include "rowconvex/tableau.hpp"

namespace rowconvex {

enum class StripKind { horizontal, vertical };

inline StripKind strip_kind_for(const Letter& a) { return a.is_plus() ? StripKind::horizontal : StripKind::vertical; }

using Cell = std::pair<int, int>; // (row, column)

struct Strip {
  StripKind kind = StripKind::horizontal;
  std::vector<Cell> cells;  // sorted
  std::vector<int> columns; // the multiset I_E, sorted

  static Strip make(StripKind kind, std::vector<Cell> cells)
  {
    std::sort(cells.begin(), cells.end());
    Strip s{kind, std::move(cells), {}};
    for (const auto& c : s.cells) s.columns.push_back(c.second);
    std::sort(s.columns.begin(), s.columns.end());
    return s;
  }

  int size() const { return static_cast<int>(cells.size()); }
  bool operator==(const Strip&) const = default;
};

namespace detail {

inline Letter strip_letter(StripKind kind) { return kind == StripKind::horizontal ? plus_letter(-(1 << 29)) : minus_letter(-(1 << 29)); }

// The minimal letter on the strip cells and distinct increasing minus
// letters elsewhere (numbered column by column). Straight exactly when
// the cells form a strip.
inline Tableau strip_witness(const RowConvexShape& d, StripKind kind, const std::vector<Cell>& cells)
{
  std::vector<Word> rows;
  for (const auto& r : d.rows()) rows.emplace_back(r.length());
  Tableau t(d, rows);
  std::set<Cell> in(cells.begin(), cells.end());
  int label = 1;
  for (int c : d.columns())
    for (int i : d.rows_in_column(c)) t.at(i, c) = in.count({i, c}) ? strip_letter(kind) : minus_letter(label++);
  return t;
}

} // namespace detail

inline bool is_strip(const RowConvexShape& d, StripKind kind, const std::vector<Cell>& cells)
{
  for (const auto& [i, c] : cells)
    if (!d.has_cell(i, c)) return false;
  std::set<Cell> uniq(cells.begin(), cells.end());
  if (uniq.size() != cells.size()) return false;
  return is_straight(detail::strip_witness(d, kind, cells)).straight;
}

// The cells of a tableau holding letter a.
inline std::vector<Cell> letter_cells(const Tableau& t, const Letter& a)
{
  std::vector<Cell> out;
  for (int i = 0; i < t.shape.num_rows(); ++i)
    for (int c = t.shape.row(i).start; c <= t.shape.row(i).end; ++c)
      if (t.at(i, c) == a) out.push_back({i, c});
  return out;
}

inline bool a_flagged(int col, const Letter& a, const std::optional<Flags>& flags)
{
  return !flags || within_flags(*flags, col, a);
}

// All strips of the given kind (a leftmost block per row; one cell at most
// for vertical strips), restricted to a-flagged columns.
inline std::vector<Strip> enumerate_strips(const RowConvexShape& d, StripKind kind, const Letter& a,
                                           const std::optional<Flags>& flags = std::nullopt)
{
  if (flags) validate_flags(*flags, d);
  std::vector<Strip> out;
  std::vector<Cell> cur;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == d.num_rows()) {
      if (is_strip(d, kind, cur)) out.push_back(Strip::make(kind, cur));
      return;
    }
    const Row& r = d.row(i);
    const int max_len = kind == StripKind::horizontal ? r.length() : std::min(1, r.length());
    std::size_t mark = cur.size();
    self(self, i + 1);
    for (int len = 1; len <= max_len; ++len) {
      const int col = r.start + len - 1;
      if (!a_flagged(col, a, flags)) break;
      cur.push_back({i, col});
      self(self, i + 1);
    }
    cur.resize(mark);
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const Strip& x, const Strip& y) {
    if (x.columns != y.columns) return x.columns < y.columns;
    return x.cells < y.cells;
  });
  return out;
}

// Place the strip letter once per entry of I (ascending), each time in the
// northmost free cell of that column whose left neighbour is absent or a
// strip cell with a plus strip letter.
inline std::optional<Strip> strip_from_columns(const RowConvexShape& d, StripKind kind, std::vector<int> columns)
{
  std::sort(columns.begin(), columns.end());
  std::set<Cell> used;
  for (int c : columns) {
    bool placed = false;
    for (int i : d.rows_in_column(c)) {
      if (used.count({i, c})) continue;
      if (d.has_cell(i, c - 1) && !(kind == StripKind::horizontal && used.count({i, c - 1}))) continue;
      used.insert({i, c});
      placed = true;
      break;
    }
    if (!placed) return std::nullopt;
  }
  std::vector<Cell> cells(used.begin(), used.end());
  if (!is_strip(d, kind, cells)) return std::nullopt;
  return Strip::make(kind, cells);
}

// E <= E' when every prefix count of I_E is at least that of I_E'.
inline bool dominance_leq(const Strip& e, const Strip& ep)
{
  if (e.kind != ep.kind) throw Error(ErrorCode::KindMismatch, "strips of different kinds are not comparable");
  int top = 0;
  if (!e.columns.empty()) top = std::max(top, e.columns.back());
  if (!ep.columns.empty()) top = std::max(top, ep.columns.back());
  for (int i = 1; i <= top; ++i) {
    auto count = [i](const std::vector<int>& v) { return std::upper_bound(v.begin(), v.end(), i) - v.begin(); };
    if (count(e.columns) < count(ep.columns)) return false;
  }
  return true;
}

// D with the strip cells removed; rows keep their order and empty rows go.
inline RowConvexShape remove_strip(const RowConvexShape& d, const Strip& e)
{
  std::vector<Row> rows;
  for (int i = 0; i < d.num_rows(); ++i) {
    int removed = 0;
    for (const auto& [r, c] : e.cells)
      if (r == i) ++removed;
    Row row = d.row(i);
    row.start += removed;
    if (row.start <= row.end) rows.push_back(row);
  }
  return RowConvexShape::from_sorted(rows);
}

struct StripTally {
  Strip strip;
  RowConvexShape quotient;
  long tableaux_with_strip = 0; // straight tableaux of D whose a-cells are E
  long quotient_straight = 0;   // straight tableaux of D/E over A without a
  long restriction_failures = 0; // restrictions to D/E that are not straight
};

struct BranchingReport {
  CharacterPolynomial lhs;
  CharacterPolynomial rhs_with_factor;
  CharacterPolynomial rhs_literal; // the sum without t_a^{|E|}
  bool holds_with_factor = false;
  bool holds_literal = false;
  std::vector<StripTally> strips;
};

inline Tableau restrict_to(const Tableau& t, const Strip& e, const RowConvexShape& quotient)
{
  std::vector<Word> rows;
  for (int i = 0; i < t.shape.num_rows(); ++i) {
    int removed = 0;
    for (const auto& [r, c] : e.cells)
      if (r == i) ++removed;
    if (removed < static_cast<int>(t.rows[i].size())) rows.emplace_back(t.rows[i].begin() + removed, t.rows[i].end());
  }
  return Tableau(quotient, rows);
}

inline BranchingReport branching_check(const RowConvexShape& d, const Alphabet& a, const Letter& removed,
                                       const std::optional<Flags>& flags = std::nullopt)
{
  if (!a.contains(removed)) throw Error(ErrorCode::UnknownLetter, "removed letter is not in the alphabet", a.token(removed));
  BranchingReport rep;
  const Word vars = a.letters();
  const Alphabet rest = a.without(removed);
  const StripKind kind = strip_kind_for(removed);
  auto straight = enumerate_straight(d, a, flags);
  rep.lhs = CharacterPolynomial(vars);
  for (const auto& t : straight) rep.lhs.add_tableau(t);
  rep.rhs_with_factor = CharacterPolynomial(vars);
  rep.rhs_literal = CharacterPolynomial(vars);
  for (const auto& e : enumerate_strips(d, kind, removed, flags)) {
    StripTally tally{e, remove_strip(d, e), 0, 0, 0};
    CharacterPolynomial q(rest.letters());
    if (tally.quotient.empty() || !rest.empty()) {
      for (const auto& t : enumerate_straight(tally.quotient, rest, flags)) q.add_tableau(t);
    }
    tally.quotient_straight = static_cast<long>(q.total().get_si());
    rep.rhs_with_factor += q.embedded(vars, removed, e.size());
    rep.rhs_literal += q.embedded(vars, removed, 0);
    for (const auto& t : straight) {
      auto cells = letter_cells(t, removed);
      std::sort(cells.begin(), cells.end());
      if (cells != e.cells) continue;
      ++tally.tableaux_with_strip;
      if (!tally.quotient.empty() && !is_straight(restrict_to(t, e, tally.quotient)).straight)
        ++tally.restriction_failures;
    }
    rep.strips.push_back(std::move(tally));
  }
  rep.holds_with_factor = rep.lhs == rep.rhs_with_factor;
  rep.holds_literal = rep.lhs == rep.rhs_literal;
  return rep;
}

struct FiltrationStep {
  Strip strip;
  std::size_t rank_ge = 0;       // span of [T] whose a-strip dominates-or-equals E
  std::size_t rank_gt = 0;       // span of [T] whose a-strip strictly dominates E
  std::size_t quotient_rank = 0; // rank of the straight basis of D/E over A without a
  std::size_t filtration_rank = 0; // rank of the j-th filtration term
};

struct FiltrationReport {
  std::vector<FiltrationStep> steps;
  std::size_t total_straight = 0;
  bool quotients_match = false; // rank_ge - rank_gt equals quotient_rank for every strip
  bool telescopes = false;      // successive filtration terms differ by the quotient ranks
};

// Strips ordered so that E_i <= E_j forces i <= j (a linear extension of
// dominance, least dominant first); ties go lexicographically by I_E.
inline std::vector<Strip> dominance_linear_extension(std::vector<Strip> strips)
{
  std::sort(strips.begin(), strips.end(), [](const Strip& x, const Strip& y) {
    if (x.columns != y.columns) return x.columns < y.columns;
    return x.cells < y.cells;
  });
  std::vector<Strip> out;
  std::vector<bool> taken(strips.size(), false);
  auto below = [&](std::size_t o, std::size_t c) {
    bool le = dominance_leq(strips[o], strips[c]);
    bool ge = dominance_leq(strips[c], strips[o]);
    return le && (!ge || o < c);
  };
  for (std::size_t step = 0; step < strips.size(); ++step)
    for (std::size_t c = 0; c < strips.size(); ++c) {
      if (taken[c]) continue;
      bool minimal = true;
      for (std::size_t o = 0; o < strips.size() && minimal; ++o)
        if (!taken[o] && o != c && below(o, c)) minimal = false;
      if (minimal) {
        taken[c] = true;
        out.push_back(strips[c]);
        break;
      }
    }
  return out;
}

inline FiltrationReport filtration_ranks(const RowConvexShape& d, const Alphabet& a, const Letter& removed)
{
  FiltrationReport rep;
  rep.total_straight = enumerate_straight(d, a).size();
  const bool present = a.contains(removed);
  const StripKind kind = strip_kind_for(removed);
  const Alphabet rest = present ? a.without(removed) : a;

  std::vector<Strip> strips = present ? enumerate_strips(d, kind, removed) : std::vector<Strip>{Strip::make(kind, {})};
  strips = dominance_linear_extension(strips);

  // generators: row-standard tableaux whose a-cells form a strip
  struct Gen {
    Polynomial poly;
    Strip strip;
  };
  std::vector<Gen> gens;
  for (const auto& t : enumerate_row_standard(d, a)) {
    auto cells = present ? letter_cells(t, removed) : std::vector<Cell>{};
    if (!is_strip(d, kind, cells)) continue;
    Polynomial p = tableau_to_polynomial(t);
    if (!p.is_zero()) gens.push_back({std::move(p), Strip::make(kind, cells)});
  }
  auto span_rank = [&](auto&& pred) {
    RankAccumulator acc;
    for (const auto& g : gens)
      if (pred(g.strip)) acc.add(g.poly);
    return acc.rank();
  };
  rep.quotients_match = true;
  for (std::size_t j = 0; j < strips.size(); ++j) {
    const Strip& e = strips[j];
    FiltrationStep st;
    st.strip = e;
    st.rank_ge = span_rank([&](const Strip& s) { return dominance_leq(e, s); });
    st.rank_gt = span_rank([&](const Strip& s) { return dominance_leq(e, s) && !(s == e); });
    RowConvexShape q = remove_strip(d, e);
    st.quotient_rank = (q.empty() || !rest.empty()) ? enumerate_straight(q, rest).size() : 0;
    st.filtration_rank = span_rank([&](const Strip& s) {
      for (std::size_t i = j; i < strips.size(); ++i)
        if (dominance_leq(strips[i], s)) return true;
      return false;
    });
    if (st.rank_ge - st.rank_gt != st.quotient_rank) rep.quotients_match = false;
    rep.steps.push_back(std::move(st));
  }
  rep.telescopes = !rep.steps.empty() && rep.steps.front().filtration_rank == rep.total_straight;
  for (std::size_t j = 0; j < rep.steps.size(); ++j) {
    std::size_t next = j + 1 < rep.steps.size() ? rep.steps[j + 1].filtration_rank : 0;
    if (rep.steps[j].filtration_rank - next != rep.steps[j].quotient_rank) rep.telescopes = false;
  }
  return rep;
}

} // namespace rowconvex

#endif // ROWCONVEX_BRANCHING_HPP
