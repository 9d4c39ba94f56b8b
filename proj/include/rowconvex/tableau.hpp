#ifndef ROWCONVEX_TABLEAU_HPP
#define ROWCONVEX_TABLEAU_HPP

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "rowconvex/alphabet.hpp"
#include "rowconvex/shape.hpp"

namespace rowconvex {

// rows[i][t] is the entry in cell (i, shape.row(i).start + t). Rows are
// indexed from 0; columns keep their absolute indices.
struct Tableau {
  RowConvexShape shape;
  std::vector<Word> rows;

  Tableau() = default;
  Tableau(RowConvexShape s, std::vector<Word> r) : shape(std::move(s)), rows(std::move(r))
  {
    if (static_cast<int>(rows.size()) != shape.num_rows())
      throw Error(ErrorCode::LengthMismatch, "row count does not match shape", shape.describe());
    for (int i = 0; i < shape.num_rows(); ++i)
      if (static_cast<int>(rows[i].size()) != shape.row(i).length())
        throw Error(ErrorCode::LengthMismatch, "row length does not match shape", shape.describe());
  }

  const Letter& at(int i, int col) const { return rows[i][col - shape.row(i).start]; }
  Letter& at(int i, int col) { return rows[i][col - shape.row(i).start]; }

  const Letter* find(int i, int col) const
  {
    return shape.has_cell(i, col) ? &at(i, col) : nullptr;
  }

  auto operator<=>(const Tableau&) const = default;
};

inline std::string describe(const Tableau& t, const Alphabet* a = nullptr)
{
  std::string s;
  for (int i = 0; i < t.shape.num_rows(); ++i) {
    if (i) s += "; ";
    s += "(";
    for (std::size_t k = 0; k < t.rows[i].size(); ++k) {
      if (k) s += ",";
      s += a ? a->token(t.rows[i][k]) : std::to_string(t.rows[i][k].rank) + sign_char(t.rows[i][k].sign);
    }
    s += ")@" + std::to_string(t.shape.row(i).start);
  }
  return s;
}

// F(D): cells numbered column by column, top to bottom within a column
inline Tableau frame_tableau(const RowConvexShape& d)
{
  std::vector<Word> rows;
  for (const auto& r : d.rows()) rows.emplace_back(r.length());
  Tableau t(d, rows);
  int label = 1;
  for (int c : d.columns())
    for (int i : d.rows_in_column(c)) t.at(i, c) = minus_letter(label++);
  return t;
}

// Der-(D): every cell holds its column index as a minus letter
inline Tableau deruyts(const RowConvexShape& d)
{
  std::vector<Word> rows;
  for (const auto& r : d.rows()) {
    Word w;
    for (int c = r.start; c <= r.end; ++c) w.push_back(minus_letter(c));
    rows.push_back(std::move(w));
  }
  return Tableau(d, rows);
}

enum class ColumnWord { plain, modified, reverse };

inline Word column_word(const Tableau& t, ColumnWord variant)
{
  Word out;
  for (int c : t.shape.columns()) {
    auto rows = t.shape.rows_in_column(c);
    Word col;
    if (variant == ColumnWord::reverse) {
      for (int i : rows) col.push_back(t.at(i, c));
      std::stable_sort(col.begin(), col.end(), [](const Letter& a, const Letter& b) { return a.rank < b.rank; });
    } else {
      for (auto it = rows.rbegin(); it != rows.rend(); ++it) col.push_back(t.at(*it, c));
      if (variant == ColumnWord::modified)
        std::stable_sort(col.begin(), col.end(), [](const Letter& a, const Letter& b) { return a.rank > b.rank; });
    }
    out.insert(out.end(), col.begin(), col.end());
  }
  return out;
}

inline bool row_is_standard(const Word& w)
{
  for (std::size_t k = 1; k < w.size(); ++k)
    if (!less_plus(w[k - 1], w[k])) return false;
  return true;
}

inline bool is_row_standard(const Tableau& t)
{
  return std::all_of(t.rows.begin(), t.rows.end(), row_is_standard);
}

struct StraightnessWitness {
  enum class Kind { row, inversion };
  Kind kind = Kind::inversion;
  int upper_row = 0;  // row i (the only row for a row failure)
  int lower_row = -1; // row j, or -1 for a row failure
  int column = 0;     // column k; for a row failure, the first of the two cells

  bool operator==(const StraightnessWitness&) const = default;
};

struct StraightnessResult {
  bool straight = true;
  std::optional<StraightnessWitness> witness;
};

// (i,k) over (j,k) is a flippable inversion
inline bool flippable(const Tableau& t, int i, int j, int col)
{
  const Letter* top = t.find(i, col);
  const Letter* bot = t.find(j, col);
  if (!top || !bot || !greater_plus(*top, *bot)) return false;
  const Letter* left = t.find(i, col - 1);
  return !(left && greater_minus(*left, *bot));
}

inline StraightnessResult is_straight(const Tableau& t)
{
  for (int i = 0; i < t.shape.num_rows(); ++i) {
    const Word& w = t.rows[i];
    for (std::size_t k = 1; k < w.size(); ++k)
      if (!less_plus(w[k - 1], w[k]))
        return {false, StraightnessWitness{StraightnessWitness::Kind::row, i, -1,
                                           t.shape.row(i).start + static_cast<int>(k) - 1}};
  }
  for (int c : t.shape.columns()) {
    auto rows = t.shape.rows_in_column(c);
    for (std::size_t b = 1; b < rows.size(); ++b)
      for (std::size_t a = 0; a < b; ++a)
        if (flippable(t, rows[a], rows[b], c))
          return {false, StraightnessWitness{StraightnessWitness::Kind::inversion, rows[a], rows[b], c}};
  }
  return {true, std::nullopt};
}

// Place wprime[k] in the northmost empty cell of its column whose left
// neighbour is absent or <+ wprime[k]. Returns nullopt when no cell fits.
inline std::optional<Tableau> straight_filling(const Word& wprime, const RowConvexShape& d)
{
  if (static_cast<int>(wprime.size()) != d.num_cells())
    throw Error(ErrorCode::LengthMismatch, "word length differs from the number of cells", d.describe());
  std::vector<Word> rows;
  for (const auto& r : d.rows()) rows.emplace_back(r.length());
  Tableau t(d, rows);
  std::vector<std::vector<bool>> filled(d.num_rows());
  for (int i = 0; i < d.num_rows(); ++i) filled[i].assign(d.row(i).length(), false);
  std::size_t k = 0;
  for (int c : d.columns()) {
    auto col_rows = d.rows_in_column(c);
    for (std::size_t s = 0; s < col_rows.size(); ++s, ++k) {
      const Letter& x = wprime[k];
      if (s && x.rank < wprime[k - 1].rank)
        throw Error(ErrorCode::UnsortedColumnSegment, "column segment of the word is not weakly increasing",
                    "column " + std::to_string(c));
      bool placed = false;
      for (int i : col_rows) {
        int off = c - d.row(i).start;
        if (filled[i][off]) continue;
        if (d.has_cell(i, c - 1) && !less_plus(t.at(i, c - 1), x)) continue;
        t.at(i, c) = x;
        filled[i][off] = true;
        placed = true;
        break;
      }
      if (!placed) return std::nullopt;
    }
  }
  return t;
}

// Column bounds g_j <= entry <= f_j. Entry j-1 of each vector is the bound
// for column j.
struct Flags {
  Word lower;
  Word upper;
};

inline void validate_flags(const Flags& fl, const RowConvexShape& d)
{
  if (fl.lower.size() != fl.upper.size())
    throw Error(ErrorCode::BadFlag, "lower and upper flags differ in length");
  if (static_cast<int>(fl.lower.size()) < d.max_column())
    throw Error(ErrorCode::BadFlag, "flags must cover every column of the shape", d.describe());
  for (std::size_t j = 0; j < fl.lower.size(); ++j) {
    if (j && (fl.lower[j].rank < fl.lower[j - 1].rank || fl.upper[j].rank < fl.upper[j - 1].rank))
      throw Error(ErrorCode::BadFlag, "flag is not weakly increasing", "column " + std::to_string(j + 1));
    if (fl.lower[j].rank > fl.upper[j].rank)
      throw Error(ErrorCode::BadFlag, "lower flag exceeds upper flag", "column " + std::to_string(j + 1));
  }
}

inline bool within_flags(const Flags& fl, int col, const Letter& x)
{
  return fl.lower[col - 1].rank <= x.rank && x.rank <= fl.upper[col - 1].rank;
}

inline bool is_flagged(const Tableau& t, const Flags& fl)
{
  for (int i = 0; i < t.shape.num_rows(); ++i)
    for (int c = t.shape.row(i).start; c <= t.shape.row(i).end; ++c)
      if (!within_flags(fl, c, t.at(i, c))) return false;
  return true;
}

// Flags equal to the smallest and largest letter in every column
inline Flags trivial_flags(const Alphabet& a, int columns)
{
  Flags f;
  if (a.empty()) return f;
  f.lower.assign(columns, a.letters().front());
  f.upper.assign(columns, a.letters().back());
  return f;
}

// All straight tableaux of shape d over a, sorted by modified column word.
// Columns are filled left to right by the straight-filling rule, one
// weakly increasing column content at a time; the rule reconstructs every
// straight tableau from its reverse column word, so the search is complete.
inline std::vector<Tableau> enumerate_straight(const RowConvexShape& d, const Alphabet& a,
                                               const std::optional<Flags>& flags = std::nullopt)
{
  if (flags) validate_flags(*flags, d);
  std::vector<Tableau> out;
  if (d.empty()) {
    out.emplace_back();
    return out;
  }
  if (a.empty()) return out;
  const Word letters = a.letters();
  std::vector<Word> rows;
  for (const auto& r : d.rows()) rows.emplace_back(r.length());
  Tableau t(d, rows);
  const auto cols = d.columns();

  auto fill_column = [&](auto&& self, std::size_t ci) -> void {
    if (ci == cols.size()) {
      if (is_straight(t).straight) out.push_back(t);
      return;
    }
    const int c = cols[ci];
    const auto col_rows = d.rows_in_column(c);
    std::vector<Letter> allowed;
    for (const auto& x : letters)
      if (!flags || within_flags(*flags, c, x)) allowed.push_back(x);
    if (allowed.empty()) return;
    std::vector<std::size_t> pick(col_rows.size(), 0);
    // iterate weakly increasing index sequences
    while (true) {
      std::vector<bool> used(col_rows.size(), false);
      bool ok = true;
      for (std::size_t s = 0; s < pick.size() && ok; ++s) {
        const Letter& x = allowed[pick[s]];
        bool placed = false;
        for (std::size_t r = 0; r < col_rows.size(); ++r) {
          if (used[r]) continue;
          int i = col_rows[r];
          if (d.has_cell(i, c - 1) && !less_plus(t.at(i, c - 1), x)) continue;
          t.at(i, c) = x;
          used[r] = true;
          placed = true;
          break;
        }
        ok = placed;
      }
      if (ok) self(self, ci + 1);
      int s = static_cast<int>(pick.size()) - 1;
      while (s >= 0 && pick[s] + 1 == allowed.size()) --s;
      if (s < 0) break;
      ++pick[s];
      for (std::size_t r = s + 1; r < pick.size(); ++r) pick[r] = pick[s];
    }
  };
  fill_column(fill_column, 0);
  std::sort(out.begin(), out.end(), [](const Tableau& x, const Tableau& y) {
    return word_less(column_word(x, ColumnWord::modified), column_word(y, ColumnWord::modified));
  });
  return out;
}

// All <+-increasing words of length n over the given letters
inline std::vector<Word> standard_rows(const Word& letters, int n)
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
      self(self, letters[k].is_plus() ? k : k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<Tableau> enumerate_row_standard(const RowConvexShape& d, const Alphabet& a)
{
  std::vector<std::vector<Word>> options;
  for (const auto& r : d.rows()) options.push_back(standard_rows(a.letters(), r.length()));
  std::vector<Tableau> out;
  std::vector<Word> cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == options.size()) {
      out.emplace_back(d, cur);
      return;
    }
    for (const auto& w : options[i]) {
      cur.push_back(w);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Sort a row into <+-increasing order. Swapping two minus letters costs a
// sign; a repeated minus letter returns 0.
inline int sort_row(Word& w)
{
  int sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i)
    for (std::size_t k = i; k > 0 && w[k - 1].rank > w[k].rank; --k) {
      if (w[k - 1].is_minus() && w[k].is_minus()) sign = -sign;
      std::swap(w[k - 1], w[k]);
    }
  for (std::size_t k = 1; k < w.size(); ++k)
    if (w[k - 1] == w[k] && w[k].is_minus()) return 0;
  return sign;
}

// skew-shape notion of standard: rows <+-increase, columns <--increase
inline bool is_standard(const Tableau& t)
{
  if (!is_row_standard(t)) return false;
  for (int c : t.shape.columns()) {
    auto rows = t.shape.rows_in_column(c);
    for (std::size_t k = 1; k < rows.size(); ++k)
      if (!less_minus(t.at(rows[k - 1], c), t.at(rows[k], c))) return false;
  }
  return true;
}

} // namespace rowconvex

#endif // ROWCONVEX_TABLEAU_HPP
