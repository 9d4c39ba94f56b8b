#ifndef ROWCONVEX_SHAPE_HPP
#define ROWCONVEX_SHAPE_HPP

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "rowconvex/error.hpp"

namespace rowconvex {

// A row occupies the columns start..end inclusive.
struct Row {
  int start = 1;
  int end = 1;

  int length() const { return end - start + 1; }
  bool contains(int col) const { return start <= col && col <= end; }

  auto operator<=>(const Row&) const = default;
};

// Rows sorted by non-increasing end column. The empty shape (no rows) is
// representable so that strip removal can produce it, but make_shape
// rejects it.
class RowConvexShape {
 public:
  RowConvexShape() = default;

  // rows must already satisfy the sorted convention
  static RowConvexShape from_sorted(std::vector<Row> rows)
  {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].start < 1) throw Error(ErrorCode::InvalidShape, "row start must be at least 1");
      if (rows[i].start > rows[i].end) throw Error(ErrorCode::EmptyRow, "row start exceeds end");
      if (i && rows[i].end > rows[i - 1].end)
        throw Error(ErrorCode::InvalidShape, "rows are not sorted by non-increasing end column");
    }
    RowConvexShape s;
    s.rows_ = std::move(rows);
    return s;
  }

  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(int i) const { return rows_[i]; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  bool empty() const { return rows_.empty(); }

  int num_cells() const
  {
    int n = 0;
    for (const auto& r : rows_) n += r.length();
    return n;
  }

  int min_column() const
  {
    int c = rows_.empty() ? 1 : rows_[0].start;
    for (const auto& r : rows_) c = std::min(c, r.start);
    return c;
  }

  int max_column() const { return rows_.empty() ? 0 : rows_[0].end; }

  bool has_cell(int i, int col) const
  {
    return i >= 0 && i < num_rows() && rows_[i].contains(col);
  }

  // rows meeting column col, top to bottom
  std::vector<int> rows_in_column(int col) const
  {
    std::vector<int> out;
    for (int i = 0; i < num_rows(); ++i)
      if (rows_[i].contains(col)) out.push_back(i);
    return out;
  }

  int column_height(int col) const { return static_cast<int>(rows_in_column(col).size()); }

  // columns that contain at least one cell, ascending
  std::vector<int> columns() const
  {
    std::vector<int> out;
    for (int c = min_column(); c <= max_column(); ++c)
      if (column_height(c) > 0) out.push_back(c);
    return out;
  }

  // start columns weakly decrease down the rows (ends already do)
  bool is_skew() const
  {
    for (int i = 1; i < num_rows(); ++i)
      if (rows_[i].start > rows_[i - 1].start) return false;
    return true;
  }

  std::string describe() const
  {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) s += ",";
      s += "(" + std::to_string(rows_[i].start) + "," + std::to_string(rows_[i].end) + ")";
    }
    return s + "]";
  }

  auto operator<=>(const RowConvexShape&) const = default;

 private:
  std::vector<Row> rows_;
};

struct SortedShape {
  RowConvexShape shape;
  // permutation[k] is the input index of sorted row k
  std::vector<int> permutation;
};

inline SortedShape make_shape(const std::vector<std::pair<int, int>>& intervals)
{
  if (intervals.empty()) throw Error(ErrorCode::EmptyShape, "a shape needs at least one row");
  for (const auto& [s, e] : intervals) {
    if (s < 1) throw Error(ErrorCode::InvalidShape, "row start must be at least 1",
                           "(" + std::to_string(s) + "," + std::to_string(e) + ")");
    if (s > e) throw Error(ErrorCode::EmptyRow, "row start exceeds end",
                           "(" + std::to_string(s) + "," + std::to_string(e) + ")");
  }
  std::vector<int> perm(intervals.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return intervals[a].second > intervals[b].second; });
  std::vector<Row> rows;
  for (int k : perm) rows.push_back({intervals[k].first, intervals[k].second});
  return {RowConvexShape::from_sorted(std::move(rows)), perm};
}

// D^{o k}: every row of D repeated k times in place
inline RowConvexShape power_shape(const RowConvexShape& d, int k)
{
  std::vector<Row> rows;
  for (const auto& r : d.rows())
    for (int t = 0; t < k; ++t) rows.push_back(r);
  return RowConvexShape::from_sorted(std::move(rows));
}

// All sorted row-convex shapes with at most max_cells cells whose occupied
// columns are exactly 1..C. Rows with equal end columns appear in every
// order, since the order of such rows is part of the shape.
inline std::vector<RowConvexShape> enumerate_shapes(int max_cells)
{
  std::vector<RowConvexShape> out;
  std::vector<Row> intervals;
  for (int e = 1; e <= max_cells; ++e)
    for (int s = 1; s <= e; ++s) intervals.push_back({s, e});
  std::vector<Row> cur;
  auto rec = [&](auto&& self, int cells) -> void {
    if (!cur.empty()) {
      int top = cur[0].end;
      std::vector<bool> seen(top + 1, false);
      for (const auto& r : cur)
        for (int c = r.start; c <= r.end; ++c) seen[c] = true;
      bool full = true;
      for (int c = 1; c <= top; ++c) full = full && seen[c];
      if (full) out.push_back(RowConvexShape::from_sorted(cur));
    }
    for (const auto& r : intervals) {
      if (cells + r.length() > max_cells) continue;
      if (!cur.empty() && r.end > cur.back().end) continue;
      cur.push_back(r);
      self(self, cells + r.length());
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

} // namespace rowconvex

#endif // ROWCONVEX_SHAPE_HPP
