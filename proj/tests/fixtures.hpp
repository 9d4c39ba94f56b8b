#ifndef ROWCONVEX_TESTS_FIXTURES_HPP
#define ROWCONVEX_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "rowconvex/rowconvex.hpp"

namespace fixtures {

using namespace rowconvex;

inline RowConvexShape shape(std::initializer_list<std::pair<int, int>> rows) { return make_shape(rows).shape; }

// rows given as token lists, e.g. {{"a+","a+"},{"b+"}}
inline Tableau tableau(const RowConvexShape& d, const Alphabet& a, const std::vector<std::vector<std::string>>& rows)
{
  std::vector<Word> words;
  for (const auto& r : rows) {
    Word w;
    for (const auto& tok : r) w.push_back(a.letter(tok));
    words.push_back(w);
  }
  return Tableau(d, words);
}

// numeric minus letters, rows as ranks
inline Tableau minus_tableau(const RowConvexShape& d, const std::vector<std::vector<int>>& rows)
{
  std::vector<Word> words;
  for (const auto& r : rows) {
    Word w;
    for (int x : r) w.push_back(minus_letter(x));
    words.push_back(w);
  }
  return Tableau(d, words);
}

inline std::vector<int> ranks(const Word& w)
{
  std::vector<int> out;
  for (const auto& l : w) out.push_back(l.rank);
  return out;
}

// The eight-letter example: rows (4,5) at column 3, (1,3,5,7) at 1,
// (2) at 3 and (3,8) at 2, all letters minus.
inline RowConvexShape worked_shape() { return shape({{3, 4}, {1, 4}, {3, 3}, {2, 3}}); }
inline Tableau worked_tableau() { return minus_tableau(worked_shape(), {{4, 5}, {1, 3, 5, 7}, {2}, {3, 8}}); }

struct SignedRows {
  int coeff;
  std::vector<std::vector<int>> rows;
};

// Its expected straightening.
inline std::vector<SignedRows> worked_expansion()
{
  return {
      {-1, {{2, 4}, {1, 3, 5, 7}, {5}, {3, 8}}}, {1, {{2, 5}, {1, 3, 4, 7}, {5}, {3, 8}}},
      {-1, {{2, 5}, {1, 3, 4, 5}, {7}, {3, 8}}}, {1, {{2, 5}, {1, 3, 5, 7}, {3}, {4, 8}}},
      {-1, {{2, 5}, {1, 3, 4, 7}, {3}, {5, 8}}}, {1, {{2, 5}, {1, 3, 4, 5}, {3}, {7, 8}}},
      {1, {{2, 5}, {3, 4, 5, 7}, {3}, {1, 8}}},  {-1, {{1, 5}, {3, 4, 5, 7}, {2}, {3, 8}}},
      {1, {{1, 2}, {3, 4, 5, 7}, {5}, {3, 8}}},
  };
}

// The 3+1-cell Weyl shape: rows (1,3) and (2,2).
inline RowConvexShape weyl31() { return shape({{1, 3}, {2, 2}}); }

} // namespace fixtures

#endif // ROWCONVEX_TESTS_FIXTURES_HPP
