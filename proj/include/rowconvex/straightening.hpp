#ifndef ROWCONVEX_STRAIGHTENING_HPP
#define ROWCONVEX_STRAIGHTENING_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rowconvex/letterplace.hpp"
#include "rowconvex/tableau.hpp"

namespace rowconvex {

// Integer combination of tableaux of one shape.
class FormalTableauSum {
 public:
  using Terms = std::map<Tableau, Integer>;

  FormalTableauSum() = default;
  explicit FormalTableauSum(RowConvexShape shape) : shape_(std::move(shape)) {}

  static FormalTableauSum single(const Tableau& t, const Integer& c = 1)
  {
    FormalTableauSum s(t.shape);
    s.add(t, c);
    return s;
  }

  const RowConvexShape& shape() const { return shape_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(const Tableau& t) const
  {
    auto it = terms_.find(t);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add(const Tableau& t, const Integer& c)
  {
    if (c == 0) return;
    if (t.shape != shape_)
      throw Error(ErrorCode::ShapeMismatch, "tableau shape differs from the sum's shape", t.shape.describe());
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const FormalTableauSum& o, const Integer& c)
  {
    for (const auto& [t, x] : o.terms_) add(t, c * x);
  }

  // terms ordered by modified column word
  std::vector<std::pair<Tableau, Integer>> sorted_terms() const
  {
    std::vector<std::pair<Tableau, Integer>> v(terms_.begin(), terms_.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
      return word_less(column_word(a.first, ColumnWord::modified), column_word(b.first, ColumnWord::modified));
    });
    return v;
  }

  Polynomial expand() const
  {
    Polynomial p;
    for (const auto& [t, c] : terms_) p.add_scaled(tableau_to_polynomial(t), Rational(c));
    return p;
  }

  bool operator==(const FormalTableauSum& o) const { return shape_ == o.shape_ && terms_ == o.terms_; }

 private:
  RowConvexShape shape_;
  Terms terms_;
};

struct Shuffle {
  Word sub;
  Word rest;
  int signature = 0;
};

// pairs i<j with w_i > w_j and both letters odd
inline int shuffle_signature(const Word& w)
{
  int n = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i].rank > w[j].rank && w[i].is_minus() && w[j].is_minus()) ++n;
  return n;
}

// All splits of word into a subword of length k and its complement, in
// lexicographic order of the chosen positions. The signature is taken on
// the concatenation sub, rest.
inline std::vector<Shuffle> shuffles(const Word& word, int k)
{
  std::vector<Shuffle> out;
  const int n = static_cast<int>(word.size());
  if (k < 0 || k > n) return out;
  std::vector<int> pos(k);
  std::iota(pos.begin(), pos.end(), 0);
  while (true) {
    Shuffle s;
    std::vector<bool> chosen(n, false);
    for (int p : pos) {
      chosen[p] = true;
      s.sub.push_back(word[p]);
    }
    for (int t = 0; t < n; ++t)
      if (!chosen[t]) s.rest.push_back(word[t]);
    Word cat = s.sub;
    cat.insert(cat.end(), s.rest.begin(), s.rest.end());
    s.signature = shuffle_signature(cat);
    out.push_back(std::move(s));
    int t = k - 1;
    while (t >= 0 && pos[t] == n - k + t) --t;
    if (t < 0) break;
    ++pos[t];
    for (int r = t + 1; r < k; ++r) pos[r] = pos[r - 1] + 1;
  }
  return out;
}

// Marked columns of the top and bottom row, as absolute column indices.
struct SyzygySpec {
  std::vector<int> top;
  std::vector<int> bottom;
};

enum class SyzygyMethod {
  polarization, // coefficients obtained by polarizing the positive-letter identity
  printed,      // the closed-form alpha/beta coefficients, checked by the oracle
};

struct StraightenOptions {
  bool verify_result = true; // expansion check of the final identity
  bool verify_steps = false; // expansion check of every syzygy
  SyzygyMethod method = SyzygyMethod::polarization;
};

struct StraightenStats {
  int max_depth = 0; // 1 when row_straighten never recursed
  long syzygies = 0;
};

namespace detail {

using RationalSum = std::map<Tableau, Rational>;

inline void add_to(RationalSum& s, const Tableau& t, const Rational& c)
{
  if (c == 0) return;
  auto [it, inserted] = s.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) s.erase(it);
  }
}

// Fresh plus letters above every alphabet letter, and fake minus letters
// below every alphabet letter.
inline Letter fresh_a() { return plus_letter(1 << 28); }
inline Letter fresh_b() { return plus_letter((1 << 28) + 1); }
inline Letter fresh_c() { return plus_letter((1 << 28) + 2); }
inline Letter fake_letter(int c) { return minus_letter(-(1 << 28) + c); }

// Sort every row; returns 0 when a row repeats a minus letter.
inline int canonical_rows(Tableau& t)
{
  int sign = 1;
  for (auto& r : t.rows) {
    sign *= sort_row(r);
    if (sign == 0) return 0;
  }
  return sign;
}

inline RationalSum canonicalize(const RationalSum& s)
{
  RationalSum out;
  for (const auto& [t, c] : s) {
    Tableau u = t;
    int sign = canonical_rows(u);
    if (sign) add_to(out, u, sign > 0 ? c : Rational(-c));
  }
  return out;
}

// Parity of a row of [T]: each cell contributes |letter| + |place| with
// minus places, so only plus letters count.
inline int row_parity(const Word& w) { return count_plus(w) & 1; }

// D_{x,a} applied to a combination of (unsorted) tableaux, read through
// the map T -> [T]. Each replaced row gains c(new)!/c(old)!.
inline RationalSum polarize_tableaux(const Letter& x, const Letter& a, const RationalSum& s)
{
  const int d = (x.parity() + a.parity()) & 1;
  RationalSum out;
  for (const auto& [t, c] : s) {
    int before = 0;
    for (int r = 0; r < t.shape.num_rows(); ++r) {
      const Word& row = t.rows[r];
      int inner = 0;
      Integer old_factor = word_factor(row);
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (row[k] == a) {
          Tableau u = t;
          u.rows[r][k] = x;
          Rational f(word_factor(u.rows[r]), old_factor);
          f.canonicalize();
          if ((d * (before + inner)) & 1) f = -f;
          add_to(out, u, c * f);
        }
        inner += row[k].parity();
      }
      before += row_parity(row);
    }
  }
  return out;
}

inline std::string spec_text(const SyzygySpec& spec)
{
  std::string s = "top {";
  for (std::size_t k = 0; k < spec.top.size(); ++k) s += (k ? "," : "") + std::to_string(spec.top[k]);
  s += "} bottom {";
  for (std::size_t k = 0; k < spec.bottom.size(); ++k) s += (k ? "," : "") + std::to_string(spec.bottom[k]);
  return s + "}";
}

inline void check_identity(const Tableau& t, const RationalSum& s, const std::string& context)
{
  Polynomial lhs = tableau_to_polynomial(t);
  Polynomial rhs;
  for (const auto& [u, c] : s) rhs.add_scaled(tableau_to_polynomial(u), c);
  if (!(lhs == rhs)) {
    Polynomial diff = lhs - rhs;
    throw Error(ErrorCode::OracleMismatch, "expansion identity fails for " + context,
                describe(t) + " with " + std::to_string(s.size()) + " terms; difference has " +
                    std::to_string(diff.size()) + " monomials");
  }
}

struct SyzygyResult {
  RationalSum terms;
  Rational alpha_e;
};

// Exchange identity for a two-row tableau. mt and mb are marked positions
// (offsets inside the top and bottom rows). The identity is obtained from
// the positive-letter identity in fresh letters a < b < c by polarizing
// a, c and b into the unmarked top, unmarked bottom and marked letters.
inline SyzygyResult syzygy_polarized(const Tableau& t, const std::vector<int>& mt, const std::vector<int>& mb,
                                     bool skew)
{
  const Word& v = t.rows[0];
  const Word& w = t.rows[1];
  const int n1 = static_cast<int>(v.size());
  const int j = static_cast<int>(mt.size());
  const int l = static_cast<int>(mb.size());
  const int k = static_cast<int>(w.size()) - l;
  const Letter A = fresh_a(), B = fresh_b(), C = fresh_c();
  std::vector<bool> top_marked(v.size(), false), bottom_marked(w.size(), false);
  for (int p : mt) top_marked[p] = true;
  for (int p : mb) bottom_marked[p] = true;

  Word x, z, u;
  Tableau lhs = t;
  for (int p = 0; p < n1; ++p) {
    lhs.rows[0][p] = top_marked[p] ? B : A;
    if (!top_marked[p]) x.push_back(v[p]);
  }
  for (std::size_t p = 0; p < w.size(); ++p) {
    lhs.rows[1][p] = bottom_marked[p] ? B : C;
    if (!bottom_marked[p]) z.push_back(w[p]);
  }
  for (int p : mb) u.push_back(w[p]);
  for (int p : mt) u.push_back(v[p]);

  Rational norm(Integer(1), word_factor(x) * word_factor(z) * word_factor(u));
  norm.canonicalize();

  auto run = [&](RationalSum s) {
    for (const auto& y : x) s = polarize_tableaux(y, A, s);
    for (const auto& y : z) s = polarize_tableaux(y, C, s);
    for (const auto& y : u) s = polarize_tableaux(y, B, s);
    return canonicalize(s);
  };

  RationalSum left = run(RationalSum{{lhs, norm}});
  RationalSum right;
  if (!skew && j + l <= n1) {
    Tableau rt = t;
    for (int p = 0; p < n1; ++p) rt.rows[0][p] = p < j + l ? B : A;
    for (int p = 0; p < l + k; ++p) rt.rows[1][p] = p < l ? A : C;
    right = run(RationalSum{{rt, (l & 1) ? Rational(-norm) : norm}});
  }

  Tableau key = t;
  int tsign = canonical_rows(key);
  Rational alpha = 0;
  if (tsign != 0) {
    auto it = left.find(key);
    if (it != left.end()) alpha = it->second * tsign;
  }
  if (alpha == 0)
    throw Error(ErrorCode::NonUnitPivot, "the tableau does not occur in the polarized identity", describe(t));

  RationalSum out;
  for (const auto& [s, c] : right) add_to(out, s, c / alpha);
  for (const auto& [s, c] : left)
    if (!(s == key)) add_to(out, s, -c / alpha);
  return {std::move(out), alpha};
}

// The closed-form coefficient formulas, reading |w| as the number of minus
// letters of w. Requires the top marks to be a suffix of the top row and
// the bottom marks to be consecutive.
inline SyzygyResult syzygy_printed(const Tableau& t, const std::vector<int>& mt, const std::vector<int>& mb)
{
  const Word& v = t.rows[0];
  const Word& w = t.rows[1];
  const int n1 = static_cast<int>(v.size());
  const int j = static_cast<int>(mt.size());
  const int l = static_cast<int>(mb.size());
  const int i = n1 - j - l;
  const int len = i + j + l;

  Word x(v.begin(), v.begin() + (n1 - j));
  Word z1, z2, u;
  const int b0 = l ? mb.front() : static_cast<int>(w.size());
  const int b1 = l ? mb.back() : static_cast<int>(w.size()) - 1;
  for (int p = 0; p < static_cast<int>(w.size()); ++p) {
    if (p < b0) z1.push_back(w[p]);
    else if (p > b1) z2.push_back(w[p]);
  }
  Word z = z1;
  z.insert(z.end(), z2.begin(), z2.end());
  for (int p : mb) u.push_back(w[p]);
  for (int p : mt) u.push_back(v[p]);

  auto neg = [](const Word& a) { return count_minus(a); };
  auto cat = [](Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  auto m = [&](const Word& a) { return shuffle_signature(a) + neg(a) * (neg(a) - 1) / 2; };
  auto ratio = [](const Word& ab, const Word& a, const Word& b) {
    Rational r(word_factor(ab), word_factor(a) * word_factor(b));
    r.canonicalize();
    return r;
  };
  auto alpha = [&](const Word& up, const Word& upp) {
    int n = neg(z1) * neg(up) + neg(z) * len + neg(up) * len + shuffle_signature(cat(upp, up)) + m(cat(x, upp)) +
            m(cat(cat(z1, up), z2));
    Rational c = ratio(cat(x, upp), x, upp) * ratio(cat(cat(z1, up), z2), z, up);
    return (n & 1) ? Rational(-c) : c;
  };
  auto beta = [&](const Word& xp, const Word& xpp) {
    int n = neg(z) * len + neg(xpp) * (len - neg(u)) + shuffle_signature(cat(xp, xpp)) + m(cat(u, xp)) +
            m(cat(xpp, z)) + l;
    Rational c = ratio(cat(u, xp), u, xp) * ratio(cat(xpp, z), xpp, z);
    return (n & 1) ? Rational(-c) : c;
  };

  Word u_low(u.begin(), u.begin() + l), u_high(u.begin() + l, u.end());
  Rational ae = alpha(u_low, u_high);
  RationalSum raw;
  bool first = true;
  for (const auto& sh : shuffles(u, l)) {
    if (first) { // the identity shuffle comes first
      first = false;
      continue;
    }
    Tableau s = t;
    s.rows[0] = cat(x, sh.rest);
    s.rows[1] = cat(cat(z1, sh.sub), z2);
    add_to(raw, s, -alpha(sh.sub, sh.rest) / ae);
  }
  if (i >= 0)
    for (const auto& sh : shuffles(x, i)) {
      Tableau s = t;
      s.rows[0] = cat(u, sh.sub);
      s.rows[1] = cat(sh.rest, z);
      add_to(raw, s, beta(sh.sub, sh.rest) / ae);
    }
  return {canonicalize(raw), ae};
}

inline bool top_contains_bottom(const Tableau& t)
{
  const Row& a = t.shape.row(0);
  const Row& b = t.shape.row(1);
  return a.start <= b.start && b.end <= a.end;
}

inline int count_columns(const RowConvexShape& d) { return static_cast<int>(d.columns().size()); }

inline SyzygyResult apply_syzygy(const Tableau& t, const SyzygySpec& spec, SyzygyMethod method)
{
  if (t.shape.num_rows() != 2) throw Error(ErrorCode::BadSpec, "syzygy needs a two-row tableau", describe(t));
  if (!is_row_standard(t)) throw Error(ErrorCode::NotRowStandard, "rows must be <+-increasing", describe(t));
  const Row& top = t.shape.row(0);
  const Row& bottom = t.shape.row(1);
  if (spec.top.empty() && spec.bottom.empty()) throw Error(ErrorCode::BadSpec, "empty marking", spec_text(spec));
  auto check_marks = [&](const std::vector<int>& cols, const Row& r) {
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (!r.contains(cols[k])) throw Error(ErrorCode::BadSpec, "marked column outside its row", spec_text(spec));
      if (k && cols[k] != cols[k - 1] + 1)
        throw Error(ErrorCode::BadSpec, "marked columns must be consecutive", spec_text(spec));
    }
  };
  check_marks(spec.top, top);
  check_marks(spec.bottom, bottom);
  const bool contained = top_contains_bottom(t);
  if (contained) {
    if (!spec.top.empty() && spec.top.back() != top.end)
      throw Error(ErrorCode::BadSpec, "top marks must end at the last column of the top row", spec_text(spec));
  } else {
    if (static_cast<int>(spec.top.size() + spec.bottom.size()) <= count_columns(t.shape))
      throw Error(ErrorCode::BadSpec, "skew marking must exceed the number of columns", spec_text(spec));
  }
  std::vector<int> mt, mb;
  for (int c : spec.top) mt.push_back(c - top.start);
  for (int c : spec.bottom) mb.push_back(c - bottom.start);
  SyzygyResult r;
  if (method == SyzygyMethod::printed) {
    if (!contained) throw Error(ErrorCode::BadSpec, "the closed-form coefficients need nested rows", spec_text(spec));
    r = syzygy_printed(t, mt, mb);
  } else {
    r = syzygy_polarized(t, mt, mb, !contained);
  }
  return r;
}

} // namespace detail

inline FormalTableauSum to_formal_sum(const RowConvexShape& shape, const detail::RationalSum& s,
                                      const std::string& context)
{
  FormalTableauSum out(shape);
  for (const auto& [t, c] : s) {
    if (!is_integer(c))
      throw Error(ErrorCode::NonUnitPivot, "non-integral coefficient in " + context, describe(t) + " : " + c.get_str());
    out.add(t, c.get_num());
  }
  return out;
}

// Syz(T) for a marking; the result is checked against the expansion oracle.
inline FormalTableauSum syzygy(const Tableau& t, const SyzygySpec& spec,
                               SyzygyMethod method = SyzygyMethod::polarization)
{
  auto r = detail::apply_syzygy(t, spec, method);
  if (r.alpha_e != 1 && r.alpha_e != -1)
    throw Error(ErrorCode::NonUnitPivot, "pivot coefficient is " + r.alpha_e.get_str(), describe(t));
  detail::check_identity(t, r.terms, "syzygy " + detail::spec_text(spec));
  return to_formal_sum(t.shape, r.terms, "syzygy");
}

namespace detail {

inline bool two_row_straight(const Tableau& t)
{
  for (int c = t.shape.row(1).start; c <= t.shape.row(1).end; ++c)
    if (flippable(t, 0, 1, c)) return false;
  return true;
}

inline RationalSum row_straighten_nested(const Tableau& t, int depth, const StraightenOptions& opt,
                                         StraightenStats& stats)
{
  stats.max_depth = std::max(stats.max_depth, depth);
  if (depth > 256)
    throw Error(ErrorCode::OracleMismatch, "row_straighten made no progress", describe(t));
  const Row& top = t.shape.row(0);
  const Row& bottom = t.shape.row(1);
  int c2 = 0;
  for (int c = bottom.start; c <= bottom.end && !c2; ++c)
    if (flippable(t, 0, 1, c)) c2 = c;
  if (!c2) throw Error(ErrorCode::AlreadyStraight, "two-row tableau has no flippable inversion", describe(t));
  const Letter& wc2 = t.at(1, c2);
  int c1 = 0;
  for (int c = bottom.start; c <= bottom.end; ++c) {
    const Letter* left = t.find(0, c - 1);
    if (!left || less_plus(*left, t.at(1, c))) {
      c1 = c;
      break;
    }
  }
  int c3 = c2;
  while (c3 + 1 <= bottom.end && t.at(1, c3 + 1) == wc2) ++c3;
  int top_start = c2;
  if (c1 >= c2) {
    top_start = 0;
    for (int c = top.start; c <= top.end && !top_start; ++c)
      if (greater_plus(t.at(0, c), wc2)) top_start = c;
  }
  SyzygySpec spec;
  for (int c = top_start; c <= top.end; ++c) spec.top.push_back(c);
  for (int c = c1; c <= c3; ++c) spec.bottom.push_back(c);
  ++stats.syzygies;
  auto syz = apply_syzygy(t, spec, opt.method);
  if (opt.verify_steps || opt.method == SyzygyMethod::printed)
    check_identity(t, syz.terms, "syzygy " + spec_text(spec) + " in row_straighten");

  // keep terms whose plain column word grew; the rest go round again
  const Word base = column_word(t, ColumnWord::plain);
  RationalSum out;
  for (const auto& [s, c] : syz.terms) {
    if (word_less(base, column_word(s, ColumnWord::plain)) || two_row_straight(s)) {
      add_to(out, s, c);
    } else if (s == t) {
      throw Error(ErrorCode::OracleMismatch, "syzygy returned its own input", describe(t));
    } else {
      for (const auto& [s2, c2x] : row_straighten_nested(s, depth + 1, opt, stats)) add_to(out, s2, c * c2x);
    }
  }
  return out;
}

inline int fake_sign(int f, const Word& top)
{
  int e = f * (f - 1) / 2 + f * count_minus(top);
  return (e & 1) ? -1 : 1;
}

inline RationalSum row_straighten_raw(const Tableau& t, const StraightenOptions& opt, StraightenStats& stats)
{
  const Row& top = t.shape.row(0);
  const Row& bottom = t.shape.row(1);
  if (top.start < bottom.start) return row_straighten_nested(t, 1, opt, stats);

  // Skew pair: prepend fake minus letters so the top row covers the bottom
  // row, straighten, and keep only the terms whose fake cells are intact.
  // Everything is shifted one column right to keep columns positive.
  const int f = top.start - bottom.start + 1;
  Word fakes;
  for (int c = bottom.start - 1; c <= top.start - 1; ++c) fakes.push_back(fake_letter(c));
  Word ext_top = fakes;
  ext_top.insert(ext_top.end(), t.rows[0].begin(), t.rows[0].end());
  auto ext_shape = RowConvexShape::from_sorted({{bottom.start, top.end + 1}, {bottom.start + 1, bottom.end + 1}});
  Tableau ext(ext_shape, {ext_top, t.rows[1]});
  RationalSum raw = row_straighten_nested(ext, 1, opt, stats);
  const int e0 = fake_sign(f, t.rows[0]);
  RationalSum out;
  for (const auto& [s, c] : raw) {
    if (!std::equal(fakes.begin(), fakes.end(), s.rows[0].begin())) continue;
    Word rest(s.rows[0].begin() + f, s.rows[0].end());
    Tableau u(t.shape, {rest, s.rows[1]});
    int sign = fake_sign(f, rest) * e0;
    add_to(out, u, sign > 0 ? c : Rational(-c));
  }
  return out;
}

} // namespace detail

inline FormalTableauSum row_straighten(const Tableau& t, const StraightenOptions& opt = {},
                                       StraightenStats* stats = nullptr)
{
  if (t.shape.num_rows() != 2) throw Error(ErrorCode::BadSpec, "row_straighten needs a two-row tableau", describe(t));
  if (!is_row_standard(t)) throw Error(ErrorCode::NotRowStandard, "rows must be <+-increasing", describe(t));
  if (detail::two_row_straight(t)) throw Error(ErrorCode::AlreadyStraight, "tableau is straight", describe(t));
  StraightenStats local;
  auto raw = detail::row_straighten_raw(t, opt, stats ? *stats : local);
  if (opt.verify_result) detail::check_identity(t, raw, "row_straighten");
  return to_formal_sum(t.shape, raw, "row_straighten");
}

namespace detail {

inline std::map<Tableau, FormalTableauSum>& straighten_memo(SyzygyMethod method)
{
  thread_local std::map<Tableau, FormalTableauSum> polarized, printed;
  return method == SyzygyMethod::printed ? printed : polarized;
}

inline FormalTableauSum straighten_row_standard(const Tableau& t, const StraightenOptions& opt,
                                                StraightenStats& stats)
{
  auto& memo = straighten_memo(opt.method);
  if (auto it = memo.find(t); it != memo.end()) return it->second;
  auto res = is_straight(t);
  FormalTableauSum out(t.shape);
  if (res.straight) {
    out.add(t, 1);
  } else {
    const int i = res.witness->upper_row;
    const int j = res.witness->lower_row;
    Tableau pair(RowConvexShape::from_sorted({t.shape.row(i), t.shape.row(j)}), {t.rows[i], t.rows[j]});
    auto rs = row_straighten_raw(pair, opt, stats);
    int middle = 0;
    for (int r = i + 1; r < j; ++r) middle += count_plus(t.rows[r]);
    for (const auto& [s, c] : rs) {
      if (!is_integer(c))
        throw Error(ErrorCode::NonUnitPivot, "non-integral coefficient in row_straighten", describe(s));
      int n = (count_plus(s.rows[1]) + count_plus(t.rows[j])) * middle;
      Tableau u = t;
      u.rows[i] = s.rows[0];
      u.rows[j] = s.rows[1];
      Integer coef = c.get_num();
      if (n & 1) coef = -coef;
      out.add_scaled(straighten_row_standard(u, opt, stats), coef);
    }
  }
  if (memo.size() > 500000) memo.clear();
  memo.emplace(t, out);
  return out;
}

} // namespace detail

// Express [T] in straight tableaux. Rows that are not <+-increasing are
// sorted first (a repeated minus letter gives the empty sum).
inline FormalTableauSum straighten_tableau(const Tableau& t, const StraightenOptions& opt = {},
                                           StraightenStats* stats = nullptr)
{
  Tableau u = t;
  int sign = detail::canonical_rows(u);
  if (sign == 0) return FormalTableauSum(t.shape);
  StraightenStats local;
  FormalTableauSum r = detail::straighten_row_standard(u, opt, stats ? *stats : local);
  FormalTableauSum out(t.shape);
  out.add_scaled(r, sign);
  if (opt.verify_result) {
    bool trivial = out.size() == 1 && out.terms().begin()->first == t && out.terms().begin()->second == 1;
    if (!trivial && !(out.expand() == tableau_to_polynomial(t)))
      throw Error(ErrorCode::OracleMismatch, "straightened sum does not expand to [T]", describe(t));
  }
  return out;
}

} // namespace rowconvex

#endif // ROWCONVEX_STRAIGHTENING_HPP
