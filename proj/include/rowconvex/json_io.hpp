#ifndef ROWCONVEX_JSON_IO_HPP
#define ROWCONVEX_JSON_IO_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "rowconvex/basis.hpp"
#include "rowconvex/branching.hpp"
#include "rowconvex/ring.hpp"
#include "rowconvex/straightening.hpp"

namespace rowconvex::io {

using nlohmann::json;

namespace detail {

[[noreturn]] inline void fail(const std::string& what, const json& where)
{
  throw Error(ErrorCode::ParseError, what, where.dump());
}

inline const json& field(const json& j, const char* key)
{
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"", j);
  return j.at(key);
}

inline int as_int(const json& j)
{
  if (!j.is_number_integer()) fail("expected an integer", j);
  return j.get<int>();
}

inline const std::string& as_string(const json& j)
{
  if (!j.is_string()) fail("expected a string", j);
  return j.get_ref<const std::string&>();
}

inline bool is_number(const std::string& s)
{
  if (s.empty()) return false;
  std::size_t k = s[0] == '-' ? 1 : 0;
  if (k == s.size()) return false;
  return std::all_of(s.begin() + k, s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace detail

inline json integer_json(const Integer& z)
{
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

inline Integer integer_from_json(const json& j)
{
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) detail::fail("bad integer", j);
    return z;
  }
  detail::fail("expected an integer", j);
}

inline Rational rational_from_json(const json& j)
{
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) detail::fail("expected a rational as \"p/q\"", j);
  Rational q;
  if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) detail::fail("bad rational", j);
  q.canonicalize();
  return q;
}

// ---- shapes ----

inline json to_json(const RowConvexShape& d)
{
  json rows = json::array();
  for (const auto& r : d.rows()) rows.push_back({{"start", r.start}, {"end", r.end}});
  return {{"rows", rows}};
}

// Rows may come in any order; the permutation maps sorted rows to input rows.
inline SortedShape sorted_shape_from_json(const json& j)
{
  const json& rows = detail::field(j, "rows");
  if (!rows.is_array()) detail::fail("\"rows\" must be an array", j);
  std::vector<std::pair<int, int>> iv;
  for (const auto& r : rows) iv.emplace_back(detail::as_int(detail::field(r, "start")), detail::as_int(detail::field(r, "end")));
  return make_shape(iv);
}

inline RowConvexShape shape_from_json(const json& j) { return sorted_shape_from_json(j).shape; }

// ---- letters and tableaux ----

inline json word_json(const Word& w, const Alphabet& a)
{
  json out = json::array();
  for (const auto& l : w) out.push_back(a.token(l));
  return out;
}

inline Word word_from_json(const json& j, const Alphabet& a)
{
  if (!j.is_array()) detail::fail("expected a list of letters", j);
  Word w;
  for (const auto& x : j) w.push_back(a.letter(detail::as_string(x)));
  return w;
}

inline json to_json(const Tableau& t, const Alphabet& a)
{
  json rows = json::array();
  for (const auto& r : t.rows) rows.push_back(word_json(r, a));
  return {{"shape", to_json(t.shape)}, {"rows", rows}};
}

inline Tableau tableau_from_json(const json& j, const Alphabet& a)
{
  SortedShape s = sorted_shape_from_json(detail::field(j, "shape"));
  const json& rows = detail::field(j, "rows");
  if (!rows.is_array() || rows.size() != s.permutation.size()) detail::fail("one letter list per row is required", j);
  std::vector<Word> words;
  for (int k : s.permutation) words.push_back(word_from_json(rows[k], a));
  for (int i = 0; i < s.shape.num_rows(); ++i)
    if (static_cast<int>(words[i].size()) != s.shape.row(i).length())
      throw Error(ErrorCode::LengthMismatch, "row length differs from its interval", std::to_string(i));
  return Tableau(s.shape, words);
}

// Letters collected from tokens; symbols that are all integers sort
// numerically, otherwise by string.
inline Alphabet infer_alphabet(const std::vector<std::string>& tokens)
{
  std::map<std::string, Sign> signs;
  for (const auto& tok : tokens) {
    auto [sym, sign] = Alphabet::split_token(tok);
    auto [it, inserted] = signs.emplace(sym, sign);
    if (!inserted && it->second != sign) throw Error(ErrorCode::ParseError, "symbol used with both signs", sym);
  }
  std::vector<std::string> syms;
  for (const auto& [s, sg] : signs) syms.push_back(s);
  bool numeric = std::all_of(syms.begin(), syms.end(), detail::is_number);
  if (numeric)
    std::sort(syms.begin(), syms.end(), [](const std::string& x, const std::string& y) { return std::stol(x) < std::stol(y); });
  Alphabet a;
  for (const auto& s : syms) {
    if (numeric) a.add(s, signs[s], std::stoi(s));
    else a.add(s, signs[s]);
  }
  return a;
}

// every string that sits inside a "rows" letter list of a tableau
inline void collect_tableau_tokens(const json& j, std::vector<std::string>& out)
{
  if (j.is_object()) {
    if (j.contains("rows") && j.contains("shape") && j["rows"].is_array()) {
      for (const auto& r : j["rows"])
        if (r.is_array())
          for (const auto& x : r)
            if (x.is_string()) out.push_back(x.get<std::string>());
    }
    for (const auto& [k, v] : j.items()) collect_tableau_tokens(v, out);
  } else if (j.is_array()) {
    for (const auto& v : j) collect_tableau_tokens(v, out);
  }
}

// ---- polynomials ----

inline std::string place_token(const Letter& p) { return std::to_string(p.rank) + sign_char(p.sign); }

inline Letter place_from_token(const std::string& tok)
{
  auto [sym, sign] = Alphabet::split_token(tok);
  if (!detail::is_number(sym)) throw Error(ErrorCode::ParseError, "place must be a column number with a sign", tok);
  return Letter{std::stoi(sym), sign};
}

inline json to_json(const Polynomial& p, const Alphabet& a)
{
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::array();
    for (const auto& f : m.factors) mono.push_back({a.token(f.var.letter), place_token(f.var.place), f.exp});
    out.push_back({{"coeff", c.get_str()}, {"monomial", mono}});
  }
  return out;
}

inline Polynomial polynomial_from_json(const json& j, const Alphabet& a)
{
  if (!j.is_array()) detail::fail("a polynomial is a list of terms", j);
  Polynomial p;
  for (const auto& term : j) {
    Rational c = rational_from_json(detail::field(term, "coeff"));
    const json& mono = detail::field(term, "monomial");
    if (!mono.is_array()) detail::fail("a monomial is a list of [letter, place, exponent]", term);
    std::vector<Var> vars;
    for (const auto& f : mono) {
      if (!f.is_array() || f.size() != 3) detail::fail("a factor is [letter, place, exponent]", f);
      Var v{a.letter(detail::as_string(f[0])), place_from_token(detail::as_string(f[1]))};
      int e = detail::as_int(f[2]);
      if (e < 1) detail::fail("exponents must be positive", f);
      for (int k = 0; k < e; ++k) vars.push_back(v);
    }
    auto norm = normalize_monomial(vars);
    if (norm.sign == 0) continue;
    p.add_term(norm.monomial, norm.sign > 0 ? c : Rational(-c));
  }
  return p;
}

// ---- formal sums ----

inline json to_json(const FormalTableauSum& s, const Alphabet& a)
{
  json out = json::array();
  for (const auto& [t, c] : s.sorted_terms()) out.push_back({{"coeff", integer_json(c)}, {"tableau", to_json(t, a)}});
  return out;
}

inline FormalTableauSum sum_from_json(const json& j, const Alphabet& a)
{
  if (!j.is_array() || j.empty()) detail::fail("a tableau sum is a nonempty list of {coeff, tableau}", j);
  std::vector<std::pair<Tableau, Integer>> terms;
  for (const auto& term : j)
    terms.emplace_back(tableau_from_json(detail::field(term, "tableau"), a), integer_from_json(detail::field(term, "coeff")));
  FormalTableauSum s(terms.front().first.shape);
  for (const auto& [t, c] : terms) s.add(t, c);
  return s;
}

// ---- flags and characters ----

inline json to_json(const Flags& f, const Alphabet& a) { return {{"g", word_json(f.lower, a)}, {"f", word_json(f.upper, a)}}; }

inline Flags flags_from_json(const json& j, const Alphabet& a)
{
  Flags f;
  f.lower = word_from_json(detail::field(j, "g"), a);
  f.upper = word_from_json(detail::field(j, "f"), a);
  return f;
}

inline json to_json(const CharacterPolynomial& ch, const Alphabet& a)
{
  json out = json::array();
  for (const auto& [e, c] : ch.terms()) {
    json mono = json::object();
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) mono[a.token(ch.variables()[k])] = e[k];
    out.push_back({{"monomial", mono}, {"coeff", integer_json(c)}});
  }
  return out;
}

inline CharacterPolynomial character_from_json(const json& j, const Alphabet& a)
{
  if (!j.is_array()) detail::fail("a character is a list of terms", j);
  CharacterPolynomial ch(a.letters());
  for (const auto& term : j) {
    std::vector<int> e(a.size(), 0);
    const json& mono = detail::field(term, "monomial");
    if (!mono.is_object()) detail::fail("a character monomial is an object", term);
    for (const auto& [tok, x] : mono.items()) e[ch.index_of(a.letter(tok))] += detail::as_int(x);
    ch.add(e, integer_from_json(detail::field(term, "coeff")));
  }
  return ch;
}

// ---- strips and reports ----

inline json to_json(const Strip& e)
{
  json cells = json::array();
  for (const auto& [i, c] : e.cells) cells.push_back({i + 1, c});
  return {{"kind", e.kind == StripKind::horizontal ? "horizontal" : "vertical"}, {"cells", cells}, {"columns", e.columns}};
}

inline json to_json(const BranchingReport& r, const Alphabet& a)
{
  json strips = json::array();
  for (const auto& s : r.strips)
    strips.push_back({{"strip", to_json(s.strip)},
                      {"quotient", to_json(s.quotient)},
                      {"tableaux_with_strip", s.tableaux_with_strip},
                      {"quotient_straight", s.quotient_straight},
                      {"restriction_failures", s.restriction_failures}});
  return {{"character", to_json(r.lhs, a)},
          {"sum_with_factor", to_json(r.rhs_with_factor, a)},
          {"sum_without_factor", to_json(r.rhs_literal, a)},
          {"holds_with_factor", r.holds_with_factor},
          {"holds_without_factor", r.holds_literal},
          {"strips", strips}};
}

inline json to_json(const FiltrationReport& r)
{
  json steps = json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"strip", to_json(s.strip)},
                     {"rank_ge", s.rank_ge},
                     {"rank_gt", s.rank_gt},
                     {"quotient_rank", s.quotient_rank},
                     {"filtration_rank", s.filtration_rank}});
  return {{"steps", steps},
          {"total_straight", r.total_straight},
          {"quotients_match", r.quotients_match},
          {"telescopes", r.telescopes}};
}

inline json to_json(const QuadraticRelation& rel, const Alphabet& a)
{
  json tail = json::array();
  for (const auto& t : rel.tail)
    tail.push_back({{"coeff", integer_json(t.coefficient)}, {"left", to_json(t.left, a)}, {"right", to_json(t.right, a)}});
  return {{"left", to_json(rel.lead_left, a)},
          {"right", to_json(rel.lead_right, a)},
          {"upper_row", rel.upper_row + 1},
          {"lower_row", rel.lower_row + 1},
          {"upper_is_left", rel.upper_is_left},
          {"tail", tail}};
}

inline json to_json(const SubductionResult& r, const Alphabet& a)
{
  json expr = json::array();
  for (const auto& t : r.expression) {
    json fs = json::array();
    for (const auto& f : t.factors) fs.push_back(to_json(f, a));
    expr.push_back({{"coeff", t.coefficient.get_str()}, {"factors", fs}});
  }
  return {{"member", r.member}, {"expression", expr}, {"remainder", to_json(r.remainder, a)}};
}

inline json error_json(const Error& e)
{
  return {{"error", {{"code", error_code_name(e.code())}, {"message", e.message()}, {"witness", e.witness()}}}};
}

} // namespace rowconvex::io

#endif // ROWCONVEX_JSON_IO_HPP
