#ifndef ROWCONVEX_ALPHABET_HPP
#define ROWCONVEX_ALPHABET_HPP

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rowconvex/error.hpp"

namespace rowconvex {

// plus letters are even, minus letters are odd
enum class Sign : unsigned char { plus = 0, minus = 1 };

inline int parity(Sign s) { return s == Sign::minus ? 1 : 0; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

// A letter is identified by its rank in the ambient total order and its
// sign. Alphabets map symbols to ranks; letters outside any alphabet (fresh
// or fake letters used during straightening) simply use unused ranks.
struct Letter {
  int rank = 0;
  Sign sign = Sign::plus;

  bool is_plus() const { return sign == Sign::plus; }
  bool is_minus() const { return sign == Sign::minus; }
  int parity() const { return rowconvex::parity(sign); }

  auto operator<=>(const Letter&) const = default;
};

inline Letter plus_letter(int rank) { return Letter{rank, Sign::plus}; }
inline Letter minus_letter(int rank) { return Letter{rank, Sign::minus}; }

// a <+ b: a < b, or a = b with both plus
inline bool less_plus(const Letter& a, const Letter& b)
{
  return a.rank < b.rank || (a == b && a.is_plus());
}

// a <- b: a < b, or a = b with both minus
inline bool less_minus(const Letter& a, const Letter& b)
{
  return a.rank < b.rank || (a == b && a.is_minus());
}

inline bool greater_plus(const Letter& a, const Letter& b) { return less_plus(b, a); }
inline bool greater_minus(const Letter& a, const Letter& b) { return less_minus(b, a); }

using Word = std::vector<Letter>;

inline bool word_less(const Word& a, const Word& b)
{
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Letter& x, const Letter& y) { return x.rank < y.rank; });
}

inline int count_minus(const Word& w)
{
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](const Letter& l) { return l.is_minus(); }));
}

inline int count_plus(const Word& w) { return static_cast<int>(w.size()) - count_minus(w); }

class Alphabet {
 public:
  struct Entry {
    std::string symbol;
    Letter letter;
  };

  Alphabet() = default;

  // Ranks must be strictly increasing in insertion order.
  void add(const std::string& symbol, Sign sign, std::optional<int> rank = std::nullopt)
  {
    if (symbol.empty()) throw Error(ErrorCode::ParseError, "empty letter symbol");
    if (find(symbol)) throw Error(ErrorCode::ParseError, "duplicate symbol", symbol);
    int r = rank ? *rank : (entries_.empty() ? 1 : entries_.back().letter.rank + 1);
    if (!entries_.empty() && r <= entries_.back().letter.rank)
      throw Error(ErrorCode::ParseError, "alphabet ranks must increase", symbol);
    entries_.push_back({symbol, Letter{r, sign}});
  }

  // "a+,b-,c+" in increasing order
  static Alphabet parse(std::string_view spec)
  {
    Alphabet a;
    if (spec.find_first_not_of(" \t") == std::string_view::npos) return a;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
      std::size_t comma = spec.find(',', pos);
      if (comma == std::string_view::npos) comma = spec.size();
      std::string tok(spec.substr(pos, comma - pos));
      tok.erase(0, tok.find_first_not_of(" \t"));
      tok.erase(tok.find_last_not_of(" \t") + 1);
      if (tok.empty()) throw Error(ErrorCode::ParseError, "empty alphabet entry", std::string(spec));
      auto [sym, sign] = split_token(tok);
      a.add(sym, sign);
      pos = comma + 1;
    }
    return a;
  }

  // symbols "1", ..., "n" with rank equal to the numeric value
  static Alphabet numeric(int n, Sign sign)
  {
    Alphabet a;
    for (int i = 1; i <= n; ++i) a.add(std::to_string(i), sign, i);
    return a;
  }

  static std::pair<std::string, Sign> split_token(const std::string& tok)
  {
    if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-'))
      throw Error(ErrorCode::ParseError, "letter must be a symbol followed by + or -", tok);
    return {tok.substr(0, tok.size() - 1), tok.back() == '+' ? Sign::plus : Sign::minus};
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  std::vector<Letter> letters() const
  {
    std::vector<Letter> out;
    for (const auto& e : entries_) out.push_back(e.letter);
    return out;
  }

  const Entry* find(const std::string& symbol) const
  {
    for (const auto& e : entries_)
      if (e.symbol == symbol) return &e;
    return nullptr;
  }

  const Entry* find(const Letter& l) const
  {
    for (const auto& e : entries_)
      if (e.letter == l) return &e;
    return nullptr;
  }

  bool contains(const Letter& l) const { return find(l) != nullptr; }

  // parse "a+" against this alphabet
  Letter letter(const std::string& token) const
  {
    auto [sym, sign] = split_token(token);
    const Entry* e = find(sym);
    if (!e || e->letter.sign != sign) throw Error(ErrorCode::UnknownLetter, "letter not in alphabet", token);
    return e->letter;
  }

  std::string symbol(const Letter& l) const
  {
    if (const Entry* e = find(l)) return e->symbol;
    return "#" + std::to_string(l.rank);
  }

  std::string token(const Letter& l) const { return symbol(l) + sign_char(l.sign); }

  std::string spec() const
  {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ',';
      s += token(entries_[i].letter);
    }
    return s;
  }

  Alphabet without(const Letter& l) const
  {
    Alphabet a;
    for (const auto& e : entries_)
      if (e.letter != l) a.entries_.push_back(e);
    return a;
  }

  bool operator==(const Alphabet& o) const
  {
    if (entries_.size() != o.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].symbol != o.entries_[i].symbol || entries_[i].letter != o.entries_[i].letter) return false;
    return true;
  }

 private:
  std::vector<Entry> entries_;
};

} // namespace rowconvex

#endif // ROWCONVEX_ALPHABET_HPP
