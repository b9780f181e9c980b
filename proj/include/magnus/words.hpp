#pragma once

// Free group words over an explicit alphabet: run-length syllable form,
// free and cyclic reduction, commutators, and the text grammar
//
//   word := term (('*' | ' ') term)*
//   term := gen ('^' int)? | '[' word ',' word ']' | '(' word ')' ('^' int)?
//   int  := '-'? [1-9][0-9]*
//
// plus the presentation file format ("gens:" / "rel:" lines, '#' comments).

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "magnus/arith.hpp"
#include "magnus/errors.hpp"

namespace magnus {

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline bool valid_generator_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c));
  });
}

/// An ordered list of named generators. Immutable; words hold a shared
/// reference. Two alphabets are interchangeable iff their name lists agree.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
      throw DomainError("alphabet must have at least one generator");
    for (const auto &n : names_)
      if (!valid_generator_name(n))
        throw DomainError("invalid generator name '" + n + "'");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw DomainError("duplicate generator name '" + names_[i] + "'");
  }

  static AlphabetPtr make(std::vector<std::string> names) {
    return std::make_shared<const Alphabet>(std::move(names));
  }

  /// Convenience: "x" -> x1..xq.
  static AlphabetPtr numbered(std::size_t rank, const std::string &stem = "x") {
    std::vector<std::string> names;
    names.reserve(rank);
    for (std::size_t i = 1; i <= rank; ++i)
      names.push_back(stem + std::to_string(i));
    return make(std::move(names));
  }

  std::size_t rank() const { return names_.size(); }
  const std::string &name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string> &names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name)
        return i;
    return std::nullopt;
  }

  friend bool operator==(const Alphabet &a, const Alphabet &b) {
    return a.names_ == b.names_;
  }

private:
  std::vector<std::string> names_;
};

inline bool same_alphabet(const AlphabetPtr &a, const AlphabetPtr &b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_alphabet(const AlphabetPtr &a, const AlphabetPtr &b) {
  if (!same_alphabet(a, b))
    throw MismatchError("words use different alphabets");
}

/// One maximal run g^e, e != 0.
struct Syllable {
  std::uint32_t gen;
  long long exp;

  friend bool operator==(const Syllable &, const Syllable &) = default;
};

/// A freely reduced word: adjacent syllables always carry distinct
/// generators, and no syllable has exponent zero. The empty word is the
/// identity.
class GroupWord {
public:
  GroupWord() = default;
  explicit GroupWord(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  /// Free reduction of an arbitrary syllable sequence.
  static GroupWord reduce(AlphabetPtr alphabet,
                          std::span<const Syllable> raw) {
    GroupWord w(std::move(alphabet));
    for (const Syllable &s : raw)
      w.push_syllable(s.gen, s.exp);
    return w;
  }

  static GroupWord generator(AlphabetPtr alphabet, std::uint32_t g,
                             long long exp = 1) {
    Syllable s{g, exp};
    return reduce(std::move(alphabet), std::span<const Syllable>(&s, 1));
  }

  const AlphabetPtr &alphabet() const { return alphabet_; }
  const std::vector<Syllable> &syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }

  /// Letter length: sum of |exponent|.
  long long length() const {
    long long n = 0;
    for (const auto &s : syllables_)
      n += s.exp < 0 ? -s.exp : s.exp;
    return n;
  }

  /// Appends g^e on the right, maintaining free reduction.
  void push_syllable(std::uint32_t g, long long e) {
    if (alphabet_ && g >= alphabet_->rank())
      throw DomainError("unknown generator index " + std::to_string(g));
    if (e == 0)
      return;
    if (!syllables_.empty() && syllables_.back().gen == g) {
      syllables_.back().exp += e;
      if (syllables_.back().exp == 0)
        syllables_.pop_back();
      return;
    }
    syllables_.push_back({g, e});
  }

  friend bool operator==(const GroupWord &u, const GroupWord &v) {
    if (u.syllables_ != v.syllables_)
      return false;
    if (u.syllables_.empty())
      return true; // identities compare equal regardless of alphabet
    return same_alphabet(u.alphabet_, v.alphabet_);
  }

private:
  AlphabetPtr alphabet_;
  std::vector<Syllable> syllables_;
};

inline GroupWord multiply(const GroupWord &u, const GroupWord &v) {
  if (!u.alphabet())
    return v;
  if (!v.alphabet())
    return u;
  require_same_alphabet(u.alphabet(), v.alphabet());
  GroupWord w = u;
  for (const Syllable &s : v.syllables())
    w.push_syllable(s.gen, s.exp);
  return w;
}

inline GroupWord operator*(const GroupWord &u, const GroupWord &v) {
  return multiply(u, v);
}

inline GroupWord inverse(const GroupWord &u) {
  GroupWord w(u.alphabet());
  for (auto it = u.syllables().rbegin(); it != u.syllables().rend(); ++it)
    w.push_syllable(it->gen, -it->exp);
  return w;
}

inline GroupWord power(const GroupWord &u, long long k) {
  GroupWord base = k < 0 ? inverse(u) : u;
  long long n = k < 0 ? -k : k;
  GroupWord w(u.alphabet());
  for (long long i = 0; i < n; ++i)
    w = multiply(w, base);
  return w;
}

/// Convention [u, v] = u^{-1} v^{-1} u v.
inline GroupWord commutator(const GroupWord &u, const GroupWord &v) {
  return multiply(multiply(inverse(u), inverse(v)), multiply(u, v));
}

/// [[...[[g1,g2],g3]...],gk]; a single input is returned unchanged.
inline GroupWord left_normed_commutator(std::span<const GroupWord> gens) {
  if (gens.empty())
    throw DomainError("left-normed commutator of an empty sequence");
  GroupWord w = gens[0];
  for (std::size_t i = 1; i < gens.size(); ++i)
    w = commutator(w, gens[i]);
  return w;
}

struct CyclicReduction {
  GroupWord core;
  GroupWord conjugator; ///< input = conjugator * core * conjugator^{-1}
};

inline CyclicReduction cyclic_reduce(const GroupWord &u) {
  std::vector<Syllable> syll = u.syllables();
  std::vector<Syllable> conj;
  while (syll.size() >= 2) {
    Syllable &f = syll.front();
    Syllable &l = syll.back();
    if (f.gen != l.gen || (f.exp > 0) == (l.exp > 0))
      break;
    long long fa = f.exp < 0 ? -f.exp : f.exp;
    long long la = l.exp < 0 ? -l.exp : l.exp;
    long long m = std::min(fa, la);
    long long sign = f.exp > 0 ? 1 : -1;
    conj.push_back({f.gen, sign * m});
    f.exp -= sign * m;
    l.exp += sign * m;
    if (l.exp == 0)
      syll.pop_back();
    if (f.exp == 0)
      syll.erase(syll.begin());
  }
  CyclicReduction r;
  r.core = GroupWord::reduce(u.alphabet(), syll);
  r.conjugator = GroupWord::reduce(u.alphabet(), conj);
  return r;
}

// ---------------------------------------------------------------------------
// Word grammar
// ---------------------------------------------------------------------------

namespace detail {

class WordParser {
public:
  WordParser(std::string_view text, AlphabetPtr alphabet)
      : text_(text), alphabet_(std::move(alphabet)) {}

  GroupWord parse() {
    skip_ws();
    if (eof())
      throw ParseError("empty word", 0);
    // "1" denotes the identity word (the grammar has no empty production).
    if (text_[pos_] == '1' && is_end_at(pos_ + 1)) {
      ++pos_;
      skip_ws();
      return GroupWord(alphabet_);
    }
    GroupWord w = parse_word();
    skip_ws();
    if (!eof())
      throw ParseError("unexpected trailing input", pos_);
    return w;
  }

private:
  GroupWord parse_word(char stop = '\0') {
    GroupWord w = parse_term();
    for (;;) {
      std::size_t save = pos_;
      bool sep = skip_separator();
      if (eof() || (stop && text_[pos_] == stop) ||
          text_[pos_] == ',' || text_[pos_] == ']' || text_[pos_] == ')') {
        pos_ = sep ? pos_ : save;
        break;
      }
      if (!sep && !starts_term())
        throw ParseError("expected '*' or term", pos_);
      w = multiply(w, parse_term());
    }
    return w;
  }

  GroupWord parse_term() {
    skip_ws();
    if (eof())
      throw ParseError("expected term", pos_);
    char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      GroupWord a = parse_word();
      expect(',');
      GroupWord b = parse_word();
      expect(']');
      return commutator(a, b);
    }
    if (c == '(') {
      ++pos_;
      GroupWord a = parse_word();
      expect(')');
      long long e = parse_optional_exponent();
      return power(a, e);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      std::string name = lex_name();
      auto idx = alphabet_->find(name);
      if (!idx)
        throw ParseError("unknown generator '" + name + "'", start);
      long long e = parse_optional_exponent();
      return GroupWord::generator(alphabet_, static_cast<std::uint32_t>(*idx),
                                  e);
    }
    throw ParseError("expected generator, '[' or '('", pos_);
  }

  long long parse_optional_exponent() {
    skip_ws();
    if (eof() || text_[pos_] != '^')
      return 1;
    ++pos_;
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (!eof() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (eof() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer exponent", pos_);
    if (text_[pos_] == '0')
      throw ParseError("zero exponent is not allowed", start);
    long long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (1LL << 60))
        throw ParseError("exponent too large", start);
      ++pos_;
    }
    return neg ? -v : v;
  }

  std::string lex_name() {
    std::size_t start = pos_;
    while (!eof() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool starts_term() const {
    if (eof())
      return false;
    char c = text_[pos_];
    return c == '[' || c == '(' ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  /// Consumes '*' or whitespace between terms; returns whether any
  /// separator was present.
  bool skip_separator() {
    bool any = false;
    for (;;) {
      if (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        any = true;
      } else if (!eof() && text_[pos_] == '*') {
        ++pos_;
        any = true;
        skip_ws();
      } else {
        break;
      }
    }
    return any;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (eof() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool eof() const { return pos_ >= text_.size(); }

  bool is_end_at(std::size_t p) const {
    while (p < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[p])))
      ++p;
    return p >= text_.size();
  }

  std::string_view text_;
  AlphabetPtr alphabet_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline GroupWord parse_word(std::string_view text, AlphabetPtr alphabet) {
  return detail::WordParser(text, std::move(alphabet)).parse();
}

/// Canonical plain form, e.g. "x1*x2^-1". The identity prints as "1".
inline std::string format_word(const GroupWord &w) {
  if (w.is_identity())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < w.syllables().size(); ++i) {
    const Syllable &s = w.syllables()[i];
    if (i)
      out += '*';
    out += w.alphabet()->name(s.gen);
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Words with rational exponents
// ---------------------------------------------------------------------------

struct ExpSyllable {
  std::uint32_t gen;
  Rational exp;

  friend bool operator==(const ExpSyllable &, const ExpSyllable &) = default;
};

/// A word whose syllables carry nonzero rational exponents; adjacent
/// syllables have distinct generators. Only merging of adjacent runs is
/// performed (there are no deeper relations to apply).
class ExpWord {
public:
  ExpWord() = default;
  explicit ExpWord(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  static ExpWord reduce(AlphabetPtr alphabet,
                        std::span<const ExpSyllable> raw) {
    ExpWord w(std::move(alphabet));
    for (const auto &s : raw)
      w.push_syllable(s.gen, s.exp);
    return w;
  }

  static ExpWord generator(AlphabetPtr alphabet, std::uint32_t g,
                           const Rational &exp) {
    ExpWord w(std::move(alphabet));
    w.push_syllable(g, exp);
    return w;
  }

  static ExpWord from_word(const GroupWord &w) {
    ExpWord e(w.alphabet());
    for (const Syllable &s : w.syllables())
      e.push_syllable(s.gen, Rational(static_cast<long>(s.exp)));
    return e;
  }

  void push_syllable(std::uint32_t g, const Rational &e) {
    if (alphabet_ && g >= alphabet_->rank())
      throw DomainError("unknown generator index " + std::to_string(g));
    if (e == 0)
      return;
    if (!syllables_.empty() && syllables_.back().gen == g) {
      syllables_.back().exp += e;
      if (syllables_.back().exp == 0)
        syllables_.pop_back();
      return;
    }
    syllables_.push_back({g, e});
  }

  const AlphabetPtr &alphabet() const { return alphabet_; }
  const std::vector<ExpSyllable> &syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }

  friend bool operator==(const ExpWord &u, const ExpWord &v) {
    if (u.syllables_ != v.syllables_)
      return false;
    if (u.syllables_.empty())
      return true;
    return same_alphabet(u.alphabet_, v.alphabet_);
  }

private:
  AlphabetPtr alphabet_;
  std::vector<ExpSyllable> syllables_;
};

inline ExpWord multiply(const ExpWord &u, const ExpWord &v) {
  if (!u.alphabet())
    return v;
  if (!v.alphabet())
    return u;
  require_same_alphabet(u.alphabet(), v.alphabet());
  ExpWord w = u;
  for (const auto &s : v.syllables())
    w.push_syllable(s.gen, s.exp);
  return w;
}

inline ExpWord operator*(const ExpWord &u, const ExpWord &v) {
  return multiply(u, v);
}

inline ExpWord inverse(const ExpWord &u) {
  ExpWord w(u.alphabet());
  for (auto it = u.syllables().rbegin(); it != u.syllables().rend(); ++it)
    w.push_syllable(it->gen, -it->exp);
  return w;
}

ExpWord parse_exp_word(std::string_view text, AlphabetPtr alphabet);

inline std::string format_exp_word(const ExpWord &w) {
  if (w.is_identity())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < w.syllables().size(); ++i) {
    const ExpSyllable &s = w.syllables()[i];
    if (i)
      out += '*';
    out += w.alphabet()->name(s.gen);
    if (s.exp != 1) {
      out += '^';
      out += to_string(s.exp);
    }
  }
  return out;
}

namespace detail {

/// Same grammar as WordParser with rational exponents ('^' int ('/' int)?).
class ExpWordParser {
public:
  ExpWordParser(std::string_view text, AlphabetPtr alphabet)
      : text_(text), alphabet_(std::move(alphabet)) {}

  ExpWord parse() {
    skip_ws();
    if (eof())
      throw ParseError("empty word", 0);
    if (text_[pos_] == '1' && is_end_at(pos_ + 1))
      return ExpWord(alphabet_);
    ExpWord w = parse_word();
    skip_ws();
    if (!eof())
      throw ParseError("unexpected trailing input", pos_);
    return w;
  }

private:
  ExpWord parse_word() {
    ExpWord w = parse_term();
    for (;;) {
      std::size_t save = pos_;
      bool sep = skip_separator();
      if (eof() || text_[pos_] == ',' || text_[pos_] == ']' ||
          text_[pos_] == ')') {
        pos_ = sep ? pos_ : save;
        break;
      }
      if (!sep && !starts_term())
        throw ParseError("expected '*' or term", pos_);
      w = multiply(w, parse_term());
    }
    return w;
  }

  ExpWord parse_term() {
    skip_ws();
    if (eof())
      throw ParseError("expected term", pos_);
    char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      ExpWord a = parse_word();
      expect(',');
      ExpWord b = parse_word();
      expect(']');
      return inverse(a) * inverse(b) * a * b;
    }
    if (c == '(') {
      ++pos_;
      ExpWord a = parse_word();
      expect(')');
      Rational e = parse_optional_exponent();
      return pow_exp(a, e);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      std::string name = lex_name();
      auto idx = alphabet_->find(name);
      if (!idx)
        throw ParseError("unknown generator '" + name + "'", start);
      Rational e = parse_optional_exponent();
      return ExpWord::generator(alphabet_, static_cast<std::uint32_t>(*idx),
                                e);
    }
    throw ParseError("expected generator, '[' or '('", pos_);
  }

  /// Parenthesized powers only support integer exponents (a rational power
  /// of a multi-syllable word is not an ExpWord).
  static ExpWord pow_exp(const ExpWord &a, const Rational &e) {
    if (e.get_den() != 1)
      throw DomainError("rational exponent on a parenthesized word");
    long long n = mpz_get_si(e.get_num().get_mpz_t());
    ExpWord base = n < 0 ? inverse(a) : a;
    long long cnt = n < 0 ? -n : n;
    ExpWord w(a.alphabet());
    for (long long i = 0; i < cnt; ++i)
      w = w * base;
    return w;
  }

  Rational parse_optional_exponent() {
    skip_ws();
    if (eof() || text_[pos_] != '^')
      return Rational(1);
    ++pos_;
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (!eof() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    Int num = lex_digits(start);
    Int den = 1;
    if (!eof() && text_[pos_] == '/') {
      ++pos_;
      den = lex_digits(pos_);
    }
    Rational r = make_rational(neg ? Int(-num) : num, den);
    if (r == 0)
      throw ParseError("zero exponent is not allowed", start);
    return r;
  }

  Int lex_digits(std::size_t at) {
    if (eof() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer", at);
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits += text_[pos_++];
    return Int(digits);
  }

  std::string lex_name() {
    std::size_t start = pos_;
    while (!eof() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool starts_term() const {
    if (eof())
      return false;
    char c = text_[pos_];
    return c == '[' || c == '(' ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  bool skip_separator() {
    bool any = false;
    for (;;) {
      if (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        any = true;
      } else if (!eof() && text_[pos_] == '*') {
        ++pos_;
        any = true;
        skip_ws();
      } else {
        break;
      }
    }
    return any;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (eof() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool eof() const { return pos_ >= text_.size(); }

  bool is_end_at(std::size_t p) const {
    while (p < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[p])))
      ++p;
    return p >= text_.size();
  }

  std::string_view text_;
  AlphabetPtr alphabet_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline ExpWord parse_exp_word(std::string_view text, AlphabetPtr alphabet) {
  return detail::ExpWordParser(text, std::move(alphabet)).parse();
}

// ---------------------------------------------------------------------------
// Presentations
// ---------------------------------------------------------------------------

struct Presentation {
  AlphabetPtr alphabet;
  std::vector<GroupWord> relators;
};

/// Parses the line-oriented presentation format:
///   # comment
///   gens: x1, x2
///   rel: [x1,x2]
inline Presentation parse_presentation(std::string_view text) {
  AlphabetPtr alphabet;
  std::vector<GroupWord> relators;
  std::size_t line_start = 0;
  std::size_t lineno = 0;
  while (line_start <= text.size()) {
    std::size_t nl = text.find('\n', line_start);
    std::string_view line = text.substr(
        line_start, nl == std::string_view::npos ? text.size() - line_start
                                                 : nl - line_start);
    ++lineno;
    std::size_t next = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
      return s;
    };
    std::string_view t = trim(line);
    if (!t.empty() && t[0] != '#') {
      if (t.rfind("gens:", 0) == 0) {
        if (alphabet)
          throw ParseError("duplicate gens: line (line " +
                               std::to_string(lineno) + ")",
                           line_start);
        std::vector<std::string> names;
        std::string_view rest = t.substr(5);
        std::size_t p = 0;
        while (p <= rest.size()) {
          std::size_t comma = rest.find(',', p);
          std::string_view item =
              trim(rest.substr(p, comma == std::string_view::npos
                                      ? rest.size() - p
                                      : comma - p));
          if (item.empty())
            throw ParseError("empty generator name (line " +
                                 std::to_string(lineno) + ")",
                             line_start);
          names.emplace_back(item);
          if (comma == std::string_view::npos)
            break;
          p = comma + 1;
        }
        alphabet = Alphabet::make(std::move(names));
      } else if (t.rfind("rel:", 0) == 0) {
        if (!alphabet)
          throw ParseError("rel: before gens: (line " +
                               std::to_string(lineno) + ")",
                           line_start);
        relators.push_back(parse_word(t.substr(4), alphabet));
      } else {
        throw ParseError("expected 'gens:', 'rel:' or comment (line " +
                             std::to_string(lineno) + ")",
                         line_start);
      }
    }
    line_start = next;
  }
  if (!alphabet)
    throw ParseError("presentation has no gens: line", 0);
  return Presentation{std::move(alphabet), std::move(relators)};
}

inline std::string format_presentation(const Presentation &p) {
  std::string out = "gens: ";
  for (std::size_t i = 0; i < p.alphabet->rank(); ++i) {
    if (i)
      out += ", ";
    out += p.alphabet->name(i);
  }
  out += '\n';
  for (const GroupWord &r : p.relators) {
    out += "rel: ";
    out += format_word(r);
    out += '\n';
  }
  return out;
}

} // namespace magnus
