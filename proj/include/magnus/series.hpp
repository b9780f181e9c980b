#pragma once

// Truncated power series in non-commuting indeterminates with exact rational
// coefficients. A monomial is a finite index sequence; two monomials are
// equal only when the sequences are identical. Storage is sparse: a map from
// monomials to nonzero coefficients, ordered by degree first and then
// lexicographically by index sequence, which fixes display and iteration
// order. Every operation truncates to the common degree bound N and fails
// loudly when ranks or truncations differ.

#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "magnus/arith.hpp"
#include "magnus/errors.hpp"

namespace magnus {

/// Index sequence packed one byte per factor; degree = length. Supports
/// ranks up to 255.
using Monomial = std::string;

struct MonomialLess {
  bool operator()(const Monomial &a, const Monomial &b) const {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  }
};

struct Valuation {
  enum class Kind {
    exact,   ///< degree of the first nonzero homogeneous component
    at_least ///< all stored terms vanish; true valuation is >= value
  };
  Kind kind;
  std::uint32_t value;

  bool is_exact() const { return kind == Kind::exact; }

  std::string str() const {
    return is_exact() ? std::to_string(value)
                      : ">=" + std::to_string(value);
  }

  friend bool operator==(const Valuation &, const Valuation &) = default;
};

class Series {
public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  Series(std::uint32_t rank, std::uint32_t trunc)
      : rank_(rank), trunc_(trunc) {
    if (rank == 0 || rank > 255)
      throw DomainError("series rank must be in 1..255");
    if (trunc == 0)
      throw DomainError("series truncation must be positive");
  }

  static Series scalar(std::uint32_t rank, std::uint32_t trunc,
                       const Rational &c) {
    Series s(rank, trunc);
    if (c != 0)
      s.terms_.emplace(Monomial(), c);
    return s;
  }

  static Series one(std::uint32_t rank, std::uint32_t trunc) {
    return scalar(rank, trunc, 1);
  }

  /// The indeterminate with the given index.
  static Series xi(std::uint32_t rank, std::uint32_t trunc, std::uint32_t i) {
    Series s(rank, trunc);
    if (i >= rank)
      throw DomainError("indeterminate index out of range");
    s.terms_.emplace(Monomial(1, static_cast<char>(i)), 1);
    return s;
  }

  std::uint32_t rank() const { return rank_; }
  std::uint32_t truncation() const { return trunc_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coeff(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational scalar_term() const { return coeff(Monomial()); }

  /// Adds c * m, dropping the term if the sum cancels. Degrees beyond the
  /// truncation are discarded.
  void add_term(const Monomial &m, const Rational &c) {
    if (c == 0 || m.size() > trunc_)
      return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  friend bool operator==(const Series &a, const Series &b) {
    return a.rank_ == b.rank_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }

  friend Series operator+(const Series &a, const Series &b) {
    require_compatible(a, b);
    Series r = a;
    for (const auto &[m, c] : b.terms_)
      r.add_term(m, c);
    return r;
  }

  friend Series operator-(const Series &a) {
    Series r(a.rank_, a.trunc_);
    for (const auto &[m, c] : a.terms_)
      r.terms_.emplace(m, -c);
    return r;
  }

  friend Series operator-(const Series &a, const Series &b) {
    require_compatible(a, b);
    Series r = a;
    for (const auto &[m, c] : b.terms_)
      r.add_term(m, -c);
    return r;
  }

  friend Series operator*(const Rational &c, const Series &a) {
    Series r(a.rank_, a.trunc_);
    if (c == 0)
      return r;
    for (const auto &[m, k] : a.terms_)
      r.terms_.emplace(m, c * k);
    return r;
  }

  friend Series operator*(const Series &a, const Rational &c) {
    return c * a;
  }

  /// Concatenation product, discarding degrees beyond the truncation.
  friend Series operator*(const Series &a, const Series &b) {
    require_compatible(a, b);
    Series r(a.rank_, a.trunc_);
    const std::uint32_t N = a.trunc_;
    for (const auto &[ma, ca] : a.terms_) {
      if (ma.size() > N)
        continue;
      const std::size_t room = N - ma.size();
      // terms_ is ordered by degree, so stop once b's degree exceeds room
      for (const auto &[mb, cb] : b.terms_) {
        if (mb.size() > room)
          break;
        r.add_term(ma + mb, ca * cb);
      }
    }
    return r;
  }

  Series &operator+=(const Series &b) { return *this = *this + b; }
  Series &operator-=(const Series &b) { return *this = *this - b; }
  Series &operator*=(const Series &b) { return *this = *this * b; }

  static void require_compatible(const Series &a, const Series &b) {
    if (a.rank_ != b.rank_)
      throw MismatchError("series rank mismatch: " +
                          std::to_string(a.rank_) + " vs " +
                          std::to_string(b.rank_));
    if (a.trunc_ != b.trunc_)
      throw MismatchError("series truncation mismatch: " +
                          std::to_string(a.trunc_) + " vs " +
                          std::to_string(b.trunc_));
  }

private:
  std::uint32_t rank_;
  std::uint32_t trunc_;
  TermMap terms_;
};

inline Series add(const Series &a, const Series &b) { return a + b; }
inline Series negate(const Series &a) { return -a; }
inline Series scalar_mul(const Rational &c, const Series &a) { return c * a; }
inline Series mul(const Series &a, const Series &b) { return a * b; }

/// The degree-n part (n = 0 gives the scalar term as a series).
inline Series homogeneous_component(const Series &a, std::uint32_t n) {
  if (n > a.truncation())
    throw DomainError("component degree " + std::to_string(n) +
                      " exceeds truncation " +
                      std::to_string(a.truncation()));
  Series r(a.rank(), a.truncation());
  for (const auto &[m, c] : a.terms()) {
    if (m.size() > n)
      break;
    if (m.size() == n)
      r.add_term(m, c);
  }
  return r;
}

inline Valuation valuation(const Series &a) {
  if (a.is_zero())
    return {Valuation::Kind::at_least, a.truncation() + 1};
  return {Valuation::Kind::exact,
          static_cast<std::uint32_t>(a.terms().begin()->first.size())};
}

/// d(a, 0) = 2^{-valuation}; zero for the zero series. Defined only on the
/// augmentation ideal (zero scalar term).
inline Rational metric(const Series &a) {
  if (a.scalar_term() != 0)
    throw DomainError("metric requires a series with zero scalar term");
  if (a.is_zero())
    return Rational(0);
  return pow2_inv(valuation(a).value);
}

/// Inverse of a unit (nonzero scalar term), via the geometric series of the
/// positive-degree part.
inline Series unit_inverse(const Series &a) {
  Rational r0 = a.scalar_term();
  if (r0 == 0)
    throw DomainError("series with zero scalar term is not a unit");
  const Rational r0_inv = Rational(1) / r0;
  Series p = a - Series::scalar(a.rank(), a.truncation(), r0);
  Series u = (-r0_inv) * p; // valuation >= 1
  Series pw = Series::scalar(a.rank(), a.truncation(), r0_inv);
  Series result = pw;
  for (std::uint32_t k = 1; k <= a.truncation(); ++k) {
    pw = pw * u;
    if (pw.is_zero())
      break;
    result += pw;
  }
  return result;
}

/// a^e for rational e, defined for series with scalar term exactly 1:
/// sum_k C(e,k) (a-1)^k. For e = p/q the result's q-th power is a^p within
/// the truncation.
inline Series unit_pow(const Series &a, const Rational &e) {
  if (a.scalar_term() != 1)
    throw DomainError("rational powers require scalar term exactly 1");
  Series u = a - Series::one(a.rank(), a.truncation());
  Series pw = Series::one(a.rank(), a.truncation());
  Series result = pw;
  Rational coeff = 1;
  for (std::uint32_t k = 1; k <= a.truncation(); ++k) {
    pw = pw * u;
    if (pw.is_zero())
      break;
    coeff *= (e - Rational(k - 1)) / Rational(static_cast<long>(k));
    if (coeff == 0)
      break;
    result += coeff * pw;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Fast one-letter products, used when expanding long words letter by letter.
// ---------------------------------------------------------------------------

/// a * (1 + xi_i); one pass over the terms.
inline Series mul_one_plus_xi(const Series &a, std::uint32_t i) {
  Series r = a;
  const std::uint32_t N = a.truncation();
  for (const auto &[m, c] : a.terms()) {
    if (m.size() >= N)
      break;
    r.add_term(m + static_cast<char>(i), c);
  }
  return r;
}

/// a * (1 + xi_i)^{-1}, solving b + b*xi_i = a degree by degree.
inline Series mul_one_plus_xi_inverse(const Series &a, std::uint32_t i) {
  Series b(a.rank(), a.truncation());
  // b_0 = a_0; b_d = a_d - b_{d-1} * xi_i
  std::vector<std::pair<Monomial, Rational>> prev; // degree d-1 terms of b
  for (std::uint32_t d = 0; d <= a.truncation(); ++d) {
    std::vector<std::pair<Monomial, Rational>> cur;
    for (const auto &[m, c] : a.terms())
      if (m.size() == d)
        cur.emplace_back(m, c);
    for (const auto &[m, c] : prev) {
      Monomial shifted = m + static_cast<char>(i);
      cur.emplace_back(std::move(shifted), -c);
    }
    // merge duplicates (a's degree-d term may collide with a shift)
    std::map<Monomial, Rational, MonomialLess> merged;
    for (auto &[m, c] : cur) {
      auto [it, inserted] = merged.try_emplace(m, c);
      if (!inserted)
        it->second += c;
    }
    prev.clear();
    for (auto &[m, c] : merged) {
      if (c == 0)
        continue;
      b.add_term(m, c);
      prev.emplace_back(m, c);
    }
  }
  return b;
}

// ---------------------------------------------------------------------------
// Text format: header "rank=<q> trunc=<N>", body like
// "1 - x1 + 1/2*x1.x2"; "0" for the zero series.
// ---------------------------------------------------------------------------

inline std::string format_series_body(const Series &s,
                                      const std::vector<std::string> &names) {
  if (s.rank() > names.size())
    throw DomainError("not enough indeterminate names for series rank");
  if (s.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : s.terms()) {
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg)
        out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (m.empty()) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) {
      out += to_string(mag);
      out += '*';
    }
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j)
        out += '.';
      out += names[static_cast<unsigned char>(m[j])];
    }
  }
  return out;
}

inline std::string format_series(const Series &s,
                                 const std::vector<std::string> &names) {
  return "rank=" + std::to_string(s.rank()) +
         " trunc=" + std::to_string(s.truncation()) + "\n" +
         format_series_body(s, names);
}

namespace detail {

class SeriesParser {
public:
  SeriesParser(std::string_view body, std::uint32_t rank, std::uint32_t trunc,
               const std::vector<std::string> &names)
      : text_(body), names_(names), series_(rank, trunc) {}

  Series parse() {
    skip_ws();
    if (eof())
      throw ParseError("empty series text", 0);
    if (text_[pos_] == '0' && ws_to_end(pos_ + 1)) {
      return series_;
    }
    bool neg = false;
    if (text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    parse_term(neg);
    for (;;) {
      skip_ws();
      if (eof())
        break;
      char c = text_[pos_];
      if (c != '+' && c != '-')
        throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      parse_term(c == '-');
    }
    return series_;
  }

private:
  void parse_term(bool neg) {
    skip_ws();
    if (eof())
      throw ParseError("expected term", pos_);
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      coeff = lex_rational();
      have_coeff = true;
      skip_ws();
      if (!eof() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
      } else {
        // bare scalar term
        series_.add_term(Monomial(), neg ? Rational(-coeff) : coeff);
        return;
      }
    }
    Monomial m = lex_monomial();
    if (m.empty() && !have_coeff)
      throw ParseError("expected coefficient or monomial", pos_);
    series_.add_term(m, neg ? Rational(-coeff) : coeff);
  }

  Monomial lex_monomial() {
    Monomial m;
    for (;;) {
      std::size_t start = pos_;
      std::string name = lex_name();
      if (name.empty())
        throw ParseError("expected indeterminate name", start);
      bool found = false;
      for (std::size_t i = 0; i < names_.size() && i < series_.rank(); ++i) {
        if (names_[i] == name) {
          m += static_cast<char>(i);
          found = true;
          break;
        }
      }
      if (!found)
        throw ParseError("unknown indeterminate '" + name + "'", start);
      if (!eof() && text_[pos_] == '.') {
        ++pos_;
        continue;
      }
      break;
    }
    return m;
  }

  std::string lex_name() {
    std::size_t start = pos_;
    if (eof() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      return {};
    while (!eof() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational lex_rational() {
    Int num = lex_digits();
    Int den = 1;
    if (!eof() && text_[pos_] == '/') {
      ++pos_;
      den = lex_digits();
    }
    return make_rational(num, den);
  }

  Int lex_digits() {
    if (eof() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected digits", pos_);
    std::string d;
    while (!eof() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      d += text_[pos_++];
    return Int(d);
  }

  bool ws_to_end(std::size_t p) const {
    while (p < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[p])))
      ++p;
    return p >= text_.size();
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eof() const { return pos_ >= text_.size(); }

  std::string_view text_;
  const std::vector<std::string> &names_;
  Series series_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses "rank=<q> trunc=<N>\n<body>". Indeterminate names default to
/// x1..xq when `names` is empty.
inline Series parse_series(std::string_view text,
                           std::vector<std::string> names = {}) {
  std::size_t nl = text.find('\n');
  std::string_view header = text.substr(0, nl);
  std::string_view body =
      nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

  unsigned rank = 0, trunc = 0;
  if (std::sscanf(std::string(header).c_str(), "rank=%u trunc=%u", &rank,
                  &trunc) != 2)
    throw ParseError("expected header 'rank=<q> trunc=<N>'", 0);
  if (names.empty())
    for (unsigned i = 1; i <= rank; ++i)
      names.push_back("x" + std::to_string(i));
  return detail::SeriesParser(body, rank, trunc, names).parse();
}

} // namespace magnus
