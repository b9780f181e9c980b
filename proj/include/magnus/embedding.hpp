#pragma once

// The embedding of a free group into the units of the truncated series ring:
// x_i -> 1 + xi_i, x_i^{-1} -> 1 - xi_i + xi_i^2 - ... Words map to units
// with scalar term 1; the map is a homomorphism within each truncation.
//
// gamma_weight inspects mu(w) - 1: if components 1..n-1 vanish and component
// n does not, the word lies in gamma_n and outside gamma_{n+1} of the lower
// central series. Reading n as the exact weight uses the classical
// identification of the lower central series of a free group with its
// dimension series; the certificate itself only records the two verified
// facts (vanishing below n, a nonzero degree-n witness).

#include <cstdint>
#include <string>
#include <variant>

#include "magnus/series.hpp"
#include "magnus/words.hpp"

namespace magnus {

/// mu(w) at truncation N. Short runs are folded letter by letter; long runs
/// multiply by the closed-form binomial expansion of (1 + xi)^e.
inline Series expand(const GroupWord &w, std::uint32_t trunc) {
  if (!w.alphabet())
    throw DomainError("word has no alphabet");
  const auto rank = static_cast<std::uint32_t>(w.alphabet()->rank());
  Series acc = Series::one(rank, trunc);
  for (const Syllable &s : w.syllables()) {
    const long long e = s.exp;
    const long long abs_e = e < 0 ? -e : e;
    if (abs_e <= static_cast<long long>(trunc) + 1) {
      for (long long k = 0; k < abs_e; ++k)
        acc = e > 0 ? mul_one_plus_xi(acc, s.gen)
                    : mul_one_plus_xi_inverse(acc, s.gen);
    } else {
      Series factor = unit_pow(
          mul_one_plus_xi(Series::one(rank, trunc), s.gen),
          Rational(static_cast<long>(e)));
      acc = acc * factor;
    }
  }
  return acc;
}

/// Image of a rational-exponent word: each syllable (x_i, e) maps to
/// (1 + xi_i)^e via the generalized binomial series.
inline Series expand_rational_word(const ExpWord &w, std::uint32_t trunc) {
  if (!w.alphabet())
    throw DomainError("word has no alphabet");
  const auto rank = static_cast<std::uint32_t>(w.alphabet()->rank());
  Series acc = Series::one(rank, trunc);
  for (const ExpSyllable &s : w.syllables()) {
    if (s.exp.get_den() == 1 && mpz_fits_slong_p(s.exp.get_num().get_mpz_t())) {
      GroupWord g = GroupWord::generator(w.alphabet(), s.gen,
                                         s.exp.get_num().get_si());
      acc = acc * expand(g, trunc);
    } else {
      Series factor = unit_pow(
          mul_one_plus_xi(Series::one(rank, trunc), s.gen), s.exp);
      acc = acc * factor;
    }
  }
  return acc;
}

/// Certifies: every component of mu(w) - 1 below degree `weight` vanishes,
/// and `witness` is the (nonzero) degree-`weight` component.
struct GammaCertificate {
  GroupWord word;
  std::uint32_t weight;
  std::uint32_t truncation;
  Series witness;
};

/// All components up to the truncation vanished; the weight exceeds it.
struct GammaIndeterminate {
  std::uint32_t truncation;
};

using GammaWeightResult = std::variant<GammaCertificate, GammaIndeterminate>;

inline bool is_certificate(const GammaWeightResult &r) {
  return std::holds_alternative<GammaCertificate>(r);
}

inline GammaWeightResult gamma_weight(const GroupWord &w,
                                      std::uint32_t max_trunc) {
  if (w.is_identity())
    throw DomainError("gamma weight of the identity word");
  if (max_trunc == 0)
    throw DomainError("truncation bound must be positive");
  Series dev = expand(w, max_trunc) - Series::one(
      static_cast<std::uint32_t>(w.alphabet()->rank()), max_trunc);
  Valuation v = valuation(dev);
  if (!v.is_exact())
    return GammaIndeterminate{max_trunc};
  return GammaCertificate{w, v.value, max_trunc,
                          homogeneous_component(dev, v.value)};
}

/// Escalating schedule N = len(w), 2 len(w), 4 len(w), ... until a nonzero
/// component appears. `max_trunc` is a hard cap; exceeding it raises
/// ResourceError rather than guessing.
inline GammaCertificate residual_witness(const GroupWord &w,
                                         std::uint32_t max_trunc = 64) {
  if (w.is_identity())
    throw DomainError("residual witness of the identity word");
  const auto len = static_cast<std::uint32_t>(w.length());
  for (std::uint32_t n = len; n <= max_trunc; n *= 2) {
    GammaWeightResult r = gamma_weight(w, n);
    if (is_certificate(r))
      return std::get<GammaCertificate>(std::move(r));
  }
  throw ResourceError("no nonzero component found up to truncation " +
                      std::to_string(max_trunc));
}

/// Stable text block for a certificate.
inline std::string format_certificate(const GammaCertificate &c) {
  std::string out;
  out += "word: " + format_word(c.word) + "\n";
  out += "n: " + std::to_string(c.weight) + "\n";
  out += "trunc: " + std::to_string(c.truncation) + "\n";
  out += "witness: " +
         format_series_body(c.witness, c.word.alphabet()->names()) + "\n";
  return out;
}

} // namespace magnus
