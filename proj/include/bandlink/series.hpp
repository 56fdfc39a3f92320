#pragma once

// Truncated power series in non-commuting variables X_1, X_2, ... with
// integer coefficients, supporting the Magnus expansion of free-group words.
// A series of truncation order L keeps monomials of degree <= L-1 and drops
// the rest; in repeat-free mode any monomial with a repeated variable is
// dropped as well (the quotient used for first-non-vanishing link
// invariants, where it makes group inverses expand to finitely many terms).

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "bandlink/errors.hpp"

namespace bandlink {

using Monomial = std::vector<int>;  // variable indices, 1-based; empty = constant term

inline bool has_repeat(const Monomial& m) {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if (m[i] == m[j]) return true;
  return false;
}

struct TruncatedSeries {
  int max_degree = 1;  // truncation order L: monomials of degree <= L-1 are kept
  bool repeat_free = false;
  std::map<Monomial, std::int64_t> coeff;  // zero coefficients are never stored

  std::int64_t at(const Monomial& m) const {
    auto it = coeff.find(m);
    return it == coeff.end() ? 0 : it->second;
  }

  bool is_one() const { return coeff.size() == 1 && coeff.count(Monomial{}) == 1 && coeff.at(Monomial{}) == 1; }
  bool is_zero() const { return coeff.empty(); }

  bool operator==(const TruncatedSeries& o) const {
    return max_degree == o.max_degree && repeat_free == o.repeat_free && coeff == o.coeff;
  }
};

inline TruncatedSeries series_zero(int max_degree, bool repeat_free) {
  require(max_degree >= 1, ErrorCode::TruncationInsufficient, "truncation order must be >= 1");
  return TruncatedSeries{max_degree, repeat_free, {}};
}

inline TruncatedSeries series_one(int max_degree, bool repeat_free) {
  TruncatedSeries s = series_zero(max_degree, repeat_free);
  s.coeff[Monomial{}] = 1;
  return s;
}

inline TruncatedSeries series_monomial(Monomial m, std::int64_t c, int max_degree, bool repeat_free) {
  TruncatedSeries s = series_zero(max_degree, repeat_free);
  if (c != 0 && (int)m.size() < max_degree && !(repeat_free && has_repeat(m))) s.coeff[std::move(m)] = c;
  return s;
}

inline void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  require(a.max_degree == b.max_degree && a.repeat_free == b.repeat_free, ErrorCode::InternalError,
          "series arithmetic on incompatible truncations");
}

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_compatible(a, b);
  TruncatedSeries r = a;
  for (const auto& [m, c] : b.coeff) {
    std::int64_t v = checked_add(r.at(m), c);
    if (v == 0)
      r.coeff.erase(m);
    else
      r.coeff[m] = v;
  }
  return r;
}

inline TruncatedSeries negate(const TruncatedSeries& a) {
  TruncatedSeries r = a;
  for (auto& [m, c] : r.coeff) c = checked_neg(c);
  return r;
}

inline TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, negate(b)); }

inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_compatible(a, b);
  TruncatedSeries r = series_zero(a.max_degree, a.repeat_free);
  for (const auto& [ma, ca] : a.coeff) {
    for (const auto& [mb, cb] : b.coeff) {
      if ((int)(ma.size() + mb.size()) >= a.max_degree) continue;
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      if (a.repeat_free && has_repeat(m)) continue;
      std::int64_t v = checked_add(r.at(m), checked_mul(ca, cb));
      if (v == 0)
        r.coeff.erase(m);
      else
        r.coeff[m] = v;
    }
  }
  return r;
}

// Multiplicative inverse of a series with constant term 1: Neumann series
// sum_t (1 - s)^t, which terminates because 1 - s has no constant term.
inline TruncatedSeries inverse(const TruncatedSeries& s) {
  require(s.at(Monomial{}) == 1, ErrorCode::InternalError, "series inverse requires constant term 1");
  TruncatedSeries n = sub(series_one(s.max_degree, s.repeat_free), s);
  TruncatedSeries r = series_one(s.max_degree, s.repeat_free);
  TruncatedSeries p = series_one(s.max_degree, s.repeat_free);
  for (int t = 1; t < s.max_degree; ++t) {
    p = mul(p, n);
    if (p.is_zero()) break;
    r = add(r, p);
  }
  return r;
}

// Expansion of a single generator power: x_v -> 1 + X_v, x_v^{-1} -> the
// inverse series (1 - X_v + X_v^2 - ... in plain mode, 1 - X_v repeat-free).
inline TruncatedSeries generator_series(int var, int exponent, int max_degree, bool repeat_free) {
  require(var >= 1, ErrorCode::InternalError, "generator variables are 1-based");
  require(exponent == 1 || exponent == -1, ErrorCode::InternalError, "generator exponent must be +/-1");
  TruncatedSeries s = series_one(max_degree, repeat_free);
  if (max_degree < 2) return s;  // only the constant term survives
  if (exponent == 1) {
    s.coeff[Monomial{var}] = 1;
    return s;
  }
  if (repeat_free) {
    s.coeff[Monomial{var}] = -1;
    return s;
  }
  std::int64_t sign = -1;
  Monomial m;
  for (int d = 1; d < max_degree; ++d) {
    m.push_back(var);
    s.coeff[m] = sign;
    sign = -sign;
  }
  return s;
}

// A free-group word as (variable, exponent) letters; exponents +/-1.
using Letter = std::pair<int, int>;

inline std::vector<Letter> word_inverse(const std::vector<Letter>& w) {
  std::vector<Letter> r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->first, -it->second});
  return r;
}

inline TruncatedSeries magnus_expand(const std::vector<Letter>& word, int max_degree, bool repeat_free) {
  TruncatedSeries r = series_one(max_degree, repeat_free);
  for (const auto& [var, exp] : word) r = mul(r, generator_series(var, exp, max_degree, repeat_free));
  return r;
}

}  // namespace bandlink
