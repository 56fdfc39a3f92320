#pragma once

// Independent reference implementations and hand-built fixtures used to
// cross-check the library. Everything here is deliberately naive.

#include <cstdint>
#include <random>
#include <vector>

#include "bandlink/bandlink.hpp"

namespace oracle {

// Dense monomial-concatenation product, no cleverness.
inline bandlink::TruncatedSeries naive_mul(const bandlink::TruncatedSeries& a, const bandlink::TruncatedSeries& b) {
  bandlink::TruncatedSeries out = bandlink::series_zero(a.max_degree, a.repeat_free);
  for (const auto& [ma, ca] : a.coeff)
    for (const auto& [mb, cb] : b.coeff) {
      bandlink::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      if ((int)m.size() >= a.max_degree) continue;
      if (a.repeat_free && bandlink::has_repeat(m)) continue;
      out.coeff[m] += ca * cb;
    }
  for (auto it = out.coeff.begin(); it != out.coeff.end();)
    it = it->second == 0 ? out.coeff.erase(it) : std::next(it);
  return out;
}

inline bandlink::TruncatedSeries naive_expand(const std::vector<bandlink::Letter>& word, int max_degree,
                                              bool repeat_free) {
  bandlink::TruncatedSeries s = bandlink::series_one(max_degree, repeat_free);
  for (const auto& [var, exp] : word)
    s = naive_mul(s, bandlink::generator_series(var, exp, max_degree, repeat_free));
  return s;
}

// Hopf link with both crossings positive (lk = +1). Component 1 owns arcs
// 1,2 and component 2 owns arcs 3,4; hand-checked to orient consistently.
inline bandlink::LinkDiagram hopf() {
  bandlink::LinkDiagram d;
  d.n_components = 2;
  d.crossings.push_back({{1, 4, 2, 3}});
  d.crossings.push_back({{4, 1, 3, 2}});
  d.arc_component = {{1, 1}, {2, 1}, {3, 2}, {4, 2}};
  return d;
}

inline bandlink::LinkDiagram trivial_link(int n) {
  bandlink::LinkDiagram d;
  d.n_components = n;
  d.free_loops = n;
  return d;
}

/// Closure of A_12 A_23 on three strands: lk(1,2) = lk(2,3) = 1, lk(1,3) = 0.
inline bandlink::LinkDiagram chain3() {
  bandlink::PureBraidWord w;
  w.strands = 3;
  w.letters = {{1, 2, 1}, {2, 3, 1}};
  return bandlink::closure_diagram(w);
}

inline bandlink::PureBraidWord random_braid(std::mt19937_64& rng, int max_strands, int max_letters) {
  bandlink::PureBraidWord w;
  w.strands = 2 + (int)(rng() % (std::uint64_t)(max_strands - 1));
  int len = 1 + (int)(rng() % (std::uint64_t)max_letters);
  for (int t = 0; t < len; ++t) {
    int i = 1 + (int)(rng() % (std::uint64_t)w.strands);
    int j = 1 + (int)(rng() % (std::uint64_t)w.strands);
    while (j == i) j = 1 + (int)(rng() % (std::uint64_t)w.strands);
    if (i > j) std::swap(i, j);
    w.letters.push_back({i, j, rng() % 2 == 0 ? 1 : -1});
  }
  return w;
}

}  // namespace oracle
