#pragma once

// Milnor mu-bar invariants. Longitude words from the Wirtinger presentation
// are rewritten into meridians by iterating the conjugation relations at the
// series level: each generator g equals w_g m_{c(g)} w_g^-1 for a conjugator
// w_g, and the relations give w_out = E_over^sign * w_in with E the expanded
// generator. Iterating depth times stabilizes all coefficients below that
// degree. mu(i1..ik) is the coefficient of X_{i1}..X_{i(k-1)} in the
// longitude series of component ik, reported modulo Milnor's indeterminacy
// delta (gcd of the one-index-deleted invariants, taken recursively).

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <nlohmann/json.hpp>

#include "bandlink/diagram.hpp"
#include "bandlink/series.hpp"
#include "bandlink/wirtinger.hpp"

namespace bandlink {

struct MuValue {
  std::int64_t value = 0;
  std::int64_t delta = 0;

  bool operator==(const MuValue&) const = default;
};

struct MuEntry {
  std::vector<int> index;
  std::int64_t value = 0;
  std::int64_t delta = 0;

  bool operator==(const MuEntry&) const = default;
};

struct MuReport {
  int length = 0;
  std::vector<MuEntry> entries;  // sorted lexicographically by index

  bool operator==(const MuReport&) const = default;
};

namespace detail {

class MilnorEngine {
 public:
  MilnorEngine(const LinkDiagram& d, int depth, bool repeat_free)
      : depth_(depth), repeat_free_(repeat_free), n_(d.n_components) {
    require(depth >= 1, ErrorCode::TruncationInsufficient, "rewriting depth must be >= 1");
    WirtingerPresentation w = wirtinger(d);

    // Defining chains: per component, in traversal order, the relation met
    // at each underpass; the final one wraps around to redefine the
    // meridian's overstrand and is the redundant Wirtinger relation.
    DiagramInfo info = analyze(d);
    std::map<int, ArcId> first_arc;
    for (const auto& [arc, comp] : d.arc_component) first_arc.try_emplace(comp, arc);
    struct Step {
      int out_gen, in_gen, over_gen, sign;
    };
    std::vector<Step> chain;
    for (const auto& [comp, start] : first_arc) {
      int cur_gen = w.meridian[comp];
      ArcId cur = start;
      do {
        ArcEnd h = info.head.at(cur);
        ArcId next = d.crossings[h.crossing].arcs[(h.slot + 2) % 4];
        if (h.slot == 0) {
          int out = w.arc_generator.at(next);
          if (out != w.meridian[comp])
            chain.push_back({out, cur_gen, w.arc_generator.at(d.crossings[h.crossing].b()), info.sign[h.crossing]});
          cur_gen = out;
        }
        cur = next;
      } while (cur != start);
    }

    auto one = series_one(depth_, repeat_free_);
    std::vector<TruncatedSeries> conj(w.n_generators, one);
    std::vector<TruncatedSeries> e_pos(w.n_generators, one), e_neg(w.n_generators, one);
    for (int round = 0; round < depth_; ++round) {
      for (int g = 0; g < w.n_generators; ++g) {
        TruncatedSeries inv_c = inverse(conj[g]);
        int var = w.generator_component[g];
        e_pos[g] = mul(mul(conj[g], generator_series(var, 1, depth_, repeat_free_)), inv_c);
        e_neg[g] = mul(mul(conj[g], generator_series(var, -1, depth_, repeat_free_)), inv_c);
      }
      // With paths composed left to right, the relation at a sign-e crossing
      // reads g_out = g_over^-e g_in g_over^e, so the conjugator picks up the
      // inverse expanded generator.
      for (const Step& s : chain)
        conj[s.out_gen] = mul(s.sign > 0 ? e_neg[s.over_gen] : e_pos[s.over_gen], conj[s.in_gen]);
    }
    for (int g = 0; g < w.n_generators; ++g) {
      TruncatedSeries inv_c = inverse(conj[g]);
      int var = w.generator_component[g];
      e_pos[g] = mul(mul(conj[g], generator_series(var, 1, depth_, repeat_free_)), inv_c);
      e_neg[g] = mul(mul(conj[g], generator_series(var, -1, depth_, repeat_free_)), inv_c);
    }

    longitude_.assign(n_ + 1, one);
    for (int comp = 1; comp <= n_; ++comp) {
      TruncatedSeries l = one;
      for (const auto& f : w.longitudes[comp]) l = mul(l, f.exponent > 0 ? e_pos[f.gen] : e_neg[f.gen]);
      longitude_[comp] = l;
    }
  }

  // Raw coefficient behind mu(I): X_{i1..i(k-1)} in the longitude of i_k.
  std::int64_t raw(const std::vector<int>& I) const {
    int k = (int)I.size();
    require(k >= 2, ErrorCode::IndexTooShort, "mu needs an index sequence of length >= 2");
    require(k <= depth_, ErrorCode::TruncationInsufficient, "rewriting depth is below the index length");
    Monomial m(I.begin(), I.end() - 1);
    return longitude_[I.back()].at(m);
  }

  MuValue reported(const std::vector<int>& I) { return reported_memo(I); }

  int components() const { return n_; }

 private:
  MuValue reported_memo(const std::vector<int>& I) {
    auto it = memo_.find(I);
    if (it != memo_.end()) return it->second;
    MuValue r;
    if (I.size() < 2) {
      r = {0, 0};  // length-1 invariants vanish; they only feed the gcd
    } else {
      std::int64_t raw_value = raw(I);
      std::int64_t g = 0;
      for (size_t drop = 0; drop < I.size(); ++drop) {
        std::vector<int> sub;
        for (size_t t = 0; t < I.size(); ++t)
          if (t != drop) sub.push_back(I[t]);
        MuValue s = reported_memo(sub);
        g = std::gcd(g, s.value < 0 ? -s.value : s.value);
      }
      r.delta = g;
      r.value = g > 0 ? ((raw_value % g) + g) % g : raw_value;
    }
    memo_[I] = r;
    return r;
  }

  int depth_;
  bool repeat_free_;
  int n_;
  std::vector<TruncatedSeries> longitude_;
  std::map<std::vector<int>, MuValue> memo_;
};

}  // namespace detail

inline void check_mu_index(const LinkDiagram& d, const std::vector<int>& I, bool repeat_free) {
  require((int)I.size() >= 2, ErrorCode::IndexTooShort, "mu needs an index sequence of length >= 2");
  for (int i : I)
    require(i >= 1 && i <= d.n_components, ErrorCode::BadComponentRange,
            "index " + std::to_string(i) + " out of range 1.." + std::to_string(d.n_components));
  if (repeat_free) {
    std::set<int> s(I.begin(), I.end());
    require(s.size() == I.size(), ErrorCode::IndexOutOfRange,
            "repeat-free mode requires pairwise distinct indices");
  }
}

inline MuValue mu_bar(const LinkDiagram& d, const std::vector<int>& I, bool repeat_free) {
  check_mu_index(d, I, repeat_free);
  detail::MilnorEngine engine(d, (int)I.size(), repeat_free);
  return engine.reported(I);
}

// Link-homotopy mode when the indices are distinct, plain mode otherwise.
inline MuValue mu_bar(const LinkDiagram& d, const std::vector<int>& I) {
  std::set<int> s(I.begin(), I.end());
  return mu_bar(d, I, s.size() == I.size());
}

inline MuReport mu_vector(const LinkDiagram& d, int k) {
  require(k >= 2, ErrorCode::IndexTooShort, "mu_vector needs length >= 2");
  require(k <= d.n_components, ErrorCode::BadComponentRange, "length exceeds the component count");
  detail::MilnorEngine engine(d, k, /*repeat_free=*/true);
  MuReport report;
  report.length = k;
  std::vector<int> I;
  std::vector<bool> used(d.n_components + 1, false);
  auto rec = [&](auto&& self) -> void {
    if ((int)I.size() == k) {
      MuValue v = engine.reported(I);
      report.entries.push_back({I, v.value, v.delta});
      return;
    }
    for (int i = 1; i <= d.n_components; ++i) {
      if (used[i]) continue;
      used[i] = true;
      I.push_back(i);
      self(self);
      I.pop_back();
      used[i] = false;
    }
  };
  rec(rec);
  return report;
}

inline nlohmann::json mu_report_to_json(const MuReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const MuEntry& e : r.entries)
    entries.push_back({{"delta", e.delta}, {"index", e.index}, {"value", e.value}});
  return nlohmann::json{{"entries", entries}, {"length", r.length}};
}

}  // namespace bandlink
