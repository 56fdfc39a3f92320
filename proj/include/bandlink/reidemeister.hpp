#pragma once

// Reidemeister moves on PD diagrams. The slot order of each crossing is a
// rotation system, so faces of the underlying 4-valent graph are orbits of
// (rotate one slot) o (jump to the arc's other end). All moves are detected
// and applied through faces, which keeps every rewrite an embedded one:
// monogons are R1 kinks, bigons with an under-under/over-over arc pair and
// opposite signs are R2 pairs, triangles with acyclic over/under dominance
// admit R3 slides. Expansion moves are constructed directly and checked
// against the Euler characteristic.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bandlink/diagram.hpp"
#include "bandlink/pd_io.hpp"

namespace bandlink {

struct Dart {
  int crossing = -1;
  int slot = -1;
  auto operator<=>(const Dart&) const = default;
};

inline ArcId arc_at(const LinkDiagram& d, Dart t) { return d.crossings[t.crossing].arcs[t.slot]; }

inline Dart other_end(const LinkDiagram& d, const DiagramInfo& info, Dart t) {
  const auto& ends = info.ends.at(arc_at(d, t));
  ArcEnd here{t.crossing, t.slot};
  ArcEnd o = (ends[0] == here) ? ends[1] : ends[0];
  return {o.crossing, o.slot};
}

inline std::vector<std::vector<Dart>> compute_faces(const LinkDiagram& d, const DiagramInfo& info) {
  std::vector<std::vector<Dart>> faces;
  std::set<Dart> seen;
  for (int ci = 0; ci < (int)d.crossings.size(); ++ci) {
    for (int s = 0; s < 4; ++s) {
      Dart start{ci, s};
      if (seen.count(start)) continue;
      std::vector<Dart> face;
      Dart cur = start;
      do {
        face.push_back(cur);
        seen.insert(cur);
        Dart o = other_end(d, info, cur);
        cur = {o.crossing, (o.slot + 1) % 4};
      } while (!(cur == start));
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

// Genus-0 test per connected crossing cluster: V - E + F == 2 on each.
inline bool is_planar(const LinkDiagram& d, const DiagramInfo& info) {
  if (d.crossings.empty()) return true;
  auto faces = compute_faces(d, info);
  detail::UnionFind uf((int)d.crossings.size());
  for (const auto& [arc, ends] : info.ends) uf.unite(ends[0].crossing, ends[1].crossing);
  std::map<int, long long> euler;  // root -> V - E + F
  for (int ci = 0; ci < (int)d.crossings.size(); ++ci) euler[uf.find(ci)] += 1;
  for (const auto& [arc, ends] : info.ends) euler[uf.find(ends[0].crossing)] -= 1;
  for (const auto& f : faces) euler[uf.find(f[0].crossing)] += 1;
  for (const auto& [root, chi] : euler)
    if (chi != 2) return false;
  return true;
}

inline void require_planar(const LinkDiagram& d, const DiagramInfo& info) {
  if (!is_planar(d, info)) fail(ErrorCode::ParseError, "PD code is not a planar diagram (genus > 0)");
}

inline ArcId next_arc_id(const LinkDiagram& d) {
  return d.arc_component.empty() ? 1 : d.arc_component.rbegin()->first + 1;
}

namespace detail {

// Removes the given crossings, splicing both through-strands of each removed
// crossing back together. Components that lose every arc become free loops.
inline LinkDiagram rebuild_after_removal(const LinkDiagram& d, const std::set<int>& removed) {
  ArcId max_arc = d.arc_component.empty() ? 0 : d.arc_component.rbegin()->first;
  UnionFind uf(max_arc + 1);
  for (int ci : removed) {
    const Crossing& x = d.crossings[ci];
    uf.unite(x.arcs[0], x.arcs[2]);
    uf.unite(x.arcs[1], x.arcs[3]);
  }
  LinkDiagram r;
  r.n_components = d.n_components;
  std::set<ArcId> used;
  for (int ci = 0; ci < (int)d.crossings.size(); ++ci) {
    if (removed.count(ci)) continue;
    Crossing x = d.crossings[ci];
    for (int s = 0; s < 4; ++s) {
      x.arcs[s] = uf.find(x.arcs[s]);
      used.insert(x.arcs[s]);
    }
    r.crossings.push_back(x);
  }
  std::set<int> had_arcs, has_arcs;
  for (const auto& [arc, comp] : d.arc_component) {
    had_arcs.insert(comp);
    ArcId rep = uf.find(arc);
    if (used.count(rep)) {
      auto it = r.arc_component.find(rep);
      require(it == r.arc_component.end() || it->second == comp, ErrorCode::InternalError,
              "splice merged arcs from different components");
      r.arc_component[rep] = comp;
      has_arcs.insert(comp);
    }
  }
  r.free_loops = d.free_loops;
  for (int c : had_arcs)
    if (!has_arcs.count(c)) ++r.free_loops;
  return r;
}

struct DirectedPair {
  ArcId in = 0, out = 0;
};

inline DirectedPair under_pair(const LinkDiagram& d, int ci) {
  return {d.crossings[ci].arcs[0], d.crossings[ci].arcs[2]};
}

inline DirectedPair over_pair(const LinkDiagram& d, const DiagramInfo& info, int ci) {
  int in = info.over_in[ci];
  return {d.crossings[ci].arcs[in], d.crossings[ci].arcs[(in + 2) % 4]};
}

inline Crossing make_crossing(DirectedPair under, DirectedPair over, int sign) {
  Crossing x;
  if (sign > 0)
    x.arcs = {under.in, over.out, under.out, over.in};
  else
    x.arcs = {under.in, over.in, under.out, over.out};
  return x;
}

}  // namespace detail

// ---- reduction moves ----

struct R1Site {
  int crossing;
  ArcId kink_arc;
};

struct R2Site {
  int c1, c2;       // the two crossings of the bigon
  ArcId under_arc;  // bigon side passing under at both
  ArcId over_arc;
};

struct R3Site {
  int ci, cj, ck;  // ck is the crossing the top arc slides across
  ArcId top_arc;   // triangle side passing over at both ci and cj
  ArcId f_arc;     // triangle side joining ci to ck
  ArcId g_arc;     // triangle side joining cj to ck
};

inline std::vector<R1Site> find_r1(const LinkDiagram& d, const DiagramInfo&,
                                   const std::vector<std::vector<Dart>>& faces) {
  std::vector<R1Site> out;
  for (const auto& f : faces)
    if (f.size() == 1) out.push_back({f[0].crossing, arc_at(d, f[0])});
  return out;
}

inline std::vector<R2Site> find_r2(const LinkDiagram& d, const DiagramInfo& info,
                                   const std::vector<std::vector<Dart>>& faces) {
  std::vector<R2Site> out;
  for (const auto& f : faces) {
    if (f.size() != 2) continue;
    if (f[0].crossing == f[1].crossing) continue;
    ArcId x = arc_at(d, f[0]), y = arc_at(d, f[1]);
    if (x == y) continue;
    auto parity = [&](ArcId a) {
      const auto& e = info.ends.at(a);
      int p0 = e[0].slot % 2, p1 = e[1].slot % 2;
      return p0 == p1 ? p0 : -1;  // 0 = under at both, 1 = over at both
    };
    int px = parity(x), py = parity(y);
    ArcId under, over;
    if (px == 0 && py == 1) {
      under = x;
      over = y;
    } else if (px == 1 && py == 0) {
      under = y;
      over = x;
    } else {
      continue;
    }
    if (info.sign[f[0].crossing] == info.sign[f[1].crossing]) continue;
    out.push_back({f[0].crossing, f[1].crossing, under, over});
  }
  return out;
}

inline std::vector<R3Site> find_r3(const LinkDiagram& d, const DiagramInfo& info,
                                   const std::vector<std::vector<Dart>>& faces) {
  std::vector<R3Site> out;
  for (const auto& f : faces) {
    if (f.size() != 3) continue;
    int ca = f[0].crossing, cb = f[1].crossing, cc = f[2].crossing;
    if (ca == cb || ca == cc || cb == cc) continue;
    ArcId x0 = arc_at(d, f[0]), x1 = arc_at(d, f[1]), x2 = arc_at(d, f[2]);
    if (x0 == x1 || x0 == x2 || x1 == x2) continue;
    auto kind = [&](ArcId a) {  // 1 = over-over, 0 = under-under, -1 = mixed
      const auto& e = info.ends.at(a);
      int p0 = e[0].slot % 2, p1 = e[1].slot % 2;
      return p0 == p1 ? p0 : -1;
    };
    ArcId top = -1;
    int tops = 0, bots = 0, mixed = 0;
    for (ArcId a : {x0, x1, x2}) {
      int k = kind(a);
      if (k == 1) {
        top = a;
        ++tops;
      } else if (k == 0)
        ++bots;
      else
        ++mixed;
    }
    if (tops != 1 || bots != 1 || mixed != 1) continue;  // cyclic dominance: no slide here
    const auto& te = info.ends.at(top);
    int ci = te[0].crossing, cj = te[1].crossing;
    int ck = ca + cb + cc - ci - cj;
    // The other two sides: each joins one of ci/cj to ck.
    ArcId f_arc = -1, g_arc = -1;
    for (ArcId a : {x0, x1, x2}) {
      if (a == top) continue;
      const auto& e = info.ends.at(a);
      if (e[0].crossing == ci || e[1].crossing == ci)
        f_arc = a;
      else
        g_arc = a;
    }
    if (f_arc < 0 || g_arc < 0) continue;
    out.push_back({ci, cj, ck, top, f_arc, g_arc});
  }
  return out;
}

inline LinkDiagram apply_r1(const LinkDiagram& d, const R1Site& site) {
  return detail::rebuild_after_removal(d, {site.crossing});
}

inline LinkDiagram apply_r2(const LinkDiagram& d, const R2Site& site) {
  return detail::rebuild_after_removal(d, {site.c1, site.c2});
}

// Slides the top arc across the opposite crossing. Each of the three
// crossings keeps its sign and its strand pair; crossings exchange the
// directed through-pairs of their shared strands.
inline LinkDiagram apply_r3(const LinkDiagram& d, const DiagramInfo& info, const R3Site& site) {
  using detail::DirectedPair;
  int ci = site.ci, cj = site.cj, ck = site.ck;
  // At ci and cj the top strand is the over one; F and G pass under it there.
  DirectedPair e_at_ci = detail::over_pair(d, info, ci);
  DirectedPair e_at_cj = detail::over_pair(d, info, cj);
  DirectedPair f_at_ci = detail::under_pair(d, ci);  // strand F: under e at ci, meets ck
  DirectedPair g_at_cj = detail::under_pair(d, cj);  // strand G: under e at cj, meets ck
  // F is the over strand at ck iff its triangle arc sits in an over slot there.
  const auto& fe = info.ends.at(site.f_arc);
  ArcEnd f_end_ck = fe[0].crossing == ck ? fe[0] : fe[1];
  require(f_end_ck.crossing == ck, ErrorCode::InternalError, "triangle side does not reach ck");
  bool f_over_at_ck = f_end_ck.slot % 2 == 1;
  DirectedPair f_at_ck = f_over_at_ck ? detail::over_pair(d, info, ck) : detail::under_pair(d, ck);
  DirectedPair g_at_ck = f_over_at_ck ? detail::under_pair(d, ck) : detail::over_pair(d, info, ck);

  // Each crossing keeps its sign and strand pair but takes the directed
  // through-pairs from the other crossing along each shared strand.
  LinkDiagram r = d;
  r.crossings[ci] = detail::make_crossing(/*under=*/f_at_ck, /*over=*/e_at_cj, info.sign[ci]);
  r.crossings[cj] = detail::make_crossing(/*under=*/g_at_ck, /*over=*/e_at_ci, info.sign[cj]);
  if (f_over_at_ck)
    r.crossings[ck] = detail::make_crossing(/*under=*/g_at_cj, /*over=*/f_at_ci, info.sign[ck]);
  else
    r.crossings[ck] = detail::make_crossing(/*under=*/f_at_ci, /*over=*/g_at_cj, info.sign[ck]);
  return r;
}

// ---- expansion moves ----

// Adds a kink on arc `x` (type 0..3: negative/positive curl on either side),
// or on a free loop when x < 0.
inline LinkDiagram apply_r1_add(const LinkDiagram& d, const DiagramInfo& info, ArcId x, int type) {
  LinkDiagram r = d;
  ArcId n1 = next_arc_id(d), n2 = n1 + 1;
  if (x < 0) {
    require(d.free_loops > 0, ErrorCode::InternalError, "no free loop to kink");
    std::set<int> labeled;
    for (const auto& [arc, comp] : d.arc_component) labeled.insert(comp);
    int label = -1;
    for (int c = 1; c <= d.n_components && label < 0; ++c)
      if (!labeled.count(c)) label = c;
    Crossing k;
    k.arcs = (type % 2 == 0) ? std::array<ArcId, 4>{n1, n2, n2, n1}   // negative curl
                             : std::array<ArcId, 4>{n1, n1, n2, n2};  // positive curl
    r.crossings.push_back(k);
    r.arc_component[n1] = label;
    r.arc_component[n2] = label;
    --r.free_loops;
    return r;
  }
  int comp = d.arc_component.at(x);
  ArcEnd h = info.head.at(x);
  r.crossings[h.crossing].arcs[h.slot] = n2;
  Crossing k;
  switch (type & 3) {
    case 0: k.arcs = {n1, x, n2, n1}; break;   // negative
    case 1: k.arcs = {x, n1, n1, n2}; break;   // negative
    case 2: k.arcs = {n1, n1, n2, x}; break;   // positive
    default: k.arcs = {x, n2, n1, n1}; break;  // positive
  }
  r.crossings.push_back(k);
  r.arc_component[n1] = comp;
  r.arc_component[n2] = comp;
  return r;
}

// Pokes a finger of one arc across another, creating a cancelling crossing
// pair. The relative direction and the sign split depend on how the two arcs
// sit on a common face, so all four combinatorial variants are tried and the
// first one that stays a planar diagram wins; nullopt if the arcs share no
// face.
inline std::optional<LinkDiagram> apply_r2_add(const LinkDiagram& d, ArcId x, ArcId y, bool x_under) {
  if (x == y) return std::nullopt;
  DiagramInfo info = analyze(d);
  ArcId p = x_under ? x : y;  // strand that dives under
  ArcId q = x_under ? y : x;
  ArcId np1 = next_arc_id(d), np2 = np1 + 1, nq1 = np1 + 2, nq2 = np1 + 3;
  for (int order = 0; order < 2; ++order) {
    for (int sa : {1, -1}) {
      LinkDiagram r = d;
      ArcEnd ph = info.head.at(p), qh = info.head.at(q);
      r.crossings[ph.crossing].arcs[ph.slot] = np2;
      r.crossings[qh.crossing].arcs[qh.slot] = nq2;
      detail::DirectedPair under_a{p, np1}, under_b{np1, np2};
      detail::DirectedPair over_first{q, nq1}, over_second{nq1, nq2};
      Crossing c_a = detail::make_crossing(under_a, order == 0 ? over_first : over_second, sa);
      Crossing c_b = detail::make_crossing(under_b, order == 0 ? over_second : over_first, -sa);
      r.crossings.push_back(c_a);
      r.crossings.push_back(c_b);
      int comp_p = d.arc_component.at(p), comp_q = d.arc_component.at(q);
      r.arc_component[np1] = comp_p;
      r.arc_component[np2] = comp_p;
      r.arc_component[nq1] = comp_q;
      r.arc_component[nq2] = comp_q;
      try {
        DiagramInfo ri = analyze(r);
        if (is_planar(r, ri)) return r;
      } catch (const Error&) {
      }
    }
  }
  return std::nullopt;
}

// ---- simplification ----

enum class SimplifyVerdict { minimal_reached, budget_exhausted };

inline const char* verdict_name(SimplifyVerdict v) {
  return v == SimplifyVerdict::minimal_reached ? "minimal_reached" : "budget_exhausted";
}

struct SimplifyOptions {
  std::int64_t move_budget = 10000;
  std::uint64_t seed = 0;
  int plateau_breadth = 128;  // max R3 frontier states kept per depth
  int plateau_depth = 6;      // max consecutive R3 slides explored
};

struct SimplifyResult {
  LinkDiagram diagram;
  SimplifyVerdict verdict = SimplifyVerdict::minimal_reached;
  std::int64_t moves_used = 0;
};

namespace detail {

// One greedy reduction if available: first monogon, else first eligible bigon.
inline std::optional<LinkDiagram> reduce_once(const LinkDiagram& d) {
  DiagramInfo info = analyze(d);
  auto faces = compute_faces(d, info);
  auto r1 = find_r1(d, info, faces);
  if (!r1.empty()) return apply_r1(d, r1.front());
  auto r2 = find_r2(d, info, faces);
  if (!r2.empty()) return apply_r2(d, r2.front());
  return std::nullopt;
}

}  // namespace detail

// Greedy monogon/bigon elimination with a bounded breadth-first plateau
// search through R3 slides when stuck. Every applied move (including
// exploratory slides) draws from move_budget. The seed only shuffles the
// order in which plateau candidates are tried.
inline SimplifyResult simplify(const LinkDiagram& d, const SimplifyOptions& opts = {}) {
  DiagramInfo info0 = analyze(d);
  require_planar(d, info0);
  std::mt19937_64 rng(opts.seed);
  SimplifyResult res;
  res.diagram = d;
  LinkDiagram cur = d;
  LinkDiagram best = d;

  auto out_of_budget = [&] { return res.moves_used >= opts.move_budget; };

  while (true) {
    // Phase 1: greedy strict reductions.
    while (true) {
      if (cur.crossings.size() < best.crossings.size()) best = cur;
      if (cur.crossings.empty()) {
        res.diagram = cur;
        res.verdict = SimplifyVerdict::minimal_reached;
        return res;
      }
      if (out_of_budget()) {
        res.diagram = best;
        res.verdict = SimplifyVerdict::budget_exhausted;
        return res;
      }
      auto next = detail::reduce_once(cur);
      if (!next) break;
      ++res.moves_used;
      cur = *next;
    }

    // Phase 2: BFS through R3 slides looking for any diagram that reduces.
    std::vector<LinkDiagram> frontier{cur};
    std::set<std::string> seen{serialize_pd(cur)};
    std::optional<LinkDiagram> improved;
    for (int depth = 0; depth < opts.plateau_depth && !improved; ++depth) {
      std::vector<LinkDiagram> next_frontier;
      for (const LinkDiagram& state : frontier) {
        if (improved || out_of_budget()) break;
        DiagramInfo info = analyze(state);
        auto faces = compute_faces(state, info);
        auto sites = find_r3(state, info, faces);
        std::shuffle(sites.begin(), sites.end(), rng);
        for (const R3Site& site : sites) {
          if (out_of_budget()) break;
          LinkDiagram slid = apply_r3(state, info, site);
          ++res.moves_used;
          std::string key = serialize_pd(slid);
          if (!seen.insert(key).second) continue;
          if (detail::reduce_once(slid)) {
            improved = slid;
            break;
          }
          if ((int)next_frontier.size() < opts.plateau_breadth) next_frontier.push_back(std::move(slid));
        }
      }
      frontier = std::move(next_frontier);
      if (frontier.empty()) break;
    }
    if (improved) {
      cur = *improved;
      continue;  // back to greedy phase
    }
    res.diagram = cur.crossings.size() <= best.crossings.size() ? cur : best;
    res.verdict = out_of_budget() ? SimplifyVerdict::budget_exhausted : SimplifyVerdict::minimal_reached;
    return res;
  }
}

// ---- random moves (noise for invariance tests) ----

// Applies `count` random Reidemeister moves (expansions, slides, and the
// occasional reduction). Deterministic for a fixed seed.
inline LinkDiagram random_moves(const LinkDiagram& d, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LinkDiagram cur = d;
  analyze(cur);
  for (int step = 0; step < count; ++step) {
    bool done = false;
    for (int attempt = 0; attempt < 40 && !done; ++attempt) {
      DiagramInfo info = analyze(cur);
      int kind = (int)(rng() % 10);  // 0-2: R1+, 3-6: R2+, 7-8: R3, 9: reduce
      if (kind <= 2) {
        std::vector<ArcId> arcs;
        for (const auto& [arc, comp] : cur.arc_component) arcs.push_back(arc);
        int type = (int)(rng() % 4);
        if (cur.free_loops > 0 && (arcs.empty() || rng() % 4 == 0)) {
          cur = apply_r1_add(cur, info, -1, type);
          done = true;
        } else if (!arcs.empty()) {
          cur = apply_r1_add(cur, info, arcs[rng() % arcs.size()], type);
          done = true;
        }
      } else if (kind <= 6) {
        std::vector<ArcId> arcs;
        for (const auto& [arc, comp] : cur.arc_component) arcs.push_back(arc);
        if (arcs.size() < 2) continue;
        ArcId x = arcs[rng() % arcs.size()];
        ArcId y = arcs[rng() % arcs.size()];
        if (x == y) continue;
        auto poked = apply_r2_add(cur, x, y, rng() % 2 == 0);
        if (poked) {
          cur = *poked;
          done = true;
        }
      } else if (kind <= 8) {
        auto faces = compute_faces(cur, info);
        auto sites = find_r3(cur, info, faces);
        if (sites.empty()) continue;
        cur = apply_r3(cur, info, sites[rng() % sites.size()]);
        done = true;
      } else {
        auto faces = compute_faces(cur, info);
        auto r1 = find_r1(cur, info, faces);
        auto r2 = find_r2(cur, info, faces);
        if (!r1.empty() && (r2.empty() || rng() % 2 == 0)) {
          cur = apply_r1(cur, r1[rng() % r1.size()]);
          done = true;
        } else if (!r2.empty()) {
          cur = apply_r2(cur, r2[rng() % r2.size()]);
          done = true;
        }
      }
    }
    // If every attempt failed we simply stop adding noise early.
    if (!done) break;
  }
  return cur;
}

}  // namespace bandlink
