#pragma once

// Oriented link diagrams as PD codes. Each crossing stores the four arc ids
// around it counterclockwise starting from the incoming under-strand:
// (a, b, c, d) with the under-strand running a -> c. Arcs break at every
// crossing passage (over included), so every arc id occurs exactly twice
// across all crossing tuples. Crossing-free unknot components carry no arcs
// and are tracked by count in free_loops.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bandlink/errors.hpp"

namespace bandlink {

using ArcId = int;

struct Crossing {
  std::array<ArcId, 4> arcs{};  // slots 0..3 = (a, b, c, d)

  ArcId a() const { return arcs[0]; }
  ArcId b() const { return arcs[1]; }
  ArcId c() const { return arcs[2]; }
  ArcId d() const { return arcs[3]; }

  bool operator==(const Crossing& o) const { return arcs == o.arcs; }
};

struct LinkDiagram {
  int n_components = 0;
  int free_loops = 0;
  std::vector<Crossing> crossings;
  std::map<ArcId, int> arc_component;  // arc id -> component label in 1..n_components

  bool operator==(const LinkDiagram& o) const {
    return n_components == o.n_components && free_loops == o.free_loops && crossings == o.crossings &&
           arc_component == o.arc_component;
  }
};

struct ArcEnd {
  int crossing = -1;
  int slot = -1;  // 0..3

  auto operator<=>(const ArcEnd&) const = default;
};

// Derived orientation data for a structurally valid diagram.
struct DiagramInfo {
  std::map<ArcId, std::array<ArcEnd, 2>> ends;  // both occurrences of each arc, sorted
  std::map<ArcId, ArcEnd> head;                 // end the arc flows into (incoming side)
  std::map<ArcId, ArcEnd> tail;                 // end the arc flows out of
  std::vector<int> sign;                        // +1 / -1 per crossing
  std::vector<int> over_in;                     // 1 or 3: slot where the over-strand enters

  int component_of(const LinkDiagram& d, ArcId a) const { return d.arc_component.at(a); }
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Keeps the smaller id as representative.
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (x > y) std::swap(x, y);
    parent[y] = x;
  }
};

}  // namespace detail

// Resolves orientations and checks every structural invariant. Throws Error
// on malformed diagrams:
//   DanglingArc       - arc id not used exactly twice, or no consistent
//                       orientation exists
//   ComponentMismatch - component label changes along a strand, label missing
//                       for an arc, or one label covers several closed strands
//   BadComponentRange - labels outside 1..n_components, bad counts, or
//                       free_loops disagreeing with unused labels
inline DiagramInfo analyze(const LinkDiagram& d) {
  require(d.n_components >= 1, ErrorCode::BadComponentRange, "n_components must be positive");
  require(d.free_loops >= 0, ErrorCode::BadComponentRange, "free_loops must be non-negative");

  DiagramInfo info;

  std::map<ArcId, std::vector<ArcEnd>> occ;
  for (int ci = 0; ci < (int)d.crossings.size(); ++ci)
    for (int s = 0; s < 4; ++s) occ[d.crossings[ci].arcs[s]].push_back({ci, s});

  for (auto& [arc, ends] : occ) {
    if (ends.size() != 2)
      fail(ErrorCode::DanglingArc,
           "arc " + std::to_string(arc) + " occurs " + std::to_string(ends.size()) + " times (expected 2)");
    std::sort(ends.begin(), ends.end());
    info.ends[arc] = {ends[0], ends[1]};
    if (!d.arc_component.count(arc))
      fail(ErrorCode::ComponentMismatch, "arc " + std::to_string(arc) + " has no component label");
  }
  for (const auto& [arc, comp] : d.arc_component) {
    if (!occ.count(arc)) fail(ErrorCode::DanglingArc, "arc " + std::to_string(arc) + " occurs 0 times (expected 2)");
    if (comp < 1 || comp > d.n_components)
      fail(ErrorCode::BadComponentRange, "arc " + std::to_string(arc) + " labeled " + std::to_string(comp) +
                                             ", outside 1.." + std::to_string(d.n_components));
  }

  // Component labels must agree across each strand of every crossing.
  for (const auto& x : d.crossings) {
    if (d.arc_component.at(x.a()) != d.arc_component.at(x.c()))
      fail(ErrorCode::ComponentMismatch, "under-strand changes component at a crossing");
    if (d.arc_component.at(x.b()) != d.arc_component.at(x.d()))
      fail(ErrorCode::ComponentMismatch, "over-strand changes component at a crossing");
  }

  // Orientation: for each arc a boolean picks which of its two ends is the
  // head. Under-slots force the bit outright (slot 0 consumes the arc,
  // slot 2 emits it); at each crossing exactly one of slots 1/3 consumes its
  // arc. That is a parity constraint system; solve by BFS over arcs, seeding
  // undetermined groups from the smallest arc id (tail at its first end) so
  // over-only components get a deterministic orientation.
  std::map<ArcId, int> head_pos;  // arc -> 0/1 index into info.ends[arc]
  std::map<ArcId, std::vector<std::pair<ArcId, int>>> edges;  // parity constraints between arcs

  auto pos_of = [&](ArcId arc, const ArcEnd& e) {
    return info.ends.at(arc)[0] == e ? 0 : 1;
  };

  std::map<ArcId, int> forced;
  for (const auto& [arc, ends] : info.ends) {
    for (int p = 0; p < 2; ++p) {
      if (ends[p].slot == 0 || ends[p].slot == 2) {
        int want = ends[p].slot == 0 ? p : 1 - p;
        auto it = forced.find(arc);
        if (it != forced.end() && it->second != want)
          fail(ErrorCode::DanglingArc, "arc " + std::to_string(arc) + " has no consistent orientation");
        forced[arc] = want;
      }
    }
  }
  for (int ci = 0; ci < (int)d.crossings.size(); ++ci) {
    ArcId ab = d.crossings[ci].arcs[1], ad = d.crossings[ci].arcs[3];
    if (ab == ad) continue;  // same arc occupies both over-slots; satisfied either way
    int pb = pos_of(ab, {ci, 1}), pd = pos_of(ad, {ci, 3});
    // exactly one of (head(ab)==pb), (head(ad)==pd): x_ab XOR x_ad = pb XOR pd XOR 1
    int parity = pb ^ pd ^ 1;
    edges[ab].push_back({ad, parity});
    edges[ad].push_back({ab, parity});
  }

  for (const auto& [seed_arc, ends] : info.ends) {
    if (head_pos.count(seed_arc)) continue;
    // BFS this constraint group, assigning relative parities.
    std::vector<ArcId> group;
    std::map<ArcId, int> rel;  // value relative to the seed
    rel[seed_arc] = 0;
    std::vector<ArcId> queue{seed_arc};
    while (!queue.empty()) {
      ArcId cur = queue.back();
      queue.pop_back();
      group.push_back(cur);
      auto it = edges.find(cur);
      if (it == edges.end()) continue;
      for (auto [nxt, parity] : it->second) {
        int want = rel[cur] ^ parity;
        auto jt = rel.find(nxt);
        if (jt == rel.end()) {
          rel[nxt] = want;
          queue.push_back(nxt);
        } else if (jt->second != want) {
          fail(ErrorCode::DanglingArc, "crossing over-strands have no consistent orientation");
        }
      }
    }
    int base = -1;  // seed's absolute value
    for (ArcId arc : group) {
      auto it = forced.find(arc);
      if (it == forced.end()) continue;
      int b = it->second ^ rel[arc];
      if (base == -1) base = b;
      if (base != (it->second ^ rel[arc]))
        fail(ErrorCode::DanglingArc, "arc " + std::to_string(arc) + " has no consistent orientation");
    }
    if (base == -1) base = 1;  // free choice: smallest arc's first end is its tail
    for (ArcId arc : group) head_pos[arc] = base ^ rel[arc];
  }

  for (const auto& [arc, ends] : info.ends) {
    int hp = head_pos.at(arc);
    info.head[arc] = ends[hp];
    info.tail[arc] = ends[1 - hp];
  }

  info.sign.resize(d.crossings.size());
  info.over_in.resize(d.crossings.size());
  for (int ci = 0; ci < (int)d.crossings.size(); ++ci) {
    const Crossing& x = d.crossings[ci];
    bool b_in = info.head.at(x.b()) == ArcEnd{ci, 1};
    bool d_in = info.head.at(x.d()) == ArcEnd{ci, 3};
    if (b_in == d_in) fail(ErrorCode::DanglingArc, "over-strand orientation inconsistent at a crossing");
    info.over_in[ci] = d_in ? 3 : 1;
    info.sign[ci] = d_in ? 1 : -1;
  }

  // Each component label must trace out exactly one closed strand, and
  // unused labels must match the free loop count.
  std::map<int, std::vector<ArcId>> comp_arcs;
  for (const auto& [arc, comp] : d.arc_component) comp_arcs[comp].push_back(arc);
  for (const auto& [comp, arcs] : comp_arcs) {
    ArcId start = *std::min_element(arcs.begin(), arcs.end());
    std::set<ArcId> seen;
    ArcId cur = start;
    do {
      if (!seen.insert(cur).second)
        fail(ErrorCode::ComponentMismatch, "strand revisits arc " + std::to_string(cur));
      ArcEnd h = info.head.at(cur);
      int exit_slot = (h.slot + 2) % 4;
      cur = d.crossings[h.crossing].arcs[exit_slot];
    } while (cur != start);
    if (seen.size() != arcs.size())
      fail(ErrorCode::ComponentMismatch,
           "component " + std::to_string(comp) + " is not a single closed strand");
  }
  int unused = 0;
  for (int c = 1; c <= d.n_components; ++c)
    if (!comp_arcs.count(c)) ++unused;
  if (unused != d.free_loops)
    fail(ErrorCode::BadComponentRange, "free_loops is " + std::to_string(d.free_loops) + " but " +
                                           std::to_string(unused) + " component labels are crossing-free");

  return info;
}

inline DiagramInfo validate(const LinkDiagram& d) { return analyze(d); }

// Sum of signs over crossings between components i and j, halved.
inline std::int64_t linking_number(const LinkDiagram& d, int i, int j) {
  require(i != j, ErrorCode::SameComponent, "linking number needs two distinct components");
  require(i >= 1 && i <= d.n_components && j >= 1 && j <= d.n_components, ErrorCode::BadComponentRange,
          "component out of range");
  DiagramInfo info = analyze(d);
  std::int64_t sum = 0;
  for (int ci = 0; ci < (int)d.crossings.size(); ++ci) {
    int cu = d.arc_component.at(d.crossings[ci].a());
    int co = d.arc_component.at(d.crossings[ci].b());
    if ((cu == i && co == j) || (cu == j && co == i)) sum = checked_add(sum, info.sign[ci]);
  }
  require(sum % 2 == 0, ErrorCode::InternalError, "crossing sign sum between two components is odd");
  return sum / 2;
}

struct CrossingChange {
  LinkDiagram diagram;
  std::set<int> index;  // components meeting the crossing (1 or 2 labels)
};

// Switches over/under at one crossing. Rotating the tuple one slot makes the
// old over-strand the new under-strand while both strands keep their
// orientations: for a positive crossing (over in at slot 3) the new incoming
// under is the old d, giving (d, a, b, c); for a negative one, (b, c, d, a).
inline CrossingChange crossing_change(const LinkDiagram& d, int crossing) {
  require(crossing >= 0 && crossing < (int)d.crossings.size(), ErrorCode::BadCrossingIndex,
          "crossing index " + std::to_string(crossing) + " out of range");
  DiagramInfo info = analyze(d);
  CrossingChange result;
  result.diagram = d;
  const std::array<ArcId, 4>& t = d.crossings[crossing].arcs;
  if (info.sign[crossing] == 1)
    result.diagram.crossings[crossing].arcs = {t[3], t[0], t[1], t[2]};
  else
    result.diagram.crossings[crossing].arcs = {t[1], t[2], t[3], t[0]};
  result.index.insert(d.arc_component.at(t[0]));
  result.index.insert(d.arc_component.at(t[1]));
  return result;
}

// Deletes every component not in `keep`, renumbering survivors in order.
// Crossings between two kept strands survive; crossings involving a deleted
// strand disappear, splicing the kept strand's in/out arcs together.
inline LinkDiagram sublink(const LinkDiagram& d, const std::set<int>& keep) {
  require(!keep.empty(), ErrorCode::EmptySelection, "sublink selection is empty");
  for (int c : keep)
    require(c >= 1 && c <= d.n_components, ErrorCode::BadComponentRange,
            "component " + std::to_string(c) + " out of range");
  analyze(d);

  std::map<int, int> renumber;
  int next = 1;
  for (int c : keep) renumber[c] = next++;

  // Union-find over arc ids for splices at removed crossings.
  ArcId max_arc = 0;
  for (const auto& [arc, comp] : d.arc_component) max_arc = std::max(max_arc, arc);
  detail::UnionFind uf(max_arc + 1);

  std::vector<int> retained;
  for (int ci = 0; ci < (int)d.crossings.size(); ++ci) {
    const Crossing& x = d.crossings[ci];
    bool under_kept = keep.count(d.arc_component.at(x.a())) > 0;
    bool over_kept = keep.count(d.arc_component.at(x.b())) > 0;
    if (under_kept && over_kept) {
      retained.push_back(ci);
    } else if (under_kept) {
      uf.unite(x.a(), x.c());
    } else if (over_kept) {
      uf.unite(x.b(), x.d());
    }
  }

  LinkDiagram r;
  r.n_components = (int)keep.size();
  std::set<ArcId> used;
  for (int ci : retained) {
    Crossing x = d.crossings[ci];
    for (int s = 0; s < 4; ++s) x.arcs[s] = uf.find(x.arcs[s]);
    for (int s = 0; s < 4; ++s) used.insert(x.arcs[s]);
    r.crossings.push_back(x);
  }
  std::set<int> comps_with_arcs;
  for (const auto& [arc, comp] : d.arc_component) {
    if (!keep.count(comp)) continue;
    ArcId rep = uf.find(arc);
    if (used.count(rep)) {
      r.arc_component[rep] = renumber.at(comp);
      comps_with_arcs.insert(comp);
    }
  }
  // Kept components that lost every crossing become free loops, joining the
  // kept share of the original free loops.
  int free = 0;
  std::set<int> labeled;
  for (const auto& [arc, comp] : d.arc_component) labeled.insert(comp);
  for (int c : keep) {
    if (!labeled.count(c))
      ++free;  // was a free loop already
    else if (!comps_with_arcs.count(c))
      ++free;  // lost all crossings
  }
  r.free_loops = free;
  return r;
}

}  // namespace bandlink
