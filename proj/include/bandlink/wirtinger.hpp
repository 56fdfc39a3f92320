#pragma once

// Wirtinger data of a diagram. Arcs get generators, with the two over-arcs
// of each crossing sharing one (passing over does not break the strand in
// the link group), so there is exactly one conjugation relation per
// crossing. With loops composed left to right and right-handed meridians,
// the relation at a crossing of sign e reads
//   g_out = g_over^-e g_in g_over^e,
// while the underpass contributes g_over^e to the longitude. Free-loop
// components get a fresh generator each and an empty longitude.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "bandlink/diagram.hpp"
#include "bandlink/errors.hpp"

namespace bandlink {

struct WirtingerPresentation {
  int n_components = 0;
  int n_generators = 0;
  std::map<ArcId, int> arc_generator;    // arc -> generator id (0-based)
  std::vector<int> generator_component;  // generator id -> component label
  std::vector<int> meridian;             // component (1-based) -> generator id

  struct Relation {
    int out_gen, in_gen, over_gen;
    int sign;
  };
  std::vector<Relation> relations;  // one per crossing, in crossing order

  struct LongFactor {
    int gen;
    int exponent;  // +1 / -1
  };
  // Per component (1-based): over-generators met at each underpass in
  // traversal order from the component's smallest arc, followed by the
  // meridian^framing zero-framing correction spelled out letter by letter.
  std::vector<std::vector<LongFactor>> longitudes;
  std::vector<int> framing;  // the correction exponent applied per component
};

inline WirtingerPresentation wirtinger(const LinkDiagram& d) {
  DiagramInfo info = analyze(d);
  WirtingerPresentation w;
  w.n_components = d.n_components;

  // Overstrand classes: unite the two over-arcs at every crossing.
  ArcId max_arc = d.arc_component.empty() ? 0 : d.arc_component.rbegin()->first;
  detail::UnionFind uf(max_arc + 1);
  for (const Crossing& x : d.crossings) uf.unite(x.b(), x.d());
  std::map<ArcId, int> rep_gen;
  for (const auto& [arc, comp] : d.arc_component) {
    ArcId rep = uf.find(arc);
    auto [it, inserted] = rep_gen.try_emplace(rep, (int)rep_gen.size());
    w.arc_generator[arc] = it->second;
    if (inserted) w.generator_component.push_back(comp);
  }
  w.n_generators = (int)rep_gen.size();

  w.meridian.assign(d.n_components + 1, -1);
  std::map<int, ArcId> first_arc;  // component -> smallest arc
  for (const auto& [arc, comp] : d.arc_component) first_arc.try_emplace(comp, arc);
  for (const auto& [comp, arc] : first_arc) w.meridian[comp] = w.arc_generator.at(arc);
  // Crossing-free components get fresh generators.
  for (int comp = 1; comp <= d.n_components; ++comp) {
    if (w.meridian[comp] >= 0) continue;
    w.meridian[comp] = w.n_generators++;
    w.generator_component.push_back(comp);
  }

  for (int ci = 0; ci < (int)d.crossings.size(); ++ci) {
    const Crossing& x = d.crossings[ci];
    w.relations.push_back({w.arc_generator.at(x.c()), w.arc_generator.at(x.a()), w.arc_generator.at(x.b()),
                           info.sign[ci]});
  }

  w.longitudes.assign(d.n_components + 1, {});
  w.framing.assign(d.n_components + 1, 0);
  for (const auto& [comp, start] : first_arc) {
    std::vector<WirtingerPresentation::LongFactor>& l = w.longitudes[comp];
    int self_winding = 0;
    ArcId cur = start;
    do {
      ArcEnd h = info.head.at(cur);
      if (h.slot == 0) {  // underpass: record the over-generator
        int over = w.arc_generator.at(d.crossings[h.crossing].b());
        int eps = info.sign[h.crossing];
        l.push_back({over, eps});
        if (w.generator_component[over] == comp) self_winding += eps;
      }
      cur = d.crossings[h.crossing].arcs[(h.slot + 2) % 4];
    } while (cur != start);
    w.framing[comp] = -self_winding;
    int m = w.meridian[comp];
    for (int t = 0; t < std::abs(self_winding); ++t) l.push_back({m, self_winding > 0 ? -1 : 1});
  }
  return w;
}

}  // namespace bandlink
