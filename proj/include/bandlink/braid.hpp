#pragma once

// Pure braid words over the standard generators A_ij (strand j looping once
// around strand i) and their closure into link diagrams. Braids are drawn
// with strands flowing downward; sigma_p^{+1} takes the strand in position p
// over the strand in position p+1, which with parallel orientations is a
// positive crossing.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "bandlink/diagram.hpp"
#include "bandlink/errors.hpp"

namespace bandlink {

struct BraidLetter {
  int i = 0, j = 0;   // generator A_{ij}, 1 <= i < j <= strands
  int exponent = 1;   // +1 or -1

  bool operator==(const BraidLetter&) const = default;
};

struct PureBraidWord {
  int strands = 0;
  std::vector<BraidLetter> letters;

  bool operator==(const PureBraidWord&) const = default;
};

inline void validate_braid(const PureBraidWord& w) {
  require(w.strands >= 1, ErrorCode::IndexOutOfRange, "braid needs at least one strand");
  for (const BraidLetter& l : w.letters) {
    require(1 <= l.i && l.i < l.j && l.j <= w.strands, ErrorCode::IndexOutOfRange,
            "pure braid generator A_{" + std::to_string(l.i) + "," + std::to_string(l.j) + "} out of range for " +
                std::to_string(w.strands) + " strands");
    require(l.exponent == 1 || l.exponent == -1, ErrorCode::IndexOutOfRange, "letter exponent must be +/-1");
  }
}

inline PureBraidWord braid_inverse(const PureBraidWord& w) {
  PureBraidWord r{w.strands, {}};
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back({it->i, it->j, -it->exponent});
  return r;
}

inline PureBraidWord braid_concat(const PureBraidWord& a, const PureBraidWord& b) {
  require(a.strands == b.strands, ErrorCode::ComponentCountMismatch, "cannot concatenate words on different strand counts");
  PureBraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

namespace detail {

struct SigmaLetter {
  int pos;   // acts on positions pos, pos+1
  int sign;  // +1: position pos crosses over; -1: under
};

// A_{ij} = (sigma_{j-1} ... sigma_{i+1}) sigma_i^{+-2} (sigma_{i+1}^-1 ... sigma_{j-1}^-1):
// strand j walks down to strand i passing under every intermediate strand,
// wraps around strand i, and walks back under.
inline void expand_letter(const BraidLetter& l, std::vector<SigmaLetter>& out) {
  for (int p = l.j - 1; p >= l.i + 1; --p) out.push_back({p, 1});
  out.push_back({l.i, l.exponent});
  out.push_back({l.i, l.exponent});
  for (int p = l.i + 1; p <= l.j - 1; ++p) out.push_back({p, -1});
}

}  // namespace detail

// Braid closure: each strand's last arc joins back to its first. Strands
// that never cross become free loops. Component i is strand i.
inline LinkDiagram closure_diagram(const PureBraidWord& w) {
  validate_braid(w);
  std::vector<detail::SigmaLetter>
      sigmas;
  for (const BraidLetter& l : w.letters) detail::expand_letter(l, sigmas);

  LinkDiagram d;
  d.n_components = w.strands;

  std::vector<int> at_pos(w.strands + 1);      // position -> strand
  std::vector<ArcId> cur_arc(w.strands + 1);   // strand -> current arc id
  std::vector<bool> participated(w.strands + 1, false);
  for (int s = 1; s <= w.strands; ++s) {
    at_pos[s] = s;
    cur_arc[s] = s;  // initial arc of strand s gets id s
  }
  ArcId next_id = w.strands + 1;

  for (const auto& sl : sigmas) {
    int u = at_pos[sl.pos], v = at_pos[sl.pos + 1];
    participated[u] = participated[v] = true;
    int over = sl.sign > 0 ? u : v;
    int under = sl.sign > 0 ? v : u;
    ArcId under_out = next_id++, over_out = next_id++;
    Crossing x;
    if (sl.sign > 0)
      x.arcs = {cur_arc[under], over_out, under_out, cur_arc[over]};
    else
      x.arcs = {cur_arc[under], cur_arc[over], under_out, over_out};
    d.crossings.push_back(x);
    d.arc_component[cur_arc[under]] = under;
    d.arc_component[cur_arc[over]] = over;
    d.arc_component[under_out] = under;
    d.arc_component[over_out] = over;
    cur_arc[under] = under_out;
    cur_arc[over] = over_out;
    std::swap(at_pos[sl.pos], at_pos[sl.pos + 1]);
  }

  // Close up: the dangling last arc of each strand is the initial arc again.
  std::map<ArcId, ArcId> remap;
  for (int s = 1; s <= w.strands; ++s) {
    if (!participated[s]) {
      ++d.free_loops;
      continue;
    }
    remap[cur_arc[s]] = s;
    d.arc_component.erase(cur_arc[s]);
  }
  for (Crossing& x : d.crossings)
    for (int sl = 0; sl < 4; ++sl) {
      auto it = remap.find(x.arcs[sl]);
      if (it != remap.end()) x.arcs[sl] = it->second;
    }
  return d;
}

}  // namespace bandlink
