#pragma once

// Brunnian detection, trivialization certificates, and C_n-equivalence of
// Brunnian links. A link is Brunnian when every proper sublink is trivial;
// that is checked by invariant screens (which can certify "no") followed by
// diagram simplification (which can certify "yes" or stall). For Brunnian
// links, C_n-equivalence coincides with link-homotopy and is decided by
// comparing the complete length-n repeat-free mu-bar vector. C_2-equivalence
// is decided by the linking matrix alone.

#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bandlink/chords.hpp"
#include "bandlink/diagram.hpp"
#include "bandlink/escalate.hpp"
#include "bandlink/milnor.hpp"
#include "bandlink/reidemeister.hpp"

namespace bandlink {

enum class Status { Yes, No, Inconclusive };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Yes: return "yes";
    case Status::No: return "no";
    default: return "inconclusive";
  }
}

struct Verdict {
  Status status = Status::Inconclusive;
  nlohmann::json witness;  // null when there is nothing to explain

  bool operator==(const Verdict&) const = default;
};

inline nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j{{"status", status_name(v.status)}};
  if (!v.witness.is_null()) j["witness"] = v.witness;
  return j;
}

struct MoveCertificate {
  std::vector<MoveRecord> moves;

  bool operator==(const MoveCertificate&) const = default;
};

inline nlohmann::json move_record_to_json(const MoveRecord& r) {
  nlohmann::json j{{"index", r.index},
                   {"k", r.k},
                   {"kind", r.kind},
                   {"op", r.op},
                   {"position", r.position}};
  if (r.chord) j["chord"] = chord_to_json(*r.chord);
  return j;
}

inline nlohmann::json certificate_to_json(const MoveCertificate& c) {
  nlohmann::json moves = nlohmann::json::array();
  for (const MoveRecord& r : c.moves) moves.push_back(move_record_to_json(r));
  return nlohmann::json{{"moves", moves}};
}

inline MoveRecord move_record_from_json(const nlohmann::json& j) {
  detail::check_keys(j, {"chord", "index", "k", "kind", "op", "position"}, "move record");
  MoveRecord r;
  require(j.contains("op") && j.at("op").is_string(), ErrorCode::ParseError, "move record needs a string 'op'");
  require(j.contains("kind") && j.at("kind").is_string(), ErrorCode::ParseError, "move record needs a string 'kind'");
  r.op = j.at("op").get<std::string>();
  r.kind = j.at("kind").get<std::string>();
  r.k = detail::get_int(j, "k", "move record");
  r.position = detail::get_int(j, "position", "move record");
  require(j.contains("index") && j.at("index").is_array(), ErrorCode::ParseError, "move record needs an 'index' array");
  for (const auto& e : j.at("index")) {
    require(e.is_number_integer(), ErrorCode::ParseError, "move record index entries must be integers");
    r.index.insert(e.get<int>());
  }
  if (j.contains("chord")) r.chord = chord_from_json(j.at("chord"));
  return r;
}

inline MoveCertificate certificate_from_json(const nlohmann::json& j) {
  detail::check_keys(j, {"moves"}, "certificate");
  require(j.contains("moves") && j.at("moves").is_array(), ErrorCode::ParseError, "certificate needs a 'moves' array");
  MoveCertificate c;
  for (const auto& m : j.at("moves")) c.moves.push_back(move_record_from_json(m));
  return c;
}

// ---- Brunnian detection ----

inline Verdict is_brunnian(const LinkDiagram& d, const SimplifyOptions& opts = {}) {
  analyze(d);
  int n = d.n_components;
  require(n >= 2, ErrorCode::BadComponentRange, "Brunnian-ness needs at least 2 components");

  std::vector<std::vector<int>> sublinks;  // proper nonempty subsets of {1..n}
  for (int mask = 1; mask < (1 << n) - 1; ++mask) {
    std::vector<int> s;
    for (int i = 1; i <= n; ++i)
      if (mask & (1 << (i - 1))) s.push_back(i);
    sublinks.push_back(std::move(s));
  }

  // Invariant screens across every sublink first: a definite obstruction
  // beats a simplification stall found on some other sublink.
  for (const auto& s : sublinks) {
    if (s.size() < 2 || n < 3) continue;
    std::set<int> keep(s.begin(), s.end());
    LinkDiagram sub = sublink(d, keep);
    int m = (int)s.size();
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        std::int64_t lk = linking_number(sub, i, j);
        if (lk != 0)
          return {Status::No,
                  {{"kind", "linking_number"}, {"pair", {s[i - 1], s[j - 1]}}, {"sublink", s}, {"value", lk}}};
      }
    for (int k = 2; k <= m; ++k) {
      MuReport report = mu_vector(sub, k);
      for (const MuEntry& e : report.entries) {
        if (e.value == 0) continue;
        std::vector<int> orig;
        for (int idx : e.index) orig.push_back(s[idx - 1]);
        return {Status::No,
                {{"delta", e.delta}, {"index", orig}, {"kind", "mu"}, {"sublink", s}, {"value", e.value}}};
      }
    }
  }

  // No obstruction found; now every proper sublink must simplify to a
  // crossing-free diagram (a trivial link).
  for (const auto& s : sublinks) {
    std::set<int> keep(s.begin(), s.end());
    SimplifyResult res = simplify(sublink(d, keep), opts);
    if (!res.diagram.crossings.empty())
      return {Status::Inconclusive,
              {{"crossings_left", (int)res.diagram.crossings.size()},
               {"kind", "simplification_stalled"},
               {"sublink", s},
               {"verdict", verdict_name(res.verdict)}}};
  }
  return {Status::Yes, nullptr};
}

// ---- Trivialization of normal-form presentations ----

inline MoveCertificate trivialize(const BandSumPresentation& p) {
  validate_presentation(p);
  for (size_t pos = 0; pos < p.chords.size(); ++pos) {
    if ((int)chord_index(p.chords[pos]).size() != p.n)
      throw Error(ErrorCode::NotNormalForm,
                  "chord at position " + std::to_string(pos) + " does not have full index {1..n}")
          .with_payload(nlohmann::json{{"chord", chord_to_json(p.chords[pos])}, {"position", (int)pos}}.dump());
  }
  MoveCertificate cert;
  BandSumPresentation cur = p;
  while (!cur.chords.empty()) {
    PresentationMove m = delete_chord(cur, 0);
    cert.moves.push_back(m.record);
    cur = m.presentation;
  }
  return cert;
}

inline BandSumPresentation replay(const BandSumPresentation& start, const MoveCertificate& cert) {
  BandSumPresentation cur = start;
  for (const MoveRecord& r : cert.moves) {
    if (r.op == "delete") {
      require(r.position >= 0 && r.position < (int)cur.chords.size(), ErrorCode::BadPosition,
              "certificate deletes position " + std::to_string(r.position) + " out of range");
      require(!r.chord || cur.chords[r.position] == *r.chord, ErrorCode::ParseError,
              "certificate chord does not match the presentation at position " + std::to_string(r.position));
      cur = delete_chord(cur, r.position).presentation;
    } else if (r.op == "insert") {
      require(r.chord.has_value(), ErrorCode::ParseError, "insert record carries no chord");
      cur = insert_chord(cur, *r.chord, r.position).presentation;
    } else {
      fail(ErrorCode::ParseError, "unknown certificate op '" + r.op + "'");
    }
  }
  return cur;
}

// ---- Normalization ----

inline bool is_normal_form(const BandSumPresentation& p) {
  for (const ChordSpec& c : p.chords)
    if ((int)chord_index(c).size() != p.n) return false;
  return true;
}

namespace detail {

inline bool chords_commute(const ChordSpec& a, const ChordSpec& b, int n) {
  PureBraidWord wa = chord_word(a, n), wb = chord_word(b, n);
  for (const BraidLetter& x : wa.letters)
    for (const BraidLetter& y : wb.letters)
      if (!letters_commute(x, y)) return false;
  return true;
}

// Four adjacent chords u s u^-1 s^-1 with u a single positive letter A_{b,l}
// and s positive with the same branch spell the chord word of (b; l,
// leaves(s)); the mirrored pattern s u s^-1 u^-1 spells its inverse.
inline std::optional<ChordSpec> fuse_window(const ChordSpec& c0, const ChordSpec& c1, const ChordSpec& c2,
                                            const ChordSpec& c3) {
  auto inverse_pair = [](const ChordSpec& a, const ChordSpec& b) {
    return a.branch == b.branch && a.leaves == b.leaves && a.sign == -b.sign;
  };
  if (!inverse_pair(c0, c2) || !inverse_pair(c1, c3)) return std::nullopt;
  auto merged = [](const ChordSpec& u, const ChordSpec& s, int sign) -> std::optional<ChordSpec> {
    if (u.leaves.size() != 1 || u.sign != 1 || s.sign != 1) return std::nullopt;
    if (u.branch != s.branch) return std::nullopt;
    int l = u.leaves[0];
    for (int leaf : s.leaves)
      if (leaf == l) return std::nullopt;
    ChordSpec out;
    out.branch = u.branch;
    out.leaves.push_back(l);
    out.leaves.insert(out.leaves.end(), s.leaves.begin(), s.leaves.end());
    out.sign = sign;
    return out;
  };
  if (auto m = merged(c0, c1, 1)) return m;     // u s u^-1 s^-1 = [u, s]
  if (auto m = merged(c1, c0, -1)) return m;    // s u s^-1 u^-1 = [u, s]^-1
  return std::nullopt;
}

}  // namespace detail

// Bounded breadth-first search over link-preserving presentation rewrites:
// cancel an adjacent inverse pair, swap adjacent letterwise-commuting
// chords, rotate the first chord to the end (conjugation of the braid word,
// which fixes the closure), and fuse a commutator window into one chord of
// higher degree. Stops at the first presentation whose chords all carry the
// full index {1..n}.
inline BandSumPresentation normalize(const BandSumPresentation& p, std::int64_t budget = 10000) {
  validate_presentation(p);
  if (is_normal_form(p)) return p;

  auto key = [](const BandSumPresentation& q) { return presentation_to_json(q).dump(); };
  auto non_normal_count = [](const BandSumPresentation& q) {
    int c = 0;
    for (const ChordSpec& ch : q.chords)
      if ((int)chord_index(ch).size() != q.n) ++c;
    return c;
  };
  auto check_mu = [&](const BandSumPresentation& result) {
    if (p.n < 2) return;
    MuReport before = mu_vector(realize(p), p.n);
    MuReport after = mu_vector(realize(result), p.n);
    require(before == after, ErrorCode::InternalError, "normalization changed the mu-vector");
  };

  std::deque<BandSumPresentation> queue{p};
  std::set<std::string> seen{key(p)};
  BandSumPresentation best = p;
  std::int64_t used = 0;

  auto visit = [&](BandSumPresentation q) -> std::optional<BandSumPresentation> {
    if (++used > budget) return std::nullopt;
    std::string k = key(q);
    if (!seen.insert(std::move(k)).second) return std::nullopt;
    if (is_normal_form(q)) return q;
    auto better = [&](const BandSumPresentation& a, const BandSumPresentation& b) {
      int na = non_normal_count(a), nb = non_normal_count(b);
      if (na != nb) return na < nb;
      if (a.chords.size() != b.chords.size()) return a.chords.size() < b.chords.size();
      return key(a) < key(b);
    };
    if (better(q, best)) best = q;
    queue.push_back(std::move(q));
    return std::nullopt;
  };

  while (!queue.empty() && used <= budget) {
    BandSumPresentation cur = queue.front();
    queue.pop_front();
    size_t m = cur.chords.size();
    for (size_t pos = 0; pos + 1 < m; ++pos) {
      const ChordSpec& a = cur.chords[pos];
      const ChordSpec& b = cur.chords[pos + 1];
      if (a.branch == b.branch && a.leaves == b.leaves && a.sign == -b.sign) {
        BandSumPresentation next = cur;
        next.chords.erase(next.chords.begin() + pos, next.chords.begin() + pos + 2);
        if (auto r = visit(std::move(next))) {
          check_mu(*r);
          return *r;
        }
      }
      if (detail::chords_commute(a, b, cur.n)) {
        BandSumPresentation next = cur;
        std::swap(next.chords[pos], next.chords[pos + 1]);
        if (auto r = visit(std::move(next))) {
          check_mu(*r);
          return *r;
        }
      }
    }
    for (size_t pos = 0; pos + 3 < m; ++pos) {
      if (auto fused = detail::fuse_window(cur.chords[pos], cur.chords[pos + 1], cur.chords[pos + 2],
                                           cur.chords[pos + 3])) {
        BandSumPresentation next = cur;
        next.chords.erase(next.chords.begin() + pos, next.chords.begin() + pos + 4);
        next.chords.insert(next.chords.begin() + pos, *fused);
        if (auto r = visit(std::move(next))) {
          check_mu(*r);
          return *r;
        }
      }
    }
    if (m >= 2) {
      BandSumPresentation next = cur;
      ChordSpec first = next.chords.front();
      next.chords.erase(next.chords.begin());
      next.chords.push_back(first);
      if (auto r = visit(std::move(next))) {
        check_mu(*r);
        return *r;
      }
    }
  }
  throw Error(ErrorCode::NormalizationStalled, "rewriting budget exhausted before reaching normal form")
      .with_payload(nlohmann::json{{"partial", presentation_to_json(best)}}.dump());
}

// ---- C_n-equivalence of Brunnian links ----

inline Verdict cn_equivalent(const LinkDiagram& d1, const LinkDiagram& d2, const SimplifyOptions& opts = {}) {
  require(d1.n_components == d2.n_components, ErrorCode::ComponentCountMismatch,
          "diagrams have different component counts");
  int n = d1.n_components;

  Verdict b1 = is_brunnian(d1, opts);
  if (b1.status == Status::No)
    throw Error(ErrorCode::NotBrunnian, "first diagram is not Brunnian")
        .with_payload(nlohmann::json{{"diagram", 1}, {"witness", b1.witness}}.dump());
  Verdict b2 = is_brunnian(d2, opts);
  if (b2.status == Status::No)
    throw Error(ErrorCode::NotBrunnian, "second diagram is not Brunnian")
        .with_payload(nlohmann::json{{"diagram", 2}, {"witness", b2.witness}}.dump());
  if (b1.status == Status::Inconclusive)
    return {Status::Inconclusive, {{"diagram", 1}, {"kind", "brunnian_inconclusive"}, {"witness", b1.witness}}};
  if (b2.status == Status::Inconclusive)
    return {Status::Inconclusive, {{"diagram", 2}, {"kind", "brunnian_inconclusive"}, {"witness", b2.witness}}};

  MuReport r1 = mu_vector(d1, n);
  MuReport r2 = mu_vector(d2, n);
  require(r1.entries.size() == r2.entries.size(), ErrorCode::InternalError, "mu reports misaligned");
  for (size_t t = 0; t < r1.entries.size(); ++t) {
    const MuEntry& a = r1.entries[t];
    const MuEntry& b = r2.entries[t];
    require(a.index == b.index, ErrorCode::InternalError, "mu reports misaligned");
    if (a.value != b.value || a.delta != b.delta)
      return {Status::No,
              {{"index", a.index},
               {"kind", "mu"},
               {"left", {{"delta", a.delta}, {"value", a.value}}},
               {"right", {{"delta", b.delta}, {"value", b.value}}}}};
  }
  return {Status::Yes, nullptr};
}

// ---- C_2 classification by linking numbers ----

inline Verdict c2_classify(const LinkDiagram& d1, const LinkDiagram& d2) {
  require(d1.n_components == d2.n_components, ErrorCode::ComponentCountMismatch,
          "diagrams have different component counts");
  analyze(d1);
  analyze(d2);
  int n = d1.n_components;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::int64_t l1 = linking_number(d1, i, j);
      std::int64_t l2 = linking_number(d2, i, j);
      if (l1 != l2)
        return {Status::No, {{"kind", "linking_number"}, {"left", l1}, {"pair", {i, j}}, {"right", l2}}};
    }
  return {Status::Yes, nullptr};
}

}  // namespace bandlink
