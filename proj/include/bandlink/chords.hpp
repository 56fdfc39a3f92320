#pragma once

// One-branched chords over a trivial base link, realized as iterated
// pure-braid commutators: a chord with branch i0 and leaves (i1,...,ik)
// carries the word [A_{i0 i1}, [A_{i0 i2}, [..., A_{i0 ik}]...]], so its
// closure with the trivial link is the (k+1)-component Milnor link on the
// chord's index set. Presentations are ordered chord sequences; their
// realization is the closure of the concatenated word.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bandlink/braid.hpp"
#include "bandlink/diagram.hpp"
#include "bandlink/errors.hpp"

namespace bandlink {

struct ChordSpec {
  int branch = 0;
  std::vector<int> leaves;
  int sign = 1;

  int degree() const { return (int)leaves.size(); }

  bool operator==(const ChordSpec&) const = default;
};

struct BandSumPresentation {
  int n = 0;
  std::vector<ChordSpec> chords;

  bool operator==(const BandSumPresentation&) const = default;
};

inline void validate_chord(const ChordSpec& c, int n) {
  require(!c.leaves.empty(), ErrorCode::IndexOutOfRange, "chord needs at least one leaf");
  require(c.sign == 1 || c.sign == -1, ErrorCode::IndexOutOfRange, "chord sign must be +/-1");
  std::set<int> seen{c.branch};
  require(c.branch >= 1 && c.branch <= n, ErrorCode::IndexOutOfRange,
          "chord branch " + std::to_string(c.branch) + " out of range 1.." + std::to_string(n));
  for (int leaf : c.leaves) {
    require(leaf >= 1 && leaf <= n, ErrorCode::IndexOutOfRange,
            "chord leaf " + std::to_string(leaf) + " out of range 1.." + std::to_string(n));
    require(seen.insert(leaf).second, ErrorCode::IndexOutOfRange, "chord indices must be pairwise distinct");
  }
}

inline void validate_presentation(const BandSumPresentation& p) {
  require(p.n >= 1, ErrorCode::IndexOutOfRange, "presentation needs a positive component count");
  for (const ChordSpec& c : p.chords) validate_chord(c, p.n);
}

inline std::set<int> chord_index(const ChordSpec& c) {
  std::set<int> idx{c.branch};
  idx.insert(c.leaves.begin(), c.leaves.end());
  return idx;
}

namespace detail {

inline std::vector<BraidLetter> commutator(const std::vector<BraidLetter>& u, const std::vector<BraidLetter>& v) {
  std::vector<BraidLetter> w;
  w.reserve(2 * (u.size() + v.size()));
  w.insert(w.end(), u.begin(), u.end());
  w.insert(w.end(), v.begin(), v.end());
  for (auto it = u.rbegin(); it != u.rend(); ++it) w.push_back({it->i, it->j, -it->exponent});
  for (auto it = v.rbegin(); it != v.rend(); ++it) w.push_back({it->i, it->j, -it->exponent});
  return w;
}

}  // namespace detail

// The iterated commutator word of a chord. Degree 1 is the bare generator;
// degree k nests as [A_{i0 i1}, (degree k-1 word on the remaining leaves)].
// Sign -1 yields the formal inverse of the whole word.
inline PureBraidWord chord_word(const ChordSpec& c, int strands) {
  validate_chord(c, strands);
  auto letter = [&](int leaf) {
    int a = std::min(c.branch, leaf), b = std::max(c.branch, leaf);
    return BraidLetter{a, b, 1};
  };
  std::vector<BraidLetter> w{letter(c.leaves.back())};
  for (int t = (int)c.leaves.size() - 2; t >= 0; --t) w = detail::commutator({letter(c.leaves[t])}, w);
  PureBraidWord word{strands, std::move(w)};
  if (c.sign < 0) word = braid_inverse(word);
  return word;
}

inline BandSumPresentation milnor_link(int n) {
  require(n >= 2, ErrorCode::NTooSmall, "Milnor link needs at least 2 components");
  ChordSpec c;
  c.branch = n;
  c.sign = 1;
  for (int i = 1; i < n; ++i) c.leaves.push_back(i);
  return BandSumPresentation{n, {c}};
}

inline PureBraidWord presentation_word(const BandSumPresentation& p) {
  validate_presentation(p);
  PureBraidWord w{p.n, {}};
  for (const ChordSpec& c : p.chords) w = braid_concat(w, chord_word(c, p.n));
  return w;
}

inline LinkDiagram realize(const BandSumPresentation& p) { return closure_diagram(presentation_word(p)); }

// A chord insertion/deletion is a one-branched C_k-move whose index has
// k+1 elements, i.e. a one-branched d-C_k-move. The record is enough to
// replay the operation.
struct MoveRecord {
  std::string op;        // "insert" or "delete"
  std::string kind;      // always "one-branched d-C_k"
  int k = 0;             // chord degree
  std::set<int> index;   // components the move touches
  int position = 0;      // presentation position
  std::optional<ChordSpec> chord;  // carried for insertions so replay works

  bool operator==(const MoveRecord&) const = default;
};

struct PresentationMove {
  BandSumPresentation presentation;
  MoveRecord record;
};

inline PresentationMove insert_chord(const BandSumPresentation& p, const ChordSpec& c, int position) {
  validate_presentation(p);
  validate_chord(c, p.n);
  require(position >= 0 && position <= (int)p.chords.size(), ErrorCode::BadPosition,
          "insert position " + std::to_string(position) + " out of range");
  PresentationMove m;
  m.presentation = p;
  m.presentation.chords.insert(m.presentation.chords.begin() + position, c);
  m.record = {"insert", "one-branched d-C_k", c.degree(), chord_index(c), position, c};
  return m;
}

inline PresentationMove delete_chord(const BandSumPresentation& p, int position) {
  validate_presentation(p);
  require(position >= 0 && position < (int)p.chords.size(), ErrorCode::BadPosition,
          "delete position " + std::to_string(position) + " out of range");
  PresentationMove m;
  const ChordSpec& c = p.chords[position];
  m.record = {"delete", "one-branched d-C_k", c.degree(), chord_index(c), position, c};
  m.presentation = p;
  m.presentation.chords.erase(m.presentation.chords.begin() + position);
  return m;
}

// ---- chord JSON ----

inline nlohmann::json chord_to_json(const ChordSpec& c) {
  return nlohmann::json{{"branch", c.branch}, {"leaves", c.leaves}, {"sign", c.sign}};
}

inline nlohmann::json presentation_to_json(const BandSumPresentation& p) {
  nlohmann::json chords = nlohmann::json::array();
  for (const ChordSpec& c : p.chords) chords.push_back(chord_to_json(c));
  return nlohmann::json{{"chords", chords}, {"n", p.n}};
}

namespace detail {

inline void check_keys(const nlohmann::json& j, const std::set<std::string>& allowed, const char* what) {
  require(j.is_object(), ErrorCode::ParseError, std::string(what) + " must be a JSON object");
  for (const auto& [key, value] : j.items())
    require(allowed.count(key) > 0, ErrorCode::ParseError, std::string("unknown key '") + key + "' in " + what);
}

inline int get_int(const nlohmann::json& j, const char* key, const char* what) {
  require(j.contains(key), ErrorCode::ParseError, std::string(what) + " is missing key '" + key + "'");
  require(j.at(key).is_number_integer(), ErrorCode::ParseError,
          std::string("key '") + key + "' in " + what + " must be an integer");
  return j.at(key).get<int>();
}

}  // namespace detail

inline ChordSpec chord_from_json(const nlohmann::json& j) {
  detail::check_keys(j, {"branch", "leaves", "sign"}, "chord");
  ChordSpec c;
  c.branch = detail::get_int(j, "branch", "chord");
  c.sign = detail::get_int(j, "sign", "chord");
  require(j.contains("leaves") && j.at("leaves").is_array(), ErrorCode::ParseError,
          "chord key 'leaves' must be an array");
  for (const auto& leaf : j.at("leaves")) {
    require(leaf.is_number_integer(), ErrorCode::ParseError, "chord leaves must be integers");
    c.leaves.push_back(leaf.get<int>());
  }
  return c;
}

inline BandSumPresentation presentation_from_json(const nlohmann::json& j) {
  detail::check_keys(j, {"chords", "n"}, "presentation");
  BandSumPresentation p;
  p.n = detail::get_int(j, "n", "presentation");
  require(j.contains("chords") && j.at("chords").is_array(), ErrorCode::ParseError,
          "presentation key 'chords' must be an array");
  for (const auto& cj : j.at("chords")) p.chords.push_back(chord_from_json(cj));
  validate_presentation(p);
  return p;
}

inline BandSumPresentation presentation_from_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  require(!j.is_discarded(), ErrorCode::ParseError, "invalid JSON");
  return presentation_from_json(j);
}

}  // namespace bandlink
