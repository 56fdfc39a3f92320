#pragma once

// Commutator-syllable grammar over pure braid words and the escalation
// rewrite: moving a generator x across a syllable s of degree k is free in
// the group at the cost of an explicit correction commutator of degree k+1
// whose index is index(s) union {components of x}:
//
//   x s  ->  s x [x^-1, s^-1]        s x  ->  x s [s^-1, x^-1]
//
// When x commutes with s letter by letter the move is a plain transposition
// and no correction is emitted.

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "bandlink/braid.hpp"
#include "bandlink/errors.hpp"

namespace bandlink {

struct SyllableInfo {
  int degree = 0;
  std::set<int> index;

  bool operator==(const SyllableInfo&) const = default;
};

// Two pure braid generators A_{ij}, A_{kl} commute iff they are equal or
// their strand intervals are disjoint or strictly nested; sharing a single
// endpoint or interleaving does not commute.
inline bool letters_commute(const BraidLetter& a, const BraidLetter& b) {
  if (a.i == b.i && a.j == b.j) return true;
  if (a.j < b.i || b.j < a.i) return true;                  // disjoint
  if (a.i < b.i && b.j < a.j) return true;                  // b nested in a
  if (b.i < a.i && a.j < b.j) return true;                  // a nested in b
  return false;
}

namespace detail {

inline bool is_inverse_of(const std::vector<BraidLetter>& w, int ub, int ue, int vb) {
  // w[vb..) == inverse of w[ub..ue)?
  int len = ue - ub;
  for (int t = 0; t < len; ++t) {
    const BraidLetter& a = w[ub + t];
    const BraidLetter& b = w[vb + len - 1 - t];
    if (a.i != b.i || a.j != b.j || a.exponent != -b.exponent) return false;
  }
  return true;
}

inline std::optional<SyllableInfo> parse_syllable_memo(
    const std::vector<BraidLetter>& w, int begin, int end,
    std::map<std::pair<int, int>, std::optional<SyllableInfo>>& memo) {
  int len = end - begin;
  if (len < 1) return std::nullopt;
  auto key = std::make_pair(begin, end);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::optional<SyllableInfo> result;
  if (len == 1) {
    result = SyllableInfo{1, {w[begin].i, w[begin].j}};
  } else if (len % 2 == 0) {
    // try w = u v u^-1 v^-1 with |u| = p and |v| = len/2 - p
    int half = len / 2;
    for (int p = 1; p < half && !result; ++p) {
      if (!is_inverse_of(w, begin, begin + p, begin + half)) continue;
      if (!is_inverse_of(w, begin + p, begin + half, begin + half + p)) continue;
      auto u = parse_syllable_memo(w, begin, begin + p, memo);
      if (!u) continue;
      auto v = parse_syllable_memo(w, begin + p, begin + half, memo);
      if (!v) continue;
      SyllableInfo s;
      s.degree = u->degree + v->degree;
      s.index = u->index;
      s.index.insert(v->index.begin(), v->index.end());
      result = s;
    }
  }
  memo[key] = result;
  return result;
}

}  // namespace detail

// Recognizes the commutator grammar: a single letter (degree 1, index
// {i, j}) or [u, v] of syllables (degree deg u + deg v, index = union).
inline std::optional<SyllableInfo> parse_syllable(const std::vector<BraidLetter>& w, int begin, int end) {
  require(0 <= begin && begin <= end && end <= (int)w.size(), ErrorCode::BadPosition, "syllable range out of bounds");
  std::map<std::pair<int, int>, std::optional<SyllableInfo>> memo;
  return detail::parse_syllable_memo(w, begin, end, memo);
}

struct EscalationResult {
  PureBraidWord word;
  int letter_pos = -1;     // where x sits in the output
  int syllable_begin = -1; // where s sits in the output
  int syllable_end = -1;
  bool commuted = false;            // plain transposition, nothing inserted
  int correction_begin = -1;        // when !commuted: the inserted commutator
  int correction_end = -1;
  SyllableInfo correction;          // degree k+1, index(s) + components of x
};

inline EscalationResult escalate(const PureBraidWord& w, int letter_pos, int range_begin, int range_end) {
  validate_braid(w);
  int sz = (int)w.letters.size();
  require(0 <= letter_pos && letter_pos < sz, ErrorCode::BadPosition, "letter position out of bounds");
  require(0 <= range_begin && range_begin < range_end && range_end <= sz, ErrorCode::MalformedSyllable,
          "syllable range empty or out of bounds");
  bool x_left = letter_pos == range_begin - 1;
  bool x_right = letter_pos == range_end;
  require(x_left || x_right, ErrorCode::NotAdjacent, "letter is not adjacent to the syllable range");

  auto s_info = parse_syllable(w.letters, range_begin, range_end);
  if (!s_info) fail(ErrorCode::MalformedSyllable, "range is not a well-formed commutator syllable");

  const BraidLetter x = w.letters[letter_pos];
  std::vector<BraidLetter> s(w.letters.begin() + range_begin, w.letters.begin() + range_end);
  int slen = (int)s.size();

  bool commute = true;
  for (const BraidLetter& l : s)
    if (!letters_commute(x, l)) {
      commute = false;
      break;
    }

  std::vector<BraidLetter> s_inv;
  for (auto it = s.rbegin(); it != s.rend(); ++it) s_inv.push_back({it->i, it->j, -it->exponent});
  BraidLetter x_inv{x.i, x.j, -x.exponent};

  EscalationResult res;
  std::vector<BraidLetter> mid;
  if (x_left) {
    // x s -> s x  (+ [x^-1, s^-1] = x^-1 s^-1 x s)
    mid.insert(mid.end(), s.begin(), s.end());
    mid.push_back(x);
    res.syllable_begin = letter_pos;
    res.syllable_end = letter_pos + slen;
    res.letter_pos = letter_pos + slen;
    if (!commute) {
      res.correction_begin = (int)mid.size() + letter_pos;
      mid.push_back(x_inv);
      mid.insert(mid.end(), s_inv.begin(), s_inv.end());
      mid.push_back(x);
      mid.insert(mid.end(), s.begin(), s.end());
      res.correction_end = (int)mid.size() + letter_pos;
    }
  } else {
    // s x -> x s  (+ [s^-1, x^-1] = s^-1 x^-1 s x)
    mid.push_back(x);
    mid.insert(mid.end(), s.begin(), s.end());
    res.letter_pos = range_begin;
    res.syllable_begin = range_begin + 1;
    res.syllable_end = range_begin + 1 + slen;
    if (!commute) {
      res.correction_begin = (int)mid.size() + range_begin;
      mid.insert(mid.end(), s_inv.begin(), s_inv.end());
      mid.push_back(x_inv);
      mid.insert(mid.end(), s.begin(), s.end());
      mid.push_back(x);
      res.correction_end = (int)mid.size() + range_begin;
    }
  }

  int before = x_left ? letter_pos : range_begin;
  int after = x_left ? range_end : letter_pos + 1;
  PureBraidWord out{w.strands, {}};
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + before);
  out.letters.insert(out.letters.end(), mid.begin(), mid.end());
  out.letters.insert(out.letters.end(), w.letters.begin() + after, w.letters.end());

  res.word = std::move(out);
  res.commuted = commute;
  if (!commute) {
    res.correction.degree = s_info->degree + 1;
    res.correction.index = s_info->index;
    res.correction.index.insert(x.i);
    res.correction.index.insert(x.j);
  }
  return res;
}

// Free reduction in the free group on the generators (oracle for checking
// that escalation preserves the group element letter for letter).
inline std::vector<BraidLetter> free_reduce(std::vector<BraidLetter> w) {
  std::vector<BraidLetter> out;
  for (const BraidLetter& l : w) {
    if (!out.empty() && out.back().i == l.i && out.back().j == l.j && out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace bandlink
