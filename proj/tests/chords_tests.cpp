#include <gtest/gtest.h>

#include "bandlink/chords.hpp"
#include "oracles.hpp"

using namespace bandlink;

namespace {

template <class F>
void expect_error(ErrorCode code, F&& fn) {
  try {
    fn();
    FAIL() << "expected error " << error_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

std::size_t closure_crossings(const PureBraidWord& w) {
  std::size_t total = 0;
  for (const BraidLetter& l : w.letters) total += 2 + 2 * (std::size_t)(l.j - l.i - 1);
  return total;
}

}  // namespace

TEST(Chord, ValidationErrors) {
  expect_error(ErrorCode::IndexOutOfRange, [] { validate_chord({2, {}, 1}, 3); });
  expect_error(ErrorCode::IndexOutOfRange, [] { validate_chord({2, {1}, 0}, 3); });
  expect_error(ErrorCode::IndexOutOfRange, [] { validate_chord({0, {1}, 1}, 3); });
  expect_error(ErrorCode::IndexOutOfRange, [] { validate_chord({4, {1}, 1}, 3); });
  expect_error(ErrorCode::IndexOutOfRange, [] { validate_chord({2, {5}, 1}, 3); });
  expect_error(ErrorCode::IndexOutOfRange, [] { validate_chord({3, {1, 1}, 1}, 3); });
  expect_error(ErrorCode::IndexOutOfRange, [] { validate_chord({2, {1, 2}, 1}, 3); });
  EXPECT_NO_THROW(validate_chord({3, {1, 2}, -1}, 3));
  expect_error(ErrorCode::IndexOutOfRange, [] { validate_presentation({0, {}}); });
  expect_error(ErrorCode::IndexOutOfRange, [] { validate_presentation({2, {{2, {3}, 1}}}); });
}

TEST(Chord, IndexIsBranchPlusLeaves) {
  EXPECT_EQ(chord_index({3, {1, 2}, 1}), (std::set<int>{1, 2, 3}));
  EXPECT_EQ(chord_index({2, {5}, -1}), (std::set<int>{2, 5}));
}

TEST(ChordWord, DegreeOneIsBareGenerator) {
  PureBraidWord w = chord_word({2, {1}, 1}, 2);
  ASSERT_EQ(w.letters.size(), 1u);
  EXPECT_EQ(w.letters[0], (BraidLetter{1, 2, 1}));
  PureBraidWord neg = chord_word({2, {1}, -1}, 2);
  ASSERT_EQ(neg.letters.size(), 1u);
  EXPECT_EQ(neg.letters[0], (BraidLetter{1, 2, -1}));
}

TEST(ChordWord, DegreeTwoIsCommutator) {
  PureBraidWord w = chord_word({3, {1, 2}, 1}, 3);
  std::vector<BraidLetter> want{{1, 3, 1}, {2, 3, 1}, {1, 3, -1}, {2, 3, -1}};
  EXPECT_EQ(w.letters, want);
}

TEST(ChordWord, LengthFollowsClosedForm) {
  // Degree-k chord words have 3 * 2^(k-1) - 2 letters.
  for (int n = 2; n <= 6; ++n) {
    ChordSpec c = milnor_link(n).chords[0];
    int k = c.degree();
    std::size_t want = 3u * (1u << (k - 1)) - 2u;
    EXPECT_EQ(chord_word(c, n).letters.size(), want) << "degree " << k;
  }
}

TEST(ChordWord, SignRealizesFormalInverse) {
  ChordSpec pos{4, {1, 2, 3}, 1};
  ChordSpec neg = pos;
  neg.sign = -1;
  EXPECT_EQ(chord_word(neg, 4), braid_inverse(chord_word(pos, 4)));
}

TEST(ChordWord, CommutatorClosureHasZeroLinking) {
  for (int n = 3; n <= 5; ++n) {
    LinkDiagram d = realize({n, {milnor_link(n).chords[0]}});
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) EXPECT_EQ(linking_number(d, a, b), 0) << n << ": " << a << "," << b;
  }
}

TEST(MilnorLink, Structure) {
  expect_error(ErrorCode::NTooSmall, [] { milnor_link(1); });
  BandSumPresentation p2 = milnor_link(2);
  EXPECT_EQ(p2.n, 2);
  ASSERT_EQ(p2.chords.size(), 1u);
  EXPECT_EQ(p2.chords[0], (ChordSpec{2, {1}, 1}));
  BandSumPresentation p4 = milnor_link(4);
  EXPECT_EQ(p4.chords[0], (ChordSpec{4, {1, 2, 3}, 1}));
  EXPECT_EQ(chord_index(p4.chords[0]), (std::set<int>{1, 2, 3, 4}));
}

TEST(Realize, CrossingCountMatchesWordExpansion) {
  for (int n = 2; n <= 5; ++n) {
    BandSumPresentation p = milnor_link(n);
    EXPECT_EQ(realize(p).crossings.size(), closure_crossings(presentation_word(p))) << n;
  }
  BandSumPresentation p5 = milnor_link(5);
  EXPECT_EQ(presentation_word(p5).letters.size(), 22u);
  EXPECT_EQ(realize(p5).crossings.size(), 88u);
}

TEST(Moves, InsertThenDeleteRoundTrips) {
  BandSumPresentation p = milnor_link(3);
  ChordSpec extra{2, {1}, -1};
  PresentationMove ins = insert_chord(p, extra, 1);
  ASSERT_EQ(ins.presentation.chords.size(), 2u);
  EXPECT_EQ(ins.presentation.chords[1], extra);
  EXPECT_EQ(ins.record.op, "insert");
  EXPECT_EQ(ins.record.kind, "one-branched d-C_k");
  EXPECT_EQ(ins.record.k, 1);
  EXPECT_EQ(ins.record.index, (std::set<int>{1, 2}));
  EXPECT_EQ(ins.record.position, 1);
  ASSERT_TRUE(ins.record.chord.has_value());
  EXPECT_EQ(*ins.record.chord, extra);

  PresentationMove del = delete_chord(ins.presentation, 1);
  EXPECT_EQ(del.presentation, p);
  EXPECT_EQ(del.record.op, "delete");
  ASSERT_TRUE(del.record.chord.has_value());
  EXPECT_EQ(*del.record.chord, extra);
}

TEST(Moves, PositionBounds) {
  BandSumPresentation p = milnor_link(3);
  expect_error(ErrorCode::BadPosition, [&] { insert_chord(p, {2, {1}, 1}, 2); });
  expect_error(ErrorCode::BadPosition, [&] { insert_chord(p, {2, {1}, 1}, -1); });
  expect_error(ErrorCode::BadPosition, [&] { delete_chord(p, 1); });
  expect_error(ErrorCode::BadPosition, [&] { delete_chord(p, -1); });
  EXPECT_NO_THROW(insert_chord(p, {2, {1}, 1}, 0));
  EXPECT_NO_THROW(delete_chord(p, 0));
}

TEST(ChordJson, RoundTrip) {
  BandSumPresentation p{4, {{4, {1, 2, 3}, 1}, {2, {1}, -1}}};
  BandSumPresentation back = presentation_from_json(presentation_to_json(p));
  EXPECT_EQ(back, p);
  EXPECT_EQ(presentation_from_string(presentation_to_json(p).dump()), p);
}

TEST(ChordJson, StrictParseErrors) {
  expect_error(ErrorCode::ParseError, [] { presentation_from_string("not json"); });
  expect_error(ErrorCode::ParseError, [] { presentation_from_string("[1,2]"); });
  expect_error(ErrorCode::ParseError, [] { presentation_from_string(R"({"n":2})"); });
  expect_error(ErrorCode::ParseError, [] { presentation_from_string(R"({"n":2,"chords":{}})"); });
  expect_error(ErrorCode::ParseError, [] { presentation_from_string(R"({"n":2,"chords":[],"extra":1})"); });
  expect_error(ErrorCode::ParseError,
               [] { presentation_from_string(R"({"n":2,"chords":[{"branch":2,"leaves":[1]}]})"); });
  expect_error(ErrorCode::ParseError,
               [] { presentation_from_string(R"({"n":2,"chords":[{"branch":2,"leaves":[1],"sign":1,"x":0}]})"); });
  expect_error(ErrorCode::ParseError,
               [] { presentation_from_string(R"({"n":2,"chords":[{"branch":2,"leaves":1,"sign":1}]})"); });
  expect_error(ErrorCode::ParseError,
               [] { presentation_from_string(R"({"n":2,"chords":[{"branch":2,"leaves":[1.5],"sign":1}]})"); });
  expect_error(ErrorCode::ParseError,
               [] { presentation_from_string(R"({"n":2.5,"chords":[]})"); });
  // Structurally valid JSON still goes through semantic validation.
  expect_error(ErrorCode::IndexOutOfRange,
               [] { presentation_from_string(R"({"n":2,"chords":[{"branch":2,"leaves":[7],"sign":1}]})"); });
}

TEST(ChordJson, SerializationIsCanonical) {
  BandSumPresentation p = milnor_link(3);
  EXPECT_EQ(presentation_to_json(p).dump(), R"({"chords":[{"branch":3,"leaves":[1,2],"sign":1}],"n":3})");
}
