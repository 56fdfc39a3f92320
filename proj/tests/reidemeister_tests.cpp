#include <gtest/gtest.h>

#include "bandlink/chords.hpp"
#include "bandlink/milnor.hpp"
#include "bandlink/reidemeister.hpp"
#include "oracles.hpp"

using namespace bandlink;

namespace {

// Unknot drawn with one positive kink: arc 1 at slots 0/3, arc 2 at 1/2.
LinkDiagram kinked_unknot() {
  LinkDiagram d;
  d.n_components = 1;
  d.crossings.push_back({{1, 2, 2, 1}});
  d.arc_component = {{1, 1}, {2, 1}};
  return d;
}

}  // namespace

TEST(Faces, HopfHasFourBigons) {
  LinkDiagram d = oracle::hopf();
  DiagramInfo info = analyze(d);
  auto faces = compute_faces(d, info);
  ASSERT_EQ(faces.size(), 4u);
  for (const auto& f : faces) EXPECT_EQ(f.size(), 2u);
  EXPECT_TRUE(is_planar(d, info));
}

TEST(Faces, KinkHasMonogon) {
  LinkDiagram d = kinked_unknot();
  DiagramInfo info = analyze(d);
  auto faces = compute_faces(d, info);
  bool monogon = false;
  for (const auto& f : faces) monogon |= f.size() == 1;
  EXPECT_TRUE(monogon);
}

TEST(Faces, NonplanarDiagramDetected) {
  // One strand with passage order over-1, over-2, under-1, under-2: a valid
  // combinatorial diagram that only embeds on the torus (two faces, Euler
  // characteristic 0).
  LinkDiagram d;
  d.n_components = 1;
  d.crossings.push_back({{3, 2, 4, 1}});
  d.crossings.push_back({{4, 3, 1, 2}});
  d.arc_component = {{1, 1}, {2, 1}, {3, 1}, {4, 1}};
  DiagramInfo info = analyze(d);
  EXPECT_EQ(compute_faces(d, info).size(), 2u);
  EXPECT_FALSE(is_planar(d, info));
  EXPECT_THROW(require_planar(d, info), Error);
}

TEST(R1, RemoveKink) {
  LinkDiagram d = kinked_unknot();
  DiagramInfo info = analyze(d);
  // On the sphere both the loop face and the outer face are monogons, so the
  // crossing is reported twice; both sites remove the same kink.
  auto sites = find_r1(d, info, compute_faces(d, info));
  ASSERT_EQ(sites.size(), 2u);
  for (const auto& site : sites) {
    LinkDiagram out = apply_r1(d, site);
    EXPECT_TRUE(out.crossings.empty());
    EXPECT_EQ(out.n_components, 1);
    EXPECT_EQ(out.free_loops, 1);
    EXPECT_NO_THROW(validate(out));
  }
}

TEST(R1, AddThenRemoveAllFourKinds) {
  LinkDiagram d = oracle::hopf();
  for (int type = 0; type < 4; ++type) {
    DiagramInfo info = analyze(d);
    LinkDiagram grown = apply_r1_add(d, info, 1, type);
    EXPECT_NO_THROW(validate(grown));
    EXPECT_EQ(grown.crossings.size(), 3u) << "type " << type;
    EXPECT_EQ(linking_number(grown, 1, 2), 1) << "type " << type;
    DiagramInfo ginfo = analyze(grown);
    EXPECT_TRUE(is_planar(grown, ginfo)) << "type " << type;
    auto sites = find_r1(grown, ginfo, compute_faces(grown, ginfo));
    ASSERT_FALSE(sites.empty()) << "type " << type;
    LinkDiagram back = apply_r1(grown, sites[0]);
    EXPECT_EQ(back.crossings.size(), 2u) << "type " << type;
    EXPECT_NO_THROW(validate(back));
    EXPECT_EQ(linking_number(back, 1, 2), 1) << "type " << type;
  }
}

TEST(R1, KinkSignsCoverBothSigns) {
  LinkDiagram d = oracle::hopf();
  DiagramInfo info = analyze(d);
  int pos = 0, neg = 0;
  for (int type = 0; type < 4; ++type) {
    LinkDiagram grown = apply_r1_add(d, info, 1, type);
    DiagramInfo ginfo = analyze(grown);
    (ginfo.sign.back() > 0 ? pos : neg) += 1;
  }
  EXPECT_EQ(pos, 2);
  EXPECT_EQ(neg, 2);
}

TEST(R2, HopfIsNotReducible) {
  // All four Hopf faces are bigons, but both crossings have equal sign, so
  // none is a cancelling pair. The sign test is load-bearing.
  LinkDiagram d = oracle::hopf();
  DiagramInfo info = analyze(d);
  EXPECT_TRUE(find_r2(d, info, compute_faces(d, info)).empty());
}

TEST(R2, AddThenRemove) {
  LinkDiagram d = oracle::hopf();
  bool tried = false;
  for (ArcId x : {1, 2, 3, 4}) {
    for (ArcId y : {1, 2, 3, 4}) {
      if (x == y) continue;
      for (bool x_under : {true, false}) {
        auto grown = apply_r2_add(d, x, y, x_under);
        if (!grown) continue;
        tried = true;
        EXPECT_NO_THROW(validate(*grown));
        EXPECT_EQ(grown->crossings.size(), 4u);
        EXPECT_EQ(linking_number(*grown, 1, 2), 1);
        DiagramInfo ginfo = analyze(*grown);
        EXPECT_TRUE(is_planar(*grown, ginfo));
        auto sites = find_r2(*grown, ginfo, compute_faces(*grown, ginfo));
        ASSERT_FALSE(sites.empty());
        LinkDiagram back = apply_r2(*grown, sites[0]);
        EXPECT_EQ(back.crossings.size(), 2u);
        EXPECT_NO_THROW(validate(back));
        EXPECT_EQ(linking_number(back, 1, 2), 1);
      }
    }
  }
  EXPECT_TRUE(tried);
}

TEST(R3, SlidePreservesEverything) {
  LinkDiagram base = realize(milnor_link(3));
  MuReport want = mu_vector(base, 3);
  std::vector<LinkDiagram> candidates{base};
  for (std::uint64_t seed = 1; seed <= 60; ++seed) candidates.push_back(random_moves(base, 8, seed));
  int applied = 0;
  for (const LinkDiagram& d : candidates) {
    if (applied >= 5) break;
    DiagramInfo info = analyze(d);
    auto sites = find_r3(d, info, compute_faces(d, info));
    if (sites.empty()) continue;
    ++applied;
    LinkDiagram out = apply_r3(d, info, sites[0]);
    EXPECT_NO_THROW(validate(out));
    EXPECT_EQ(out.crossings.size(), d.crossings.size());
    DiagramInfo oinfo = analyze(out);
    EXPECT_TRUE(is_planar(out, oinfo));
    EXPECT_TRUE(mu_vector(out, 3) == want);
  }
  EXPECT_GE(applied, 1);
}

TEST(Simplify, KinkedUnknotToZero) {
  LinkDiagram d = kinked_unknot();
  SimplifyResult res = simplify(d);
  EXPECT_TRUE(res.diagram.crossings.empty());
  EXPECT_EQ(res.verdict, SimplifyVerdict::minimal_reached);
  EXPECT_EQ(res.diagram.free_loops, 1);
  EXPECT_GE(res.moves_used, 1);
}

TEST(Simplify, HopfStaysAtTwoCrossings) {
  SimplifyResult res = simplify(oracle::hopf());
  EXPECT_EQ(res.diagram.crossings.size(), 2u);
  EXPECT_EQ(res.verdict, SimplifyVerdict::minimal_reached);
}

TEST(Simplify, NoisyMilnor2BackToTwoCrossings) {
  LinkDiagram d = realize(milnor_link(2));
  for (std::uint64_t seed : {3u, 9u}) {
    LinkDiagram noisy = random_moves(d, 15, seed);
    SimplifyResult res = simplify(noisy);
    EXPECT_EQ(res.diagram.crossings.size(), 2u) << "seed " << seed;
    EXPECT_EQ(linking_number(res.diagram, 1, 2), 1) << "seed " << seed;
  }
}

TEST(Simplify, ZeroBudgetReportsExhaustion) {
  SimplifyOptions opts;
  opts.move_budget = 0;
  SimplifyResult res = simplify(kinked_unknot(), opts);
  EXPECT_EQ(res.verdict, SimplifyVerdict::budget_exhausted);
  EXPECT_EQ(res.diagram.crossings.size(), 1u);

  // A diagram with no moves left is minimal even on an empty budget.
  SimplifyResult triv = simplify(oracle::trivial_link(2), opts);
  EXPECT_EQ(triv.verdict, SimplifyVerdict::minimal_reached);
}

TEST(Simplify, EveryComponentSublinkOfMilnor3Unknots) {
  LinkDiagram d = realize(milnor_link(3));
  for (int drop = 1; drop <= 3; ++drop) {
    std::set<int> keep;
    for (int c = 1; c <= 3; ++c)
      if (c != drop) keep.insert(c);
    SimplifyResult res = simplify(sublink(d, keep));
    EXPECT_TRUE(res.diagram.crossings.empty()) << "drop " << drop;
  }
}

TEST(RandomMoves, DeterministicPerSeed) {
  LinkDiagram d = realize(milnor_link(3));
  LinkDiagram a = random_moves(d, 12, 42);
  LinkDiagram b = random_moves(d, 12, 42);
  EXPECT_EQ(a, b);
  LinkDiagram c = random_moves(d, 12, 43);
  EXPECT_NO_THROW(validate(c));
}

TEST(RandomMoves, PreservesInvariants) {
  LinkDiagram d = oracle::chain3();
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    LinkDiagram m = random_moves(d, 10, seed);
    EXPECT_NO_THROW(validate(m));
    EXPECT_EQ(linking_number(m, 1, 2), 1);
    EXPECT_EQ(linking_number(m, 2, 3), 1);
    EXPECT_EQ(linking_number(m, 1, 3), 0);
  }
}
