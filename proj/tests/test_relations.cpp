#include <gtest/gtest.h>

#include <map>
#include <random>
#include <functional>
#include <set>
#include <tuple>

#include "polydiag/relations.hpp"

using namespace polydiag;
using namespace polydiag::relations;
using exactnum::CyclotomicZeroTest;
using exactnum::RootOfUnity;

TEST(Relations, BaseRelation) {
  for (std::int64_t p : {2, 3, 5, 7, 11}) {
    const Relation r = base_relation(p);
    EXPECT_EQ(r.weight(), p);
    EXPECT_EQ(r.ring_order(), p);
    EXPECT_TRUE(is_minimal(r));
  }
  EXPECT_THROW(base_relation(6), std::invalid_argument);
  EXPECT_THROW(base_relation(1), std::invalid_argument);
}

TEST(Relations, ConstructorChecksVanishing) {
  EXPECT_THROW(Relation({{RootOfUnity(3, 0), 1}, {RootOfUnity(3, 1), 1}}), std::invalid_argument);
  EXPECT_THROW(Relation({{RootOfUnity(2, 0), 0}, {RootOfUnity(2, 1), 1}}), std::invalid_argument);
  EXPECT_NO_THROW(Relation({{RootOfUnity(4, 1), 1}, {RootOfUnity(4, 3), 1}}));
}

TEST(Relations, SumOfTwoRelationsIsNotMinimal) {
  // 2*1 + (-1) + z3 + z3^2 = (1 + -1) + (1 + z3 + z3^2)
  const Relation r({{RootOfUnity(1, 0), 2}, {RootOfUnity(2, 1), 1}, {RootOfUnity(3, 1), 1}, {RootOfUnity(3, 2), 1}});
  EXPECT_FALSE(is_minimal(r));
}

TEST(Relations, ComposeCancelsAnchor) {
  // R_5 with one root replaced by the other two terms of a rotated R_3.
  const Relation outer = base_relation(5);
  const RootOfUnity anchor(5, 0);
  const Relation inner = base_relation(3).rotated(RootOfUnity(2, 1));  // -1, -z3, -z3^2
  const RootOfUnity neg_one(2, 1);
  const Relation sub = inner.rotated(RootOfUnity(2, 1));                 // back to 1, z3, z3^2
  EXPECT_THROW(compose(outer, {{inner, neg_one}}), std::invalid_argument);
  const Relation r = compose(outer, {{sub, anchor}});
  EXPECT_EQ(r.weight(), 6);
  EXPECT_TRUE(is_minimal(r));
}

TEST(Relations, CanonicalFormIsRotationInvariant) {
  std::mt19937_64 rng(99);
  for (const auto& e : enumerate_minimal(10)) {
    for (const auto& r : e.relations) {
      for (int i = 0; i < 5; ++i) {
        const std::int64_t N = r.ring_order() * (1 + static_cast<std::int64_t>(rng() % 3));
        const RootOfUnity by(N, static_cast<std::int64_t>(rng() % N));
        EXPECT_EQ(canonical_form(r.rotated(by)), r);
      }
    }
  }
}

TEST(Relations, TypeLabels) {
  RelationType r3{3, {}};
  RelationType r5_3{5, {r3}};
  RelationType t{7, {r3, r5_3}};
  t.normalize();
  EXPECT_EQ(t.label(), "(R_7:(R_5:R_3),R_3)");
  EXPECT_EQ(t.weight(), 12);
  RelationType u{5, {r3, r3}};
  EXPECT_EQ(u.label(), "(R_5:2R_3)");
  EXPECT_EQ(u.weight(), 7);
}

// Published census of minimal relations of weight at most 12.
TEST(Relations, CensusMatchesPublishedCounts) {
  const std::vector<std::tuple<int, std::string, std::size_t>> expected{
      {2, "R_2", 1},
      {3, "R_3", 1},
      {5, "R_5", 1},
      {6, "(R_5:R_3)", 1},
      {7, "(R_5:2R_3)", 2},
      {7, "R_7", 1},
      {8, "(R_5:3R_3)", 2},
      {8, "(R_7:R_3)", 1},
      {9, "(R_5:4R_3)", 1},
      {9, "(R_7:2R_3)", 3},
      {10, "(R_7:3R_3)", 5},
      {10, "(R_7:R_5)", 1},
      {11, "(R_7:4R_3)", 5},
      {11, "(R_7:R_5,R_3)", 6},
      {11, "(R_7:(R_5:R_3))", 6},
      {11, "R_11", 1},
      {12, "(R_7:5R_3)", 3},
      {12, "(R_7:R_5,2R_3)", 15},
      {12, "(R_7:(R_5:R_3),R_3)", 36},
      {12, "(R_7:(R_5:2R_3))", 14},
      {12, "(R_11:R_3)", 1},
  };
  const auto classes = enumerate_minimal(12);
  ASSERT_EQ(classes.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(classes[i].cls.type.weight(), std::get<0>(expected[i]));
    EXPECT_EQ(classes[i].cls.label, std::get<1>(expected[i]));
    EXPECT_EQ(classes[i].cls.count, std::get<2>(expected[i]));
    EXPECT_EQ(classes[i].relations.size(), classes[i].cls.count);
  }
  EXPECT_EQ(total_relations(classes), 107u);
}

TEST(Relations, EnumeratedRelationsAreCanonicalMinimalAndDistinct) {
  std::set<Relation> seen;
  exactnum::CyclotomicCache cache;
  for (const auto& e : enumerate_minimal(12)) {
    for (const auto& r : e.relations) {
      EXPECT_EQ(r.weight(), e.cls.type.weight()) << r.str();
      EXPECT_TRUE(is_minimal(r, cache)) << r.str();
      EXPECT_EQ(canonical_form(r), r) << r.str();
      EXPECT_TRUE(cyc_is_zero(r.to_cycsum(), cache)) << r.str();
      EXPECT_TRUE(seen.insert(r).second) << "duplicate " << r.str();
    }
  }
}

// (R_7 : j R_3) replaces j of the seven roots; up to rotation that leaves
// C(7, j) / 7 classes.
TEST(Relations, SevenWithTriplesCountIsBinomialOverSeven) {
  const std::map<int, std::size_t> want{{1, 1}, {2, 3}, {3, 5}, {4, 5}, {5, 3}};
  std::map<int, std::size_t> got;
  for (const auto& e : enumerate_minimal(12)) {
    const auto& t = e.cls.type;
    if (t.prime != 7) continue;
    bool all_three = !t.subtrahends.empty();
    for (const auto& s : t.subtrahends) all_three = all_three && s.prime == 3 && s.subtrahends.empty();
    if (all_three) got[static_cast<int>(t.subtrahends.size())] = e.cls.count;
  }
  EXPECT_EQ(got, want);
}

// Independent census: every subset of the 30th roots of unity of size at most
// 6 that vanishes and is minimal, up to rotation. Multiplicities above one do
// not occur at these weights.
TEST(Relations, BruteForceCensusUpToWeightSix) {
  const std::int64_t N = 30;
  const CyclotomicZeroTest zt(N);
  std::set<std::vector<std::int64_t>> classes;
  std::vector<std::int64_t> pick;
  std::vector<std::pair<std::int64_t, std::int64_t>> terms;
  auto vanishes = [&](const std::vector<std::int64_t>& es) {
    terms.clear();
    for (auto e : es) terms.emplace_back(e, 1);
    return zt.is_zero_terms(terms);
  };
  std::function<void(std::int64_t)> rec = [&](std::int64_t start) {
    if (pick.size() >= 2 && vanishes(pick)) {
      // Minimal iff no proper nonempty subset vanishes.
      bool minimal = true;
      const std::size_t m = pick.size();
      for (std::uint32_t mask = 1; mask + 1 < (1u << m) && minimal; ++mask) {
        std::vector<std::int64_t> sub;
        for (std::size_t i = 0; i < m; ++i) {
          if (mask & (1u << i)) sub.push_back(pick[i]);
        }
        if (vanishes(sub)) minimal = false;
      }
      if (minimal) {
        std::vector<std::int64_t> best;
        for (std::int64_t r = 0; r < N; ++r) {
          std::vector<std::int64_t> rot;
          for (auto e : pick) rot.push_back((e + r) % N);
          std::sort(rot.begin(), rot.end());
          if (best.empty() || rot < best) best = rot;
        }
        classes.insert(best);
      }
      return;  // supersets of a vanishing set are not minimal
    }
    if (pick.size() == 6) return;
    for (std::int64_t e = start; e < N; ++e) {
      pick.push_back(e);
      rec(e + 1);
      pick.pop_back();
    }
  };
  rec(0);
  EXPECT_EQ(classes.size(), total_relations(enumerate_minimal(6)));
  EXPECT_EQ(classes.size(), 4u);
}

TEST(Relations, WeightLimit) {
  EXPECT_THROW(enumerate_minimal(13), std::out_of_range);
  EXPECT_EQ(total_relations(enumerate_minimal(2)), 1u);
  EXPECT_EQ(total_relations(enumerate_minimal(7)), 7u);
  EXPECT_EQ(enumerate_minimal(7).size(), 6u);
}
