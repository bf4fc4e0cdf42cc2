#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "polydiag/catalog.hpp"
#include "polydiag/geometry.hpp"
#include "polydiag/scan.hpp"

using namespace polydiag;
using namespace polydiag::catalog;

namespace {

ArcSextuple uvwxyz(const std::array<std::string, 6>& s) {
  std::array<Rational, 6> v;
  for (int i = 0; i < 6; ++i) v[i] = Rational::parse(s[i]);
  return ArcSextuple::from_uvwxyz(v);
}

// Circular shift by k positions and optional reversal of the interleaved arcs.
ArcSextuple moved(const ArcSextuple& s, int k, bool reflect) {
  ArcSextuple out;
  for (int i = 0; i < 6; ++i) {
    const int j = reflect ? (k - i + 12) % 6 : (i + k) % 6;
    out.arcs[i] = s.arcs[j];
  }
  return out;
}

}  // namespace

TEST(AffineForm, ParseAndEvaluate) {
  const AffineForm f = AffineForm::parse("1/3-2t");
  EXPECT_EQ(f.at(rat(1, 12)), rat(1, 6));
  EXPECT_EQ(AffineForm::parse("t").at(rat(2, 7)), rat(2, 7));
  EXPECT_EQ(AffineForm::parse("1/6").at(rat(5, 7)), rat(1, 6));
  EXPECT_EQ(AffineForm::parse("1/3+t").str(), "1/3+t");
}

TEST(Catalog, TableSizes) {
  EXPECT_EQ(catalog::catalog().families().size(), 4u);
  EXPECT_EQ(catalog::catalog().sporadics().size(), 65u);
  EXPECT_EQ(catalog::catalog().multi_families(4).size(), 12u);
  EXPECT_EQ(catalog::catalog().multi_families(5).size(), 4u);
  EXPECT_THROW(catalog::catalog().multi_families(6), std::invalid_argument);
}

TEST(Catalog, SporadicRowsAreSolutions) {
  for (const auto& sp : catalog::catalog().sporadics()) {
    Rational total;
    for (const auto& v : sp.uvwxyz) total += v;
    EXPECT_EQ(total, Rational(1));
    const auto& r = sp.uvwxyz;
    EXPECT_TRUE(exactnum::sin_product_equal(r[0], r[1], r[2], r[3], r[4], r[5]));
    EXPECT_LT(oracle::sine_product_gap(r), oracle::Real("1e-40"));
    BigInt d = 1;
    for (const auto& v : r) d = boost::multiprecision::lcm(d, v.den());
    EXPECT_EQ(d, BigInt(sp.denominator));
  }
}

TEST(Catalog, FamiliesHoldOnTwentySamples) {
  std::mt19937_64 rng(5);
  for (const auto& fam : catalog::catalog().families()) {
    int checked = 0;
    while (checked < 20) {
      const std::int64_t q = 7 + static_cast<std::int64_t>(rng() % 200);
      const Rational t = fam.t_min + (fam.t_max - fam.t_min) * rat(1 + static_cast<std::int64_t>(rng() % (q - 1)), q);
      if (!fam.in_range(t)) continue;
      const auto v = fam.at(t);
      Rational total;
      for (const auto& x : v) total += x;
      EXPECT_EQ(total, Rational(1));
      EXPECT_TRUE(exactnum::sin_product_equal(v[0], v[1], v[2], v[3], v[4], v[5])) << t;
      EXPECT_LT(oracle::sine_product_gap(v), oracle::Real("1e-40")) << t;
      ++checked;
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(uvwxyz({"1/10", "2/15", "3/10", "2/15", "1/6", "1/6"})).str(), "Sporadic #1 (denominator 30)");
  EXPECT_EQ(classify(uvwxyz({"1/6", "1/6", "1/6", "1/6", "1/6", "1/6"})).str(), "Trivial");
  EXPECT_EQ(classify(uvwxyz({"1/10", "1/10", "3/10", "1/6", "1/6", "1/6"})).str(), "NotConcurrent");
  const auto& f1 = catalog::catalog().families()[0];
  const auto v = f1.at(rat(1, 30));
  EXPECT_EQ(classify(ArcSextuple::from_uvwxyz(v)).str(), "Family #1 (t = 1/30)");
  EXPECT_THROW(classify(uvwxyz({"1/6", "1/6", "1/6", "1/6", "1/6", "1/5"})), std::invalid_argument);
}

TEST(Classify, SporadicRowsClassifyAsThemselves) {
  const auto& sp = catalog::catalog().sporadics();
  for (std::size_t i = 0; i < sp.size(); ++i) {
    const auto labels = classify_all(ArcSextuple::from_uvwxyz(sp[i].uvwxyz));
    const auto want = ClassLabel::sporadic(static_cast<int>(i + 1));
    EXPECT_NE(std::find(labels.begin(), labels.end(), want), labels.end()) << "row " << i + 1;
  }
}

TEST(Classify, InvariantUnderRotationAndReflection) {
  std::vector<ArcSextuple> samples;
  for (const auto& sp : catalog::catalog().sporadics()) samples.push_back(ArcSextuple::from_uvwxyz(sp.uvwxyz));
  for (const auto& fam : catalog::catalog().families()) {
    samples.push_back(ArcSextuple::from_uvwxyz(fam.at((fam.t_min * 2 + fam.t_max) / Rational(3))));
  }
  samples.push_back(uvwxyz({"1/12", "1/6", "1/4", "1/4", "1/12", "1/6"}));
  for (const auto& s : samples) {
    const auto base = classify(s);
    for (int k = 0; k < 6; ++k) {
      for (bool r : {false, true}) EXPECT_EQ(classify(moved(s, k, r)), base) << s.str();
    }
  }
}

TEST(Classify, NumericOracleAgreesOnRandomSextuples) {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 400; ++iter) {
    const std::int64_t n = 6 * (1 + static_cast<std::int64_t>(rng() % 12));
    std::array<std::int64_t, 6> c{};
    std::int64_t left = n;
    for (int i = 0; i < 5; ++i) {
      c[i] = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(left - (5 - i)));
      left -= c[i];
    }
    c[5] = left;
    const ArcSextuple s = ArcSextuple::from_counts(c, n);
    const std::array<Rational, 6> u{s.arcs[0], s.arcs[2], s.arcs[4], s.arcs[1], s.arcs[3], s.arcs[5]};
    const bool numeric = oracle::sine_product_gap(u) < oracle::Real("1e-40");
    EXPECT_EQ(classify(s).kind != ClassLabel::Kind::not_concurrent, numeric) << s.str();
  }
}

// Family members that coincide with another entry get the higher-priority label.
TEST(Classify, OverlapsResolveByPriority) {
  for (const auto& t : {rat(1, 12), rat(1, 18), rat(1, 24)}) {
    for (std::size_t i = 0; i < catalog::catalog().families().size(); ++i) {
      const auto& fam = catalog::catalog().families()[i];
      if (!fam.in_range(t)) continue;
      const auto s = ArcSextuple::from_uvwxyz(fam.at(t));
      const auto all = classify_all(s);
      ASSERT_FALSE(all.empty());
      EXPECT_EQ(classify(s), all.front());
      EXPECT_NE(std::find(all.begin(), all.end(), ClassLabel::family(static_cast<int>(i + 1), t)), all.end());
    }
  }
}

TEST(EnumerateTriples, EveryClassIsConcurrentAndDistinct) {
  for (std::int64_t n : {6, 8, 12, 18, 24, 30}) {
    std::set<std::array<std::int64_t, 6>> seen;
    for (const auto& tc : enumerate_triples(n)) {
      EXPECT_TRUE(tc.arcs.satisfies_identity());
      EXPECT_NE(tc.label.kind, ClassLabel::Kind::not_concurrent);
      EXPECT_TRUE(seen.insert(tc.counts).second);
    }
  }
  EXPECT_TRUE(enumerate_triples(7).empty());
  EXPECT_TRUE(enumerate_triples(25).empty());
  EXPECT_EQ(enumerate_triples(6).size(), 1u);
}

// Exhaustive exact testing of every triple finds exactly the rotations of the
// enumerated classes.
TEST(EnumerateTriples, CompleteAtDeskScale) {
  for (int n : {6, 8, 10, 12, 18, 24, 30}) {
    const auto found = geometry::concurrent_triples(n);
    const auto listed = geometry::rotation_expansion(enumerate_triples(n), n);
    EXPECT_EQ(found, listed) << "n=" << n;
  }
}

TEST(ValidateMulti, FamilyMembersAndErrors) {
  for (int k : {4, 5}) {
    for (std::size_t i = 0; i < catalog::catalog().multi_families(k).size(); ++i) {
      const auto& row = catalog::catalog().multi_families(k)[i];
      const Rational t = (row.t_min + row.t_max) / Rational(2);
      auto arcs = row.at(t);
      const auto r = validate_multi(arcs, k);
      EXPECT_EQ(r.kind, MultiResult::Kind::in_family) << k << " row " << i + 1;
      std::rotate(arcs.begin(), arcs.begin() + 3, arcs.end());
      EXPECT_EQ(validate_multi(arcs, k).kind, MultiResult::Kind::in_family);
      std::reverse(arcs.begin(), arcs.end());
      EXPECT_EQ(validate_multi(arcs, k).kind, MultiResult::Kind::in_family);
    }
  }
  EXPECT_THROW(validate_multi(std::vector<Rational>(6, rat(1, 6)), 3), std::invalid_argument);
  EXPECT_THROW(validate_multi(std::vector<Rational>(6, rat(1, 6)), 4), std::invalid_argument);
  EXPECT_EQ(validate_multi(std::vector<Rational>(8, rat(1, 7)), 4).kind, MultiResult::Kind::invalid);
  EXPECT_TRUE(is_exceptional_denominator(30));
  EXPECT_FALSE(is_exceptional_denominator(7));
}

// Every point where four or more diagonals meet validates.
TEST(ValidateMulti, ScannedClustersValidate) {
  for (int n : {12, 18, 24, 30, 42, 60}) {
    const auto s = geometry::scan(n, geometry::ScanMode::slice, 1);
    for (const auto& cl : s.clusters) {
      if (cl.is_center || cl.k() < 4) continue;
      std::vector<int> ends;
      for (const auto& d : cl.diagonals) {
        ends.push_back(d.a);
        ends.push_back(d.b);
      }
      std::sort(ends.begin(), ends.end());
      std::vector<Rational> arcs;
      for (std::size_t i = 0; i + 1 < ends.size(); ++i) arcs.push_back(rat(ends[i + 1] - ends[i], n));
      arcs.push_back(rat(n - ends.back() + ends.front(), n));
      const auto r = validate_multi(arcs, cl.k());
      EXPECT_NE(r.kind, MultiResult::Kind::invalid) << "n=" << n;
      if (r.kind == MultiResult::Kind::exceptional) {
        EXPECT_TRUE(r.denominator_listed) << "n=" << n << " " << r.str();
      }
    }
  }
}

TEST(ExportCatalog, CsvShape) {
  std::ostringstream os;
  export_catalog_csv(os);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "table,index,k,denominator,t_min,t_max,relation_type,entries");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 4 + 65 + 12 + 4);
}
