#include "icol/color_set.h"

#include <gtest/gtest.h>

#include <random>

#include "icol/error.h"
#include "test_support.h"

namespace icol {
namespace {

using testing::DefinitionalCyclicInterval;
using testing::StdSet;

TEST(CyclicSegmentTest, HandEvaluatedExamples) {
  EXPECT_EQ(CyclicSegmentClosed1(2, 4, 5), ColorSet(5, {2, 3, 4}));
  EXPECT_EQ(CyclicSegmentOpen1(2, 4, 5), ColorSet(5, {3}));
  EXPECT_EQ(CyclicSegmentOpen2(2, 4, 5), ColorSet(5, {1, 5}));
  EXPECT_EQ(CyclicSegmentClosed2(2, 4, 5), ColorSet(5, {1, 2, 4, 5}));
  EXPECT_EQ(CyclicSegmentClosed1(3, 3, 7), ColorSet(7, {3}));
  EXPECT_EQ(CyclicSegmentClosed2(3, 3, 7), ColorSet::Full(7));
}

TEST(CyclicSegmentTest, RejectsColorsOutsidePalette) {
  EXPECT_THROW(CyclicSegmentClosed1(0, 2, 5), Error);
  EXPECT_THROW(CyclicSegmentOpen2(2, 6, 5), Error);
  EXPECT_THROW(CyclicDistance(1, 6, 5), Error);
}

TEST(CyclicDistanceTest, Examples) {
  EXPECT_EQ(CyclicDistance(2, 4, 5), 2);
  EXPECT_EQ(CyclicDistance(1, 5, 5), 1);
  for (int t = 1; t <= 9; ++t) {
    for (int i = 1; i <= t; ++i) EXPECT_EQ(CyclicDistance(i, i, t), 0);
  }
}

TEST(CyclicSegmentTest, PartitionIdentitiesAndSymmetry) {
  for (int t = 1; t <= 12; ++t) {
    ColorSet full = ColorSet::Full(t);
    for (int a = 1; a <= t; ++a) {
      for (int b = 1; b <= t; ++b) {
        ColorSet closed1 = CyclicSegmentClosed1(a, b, t);
        ColorSet open1 = CyclicSegmentOpen1(a, b, t);
        ColorSet open2 = CyclicSegmentOpen2(a, b, t);
        ColorSet closed2 = CyclicSegmentClosed2(a, b, t);
        EXPECT_EQ(closed1.Union(open2), full);
        EXPECT_TRUE(closed1.Intersect(open2).empty());
        EXPECT_EQ(closed2, full.Minus(open1));
        EXPECT_TRUE(open1.IsSubsetOf(closed1));
        EXPECT_EQ(CyclicDistance(a, b, t), CyclicDistance(b, a, t));
      }
    }
  }
}

TEST(IntervalTest, Examples) {
  EXPECT_TRUE(IsInterval(ColorSet(7, {3, 4, 5})));
  EXPECT_FALSE(IsInterval(ColorSet(5, {1, 3})));
  EXPECT_FALSE(IsInterval(ColorSet(5)));
}

TEST(CyclicIntervalTest, Examples) {
  EXPECT_TRUE(IsCyclicInterval(ColorSet(5, {4, 5, 1})));
  EXPECT_EQ(CyclicSegmentClosed2(1, 4, 5), ColorSet(5, {1, 4, 5}));
  EXPECT_FALSE(IsCyclicInterval(ColorSet(5, {1, 3})));
  for (int t = 1; t <= kMaxPalette; ++t) {
    EXPECT_TRUE(IsCyclicInterval(ColorSet::Full(t)));
  }
  EXPECT_FALSE(IsCyclicInterval(ColorSet(5)));
}

// The closed form agrees with the existential definition on every subset.
TEST(CyclicIntervalTest, ClosedFormMatchesDefinitionExhaustively) {
  for (int t = 1; t <= 10; ++t) {
    for (uint64_t bits = 0; bits < (uint64_t{1} << t); ++bits) {
      ColorSet s = ColorSet::FromBits(t, bits);
      bool definitional = DefinitionalCyclicInterval(StdSet(s), t);
      ASSERT_EQ(IsCyclicInterval(s), definitional) << s.ToString() << " t=" << t;
      ASSERT_EQ(definitional,
                !s.empty() && CoveringArcLength(bits, t) == s.size());
    }
  }
}

TEST(CyclicIntervalTest, IntervalsAreCyclicIntervals) {
  for (int t = 1; t <= 16; ++t) {
    for (int lo = 1; lo <= t; ++lo) {
      for (int hi = lo; hi <= t; ++hi) {
        ColorSet s = ColorSet::Range(t, lo, hi);
        EXPECT_TRUE(IsInterval(s));
        EXPECT_TRUE(IsCyclicInterval(s));
      }
    }
  }
}

TEST(ChainedUnionTest, Examples) {
  std::vector<ColorSet> chain{ColorSet(4, {1, 2}), ColorSet(4, {2, 3})};
  EXPECT_EQ(ChainedUnion(chain, 4), ColorSet(4, {1, 2, 3}));

  std::vector<ColorSet> wrap{ColorSet(4, {4, 1}), ColorSet(4, {1, 2})};
  ColorSet u = ChainedUnion(wrap, 4);
  EXPECT_EQ(u, ColorSet(4, {4, 1, 2}));
  EXPECT_TRUE(IsCyclicInterval(u));

  std::vector<ColorSet> broken{ColorSet(4, {1, 2}), ColorSet(4, {3, 4})};
  EXPECT_THROW(ChainedUnion(broken, 4), Error);

  std::vector<ColorSet> not_cyclic{ColorSet(5, {1, 3})};
  EXPECT_THROW(ChainedUnion(not_cyclic, 5), Error);
}

// Random chains of cyclic intervals with overlapping neighbors; the union
// must be a cyclic interval.
TEST(ChainedUnionTest, RandomChainsStayCyclic) {
  std::mt19937 rng(1);
  int checked = 0;
  for (int t = 1; t <= 10; ++t) {
    std::vector<ColorSet> arcs;
    for (uint64_t bits = 1; bits < (uint64_t{1} << t); ++bits) {
      ColorSet s = ColorSet::FromBits(t, bits);
      if (IsCyclicInterval(s)) arcs.push_back(s);
    }
    for (int trial = 0; trial < 400; ++trial) {
      int length = std::uniform_int_distribution<int>(2, 6)(rng);
      std::vector<ColorSet> chain{arcs[rng() % arcs.size()]};
      while (static_cast<int>(chain.size()) < length) {
        std::vector<ColorSet> next;
        for (const ColorSet& a : arcs) {
          if (!a.Intersect(chain.back()).empty()) next.push_back(a);
        }
        chain.push_back(next[rng() % next.size()]);
      }
      ColorSet u = ChainedUnion(chain, t);
      ASSERT_TRUE(DefinitionalCyclicInterval(StdSet(u), t));
      ++checked;
    }
  }
  EXPECT_EQ(checked, 4000);
}

TEST(ColorSetTest, BasicAlgebra) {
  ColorSet s(6, {2, 3, 6});
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.Min(), 2);
  EXPECT_EQ(s.Max(), 6);
  EXPECT_EQ(s.Complement(), ColorSet(6, {1, 4, 5}));
  EXPECT_EQ(s.ToString(), "{2,3,6}");
  EXPECT_THROW(ColorSet(6, {7}), Error);
  EXPECT_THROW(ColorSet(0), Error);
  EXPECT_THROW(ColorSet(65), Error);
  EXPECT_THROW(s.Union(ColorSet(5)), Error);
  ColorSet wide = ColorSet::Full(64);
  EXPECT_EQ(wide.size(), 64);
  EXPECT_TRUE(wide.Complement().empty());
}

}  // namespace
}  // namespace icol
