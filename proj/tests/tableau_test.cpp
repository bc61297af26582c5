#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "motzcyc/errors.hpp"
#include "motzcyc/shape.hpp"
#include "motzcyc/tableau.hpp"

using namespace motzcyc;

namespace {

// Independent oracle: assign 1..n to the cells in every order and keep the
// fillings the validating constructor accepts.
std::set<std::string> brute_force_syt(const SkewShape& shape) {
  const int n = shape.cells();
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  std::set<std::string> out;
  do {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
    std::size_t next = 0;
    for (int r = 1; r <= shape.rows(); ++r)
      for (int c = 0; c < shape.row_cells(r); ++c)
        rows[static_cast<std::size_t>(r) - 1].push_back(values[next++]);
    try {
      out.insert(SkewTableau(shape, std::move(rows)).str());
    } catch (const NotStandardError&) {
    }
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

}  // namespace

TEST(SkewShape, ParseAndPrint) {
  const SkewShape s = SkewShape::parse("5,4,2/2");
  EXPECT_EQ(s.str(), "5,4,2/2");
  EXPECT_EQ(s.rows(), 3);
  EXPECT_EQ(s.outer(1), 5);
  EXPECT_EQ(s.inner(1), 2);
  EXPECT_EQ(s.inner(2), 0);
  EXPECT_EQ(s.cells(), 9);
  EXPECT_EQ(s.row_cells(1), 3);
  EXPECT_FALSE(s.straight());
  EXPECT_TRUE(SkewShape::parse("3,2").straight());
  EXPECT_TRUE(s.contains(1, 3));
  EXPECT_FALSE(s.contains(1, 2));
  EXPECT_FALSE(s.contains(4, 1));
}

TEST(SkewShape, TrailingZerosAreStripped) {
  EXPECT_EQ(SkewShape({3, 2, 0}, {0}), SkewShape({3, 2}, {}));
  EXPECT_EQ(SkewShape({3, 2, 0}, {0}).str(), "3,2");
}

TEST(SkewShape, RejectsMalformedShapes) {
  EXPECT_THROW(SkewShape({2, 3}, {}), ShapeError);      // not a partition
  EXPECT_THROW(SkewShape({3, 2}, {3, 3}), ShapeError);  // inner pokes out
  EXPECT_THROW(SkewShape({3}, {1, 1}), ShapeError);     // inner has more rows
  EXPECT_THROW(SkewShape({3, -1}, {}), ShapeError);
  EXPECT_THROW(SkewShape::parse("3,x"), TableauParseError);
  EXPECT_THROW(SkewShape::parse("2,3"), TableauParseError);
}

TEST(ThreeRowStrip, DimensionsAndDegenerateForms) {
  EXPECT_EQ(three_row_strip(6, 2).str(), "4,4,2/2,2");
  EXPECT_EQ(three_row_strip(4, 2).str(), "2,2");        // k = n/2: straight
  EXPECT_EQ(three_row_strip(3, 0).str(), "3,3,3/3,3");  // k = 0: level row only
  EXPECT_EQ(three_row_strip(0, 0).str(), "");
  EXPECT_THROW(three_row_strip(3, 2), ShapeError);
  EXPECT_THROW(three_row_strip(-1, 0), ShapeError);
}

TEST(ThreeRowStrip, RecognizerRoundTripsAllPresentations) {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      const auto dims = as_three_row_strip(three_row_strip(n, k));
      ASSERT_TRUE(dims.has_value()) << "n=" << n << " k=" << k;
      EXPECT_EQ(dims->n, n);
      EXPECT_EQ(dims->k, k);
    }
  // The one-row presentation is how a rectified all-level image prints.
  EXPECT_EQ(as_three_row_strip(SkewShape({5}, {})), (StripDims{5, 0}));
  EXPECT_EQ(as_three_row_strip(SkewShape()), (StripDims{0, 0}));
}

TEST(ThreeRowStrip, RecognizerRejectsOtherShapes) {
  EXPECT_FALSE(as_three_row_strip(SkewShape({3, 2}, {})).has_value());
  EXPECT_FALSE(as_three_row_strip(SkewShape({4, 4, 2}, {2, 1})).has_value());
  EXPECT_FALSE(as_three_row_strip(SkewShape({4, 3, 2}, {2, 2})).has_value());
  EXPECT_FALSE(as_three_row_strip(SkewShape({2, 2, 2}, {})).has_value());
}

TEST(SkewTableau, ValidatesShapeAndFilling) {
  const SkewShape square = SkewShape({2, 2}, {});
  EXPECT_NO_THROW(SkewTableau(square, {{1, 2}, {3, 4}}));
  EXPECT_NO_THROW(SkewTableau(square, {{1, 3}, {2, 4}}));
  EXPECT_THROW(SkewTableau(square, {{1, 2, 3}, {4}}), ShapeError);
  EXPECT_THROW(SkewTableau(square, {{1, 2}}), ShapeError);
  EXPECT_THROW(SkewTableau(square, {{1, 2}, {3, 3}}), NotStandardError);
  EXPECT_THROW(SkewTableau(square, {{1, 2}, {3, 5}}), NotStandardError);
  EXPECT_THROW(SkewTableau(square, {{1, 2}, {4, 3}}), NotStandardError);
  EXPECT_THROW(SkewTableau(square, {{1, 4}, {2, 3}}), NotStandardError);
}

TEST(SkewTableau, SkewColumnsAreOnlyComparedWhereTheyOverlap) {
  // (2,1)/(1): the two cells share no column, so both fillings are standard.
  EXPECT_NO_THROW(SkewTableau(SkewShape({2, 1}, {1}), {{1}, {2}}));
  EXPECT_NO_THROW(SkewTableau(SkewShape({2, 1}, {1}), {{2}, {1}}));
}

TEST(SkewTableau, Accessors) {
  const SkewTableau t =
      SkewTableau::parse(".,.,1,4,7|2,3,6,8|5,9", ShapeHint::Auto);
  EXPECT_EQ(t.shape().str(), "5,4,2/2");
  EXPECT_EQ(t.size(), 9);
  EXPECT_EQ(t.entry(1, 1), 1);
  EXPECT_EQ(t.entry(2, 4), 8);
  EXPECT_EQ(t.at(1, 3), 1);
  EXPECT_EQ(t.at(2, 1), 2);
  EXPECT_EQ(t.row_of(5), 3);
  EXPECT_EQ(t.cell_of(9), (std::pair<int, int>{3, 2}));
  EXPECT_EQ(t.cell_of(4), (std::pair<int, int>{1, 4}));
}

TEST(SkewTableau, DescentSetOfSkewFigure) {
  const SkewTableau t = SkewTableau::parse(".,.,1,4,7|2,3,6,8|5,9");
  EXPECT_EQ(descent_set_syt(t).members(), (std::vector<int>{1, 4, 7, 8}));
}

TEST(SkewTableau, PrintDotlessForStripsAndStraightShapesOnly) {
  EXPECT_EQ(SkewTableau(three_row_strip(6, 2), {{2, 5}, {3, 6}, {1, 4}}).str(),
            "2,5|3,6|1,4");
  EXPECT_EQ(SkewTableau(SkewShape({2, 1}, {}), {{1, 3}, {2}}).str(), "1,3|2");
  EXPECT_EQ(SkewTableau(SkewShape({2, 1}, {1}), {{1}, {2}}).str(), ".,1|2");
  EXPECT_EQ(SkewTableau(three_row_strip(3, 0), {{}, {}, {1, 2, 3}}).str(),
            "||1,2,3");
}

TEST(SkewTableau, ParseRoundTrips) {
  for (const char* text : {"", "1", "2,5|3,6|1,4", "1,3|2", ".,1|2",
                           "||1,2,3", ".,.,1,4,7|2,3,6,8|5,9", "1|3|2,4,5,6"}) {
    const SkewTableau t = SkewTableau::parse(text);
    EXPECT_EQ(t.str(), text);
    EXPECT_EQ(SkewTableau::parse(t.str()), t);
  }
}

TEST(SkewTableau, DotlessParsePrefersTheStripReading) {
  // Three dotless rows with equal first two lengths read as a strip first;
  // the Straight hint forces the left-justified reading of the same text.
  const SkewTableau strip = SkewTableau::parse("1,3|2,4|5");
  EXPECT_EQ(strip.shape().str(), "3,3,1/1,1");
  const SkewTableau straight =
      SkewTableau::parse("1,3|2,4|5", ShapeHint::Straight);
  EXPECT_EQ(straight.shape().str(), "2,2,1");
  EXPECT_NE(strip, straight);
}

TEST(SkewTableau, DotlessParseFallsBackToStraight) {
  // Standard as a strip but not as a straight shape: only Auto and Strip
  // accept it, and they agree.
  EXPECT_EQ(SkewTableau::parse("2,3|4,5|1").shape().str(), "3,3,1/1,1");
  EXPECT_EQ(SkewTableau::parse("2,3|4,5|1", ShapeHint::Strip).shape().str(),
            "3,3,1/1,1");
  EXPECT_THROW(SkewTableau::parse("2,3|4,5|1", ShapeHint::Straight),
               NotStandardError);
  // Unequal first two rows can never be a strip: Auto reads them straight.
  EXPECT_EQ(SkewTableau::parse("1,2,3|4,5|6").shape().str(), "3,2,1");
  EXPECT_THROW(SkewTableau::parse("1,2,3|4,5|6", ShapeHint::Strip),
               WrongShapeError);
}

TEST(SkewTableau, ParseErrors) {
  EXPECT_THROW(SkewTableau::parse("1,,2|3"), TableauParseError);
  EXPECT_THROW(SkewTableau::parse("1,a"), TableauParseError);
  EXPECT_THROW(SkewTableau::parse("1,.|2"), TableauParseError);  // dot after entry
  EXPECT_THROW(SkewTableau::parse(".,1|.,.,2,3"), TableauParseError);
  EXPECT_THROW(SkewTableau::parse("5"), NotStandardError);  // entries must be 1..n
}

TEST(EnumerateSyt, MatchesBruteForce) {
  const SkewShape shapes[] = {
      SkewShape({3, 2, 2}, {}),    SkewShape({4, 3}, {1}),
      three_row_strip(5, 2),       SkewShape({2, 2, 2}, {1}),
      SkewShape({3, 3}, {}),       three_row_strip(6, 3),
  };
  for (const SkewShape& shape : shapes) {
    const auto expected = brute_force_syt(shape);
    std::set<std::string> got;
    for (const auto& t : enumerate_syt(shape)) {
      EXPECT_EQ(t.shape(), shape);
      got.insert(t.str());
    }
    EXPECT_EQ(got, expected) << shape.str();
  }
}

TEST(EnumerateSyt, FrozenCounts) {
  EXPECT_EQ(enumerate_syt(SkewShape({4, 4}, {})).size(), 14u);   // Catalan(4)
  EXPECT_EQ(enumerate_syt(SkewShape({3, 3}, {})).size(), 5u);
  EXPECT_EQ(enumerate_syt(SkewShape({3, 2, 1}, {})).size(), 16u);
  EXPECT_EQ(enumerate_syt(three_row_strip(6, 2)).size(), 30u);
  EXPECT_EQ(enumerate_syt(three_row_strip(6, 0)).size(), 1u);
  EXPECT_EQ(enumerate_syt(SkewShape()).size(), 1u);  // the empty tableau
}

TEST(EnumerateSyt, DeterministicOrder) {
  const auto a = enumerate_syt(three_row_strip(5, 2));
  const auto b = enumerate_syt(three_row_strip(5, 2));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}
