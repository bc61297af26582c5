#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "motzcyc/descent_set.hpp"
#include "motzcyc/enumerate.hpp"
#include "motzcyc/errors.hpp"
#include "motzcyc/gamma.hpp"
#include "motzcyc/path.hpp"
#include "motzcyc/shape.hpp"
#include "motzcyc/statistics.hpp"
#include "motzcyc/tableau.hpp"

using namespace motzcyc;

namespace {

SkewTableau strip_tableau(const char* text) {
  return SkewTableau::parse(text, ShapeHint::Strip);
}

}  // namespace

TEST(Gamma, GoldenImages) {
  const SkewTableau t = gamma(MotzkinPath::parse("LUDLUD"));
  EXPECT_EQ(t.str(), "2,5|3,6|1,4");
  EXPECT_EQ(t.shape(), three_row_strip(6, 2));
  EXPECT_EQ(descent_set_syt(t).str(), "2,3,5");

  EXPECT_EQ(gamma(MotzkinPath::parse("UD")).str(), "1|2");
  EXPECT_EQ(gamma(MotzkinPath::parse("LLL")).str(), "||1,2,3");
  EXPECT_EQ(gamma(MotzkinPath()).str(), "");
}

TEST(Gamma, InverseRoundTripsEveryPath) {
  for (int n = 0; n <= 7; ++n)
    for (const MotzkinPath& m : enumerate_paths(n))
      EXPECT_EQ(gamma_inverse(gamma(m)), m) << m.str();
}

TEST(Gamma, InverseAcceptsEveryStripPresentation) {
  // The k = 0 strip and its one-row rectified cousin both read back as the
  // all-level path.
  EXPECT_EQ(strip_tableau("||1,2,3").str(), "||1,2,3");
  EXPECT_EQ(gamma_inverse(strip_tableau("||1,2,3")).str(), "LLL");
  EXPECT_EQ(gamma_inverse(SkewTableau::parse("1,2,3")).str(), "LLL");
  EXPECT_EQ(gamma_inverse(SkewTableau()).str(), "");
  EXPECT_THROW(gamma_inverse(SkewTableau::parse("1,2|3")), WrongShapeError);
}

TEST(Gamma, PreservesDescentSets) {
  for (int n = 0; n <= 7; ++n)
    for (const MotzkinPath& m : enumerate_paths(n))
      EXPECT_EQ(descent_set_syt(gamma(m)).members(),
                descent_set(m, StepOrder::UDL).members())
          << m.str();
}

TEST(Gamma, StandardnessIsTheBallotCondition) {
  // Over *all* words with #U == #D, the strip filling built from the letter
  // positions is standard exactly when the word stays on or above the axis.
  for (int n = 1; n <= 6; ++n) {
    const int total = [n] {
      int t = 1;
      for (int i = 0; i < n; ++i) t *= 3;
      return t;
    }();
    for (int code = 0; code < total; ++code) {
      std::string word;
      int c = code;
      for (int i = 0; i < n; ++i) {
        word.push_back("UDL"[c % 3]);
        c /= 3;
      }
      int ups = 0, downs = 0;
      for (char ch : word) {
        if (ch == 'U') ++ups;
        if (ch == 'D') ++downs;
      }
      if (ups != downs) continue;

      std::vector<std::vector<int>> rows(3);
      for (int i = 0; i < n; ++i) {
        const int r = word[static_cast<std::size_t>(i)] == 'U'
                          ? 0
                          : (word[static_cast<std::size_t>(i)] == 'D' ? 1 : 2);
        rows[static_cast<std::size_t>(r)].push_back(i + 1);
      }
      // With no level steps the strip loses its third row, so drop trailing
      // empty rows to match the zero-stripped shape.
      while (!rows.empty() && rows.back().empty()) rows.pop_back();
      bool standard = true;
      try {
        SkewTableau(three_row_strip(n, ups), rows);
      } catch (const NotStandardError&) {
        standard = false;
      }

      bool path = true;
      try {
        MotzkinPath::parse(word);
      } catch (const NotAPathError&) {
        path = false;
      }
      EXPECT_EQ(standard, path) << word;
    }
  }
}

TEST(GammaTilde, RectifiesTheGoldenImage) {
  EXPECT_EQ(gamma_tilde(MotzkinPath::parse("LUDLUD")).str(), "1,2,5|3,6|4");
}

TEST(CyclicDescents3Row, MatchesThePathStatistic) {
  for (int n = 1; n <= 8; ++n)
    for (const MotzkinPath& m : enumerate_paths(n)) {
      if (m.all_level()) continue;
      EXPECT_EQ(cyclic_descent_set_3row(gamma(m)).members(),
                cyclic_descent_set(m, StepOrder::UDL).members())
          << m.str();
    }
}

TEST(CyclicDescents3Row, GoldenValues) {
  EXPECT_EQ(cyclic_descent_set_3row(strip_tableau("1,4|2,6|3,5")).str(),
            "1,2,4");
  EXPECT_EQ(cyclic_descent_set_3row(strip_tableau("1|3|2,4,5,6")).str(),
            "1,3");
  // Straight two-row square: the wrap chain condition holds.
  EXPECT_EQ(cyclic_descent_set_3row(strip_tableau("1,2|3,4")).str(), "2,4");
  // A chain break: T(2,1) = 2 <= T(1,2) = 3, so n stays out.
  EXPECT_EQ(cyclic_descent_set_3row(strip_tableau("1,3|2,6|4,5")).str(),
            "1,3");
  // 1 in row 1 with an unbroken chain: n joins.
  EXPECT_EQ(cyclic_descent_set_3row(strip_tableau("1,4|5,6|2,3")).str(),
            "1,4,6");
}

TEST(CyclicDescents3Row, RejectsShapesWithoutAnExtension) {
  EXPECT_THROW(cyclic_descent_set_3row(strip_tableau("||1,2,3")),
               WrongShapeError);
  EXPECT_THROW(cyclic_descent_set_3row(SkewTableau::parse("1,2|3")),
               WrongShapeError);
}
