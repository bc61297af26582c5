#include <gtest/gtest.h>

#include <optional>
#include <string>
#include <vector>

#include "motzcyc/errors.hpp"
#include "motzcyc/path.hpp"
#include "motzcyc/shift.hpp"
#include "motzcyc/statistics.hpp"
#include "motzcyc/verify.hpp"

using namespace motzcyc;

TEST(CheckCyclicExtension, PassesOnAHealthyPathFamily) {
  const VerificationReport rep =
      check_cyclic_extension(path_family(5, StepOrder::UDL));
  EXPECT_EQ(rep.suite, "rho-udl");
  EXPECT_EQ(rep.params, "n=5");
  EXPECT_EQ(rep.cases_checked, 20);  // |M_5| - 1 for the all-level path
  EXPECT_TRUE(rep.passed());
  EXPECT_FALSE(rep.expected_failure);
}

TEST(CheckCyclicExtension, PassesOnAPromotionFamily) {
  const VerificationReport rep = check_cyclic_extension(tableau_family(6, 2));
  EXPECT_EQ(rep.suite, "promotion-3row");
  EXPECT_EQ(rep.params, "n=6 k=2");
  EXPECT_EQ(rep.cases_checked, 30);
  EXPECT_TRUE(rep.passed());
}

TEST(CheckCyclicExtension, ForcedEscherAtNTwoIsExpected) {
  // M*_2 = {UD} and cDes(UD) = {1,2} is Escher. The report fails the
  // non-escher check, but flags itself as the documented exception.
  const VerificationReport rep =
      check_cyclic_extension(path_family(2, StepOrder::UDL));
  EXPECT_EQ(rep.cases_checked, 1);
  ASSERT_EQ(rep.failures.size(), 1u);
  EXPECT_EQ(rep.failures[0].witness, "UD");
  EXPECT_EQ(rep.failures[0].check, "non-escher");
  EXPECT_FALSE(rep.passed());
  EXPECT_TRUE(rep.expected_failure);
  EXPECT_TRUE(rep.acceptable());
}

TEST(CheckCyclicExtension, EmptyFamiliesAreAnError) {
  // n - k odd makes the slice empty.
  EXPECT_THROW(check_cyclic_extension(
                   path_family_fixed_horizontal(5, 2, StepOrder::UDL)),
               DomainEmptyError);
}

TEST(RotationMultiset, PassesAndFlagsTheEscherException) {
  const VerificationReport good =
      check_rotation_multiset(5, std::nullopt, StepOrder::ULD);
  EXPECT_TRUE(good.passed());
  EXPECT_EQ(good.cases_checked, 20);

  const VerificationReport escher =
      check_rotation_multiset(2, 0, StepOrder::UDL);
  EXPECT_FALSE(escher.passed());
  EXPECT_TRUE(escher.expected_failure);
  EXPECT_TRUE(escher.acceptable());

  EXPECT_THROW(check_rotation_multiset(4, 1, StepOrder::UDL), DomainEmptyError);
}

TEST(Distributions, ThreeOrdersAgreeOverAllPaths) {
  const DistributionTable udl = descent_distribution(6, StepOrder::UDL);
  const DistributionTable uld = descent_distribution(6, StepOrder::ULD);
  const DistributionTable lud = descent_distribution(6, StepOrder::LUD);
  EXPECT_EQ(udl.total(), 51);
  EXPECT_TRUE(udl == uld);
  EXPECT_TRUE(uld == lud);
  EXPECT_FALSE(udl == descent_distribution(5, StepOrder::UDL));
}

TEST(TheoremChecks, PassAtNSix) {
  const VerificationReport equi = check_equidistribution(6);
  EXPECT_TRUE(equi.passed());
  EXPECT_EQ(equi.cases_checked, 51);

  const VerificationReport comm = check_commutation(6);
  EXPECT_TRUE(comm.passed());
  EXPECT_EQ(comm.cases_checked, 50);

  const VerificationReport counts = check_counts(6);
  EXPECT_TRUE(counts.passed());
  EXPECT_EQ(counts.cases_checked, 51);
}

TEST(Orbit, WalksAFixedPointAndRefusesToRunAway) {
  const MotzkinPath ud = MotzkinPath::parse("UD");
  const auto rec = orbit(
      ud, [](const MotzkinPath& m) { return shift(m, StepOrder::UDL); },
      [](const MotzkinPath& m) {
        return cyclic_descent_set(m, StepOrder::UDL);
      },
      5);
  EXPECT_EQ(rec.length(), 1);
  EXPECT_EQ(rec.elements[0], ud);
  EXPECT_EQ(rec.cdes_sequence[0].str(), "1,2");

  EXPECT_THROW(orbit(
                   0, [](int x) { return x + 1; },
                   [](int) { return CyclicDescentSet(3, {1}); }, 5),
               NonClosureError);
}

TEST(SuiteDrivers, AxiomSuitesAtNThree) {
  const auto reports = run_axiom_suites(3, 3);
  ASSERT_EQ(reports.size(), 8u);
  const char* want[] = {"rho-udl",   "rotation-multiset", "rhohat-uld",
                        "rotation-multiset", "shift-lud", "rotation-multiset",
                        "promotion-3row",    "orbit-closure"};
  for (std::size_t i = 0; i < reports.size(); ++i) {
    EXPECT_EQ(reports[i].suite, want[i]);
    EXPECT_TRUE(reports[i].passed()) << reports[i].suite;
  }
  EXPECT_TRUE(all_acceptable(reports));
}

TEST(SuiteDrivers, TinyNIsVacuous) {
  const auto reports = run_suites("axioms", 1, 1);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].suite, "axioms");
  EXPECT_NE(reports[0].params.find("vacuous"), std::string::npos);
  EXPECT_EQ(reports[0].cases_checked, 0);
  EXPECT_TRUE(reports[0].passed());
}

TEST(SuiteDrivers, UnknownSuiteNamesAreRejectedUpfront) {
  EXPECT_THROW(run_suites("bogus", 3, 4), Error);
}

TEST(Reports, AcceptableMeansPassedOrExpected) {
  VerificationReport bad;
  bad.suite = "demo";
  bad.failures.push_back({"w", "check", "x", "y"});
  EXPECT_FALSE(bad.acceptable());
  EXPECT_FALSE(all_acceptable({bad}));
  bad.expected_failure = true;
  EXPECT_TRUE(bad.acceptable());
}
