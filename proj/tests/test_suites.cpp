#include "dws/suites.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace dws::suites;

namespace {

SuiteConfig small() {
  SuiteConfig cfg;
  cfg.window = 1;
  cfg.points = 6;
  cfg.max_vars = 4;
  cfg.max_sign_vars = 5;
  cfg.extra_delta = false;
  return cfg;
}

void expect_pass(const SuiteReport& rep) {
  EXPECT_TRUE(rep.pass()) << rep.suite;
  for (const auto& c : rep.cases)
    EXPECT_TRUE(c.pass) << rep.suite << " " << c.id << " " << c.params << " residual " << c.residual;
  EXPECT_FALSE(rep.cases.empty()) << rep.suite;
  EXPECT_GE(rep.wall_seconds, 0.0);
}

}  // namespace

TEST(Suites, Names) {
  EXPECT_EQ(suite_names(),
            (std::vector<std::string>{"theta", "star", "zeros", "membership", "signs-cross", "qshuffle"}));
  EXPECT_THROW(run_suite("bogus", small()), std::invalid_argument);
}

TEST(Suites, Validation) {
  SuiteConfig cfg = small();
  EXPECT_NO_THROW(cfg.validate());
  auto bad = [&](auto edit) {
    SuiteConfig c = small();
    edit(c);
    EXPECT_THROW(c.validate(), std::invalid_argument);
  };
  bad([](SuiteConfig& c) { c.r = 4; });
  bad([](SuiteConfig& c) { c.lambda = {1, 1, 1}; });
  bad([](SuiteConfig& c) { c.x = 0.95; });
  bad([](SuiteConfig& c) { c.tol = 0.0; });
  bad([](SuiteConfig& c) { c.window = -1; });
  bad([](SuiteConfig& c) { c.lattice = {1, 2, 2}; });
  bad([](SuiteConfig& c) { c.relations = {"QR1", "nope"}; });
  bad([](SuiteConfig& c) { c.n = 1; });
}

TEST(Suites, ThetaAndQShuffle) {
  expect_pass(theta_suite(small()));
  auto q = qshuffle_suite(small());
  expect_pass(q);
  for (const auto& c : q.cases) EXPECT_TRUE(c.exact_terms.empty()) << c.id;
}

TEST(Suites, StarOnASubset) {
  SuiteConfig cfg = small();
  cfg.relations = {"QR1", "QR2", "CS1", "TCOM"};
  auto rep = star_suite(cfg);
  expect_pass(rep);
  std::set<std::string> ids;
  for (const auto& c : rep.cases) ids.insert(c.id);
  for (const auto& r : cfg.relations) EXPECT_TRUE(ids.count(r)) << r;
}

TEST(Suites, KernelsAndSigns) {
  SuiteConfig cfg = small();
  cfg.window = 0;
  expect_pass(zeros_suite(cfg));
  expect_pass(membership_suite(cfg));
  expect_pass(signs_cross_suite(cfg));
  expect_pass(orbit_suite(cfg));
  expect_pass(signs_suite(cfg));
}

TEST(Suites, ControlsDetectFaults) {
  SuiteConfig cfg = small();
  cfg.window = 0;
  auto rep = controls_suite(cfg);
  expect_pass(rep);
}

TEST(Suites, Deterministic) {
  SuiteConfig cfg = small();
  cfg.relations = {"CS2"};
  auto a = star_suite(cfg), b = star_suite(cfg);
  ASSERT_EQ(a.cases.size(), b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    EXPECT_EQ(a.cases[i].params, b.cases[i].params);
    EXPECT_EQ(a.cases[i].residual, b.cases[i].residual);
  }
}
