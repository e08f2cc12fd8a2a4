#include "qmut/trace.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

#include <gtest/gtest.h>

#include <cctype>

namespace qmut {
namespace {

using namespace qmut::testing;
using I64 = std::vector<std::int64_t>;

LaurentPoly v(int e) { return LaurentPoly::monomial(e); }

// Parses "-2k4+k7-r1" into a LinForm with T k-slots and n r-slots.
LinForm parse_form(const std::string& text, std::size_t T, std::size_t n) {
  const std::string s = squash(text);
  LinForm f(T, n);
  std::size_t i = 0;
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
    std::int64_t mag = 0;
    bool digits = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      mag = 10 * mag + (s[i++] - '0');
      digits = true;
    }
    if (!digits) mag = 1;
    const char var = s.at(i++);
    std::size_t idx = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) idx = 10 * idx + (s[i++] - '0');
    (var == 'k' ? f.k : f.r).at(idx - 1) += sign * mag;
  }
  return f;
}

void expect_kvee(const Quiver& q, const MutationSequence& m, const std::vector<std::string>& expected) {
  const MutationTrace tr = run_trace(q, m);
  ASSERT_EQ(tr.length(), expected.size());
  for (std::size_t t = 0; t < expected.size(); ++t) {
    EXPECT_EQ(tr.steps[t].kvee, parse_form(expected[t], tr.length(), tr.nvars())) << "t=" << t + 1;
    EXPECT_EQ(tr.steps[t].kvee.to_string(), squash(expected[t])) << "t=" << t + 1;
  }
}

TEST(LinForm, Rendering) {
  LinForm f = LinForm::k_var(3, 2, 0) - 2 * LinForm::k_var(3, 2, 2) - LinForm::r_var(3, 2, 1);
  EXPECT_EQ(f.to_string(), "k1-2k3-r2");
  EXPECT_EQ(LinForm(2, 2).to_string(), "0");
  EXPECT_EQ(f.evaluate(I64{5, 100, 1}, I64{0, 7}), 5 - 2 - 7);
}

TEST(RunTrace, A2Example) {
  const MutationTrace tr = run_trace(a2(), kA2m);
  const std::vector<std::vector<std::string>> s{{"r1", "r2"}, {"k1-r1", "r2"}, {"k1-r1", "k2-r2"}};
  for (std::size_t t = 0; t < s.size(); ++t)
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(tr.s_table[t][i], parse_form(s[t][i], 2, 2)) << t << " " << i;
  expect_kvee(a2(), kA2m, {"-k1+r2", "k1-k2-r1"});
  EXPECT_EQ(tr.steps[0].alpha, (Multidegree{1, 0}));
  EXPECT_EQ(tr.steps[1].alpha, (Multidegree{0, 1}));
}

// The five-term identity written out elsewhere carries +r1 in the second
// weight; the trace confirms -r1.
TEST(RunTrace, A2SecondWeightSign) {
  const MutationTrace tr = run_trace(a2(), kA2m);
  EXPECT_EQ(tr.steps[1].kvee, parse_form("k1-k2-r1", 2, 2));
  EXPECT_NE(tr.steps[1].kvee, parse_form("k1-k2+r1", 2, 2));
}

TEST(RunTrace, A2Pentagon) { expect_kvee(a2(), kA2mp, {"-k1-r1", "-k1-k2-r1+r2", "-k1-k2-k3+r2"}); }

TEST(RunTrace, A3) {
  expect_kvee(a3(), kA3m, {"-k1+r2", "-k2+r2", "k1+k2-k3-r1-r3"});
  expect_kvee(a3(), kA3mp,
              {"-k1-r1-r3", "-k1-k2-r1+r2-r3", "-k1-k3-r1+r2-r3", "-2k1-k2-k3-k4-r1+2r2-r3",
               "-k1-k2-k3-k4-k5+r2", "-k1-k2-k3-k4-k6+r2"});
  const MutationTrace tr = run_trace(a3(), kA3m);
  const std::vector<std::vector<std::string>> s{
      {"r1", "r2", "r3"}, {"k1-r1", "r2", "r3"}, {"k1-r1", "r2", "k2-r3"}, {"k1-r1", "k3-r2", "k2-r3"}};
  for (std::size_t t = 0; t < s.size(); ++t)
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(tr.s_table[t][i], parse_form(s[t][i], 3, 3));
}

TEST(RunTrace, B2) {
  expect_kvee(b2(), kB2m,
              {"-k_{1} - r_{2} + r_{5}", "-k_{2} - r_{2} + r_{5}", "-k_{3} + r_{2}",
               "-k_{1} - k_{2} + k_{3} - k_{4} + r_{1} - 2 r_{2} + r_{3} - r_{4} + r_{5}",
               "-k_{1} - k_{2} + k_{3} - k_{4} - k_{5} + r_{1} - r_{2} + r_{3} - r_{4}",
               "-k_{1} - k_{2} + k_{3} - k_{4} - k_{6} + r_{1} - r_{2} + r_{3} - r_{4}",
               "k_{1} + k_{2} + k_{4} - k_{7} - r_{1} + r_{2} - r_{3}",
               "-k_{1} - k_{2} + k_{3} - 2 k_{4} - k_{5} - k_{6} + k_{7} - k_{8} + r_{1} + r_{3} - r_{4} - r_{5}"});
  expect_kvee(b2(), kB2mp,
              {"-k'_{1} + r_{1} + r_{3} - r_{4} - r_{5}", "k'_{1} - k'_{2} - r_{2} + r_{5}",
               "k'_{1} - k'_{3} - r_{2} + r_{5}", "-k'_{1} - k'_{4} + r_{2} - r_{4} - r_{5}",
               "-k'_{1} + k'_{2} + k'_{3} - k'_{4} - k'_{5} - r_{1} + r_{2} - r_{3}",
               "-k'_{1} + k'_{5} - k'_{6} + r_{2} - r_{5}", "-k'_{1} + k'_{5} - k'_{7} + r_{2} - r_{5}",
               "-k'_{4} - k'_{5} - k'_{8} - r_{4} + r_{5}",
               "-k'_{1} - k'_{2} - k'_{3} + k'_{5} - k'_{6} - k'_{7} - k'_{8} - k'_{9} + r_{1} + r_{2} + r_{3} - r_{4} - r_{5}",
               "k'_{1} - k'_{5} + k'_{9} - k'_{10} - r_{2} + r_{5}", "k'_{1} - k'_{5} + k'_{9} - k'_{11}  - r_{2} + r_{5}",
               "-k'_{1}- k'_{4} - k'_{8} - k'_{9}  - k'_{12} + r_{2}"});
}

TEST(RunTrace, AlphaNonnegative) {
  for (const auto& [q, m] : std::vector<std::pair<Quiver, MutationSequence>>{
           {a2(), kA2mp}, {a3(), kA3mp}, {b2(), kB2m}, {b2(), kB2mp}}) {
    const MutationTrace tr = run_trace(q, m);
    for (const auto& step : tr.steps) {
      EXPECT_GT(total_degree(step.alpha), 0);
      for (int x : step.alpha) EXPECT_GE(x, 0);
    }
    for (const auto& row : tr.s_table)
      for (const auto& f : row) EXPECT_EQ(f.constant, 0);
  }
}

TEST(RunTrace, RejectsBadVertex) { EXPECT_THROW(run_trace(a2(), {1, 3}), QuiverError); }

TEST(StateVector, Endpoints) {
  const MutationTrace tr = run_trace(b2(), kB2mp);
  const auto psi0 = state_vector(tr, 0);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(psi0[i], LinForm::r_var(12, 5, i));
  EXPECT_THROW(state_vector(tr, 13), std::out_of_range);
}

TEST(TraceProperties, LinFormIdentities) {
  const auto res = linform_identities(100);
  EXPECT_GE(res.cases, 100);
  EXPECT_TRUE(res.failures.empty()) << res.first_failure();
}

TEST(TraceProperties, QuadraticRelation) {
  const auto res = kkv_quadratic(60);
  EXPECT_GE(res.cases, 50 * 26);
  EXPECT_TRUE(res.failures.empty()) << res.first_failure();
}

TEST(MutationWeight, Examples) {
  EXPECT_EQ(mutation_weight(0, 17, Sign::Plus), LaurentPoly(1));
  EXPECT_EQ(mutation_weight(0, -5, Sign::Minus), LaurentPoly(1));
  EXPECT_EQ(mutation_weight(1, 1, Sign::Plus), v(-1) + v(1));
  EXPECT_EQ(mutation_weight(1, 1, Sign::Minus), v(1) + v(-1));
  for (int k = 0; k <= 4; ++k)
    for (int kv = -4; kv <= 4; ++kv)
      EXPECT_EQ(mutation_weight(k, kv, Sign::Minus), mutation_weight(k, kv, Sign::Plus).substitute_inverse());
}

TEST(PartitionFunction, A2FiniteCase) {
  const MutationTrace tr = run_trace(a2(), kA2m);
  const auto f = tr.form;
  Series expect(f, 4);
  const LaurentPoly three = v(-2) + 1 + v(2);
  expect.add_term({0, 0}, 1);
  expect.add_term({1, 0}, 1);
  expect.add_term({0, 1}, v(-1) + v(1));
  expect.add_term({1, 1}, three);
  expect.add_term({0, 2}, 1);
  expect.add_term({1, 2}, three);
  expect.add_term({1, 3}, 1);
  EXPECT_EQ(partition_function(tr, I64{-2, 1}, 4).series, expect);
  EXPECT_EQ(partition_function(tr, I64{-2, 1}, 3).series, expect.truncated(3));
  EXPECT_EQ(partition_function(tr, I64{-2, 1}, 3).series.coeff({1, 3}), RationalV());
}

TEST(PartitionFunction, A2InfiniteCase) {
  const MutationTrace tr = run_trace(a2(), kA2m);
  Series expect(tr.form, 2);
  const LaurentPoly two = v(-1) + v(1);
  expect.add_term({0, 0}, 1);
  expect.add_term({1, 0}, two);
  expect.add_term({0, 1}, -two);
  expect.add_term({2, 0}, 1);
  expect.add_term({1, 1}, -two);
  expect.add_term({0, 2}, v(-2) + 1 + v(2));
  const auto z = partition_function(tr, I64{2, 2}, 2);
  EXPECT_EQ(z.series, expect);
  EXPECT_TRUE(z.possibly_truncated);
}

TEST(PartitionFunction, FiniteCaseStopsGrowing) {
  const MutationTrace tr = run_trace(a2(), kA2m);
  const Series at4 = partition_function(tr, I64{-2, 1}, 4).series;
  for (int D = 5; D <= 9; ++D) {
    const auto z = partition_function(tr, I64{-2, 1}, D);
    EXPECT_EQ(z.series.terms().size(), at4.terms().size()) << D;
    EXPECT_EQ(z.series.truncated(4), at4);
    EXPECT_FALSE(z.possibly_truncated) << D;
  }
}

TEST(PartitionFunction, EmptySequence) {
  const MutationTrace tr = run_trace(a3(), {});
  const auto z = partition_function(tr, I64{1, 2, 3}, 3);
  EXPECT_EQ(z.series, Series::one(tr.form, 3));
  EXPECT_FALSE(z.possibly_truncated);
}

TEST(PartitionFunction, TruncationConsistency) {
  const auto res = truncation_consistency(100);
  EXPECT_GE(res.cases, 100);
  EXPECT_TRUE(res.failures.empty()) << res.first_failure();
}

TEST(Coefficient, Examples) {
  const MutationTrace tr = run_trace(a2(), kA2m);
  EXPECT_EQ(coefficient(tr, I64{-2, 1}, {1, 1}), v(-2) + 1 + v(2));
  EXPECT_EQ(coefficient(tr, I64{5, -7}, {0, 0}), LaurentPoly(1));
}

TEST(Coefficient, A2ClosedForm) {
  const MutationTrace tr = run_trace(a2(), kA2m);
  for (std::int64_t r1 = -3; r1 <= 3; ++r1)
    for (std::int64_t r2 = -3; r2 <= 3; ++r2)
      for (int b1 = 0; b1 <= 3; ++b1)
        for (int b2 = 0; b2 <= 3; ++b2)
          EXPECT_EQ(coefficient(tr, I64{r1, r2}, {b1, b2}), a2_coefficient_closed_form(b1, b2, r1, r2))
              << "r=(" << r1 << "," << r2 << ") beta=(" << b1 << "," << b2 << ")";
}

TEST(Coefficient, AgreesWithPartitionFunction) {
  const MutationTrace tr = run_trace(b2(), kB2mp);
  const I64 r{1, 0, -1, 2, 0};
  const Series z = partition_function(tr, r, 3).series;
  for (const auto& beta : multidegrees_up_to(5, 3)) EXPECT_EQ(RationalV(coefficient(tr, r, beta)), z.coeff(beta));
}

TEST(Coefficient, KTuples) {
  const MutationTrace tr = run_trace(a3(), kA3mp);
  const auto ks = k_tuples_for(tr, {1, 1, 2});
  EXPECT_EQ(ks.size(), 4u);
  for (const auto& k : ks) {
    // alpha: (0,1,0) (1,1,0) (0,1,1) (1,1,1) (0,0,1) (1,0,0)
    EXPECT_EQ(k[1] + k[3] + k[5], 1);
    EXPECT_EQ(k[0] + k[1] + k[2] + k[3], 1);
    EXPECT_EQ(k[2] + k[3] + k[4], 2);
  }
}

}  // namespace
}  // namespace qmut
