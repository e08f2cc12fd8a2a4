#include "qmut/verify.hpp"

#include "qmut/json_io.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

namespace qmut {
namespace {

using namespace qmut::testing;
using I64 = std::vector<std::int64_t>;

TEST(RatioFormula, A2Example) {
  const auto rep = theorem1_check(a2(), kA2m, I64{-2, 1}, 4);
  EXPECT_EQ(rep.status, Status::Pass);
  EXPECT_FALSE(rep.first_diff);
  EXPECT_TRUE(rep.notes.empty());
  EXPECT_EQ(rep.claim, "theorem1");
}

TEST(RatioFormula, A3AndRedSteps) {
  EXPECT_TRUE(theorem1_check(a3(), kA3m, I64{0, 6, -2}, 4).passed());
  EXPECT_TRUE(theorem1_check(a3(), kA3mp, I64{1, -1, 2}, 3).passed());
  EXPECT_TRUE(theorem1_check(b2(), kB2mp, I64{0, 1, 0, -1, 1}, 2).passed());
  // single red step: mutate 1 twice
  EXPECT_TRUE(theorem1_check(a2(), {1, 1}, I64{1, -2}, 4).passed());
}

TEST(FrozenInvariance, ReferencePairs) {
  const auto a = theorem2_check(a2(), kA2m, kA2mp, I64{-2, 1}, 5);
  EXPECT_EQ(a.status, Status::Pass);
  EXPECT_EQ(a.permutation, (std::vector<int>{2, 1}));
  EXPECT_TRUE(theorem2_check(a3(), kA3m, kA3mp, I64{0, 6, -2}, 4).passed());
  const auto b = theorem2_check(b2(), kB2m, kB2mp, I64(5, 0), 3);
  EXPECT_EQ(b.status, Status::Pass);
  EXPECT_EQ(b.permutation, (std::vector<int>{3, 2, 1, 5, 4}));
}

TEST(FrozenInvariance, SelfPairUsesIdentity) {
  const auto rep = theorem2_check(a3(), kA3mp, kA3mp, I64{2, -1, 0}, 3);
  EXPECT_EQ(rep.status, Status::Pass);
  EXPECT_EQ(rep.permutation, (std::vector<int>{1, 2, 3}));
}

TEST(FrozenInvariance, MismatchedPairNotApplicable) {
  const auto rep = theorem2_check(a2(), {1}, {2}, I64{0, 0}, 3);
  EXPECT_EQ(rep.status, Status::NotApplicable);
  EXPECT_FALSE(rep.permutation);
  EXPECT_FALSE(rep.first_diff);
}

TEST(FrozenInvariance, GreenThenRedCancels) {
  // mu_1 mu_1 ends on the framed quiver itself, so Z_(1,1)(r) = Z_()(r) = 1
  for (std::int64_t r1 = -2; r1 <= 2; ++r1) {
    const auto rep = theorem2_check(a2(), {1, 1}, {}, I64{r1, 1}, 4);
    EXPECT_EQ(rep.status, Status::Pass);
    EXPECT_EQ(rep.permutation, (std::vector<int>{1, 2}));
  }
}

TEST(Stanley, Examples) {
  EXPECT_TRUE(stanley_check(0, 0, 0, 0).passed());
  EXPECT_TRUE(stanley_check(1, 0, 1, 0).passed());
  EXPECT_EQ(qbinom(2, 1), dense({1, 0, 1}));
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        for (int d = 0; d <= 4; ++d) EXPECT_TRUE(stanley_check(a, b, c, d).passed()) << a << b << c << d;
}

TEST(RenderIdentity, A3Numeric) {
  const auto id = render_identity(a3(), kA3m, kA3mp, I64{0, 6, -2}, {1, 1, 2});
  EXPECT_TRUE(id.holds());
  EXPECT_EQ(id.permutation, (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(normalized(id.lhs.value), a3_degree17());
  EXPECT_EQ(normalized(id.rhs.value), a3_degree17());
  EXPECT_EQ(id.lhs.value, a3_degree17().shifted(-17));

  ASSERT_EQ(id.lhs.terms.size(), 1u);
  std::vector<std::pair<std::int64_t, int>> lhs_binoms;
  for (const auto& f : id.lhs.terms[0].factors) lhs_binoms.emplace_back(f.upper, f.lower);
  EXPECT_EQ(lhs_binoms, (std::vector<std::pair<std::int64_t, int>>{{6, 1}, {6, 2}, {5, 1}}));

  const std::vector<std::vector<std::pair<std::int64_t, int>>> rhs_binoms{
      {{2, 0}, {8, 0}, {8, 0}, {14, 1}, {5, 1}, {5, 0}},
      {{2, 0}, {8, 0}, {8, 1}, {13, 0}, {5, 1}, {5, 1}},
      {{2, 0}, {8, 1}, {8, 0}, {13, 0}, {5, 2}, {5, 0}},
      {{2, 1}, {7, 0}, {7, 0}, {12, 0}, {5, 2}, {5, 1}}};
  ASSERT_EQ(id.rhs.terms.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<std::pair<std::int64_t, int>> got;
    for (const auto& f : id.rhs.terms[i].factors) got.emplace_back(f.upper, f.lower);
    EXPECT_EQ(got, rhs_binoms[i]) << i;
    // relative powers 1, q, q^2, q^3
    EXPECT_EQ(id.rhs.terms[i].q_half_power - id.rhs.terms[0].q_half_power, 2 * static_cast<std::int64_t>(i));
  }
  EXPECT_EQ(id.rhs.terms[0].q_half_power, id.lhs.terms[0].q_half_power);
  EXPECT_EQ(id.lhs.constraints, (std::vector<std::string>{"k1=1", "k3=1", "k2=2"}));
}

TEST(RenderIdentity, NotApplicable) {
  EXPECT_THROW(render_identity(a2(), {1}, {2}, I64{0, 0}, {1, 1}), NotApplicableError);
}

TEST(RenderIdentity, AgreesWithInvarianceCheck) {
  for (std::int64_t r1 = -2; r1 <= 2; ++r1)
    for (std::int64_t r2 = -2; r2 <= 2; ++r2) {
      const I64 r{r1, r2};
      const bool thm2 = theorem2_check(a2(), kA2m, kA2mp, r, 3).passed();
      for (const auto& beta : multidegrees_up_to(2, 3))
        EXPECT_EQ(render_identity(a2(), kA2m, kA2mp, r, beta).holds(), thm2);
    }
}

TEST(Report, Json) {
  const auto rep = theorem2_check(a2(), {1}, {2}, I64{0, 0}, 3);
  const auto j = io::to_json(rep);
  EXPECT_EQ(j.at("claim"), "theorem2");
  EXPECT_EQ(j.at("status"), "not-applicable");
  EXPECT_TRUE(j.at("first_diff").is_null());
  EXPECT_TRUE(j.at("elapsed_ms").is_number_integer());

  VerificationReport fail = rep;
  fail.status = Status::Fail;
  fail.first_diff = CoefficientDiff{{1, 0}, RationalV(1), RationalV(2)};
  const auto jf = io::to_json(fail);
  EXPECT_EQ(jf.at("first_diff").dump(), R"({"beta":[1,0],"lhs":{"0":1},"rhs":{"0":2}})");
}

}  // namespace
}  // namespace qmut
