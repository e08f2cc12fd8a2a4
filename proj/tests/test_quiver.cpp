#include "qmut/quiver.hpp"

#include "support/fixtures.hpp"
#include "support/properties.hpp"

#include <gtest/gtest.h>

namespace qmut {
namespace {

using namespace qmut::testing;

using Rows = std::vector<std::vector<std::int64_t>>;
using CVec = std::vector<std::int64_t>;

IntMatrix rows(const Rows& r) { return IntMatrix::from_rows(r); }

void expect_ok(const PropertyResult& res, int min_cases) {
  EXPECT_GE(res.cases, min_cases) << res.name;
  EXPECT_TRUE(res.failures.empty()) << res.name << ": " << res.first_failure();
}

TEST(Quiver, RejectsBadMatrices) {
  EXPECT_THROW(Quiver(rows({{1, 1}, {-1, 0}})), QuiverError);
  EXPECT_THROW(Quiver(rows({{0, 1}, {1, 0}})), QuiverError);
  EXPECT_THROW(Quiver::from_arrows(2, {{1, 1}}), QuiverError);
  EXPECT_THROW(Quiver::from_arrows(2, {{1, 3}}), QuiverError);
}

TEST(Quiver, ArrowsToMatrix) {
  EXPECT_EQ(a2().matrix(), rows({{0, 1}, {-1, 0}}));
  // opposite arrows cancel
  EXPECT_EQ(Quiver::from_arrows(2, {{1, 2, 3}, {2, 1, 1}}).matrix(), rows({{0, 2}, {-2, 0}}));
}

TEST(Mutate, A2) { EXPECT_EQ(mutate(a2(), 1).matrix(), rows({{0, -1}, {1, 0}})); }

TEST(Mutate, A3Middle) {
  const Quiver q(rows({{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}}));
  EXPECT_EQ(mutate(q, 2).matrix(), rows({{0, -1, 0}, {1, 0, 1}, {0, -1, 0}}));
}

TEST(Mutate, CreatesArrowThroughPath) {
  // 1 -> 2 -> 3: mutating at 2 adds 1 -> 3
  const Quiver q = Quiver::from_arrows(3, {{1, 2}, {2, 3}});
  EXPECT_EQ(mutate(q, 2).matrix(), rows({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));
}

TEST(Mutate, FramedA2ReversesFrozenArrow) {
  const IceQuiver m1 = mutate(framed(a2()), 1);
  EXPECT_EQ(m1.matrix()(0, 2), -1);
}

TEST(Mutate, RejectsFrozenAndOutOfRange) {
  EXPECT_THROW(mutate(framed(a2()), 3), QuiverError);
  EXPECT_THROW(mutate(a2(), 0), QuiverError);
  EXPECT_THROW(mutate(a2(), 3), QuiverError);
}

TEST(Framed, Shapes) {
  EXPECT_EQ(framed(a2()).matrix(), rows({{0, 1, 1, 0}, {-1, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}));
  EXPECT_EQ(framed(Quiver(IntMatrix(0, 0))).matrix().rows(), 0u);
  EXPECT_EQ(framed(Quiver(IntMatrix(1, 1))).matrix(), rows({{0, 1}, {-1, 0}}));
}

TEST(CVector, A2Pentagon) {
  const IceQuiver q0 = framed(a2());
  EXPECT_EQ(c_vector(q0, 1), (CVec{1, 0}));
  EXPECT_EQ(c_vector(q0, 2), (CVec{0, 1}));
  const IceQuiver q1 = mutate(q0, 1);
  EXPECT_EQ(c_vector(q1, 1), (CVec{-1, 0}));
  EXPECT_EQ(c_vector(q1, 2), (CVec{0, 1}));
  const IceQuiver q2 = mutate(q1, 2);
  EXPECT_EQ(c_vector(q2, 1), (CVec{-1, 0}));
  EXPECT_EQ(c_vector(q2, 2), (CVec{0, -1}));
}

TEST(VertexSign, Examples) {
  const IceQuiver q0 = framed(b2());
  for (int v = 1; v <= 5; ++v) EXPECT_EQ(vertex_sign(q0, v), Sign::Plus);
  EXPECT_EQ(vertex_sign(mutate(framed(a2()), 1), 1), Sign::Minus);

  const IceQuiver mixed(rows({{0, 0, 1, -1}, {0, 0, 0, 0}, {-1, 0, 0, 0}, {1, 0, 0, 0}}), 2);
  try {
    vertex_sign(mixed, 1);
    FAIL() << "expected MixedSignError";
  } catch (const MixedSignError& e) {
    EXPECT_EQ(e.vertex(), 1);
    EXPECT_EQ(e.cvector(), (CVec{1, -1}));
  }
  EXPECT_THROW(vertex_sign(mixed, 2), MixedSignError);
}

TEST(Classify, A2) {
  for (const auto& m : {kA2m, kA2mp}) {
    const auto c = classify_sequence(a2(), m);
    EXPECT_EQ(c.signs, std::vector<Sign>(m.size(), Sign::Plus));
    EXPECT_TRUE(c.is_green);
    EXPECT_TRUE(c.is_reddening);
    EXPECT_TRUE(c.is_maximal_green);
  }
  const auto partial = classify_sequence(a2(), {1});
  EXPECT_TRUE(partial.is_green);
  EXPECT_FALSE(partial.is_reddening);
  EXPECT_FALSE(partial.is_maximal_green);
}

TEST(Classify, B2) {
  const auto c = classify_sequence(b2(), kB2m);
  EXPECT_EQ(c.signs, std::vector<Sign>(8, Sign::Plus));
  EXPECT_TRUE(c.is_maximal_green);

  const auto P = Sign::Plus, M = Sign::Minus;
  const auto cp = classify_sequence(b2(), kB2mp);
  EXPECT_EQ(cp.signs, (std::vector<Sign>{P, P, P, P, P, M, M, P, P, P, P, P}));
  EXPECT_FALSE(cp.is_green);
  EXPECT_TRUE(cp.is_reddening);
  EXPECT_FALSE(cp.is_maximal_green);
}

TEST(Classify, A3) {
  EXPECT_TRUE(classify_sequence(a3(), kA3m).is_maximal_green);
  EXPECT_TRUE(classify_sequence(a3(), kA3mp).is_maximal_green);
}

TEST(FrozenIsomorphism, ReferencePairs) {
  auto last = [](const Quiver& q, const MutationSequence& m) { return framed_orbit(q, m).back(); };
  EXPECT_EQ(frozen_isomorphism(last(a2(), kA2m), last(a2(), kA2mp)), (std::vector<int>{2, 1}));
  EXPECT_EQ(frozen_isomorphism(last(a3(), kA3m), last(a3(), kA3mp)), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(frozen_isomorphism(last(b2(), kB2m), last(b2(), kB2mp)), (std::vector<int>{3, 2, 1, 5, 4}));
  EXPECT_FALSE(frozen_isomorphism(last(a2(), {1}), last(a2(), {2})).has_value());
}

TEST(FrozenIsomorphism, AppliedPermutationMatches) {
  const IceQuiver a = framed_orbit(b2(), kB2m).back();
  const IceQuiver b = framed_orbit(b2(), kB2mp).back();
  const auto sigma = frozen_isomorphism(a, b);
  ASSERT_TRUE(sigma);
  EXPECT_EQ(permute_mutable(a, *sigma), b);
}

TEST(FrozenIsomorphism, Reflexive) {
  for (const auto& [q, m] : std::vector<std::pair<Quiver, MutationSequence>>{
           {a2(), kA2mp}, {a3(), kA3mp}, {b2(), kB2m}, {b2(), kB2mp}, {b2(), {}}}) {
    const IceQuiver x = framed_orbit(q, m).back();
    std::vector<int> id(q.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i + 1);
    EXPECT_EQ(frozen_isomorphism(x, x), id);
  }
}

TEST(ValidateSequence, Range) {
  EXPECT_NO_THROW(validate_sequence({1, 2, 1}, 2));
  EXPECT_THROW(validate_sequence({1, 3}, 2), QuiverError);
  EXPECT_THROW(validate_sequence({0}, 2), QuiverError);
}

TEST(QuiverProperties, Involution) { expect_ok(mutation_involution(200), 100); }
TEST(QuiverProperties, EntrywiseRule) { expect_ok(mutation_matches_rule(200), 100); }
TEST(QuiverProperties, FramedProjection) { expect_ok(framed_projection(150), 100); }
TEST(QuiverProperties, SignCoherence) { expect_ok(sign_coherence(150), 100); }
TEST(QuiverProperties, CBCRelation) { expect_ok(cbc_relation(150), 100); }

}  // namespace
}  // namespace qmut
