#pragma once

// Instance checks of the dilogarithm-ratio formula for Z_m(r), of the
// invariance of Z_m(r) under frozen-isomorphic sequences, and rendering of
// the q-binomial multisum identities the latter produces.

#include "qmut/qcoeff.hpp"
#include "qmut/quiver.hpp"
#include "qmut/torus.hpp"
#include "qmut/trace.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qmut {

enum class Status { Pass, Fail, NotApplicable };

std::string to_string(Status s);

struct CoefficientDiff {
  Multidegree beta;
  RationalV lhs;
  RationalV rhs;
};

struct VerificationReport {
  std::string claim;

  // Parameters of the check; unused ones stay empty.
  std::optional<IntMatrix> quiver;
  std::vector<MutationSequence> sequences;
  std::vector<std::int64_t> r;
  std::optional<int> degree;
  std::optional<std::array<int, 4>> stanley;

  Status status = Status::Pass;
  std::optional<CoefficientDiff> first_diff;
  /// Frozen isomorphism found by the invariance check.
  std::optional<std::vector<int>> permutation;
  /// Free-form notes, e.g. which comparison failed.
  std::vector<std::string> notes;
  std::int64_t elapsed_ms = 0;

  bool passed() const noexcept { return status == Status::Pass; }
};

/// For every |beta| <= cutoff compares v^<beta,r> [y^beta] Z_m(r) with
/// [y^beta] of (prod_t E(y^a_t; q^e_t))^-1 prod_t E(q^<a_t,r> y^a_t; q^e_t).
/// The right side is computed twice, by series arithmetic and by the
/// q-binomial multisum; both must agree and be denominator-free.
VerificationReport theorem1_check(const Quiver& q, const MutationSequence& m,
                                  std::span<const std::int64_t> r, int cutoff);

/// Z_m(r) == Z_m2(r) up to the cutoff, provided the final framed quivers are
/// frozen isomorphic; NotApplicable otherwise.
VerificationReport theorem2_check(const Quiver& q, const MutationSequence& m,
                                  const MutationSequence& m2, std::span<const std::int64_t> r,
                                  int cutoff);

/// [c+a choose a][d+b choose b] =
///   sum_{k <= min(a,b)} q^((a-k)(b-k)) [c+d+k choose k][c+a-b choose a-k][d+b-a choose b-k]
VerificationReport stanley_check(int a, int b, int c, int d);

struct BinomialFactor {
  std::int64_t upper;
  /// k_t + k_t^vee as a linear form, e.g. "k1-r1".
  std::string upper_expr;
  int lower;
  Sign eps;
};

struct IdentityTerm {
  std::vector<int> k;
  /// Exponent of v (= q^(1/2)) in front of the binomials: -sum_t eps_t k_t k_t^vee.
  std::int64_t q_half_power;
  std::vector<BinomialFactor> factors;
  LaurentPoly value;
};

struct IdentitySide {
  MutationSequence sequence;
  /// One constraint per coordinate of beta, e.g. "k2+k3=1".
  std::vector<std::string> constraints;
  std::vector<IdentityTerm> terms;
  LaurentPoly value;
};

struct RenderedIdentity {
  Multidegree beta;
  std::vector<std::int64_t> r;
  std::vector<int> permutation;
  IdentitySide lhs;
  IdentitySide rhs;

  bool holds() const { return lhs.value == rhs.value; }
};

/// value shifted so its lowest exponent is zero (0 stays 0).
LaurentPoly normalized(const LaurentPoly& p);

class NotApplicableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Both sides of [y^beta] Z_m(r) = [y^beta] Z_m2(r) as explicit weight sums.
/// Throws NotApplicableError when the final framed quivers are not frozen
/// isomorphic.
RenderedIdentity render_identity(const Quiver& q, const MutationSequence& m,
                                 const MutationSequence& m2, std::span<const std::int64_t> r,
                                 const Multidegree& beta);

std::string to_text(const RenderedIdentity& id);

}  // namespace qmut
