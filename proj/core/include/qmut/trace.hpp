#pragma once

// Executes a mutation sequence on the framed quiver while tracking the s- and
// k^vee-variables as integer linear forms in (k_1..k_T, r_1..r_n), and sums
// products of mutation weights into the partition function Z_m(r).

#include "qmut/qcoeff.hpp"
#include "qmut/quiver.hpp"
#include "qmut/torus.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qmut {

/// sum_t k[t] k_t + sum_i r[i] r_i + constant
struct LinForm {
  std::vector<std::int64_t> k;
  std::vector<std::int64_t> r;
  std::int64_t constant = 0;

  LinForm() = default;
  LinForm(std::size_t T, std::size_t n) : k(T, 0), r(n, 0) {}
  static LinForm k_var(std::size_t T, std::size_t n, std::size_t t);
  static LinForm r_var(std::size_t T, std::size_t n, std::size_t i);

  LinForm& operator+=(const LinForm& o);
  LinForm& operator-=(const LinForm& o);
  LinForm& operator*=(std::int64_t c);
  friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
  friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
  friend LinForm operator*(std::int64_t c, LinForm a) { return a *= c; }
  LinForm operator-() const { return -1 * *this; }
  friend bool operator==(const LinForm&, const LinForm&) = default;

  std::int64_t evaluate(std::span<const std::int64_t> kv, std::span<const std::int64_t> rv) const;
  /// Evaluation where only k_1..k_kv.size() may carry nonzero coefficients.
  std::int64_t evaluate_prefix(std::span<const int> kv, std::span<const std::int64_t> rv) const;
  /// e.g. "k1-k2-r1"; "0" for the zero form.
  std::string to_string() const;
};

struct MutationStep {
  int vertex;
  Sign sign;
  /// sign * c_vertex(t-1); nonzero and nonnegative.
  Multidegree alpha;
  LinForm kvee;
};

struct MutationTrace {
  Quiver initial;
  SkewFormPtr form;
  MutationSequence sequence;
  /// Q~(0) .. Q~(T)
  std::vector<IceQuiver> ice;
  std::vector<MutationStep> steps;
  /// s_i(t) for t = 0..T and i = 1..n (row t, column i - 1).
  std::vector<std::vector<LinForm>> s_table;

  std::size_t length() const noexcept { return steps.size(); }
  std::size_t nvars() const noexcept { return initial.size(); }
  std::vector<DilogFactor> dilog_factors() const;
};

/// Propagates MixedSignError and QuiverError.
MutationTrace run_trace(const Quiver& q, const MutationSequence& m);

/// psi(t) = sum_i s_i(t) c_i(t), component-wise as linear forms.
std::vector<LinForm> state_vector(const MutationTrace& tr, std::size_t t);

/// W^eps(k, kvee) = q^(-eps k kvee / 2) [k + kvee choose k]_{q^eps}
LaurentPoly mutation_weight(int k, std::int64_t kvee, Sign eps);

struct PartitionFunction {
  Series series;
  /// Some k-tuple with a nonzero weight sits exactly on the cutoff, so terms
  /// past it may exist.
  bool possibly_truncated = false;
};

/// Z_m(r) truncated at total degree `cutoff`.
PartitionFunction partition_function(const MutationTrace& tr, std::span<const std::int64_t> r,
                                     int cutoff);

/// k-tuples in N^T with sum_t k_t alpha_t = beta, lexicographically ordered.
std::vector<std::vector<int>> k_tuples_for(const MutationTrace& tr, const Multidegree& beta);

/// [y^beta] Z_m(r)
LaurentPoly coefficient(const MutationTrace& tr, std::span<const std::int64_t> r,
                        const Multidegree& beta);

}  // namespace qmut
