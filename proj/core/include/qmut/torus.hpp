#pragma once

// Truncated quantum torus: noncommutative power series in y_1..y_n with
//   y^a y^b = v^<a,b> y^(a+b),   <e_i, e_j> = B_ij,
// cut off at total degree D, with coefficients in Q(v).

#include "qmut/qcoeff.hpp"
#include "qmut/quiver.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

namespace qmut {

/// Exponent vector beta in N^n (or Z^n where noted).
using Multidegree = std::vector<int>;

int total_degree(std::span<const int> beta);

/// Orders multidegrees by total degree, then lexicographically.
struct DegLexLess {
  bool operator()(const Multidegree& a, const Multidegree& b) const;
};

/// All beta in N^n with |beta| <= max_degree, in lexicographic order.
std::vector<Multidegree> multidegrees_up_to(std::size_t n, int max_degree);

/// The skew form <a, b> = sum_ij B_ij a_i b_j of the initial quiver.
class SkewForm {
 public:
  explicit SkewForm(IntMatrix b);
  explicit SkewForm(const Quiver& q) : SkewForm(q.matrix()) {}

  std::size_t size() const noexcept { return b_.rows(); }
  const IntMatrix& matrix() const noexcept { return b_; }
  /// Throws std::invalid_argument on a length mismatch.
  std::int64_t operator()(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const;
  std::int64_t operator()(std::span<const int> a, std::span<const int> b) const;
  /// Exponent of v in y_1^a_1 ... y_n^a_n = v^e y^a, i.e. sum_{i<j} B_ij a_i a_j.
  std::int64_t ordering_exponent(std::span<const int> a) const;

  friend bool operator==(const SkewForm&, const SkewForm&) = default;

 private:
  IntMatrix b_;
};

using SkewFormPtr = std::shared_ptr<const SkewForm>;

inline SkewFormPtr make_form(const Quiver& q) { return std::make_shared<const SkewForm>(q); }

class Series {
 public:
  using Terms = std::map<Multidegree, RationalV, DegLexLess>;

  Series(SkewFormPtr form, int cutoff);
  static Series one(SkewFormPtr form, int cutoff);
  /// c * y^alpha (zero when |alpha| exceeds the cutoff).
  static Series monomial(SkewFormPtr form, int cutoff, Multidegree alpha, RationalV c = 1);

  int cutoff() const noexcept { return cutoff_; }
  std::size_t nvars() const noexcept { return form_->size(); }
  const SkewForm& form() const noexcept { return *form_; }
  const SkewFormPtr& form_ptr() const noexcept { return form_; }
  const Terms& terms() const noexcept { return terms_; }

  /// Coefficient of y^beta (zero when absent).
  RationalV coeff(const Multidegree& beta) const;
  /// Adds c to the coefficient of y^beta; terms past the cutoff are dropped.
  void add_term(const Multidegree& beta, const RationalV& c);

  /// Same series at a smaller cutoff.
  Series truncated(int cutoff) const;
  bool denominator_free() const;
  Series substitute_inverse() const;

  Series& operator+=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }

  /// Throws std::invalid_argument when the cutoffs or forms differ.
  friend bool operator==(const Series& a, const Series& b);
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  void check_compatible(const Series& o) const;

  SkewFormPtr form_;
  int cutoff_;
  Terms terms_;
};

/// Noncommutative product, truncated at the common cutoff.
Series series_mul(const Series& s, const Series& t);
/// Two-sided inverse, built degree by degree. Throws std::domain_error when
/// the constant term is zero.
Series series_inverse(const Series& s);

/// E(q^shift y^alpha; q^eps) from the Euler expansion
///   E(x; q) = sum_k (-1)^k q^(k/2) x^k / (q; q)_k,
/// keeping k |alpha| <= cutoff.
Series dilog_series(SkewFormPtr form, const Multidegree& alpha, std::int64_t shift, Sign eps,
                    int cutoff);

/// E(x; q^eps)^-1 E(q^m x; q^eps) with x = y^alpha, as the q-binomial series
/// sum_k q^(eps k^2 / 2) [eps m choose k]_{q^eps} x^k.
Series dilog_ratio_series(SkewFormPtr form, const Multidegree& alpha, std::int64_t m, Sign eps,
                          int cutoff);

struct DilogFactor {
  Multidegree alpha;
  Sign eps;
};

/// Expands (E(y^a_1) ... E(y^a_T))^-1 (E(q^n_1 y^a_1) ... E(q^n_T y^a_T)) as
/// the multisum over k in N^T of
///   prod_t q^(eps_t k_t^2 / 2) [eps_t (n_t + sum_{i<t} <a_i,a_t> k_i) choose k_t]_{q^eps_t}
/// times the ordered monomial y^(k_T a_T) ... y^(k_1 a_1).
Series ordered_product_expand(SkewFormPtr form, const std::vector<DilogFactor>& factors,
                              std::span<const std::int64_t> shifts, int cutoff);

}  // namespace qmut
