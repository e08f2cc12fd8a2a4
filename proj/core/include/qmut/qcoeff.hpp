#pragma once

// Exact coefficient arithmetic over Z[v, v^-1] and its fraction field, where
// v = q^(1/2). Every q-power in the library is stored as an integer power of v.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmut {

using Integer = mpz_class;

/// Raised when an operation that must be exact is not (a remainder in an
/// exact division, a denominator left where none may be). Signals a bug.
class ArithmeticError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Sign : int { Minus = -1, Plus = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign flip(Sign s) noexcept {
  return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}

/// Integer-coefficient Laurent polynomial in v.
///
/// Stored densely from the lowest exponent upwards. Both end coefficients are
/// nonzero; the zero polynomial has no coefficients at all.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(Integer c);

  /// c * v^e
  static LaurentPoly monomial(int e, Integer c = 1);
  /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
  static LaurentPoly from_terms(const std::vector<std::pair<int, Integer>>& terms);
  /// Builds from dense coefficients c[0] v^low + c[1] v^(low+1) + ...
  static LaurentPoly from_dense(int low, std::vector<Integer> coeffs);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const;
  /// Lowest exponent with a nonzero coefficient. Undefined for zero.
  int valuation() const noexcept { return low_; }
  /// Highest exponent with a nonzero coefficient. Undefined for zero.
  int degree() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of v^e (zero when absent).
  Integer coeff(int e) const;
  const Integer& leading_coeff() const { return coeffs_.back(); }
  const Integer& trailing_coeff() const { return coeffs_.front(); }
  const std::vector<Integer>& dense() const noexcept { return coeffs_; }

  /// Nonzero terms in ascending exponent order.
  std::vector<std::pair<int, Integer>> terms() const;
  std::size_t term_count() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  LaurentPoly operator-() const;

  /// this * v^e
  LaurentPoly shifted(int e) const;
  /// v -> v^-1, i.e. q -> q^-1.
  LaurentPoly substitute_inverse() const;
  /// Exact quotient this / d in Z[v, v^-1]. Throws ArithmeticError on a
  /// nonzero remainder and std::domain_error when d is zero.
  LaurentPoly div_exact(const LaurentPoly& d) const;
  /// Divides every coefficient by c, which must divide all of them.
  LaurentPoly div_exact(const Integer& c) const;

  /// gcd of the coefficients (nonnegative); zero for the zero polynomial.
  Integer content() const;
  /// Value at v = 1.
  Integer eval_at_one() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Human-readable rendering in q, e.g. "q^(-1) + 1 + q".
  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// gcd in Z[v] of two Laurent polynomials after stripping their v-valuations,
/// with positive leading coefficient. gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Element of Q(v) kept as a normalized fraction num / den.
///
/// Normal form: den has valuation zero and positive leading coefficient; num
/// and den are coprime in Z[v] (content included); zero is 0 / 1.
class RationalV {
 public:
  RationalV() : den_(1) {}
  RationalV(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalV(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// num / den, normalized. Throws std::domain_error when den is zero.
  RationalV(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }
  /// The numerator when the denominator is 1; ArithmeticError otherwise.
  const LaurentPoly& as_laurent() const;

  RationalV inverse() const;
  RationalV operator-() const;
  RationalV& operator+=(const RationalV& o);
  RationalV& operator-=(const RationalV& o);
  RationalV& operator*=(const RationalV& o);
  RationalV& operator/=(const RationalV& o);
  friend RationalV operator+(RationalV a, const RationalV& b) { return a += b; }
  friend RationalV operator-(RationalV a, const RationalV& b) { return a -= b; }
  friend RationalV operator*(RationalV a, const RationalV& b) { return a *= b; }
  friend RationalV operator/(RationalV a, const RationalV& b) { return a /= b; }

  /// this * v^e
  RationalV shifted(int e) const;
  RationalV substitute_inverse() const;

  /// Normal forms are unique, so this is plain component equality.
  friend bool operator==(const RationalV& a, const RationalV& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalV& a, const RationalV& b) { return !(a == b); }
  /// Equality by cross-multiplication; agrees with operator== on normal forms.
  static bool cross_equal(const RationalV& a, const RationalV& b);

  std::string to_string() const;

 private:
  struct Raw {};
  RationalV(Raw, LaurentPoly num, LaurentPoly den)
      : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  void fix_units();

  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalV& r);

/// (v^x_power; q)_k = prod_{i<k} (1 - v^(x_power + 2i)).
LaurentPoly qpochhammer(int x_power, int k);

/// Gaussian binomial [m choose k] in base q^eps, for any integer m and k >= 0,
/// as the exact quotient (q^(m-k+1); q)_k / (q; q)_k.
LaurentPoly qbinom(std::int64_t m, int k, Sign eps = Sign::Plus);

}  // namespace qmut
