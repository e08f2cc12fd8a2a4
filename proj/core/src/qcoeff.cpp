#include "qmut/qcoeff.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace qmut {

namespace {

using Dense = std::vector<Integer>;

void trim_top(Dense& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Integer dense_content(const Dense& c) {
  Integer g = 0;
  for (const auto& x : c) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_all(Dense& c, const Integer& g) {
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

void make_primitive(Dense& c) {
  Integer g = dense_content(c);
  if (g > 1) divide_all(c, g);
}

// Pseudo-remainder of a by b, reduced to its primitive part. Both inputs are
// dense polynomials with nonzero top coefficient and deg a >= deg b.
Dense primitive_prem(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  Integer lr;
  while (!a.empty() && a.size() - 1 >= db) {
    lr = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= lr * b[i];
    trim_top(a);
  }
  make_primitive(a);
  return a;
}

// Polynomial view of a Laurent polynomial with its valuation stripped.
Dense strip(const LaurentPoly& p) { return p.dense(); }

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

LaurentPoly::LaurentPoly(Integer c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

LaurentPoly LaurentPoly::monomial(int e, Integer c) {
  LaurentPoly p(std::move(c));
  if (!p.is_zero()) p.low_ = e;
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Integer>>& terms) {
  std::map<int, Integer> acc;
  for (const auto& [e, c] : terms) acc[e] += c;
  LaurentPoly p;
  for (const auto& [e, c] : acc) p += monomial(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<Integer> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  trim_top(coeffs_);
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const Integer& x) { return x != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  const auto skip = first - coeffs_.begin();
  if (skip > 0) {
    coeffs_.erase(coeffs_.begin(), first);
    low_ += static_cast<int>(skip);
  }
}

bool LaurentPoly::is_one() const {
  return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1;
}

Integer LaurentPoly::coeff(int e) const {
  if (is_zero() || e < low_ || e > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

std::vector<std::pair<int, Integer>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Integer>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(
      coeffs_.begin(), coeffs_.end(), [](const Integer& x) { return x != 0; }));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(degree(), o.degree());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Dense out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return LaurentPoly::from_dense(a.low_ + b.low_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& x : p.coeffs_) x = -x;
  return p;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += e;
  return p;
}

LaurentPoly LaurentPoly::substitute_inverse() const {
  if (is_zero()) return {};
  Dense rev(coeffs_.rbegin(), coeffs_.rend());
  return from_dense(-degree(), std::move(rev));
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  if (is_zero()) return {};
  const Dense& b = d.coeffs_;
  Dense r = coeffs_;
  if (r.size() < b.size())
    throw ArithmeticError("LaurentPoly::div_exact: nonzero remainder");
  const std::size_t qsize = r.size() - b.size() + 1;
  Dense q(qsize);
  const Integer& lb = b.back();
  for (std::size_t k = qsize; k-- > 0;) {
    Integer& top = r[k + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
      throw ArithmeticError("LaurentPoly::div_exact: nonzero remainder");
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t i = 0; i < b.size(); ++i)
      mpz_submul(r[k + i].get_mpz_t(), q[k].get_mpz_t(), b[i].get_mpz_t());
  }
  if (std::any_of(r.begin(), r.end(), [](const Integer& x) { return x != 0; }))
    throw ArithmeticError("LaurentPoly::div_exact: nonzero remainder");
  return from_dense(low_ - d.low_, std::move(q));
}

LaurentPoly LaurentPoly::div_exact(const Integer& c) const {
  if (c == 0) throw std::domain_error("LaurentPoly: division by zero");
  LaurentPoly p = *this;
  for (auto& x : p.coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      throw ArithmeticError("LaurentPoly::div_exact: content does not divide");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return p;
}

Integer LaurentPoly::content() const { return dense_content(coeffs_); }

Integer LaurentPoly::eval_at_one() const {
  Integer s = 0;
  for (const auto& x : coeffs_) s += x;
  return s;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    if (e == 2) {
      os << "q";
    } else if (e % 2 == 0) {
      os << "q^" << (e < 0 ? "(" : "") << e / 2 << (e < 0 ? ")" : "");
    } else {
      os << "q^(" << e << "/2)";
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  Dense x = strip(a);
  Dense y = strip(b);
  if (x.empty() || y.empty()) {
    Dense g = x.empty() ? y : x;
    make_primitive(g);
    Integer c = x.empty() ? b.content() : a.content();
    for (auto& v : g) v *= c;
    if (g.back() < 0)
      for (auto& v : g) v = -v;
    return LaurentPoly::from_dense(0, std::move(g));
  }
  Integer c = gcd(dense_content(x), dense_content(y));
  if (x.size() == 1 || y.size() == 1) return LaurentPoly(c);
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return LaurentPoly(c);
    Dense r = primitive_prem(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.back() < 0)
    for (auto& v : x) v = -v;
  for (auto& v : x) v *= c;
  return LaurentPoly::from_dense(0, std::move(x));
}

// --- RationalV ---------------------------------------------------------------

RationalV::RationalV(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalV::fix_units() {
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

void RationalV::normalize() {
  if (den_.is_zero()) throw std::domain_error("RationalV: zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const int e = den_.valuation();
  if (e != 0) {
    num_ = num_.shifted(-e);
    den_ = den_.shifted(-e);
  }
  if (!den_.is_one()) {
    LaurentPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.div_exact(g);
      den_ = den_.div_exact(g);
    }
  }
  fix_units();
}

const LaurentPoly& RationalV::as_laurent() const {
  if (!is_laurent())
    throw ArithmeticError("RationalV: expected a Laurent polynomial, got " + to_string());
  return num_;
}

RationalV RationalV::inverse() const {
  if (is_zero()) throw std::domain_error("RationalV: inverse of zero");
  return RationalV(den_, num_);
}

RationalV RationalV::operator-() const { return RationalV(Raw{}, -num_, den_); }

RationalV& RationalV::operator+=(const RationalV& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  LaurentPoly g = poly_gcd(den_, o.den_);
  LaurentPoly od = o.den_.div_exact(g);
  num_ = num_ * od + o.num_ * den_.div_exact(g);
  den_ = den_ * od;
  normalize();
  return *this;
}

RationalV& RationalV::operator-=(const RationalV& o) { return *this += -o; }

RationalV& RationalV::operator*=(const RationalV& o) {
  if (is_zero() || o.is_zero()) return *this = RationalV();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  LaurentPoly g1 = poly_gcd(num_, o.den_);
  LaurentPoly g2 = poly_gcd(o.num_, den_);
  num_ = num_.div_exact(g1) * o.num_.div_exact(g2);
  den_ = den_.div_exact(g2) * o.den_.div_exact(g1);
  fix_units();
  return *this;
}

RationalV& RationalV::operator/=(const RationalV& o) { return *this *= o.inverse(); }

RationalV RationalV::shifted(int e) const { return RationalV(Raw{}, num_.shifted(e), den_); }

RationalV RationalV::substitute_inverse() const {
  return RationalV(num_.substitute_inverse(), den_.substitute_inverse());
}

bool RationalV::cross_equal(const RationalV& a, const RationalV& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalV::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalV& r) { return os << r.to_string(); }

// --- q-analogues ---------------------------------------------------------------

LaurentPoly qpochhammer(int x_power, int k) {
  if (k < 0) throw std::invalid_argument("qpochhammer: negative length");
  LaurentPoly p(1);
  for (int i = 0; i < k; ++i) p *= LaurentPoly(1) - LaurentPoly::monomial(x_power + 2 * i);
  return p;
}

LaurentPoly qbinom(std::int64_t m, int k, Sign eps) {
  if (k < 0) throw std::invalid_argument("qbinom: negative lower index");
  if (k == 0) return LaurentPoly(1);
  const auto lowest = 2 * (m - k + 1);
  if (lowest > (1 << 29) || lowest < -(1 << 29))
    throw std::out_of_range("qbinom: upper index out of range");
  LaurentPoly num = qpochhammer(static_cast<int>(lowest), k);
  LaurentPoly r = num.div_exact(qpochhammer(2, k));
  return eps == Sign::Plus ? r : r.substitute_inverse();
}

}  // namespace qmut
