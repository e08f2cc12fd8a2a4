#include "qmut/torus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace qmut {

int total_degree(std::span<const int> beta) { return std::accumulate(beta.begin(), beta.end(), 0); }

bool DegLexLess::operator()(const Multidegree& a, const Multidegree& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

namespace {

void enumerate_multidegrees(std::size_t i, int budget, Multidegree& cur,
                            std::vector<Multidegree>& out) {
  if (i == cur.size()) {
    out.push_back(cur);
    return;
  }
  for (int x = 0; x <= budget; ++x) {
    cur[i] = x;
    enumerate_multidegrees(i + 1, budget - x, cur, out);
  }
  cur[i] = 0;
}

void check_alpha(const Multidegree& alpha, std::size_t n) {
  if (alpha.size() != n) throw std::invalid_argument("exponent length does not match the form");
  if (std::any_of(alpha.begin(), alpha.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("exponent must be in N^n");
  if (total_degree(alpha) == 0) throw std::invalid_argument("dilogarithm argument y^0");
}

Multidegree scaled(const Multidegree& a, int k) {
  Multidegree out(a);
  for (auto& x : out) x *= k;
  return out;
}

}  // namespace

std::vector<Multidegree> multidegrees_up_to(std::size_t n, int max_degree) {
  std::vector<Multidegree> out;
  if (max_degree < 0) return out;
  Multidegree cur(n, 0);
  enumerate_multidegrees(0, max_degree, cur, out);
  return out;
}

// --- SkewForm ------------------------------------------------------------------

SkewForm::SkewForm(IntMatrix b) : b_(std::move(b)) {
  if (!b_.is_skew_symmetric()) throw std::invalid_argument("SkewForm: matrix not skew-symmetric");
}

std::int64_t SkewForm::operator()(std::span<const std::int64_t> a,
                                  std::span<const std::int64_t> b) const {
  const std::size_t n = size();
  if (a.size() != n || b.size() != n) throw std::invalid_argument("SkewForm: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) s += b_(i, j) * a[i] * b[j];
  }
  return s;
}

std::int64_t SkewForm::operator()(std::span<const int> a, std::span<const int> b) const {
  const std::size_t n = size();
  if (a.size() != n || b.size() != n) throw std::invalid_argument("SkewForm: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) s += b_(i, j) * a[i] * b[j];
  }
  return s;
}

std::int64_t SkewForm::ordering_exponent(std::span<const int> a) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j) s += b_(i, j) * a[i] * a[j];
  return s;
}

// --- Series --------------------------------------------------------------------

Series::Series(SkewFormPtr form, int cutoff) : form_(std::move(form)), cutoff_(cutoff) {
  if (!form_) throw std::invalid_argument("Series: null form");
  if (cutoff_ < 0) throw std::invalid_argument("Series: negative cutoff");
}

Series Series::one(SkewFormPtr form, int cutoff) {
  Series s(std::move(form), cutoff);
  s.add_term(Multidegree(s.nvars(), 0), 1);
  return s;
}

Series Series::monomial(SkewFormPtr form, int cutoff, Multidegree alpha, RationalV c) {
  Series s(std::move(form), cutoff);
  if (alpha.size() != s.nvars()) throw std::invalid_argument("Series: exponent length mismatch");
  s.add_term(alpha, c);
  return s;
}

RationalV Series::coeff(const Multidegree& beta) const {
  auto it = terms_.find(beta);
  return it == terms_.end() ? RationalV() : it->second;
}

void Series::add_term(const Multidegree& beta, const RationalV& c) {
  if (c.is_zero() || total_degree(beta) > cutoff_) return;
  auto [it, inserted] = terms_.try_emplace(beta, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Series Series::truncated(int cutoff) const {
  if (cutoff > cutoff_) throw std::invalid_argument("Series: cannot raise the cutoff");
  Series s(form_, cutoff);
  for (const auto& [beta, c] : terms_)
    if (total_degree(beta) <= cutoff) s.terms_.emplace(beta, c);
  return s;
}

bool Series::denominator_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_laurent(); });
}

Series Series::substitute_inverse() const {
  Series s(form_, cutoff_);
  for (const auto& [beta, c] : terms_) s.terms_.emplace(beta, c.substitute_inverse());
  return s;
}

void Series::check_compatible(const Series& o) const {
  if (cutoff_ != o.cutoff_) throw std::invalid_argument("Series: cutoff mismatch");
  if (form_ != o.form_ && !(*form_ == *o.form_)) throw std::invalid_argument("Series: form mismatch");
}

Series& Series::operator+=(const Series& o) {
  check_compatible(o);
  for (const auto& [beta, c] : o.terms_) add_term(beta, c);
  return *this;
}

bool operator==(const Series& a, const Series& b) {
  a.check_compatible(b);
  return a.terms_ == b.terms_;
}

Series series_mul(const Series& s, const Series& t) {
  if (s.cutoff() != t.cutoff()) throw std::invalid_argument("series_mul: cutoff mismatch");
  if (s.form_ptr() != t.form_ptr() && !(s.form() == t.form()))
    throw std::invalid_argument("series_mul: form mismatch");
  const int cutoff = s.cutoff();
  std::map<Multidegree, std::vector<RationalV>, DegLexLess> parts;
  Multidegree gamma(s.nvars());
  for (const auto& [a, ca] : s.terms()) {
    const int da = total_degree(a);
    for (const auto& [b, cb] : t.terms()) {
      if (da + total_degree(b) > cutoff) break;
      for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] = a[i] + b[i];
      const auto e = s.form()(a, b);
      parts[gamma].push_back((ca * cb).shifted(static_cast<int>(e)));
    }
  }
  Series out(s.form_ptr(), cutoff);
  for (auto& [g, vals] : parts) {
    RationalV sum;
    for (const auto& v : vals) sum += v;
    out.add_term(g, sum);
  }
  return out;
}

Series series_inverse(const Series& s) {
  const Multidegree zero(s.nvars(), 0);
  const RationalV c0 = s.coeff(zero);
  if (c0.is_zero()) throw std::domain_error("series_inverse: zero constant term");
  const RationalV inv0 = c0.inverse();
  Series u(s.form_ptr(), s.cutoff());
  u.add_term(zero, inv0);
  auto gammas = multidegrees_up_to(s.nvars(), s.cutoff());
  std::sort(gammas.begin(), gammas.end(), DegLexLess{});
  Multidegree beta(s.nvars());
  for (const auto& g : gammas) {
    if (total_degree(g) == 0) continue;
    RationalV rest;
    for (const auto& [a, ca] : s.terms()) {
      if (a == zero) continue;
      bool fits = true;
      for (std::size_t i = 0; i < g.size() && fits; ++i) {
        beta[i] = g[i] - a[i];
        fits = beta[i] >= 0;
      }
      if (!fits) continue;
      const RationalV ub = u.coeff(beta);
      if (ub.is_zero()) continue;
      rest += (ca * ub).shifted(static_cast<int>(s.form()(a, beta)));
    }
    u.add_term(g, -(inv0 * rest));
  }
  return u;
}

Series dilog_series(SkewFormPtr form, const Multidegree& alpha, std::int64_t shift, Sign eps,
                    int cutoff) {
  Series out(std::move(form), cutoff);
  check_alpha(alpha, out.nvars());
  const int width = total_degree(alpha);
  const int e = to_int(eps);
  LaurentPoly pochhammer(1);
  for (int k = 0; k * width <= cutoff; ++k) {
    if (k > 0) {
      LaurentPoly factor = LaurentPoly(1) - LaurentPoly::monomial(2 * k);
      pochhammer *= eps == Sign::Plus ? factor : factor.substitute_inverse();
    }
    const auto vpow = static_cast<int>(e * k + 2 * shift * k);
    LaurentPoly num = LaurentPoly::monomial(vpow, k % 2 ? -1 : 1);
    out.add_term(scaled(alpha, k), RationalV(std::move(num), pochhammer));
  }
  return out;
}

Series dilog_ratio_series(SkewFormPtr form, const Multidegree& alpha, std::int64_t m, Sign eps,
                          int cutoff) {
  Series out(std::move(form), cutoff);
  check_alpha(alpha, out.nvars());
  const int width = total_degree(alpha);
  const int e = to_int(eps);
  for (int k = 0; k * width <= cutoff; ++k)
    out.add_term(scaled(alpha, k), qbinom(e * m, k, eps).shifted(e * k * k));
  return out;
}

namespace {

class BinomCache {
 public:
  const LaurentPoly& get(std::int64_t m, int k, Sign eps) {
    auto key = std::make_tuple(m, k, to_int(eps));
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, qbinom(m, k, eps)).first;
    return it->second;
  }

 private:
  std::map<std::tuple<std::int64_t, int, int>, LaurentPoly> cache_;
};

struct ExpandState {
  const SkewForm& form;
  const std::vector<DilogFactor>& factors;
  std::span<const std::int64_t> shifts;
  int cutoff;
  std::vector<std::vector<std::int64_t>> pair_skew;
  std::vector<int> widths;
  std::vector<int> k;
  BinomCache binoms;
  std::map<Multidegree, LaurentPoly, DegLexLess> acc;

  void leaf(const LaurentPoly& c) {
    const std::size_t n = form.size();
    Multidegree beta(n, 0);
    std::int64_t order = 0;
    for (std::size_t t = 0; t < factors.size(); ++t) {
      for (std::size_t i = 0; i < n; ++i) beta[i] += k[t] * factors[t].alpha[i];
      for (std::size_t j = t + 1; j < factors.size(); ++j)
        order -= static_cast<std::int64_t>(k[t]) * k[j] * pair_skew[t][j];
    }
    acc[beta] += c.shifted(static_cast<int>(order));
  }

  void descend(std::size_t t, int used, const LaurentPoly& c) {
    if (t == factors.size()) {
      leaf(c);
      return;
    }
    const int e = to_int(factors[t].eps);
    std::int64_t upper = shifts[t];
    for (std::size_t i = 0; i < t; ++i) upper += pair_skew[i][t] * k[i];
    for (int kt = 0; used + kt * widths[t] <= cutoff; ++kt) {
      const LaurentPoly& b = binoms.get(e * upper, kt, factors[t].eps);
      if (b.is_zero()) continue;
      k[t] = kt;
      descend(t + 1, used + kt * widths[t], c * b.shifted(e * kt * kt));
    }
    k[t] = 0;
  }
};

}  // namespace

Series ordered_product_expand(SkewFormPtr form, const std::vector<DilogFactor>& factors,
                              std::span<const std::int64_t> shifts, int cutoff) {
  if (factors.size() != shifts.size())
    throw std::invalid_argument("ordered_product_expand: length mismatch");
  Series out(form, cutoff);
  const std::size_t T = factors.size();
  for (const auto& f : factors) check_alpha(f.alpha, out.nvars());
  ExpandState st{*form, factors, shifts, cutoff, std::vector<std::vector<std::int64_t>>(T, std::vector<std::int64_t>(T)),
                 std::vector<int>(T), std::vector<int>(T, 0), {}, {}};
  for (std::size_t i = 0; i < T; ++i) {
    st.widths[i] = total_degree(factors[i].alpha);
    for (std::size_t j = 0; j < T; ++j) st.pair_skew[i][j] = (*form)(factors[i].alpha, factors[j].alpha);
  }
  st.descend(0, 0, LaurentPoly(1));
  for (auto& [beta, c] : st.acc) out.add_term(beta, RationalV(std::move(c)));
  return out;
}

}  // namespace qmut
