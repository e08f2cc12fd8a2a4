#include "qmut/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace qmut {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::NotApplicable:
      return "not-applicable";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<std::int64_t> widen(const Multidegree& a) { return {a.begin(), a.end()}; }

// First beta, in lexicographic order, where the two coefficient maps differ.
template <typename Lhs, typename Rhs>
std::optional<CoefficientDiff> first_difference(std::size_t n, int cutoff, Lhs lhs, Rhs rhs) {
  for (const auto& beta : multidegrees_up_to(n, cutoff)) {
    RationalV a = lhs(beta);
    RationalV b = rhs(beta);
    if (a != b) return CoefficientDiff{beta, std::move(a), std::move(b)};
  }
  return std::nullopt;
}

Series dilog_product(const MutationTrace& tr, std::span<const std::int64_t> shifts, int cutoff) {
  Series acc = Series::one(tr.form, cutoff);
  for (std::size_t t = 0; t < tr.length(); ++t)
    acc = series_mul(acc, dilog_series(tr.form, tr.steps[t].alpha, shifts[t], tr.steps[t].sign, cutoff));
  return acc;
}

}  // namespace

VerificationReport theorem1_check(const Quiver& q, const MutationSequence& m,
                                  std::span<const std::int64_t> r, int cutoff) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.claim = "theorem1";
  rep.quiver = q.matrix();
  rep.sequences = {m};
  rep.r.assign(r.begin(), r.end());
  rep.degree = cutoff;

  const MutationTrace tr = run_trace(q, m);
  const SkewForm& form = *tr.form;
  const Series z = partition_function(tr, r, cutoff).series;

  std::vector<std::int64_t> shifts;
  std::vector<std::int64_t> zeros(tr.length(), 0);
  for (const auto& step : tr.steps) shifts.push_back(form(widen(step.alpha), r));

  const Series rhs = series_mul(series_inverse(dilog_product(tr, zeros, cutoff)),
                                dilog_product(tr, shifts, cutoff));
  const Series multisum = ordered_product_expand(tr.form, tr.dilog_factors(), shifts, cutoff);

  const std::size_t n = tr.nvars();
  auto lhs_at = [&](const Multidegree& beta) {
    return z.coeff(beta).shifted(static_cast<int>(form(widen(beta), r)));
  };
  auto rhs_at = [&](const Multidegree& beta) { return rhs.coeff(beta); };
  auto multisum_at = [&](const Multidegree& beta) { return multisum.coeff(beta); };

  if (auto diff = first_difference(n, cutoff, lhs_at, rhs_at)) {
    rep.status = Status::Fail;
    rep.first_diff = std::move(diff);
    rep.notes.push_back("partition function differs from the dilogarithm ratio");
  }
  if (auto diff = first_difference(n, cutoff, multisum_at, rhs_at)) {
    rep.notes.push_back("series arithmetic and q-binomial multisum disagree");
    if (rep.status == Status::Pass) {
      rep.status = Status::Fail;
      rep.first_diff = std::move(diff);
    }
  }
  if (!rhs.denominator_free()) {
    rep.notes.push_back("dilogarithm ratio has a non-polynomial coefficient");
    rep.status = Status::Fail;
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

VerificationReport theorem2_check(const Quiver& q, const MutationSequence& m,
                                  const MutationSequence& m2, std::span<const std::int64_t> r,
                                  int cutoff) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.claim = "theorem2";
  rep.quiver = q.matrix();
  rep.sequences = {m, m2};
  rep.r.assign(r.begin(), r.end());
  rep.degree = cutoff;

  const MutationTrace t1 = run_trace(q, m);
  const MutationTrace t2 = run_trace(q, m2);
  rep.permutation = frozen_isomorphism(t1.ice.back(), t2.ice.back());
  if (!rep.permutation) {
    rep.status = Status::NotApplicable;
    rep.notes.push_back("final framed quivers are not frozen isomorphic");
    rep.elapsed_ms = ms_since(start);
    return rep;
  }
  const Series z1 = partition_function(t1, r, cutoff).series;
  const Series z2 = partition_function(t2, r, cutoff).series;
  if (auto diff = first_difference(
          q.size(), cutoff, [&](const Multidegree& b) { return z1.coeff(b); },
          [&](const Multidegree& b) { return z2.coeff(b); })) {
    rep.status = Status::Fail;
    rep.first_diff = std::move(diff);
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

VerificationReport stanley_check(int a, int b, int c, int d) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.claim = "stanley";
  rep.stanley = std::array<int, 4>{a, b, c, d};

  const LaurentPoly lhs = qbinom(c + a, a) * qbinom(d + b, b);
  LaurentPoly rhs;
  for (int k = 0; k <= std::min(a, b); ++k) {
    rhs += (qbinom(c + d + k, k) * qbinom(c + a - b, a - k) * qbinom(d + b - a, b - k))
               .shifted(2 * (a - k) * (b - k));
  }
  if (lhs != rhs) {
    rep.status = Status::Fail;
    rep.first_diff = CoefficientDiff{{}, lhs, rhs};
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

LaurentPoly normalized(const LaurentPoly& p) {
  return p.is_zero() ? p : p.shifted(-p.valuation());
}

namespace {

IdentitySide render_side(const MutationTrace& tr, std::span<const std::int64_t> r,
                         const Multidegree& beta) {
  IdentitySide side;
  side.sequence = tr.sequence;
  const std::size_t T = tr.length();
  const std::size_t n = tr.nvars();
  for (std::size_t i = 0; i < n; ++i) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t t = 0; t < T; ++t) {
      const int a = tr.steps[t].alpha[i];
      if (a == 0) continue;
      if (!first) os << "+";
      if (a != 1) os << a;
      os << "k" << (t + 1);
      first = false;
    }
    if (first) os << "0";
    os << "=" << beta[i];
    side.constraints.push_back(os.str());
  }

  for (auto& k : k_tuples_for(tr, beta)) {
    IdentityTerm term{k, 0, {}, LaurentPoly(1)};
    for (std::size_t t = 0; t < T; ++t) {
      const auto& step = tr.steps[t];
      const std::int64_t kvee = step.kvee.evaluate_prefix(std::span<const int>(k.data(), t + 1), r);
      const LinForm upper = LinForm::k_var(T, n, t) + step.kvee;
      term.factors.push_back({k[t] + kvee, upper.to_string(), k[t], step.sign});
      term.q_half_power -= to_int(step.sign) * k[t] * kvee;
      term.value *= qbinom(k[t] + kvee, k[t], step.sign);
    }
    term.value = term.value.shifted(static_cast<int>(term.q_half_power));
    side.value += term.value;
    side.terms.push_back(std::move(term));
  }
  return side;
}

void render_side_text(std::ostream& os, const IdentitySide& side) {
  os << "  sequence (";
  for (std::size_t t = 0; t < side.sequence.size(); ++t) os << (t ? "," : "") << side.sequence[t];
  os << "), constraints:";
  for (const auto& c : side.constraints) os << " " << c;
  os << "\n";
  for (const auto& term : side.terms) {
    os << "    q^(" << term.q_half_power << "/2)";
    for (const auto& f : term.factors) {
      os << " [" << f.upper << " choose " << f.lower << "]";
      os << (f.eps == Sign::Plus ? "_q" : "_{q^-1}");
    }
    os << "   k=(";
    for (std::size_t t = 0; t < term.k.size(); ++t) os << (t ? "," : "") << term.k[t];
    os << ")\n";
  }
  os << "  value: " << side.value << "\n";
}

}  // namespace

RenderedIdentity render_identity(const Quiver& q, const MutationSequence& m,
                                 const MutationSequence& m2, std::span<const std::int64_t> r,
                                 const Multidegree& beta) {
  const MutationTrace t1 = run_trace(q, m);
  const MutationTrace t2 = run_trace(q, m2);
  if (r.size() != q.size() || beta.size() != q.size())
    throw std::invalid_argument("render_identity: r and beta must have length n");
  auto perm = frozen_isomorphism(t1.ice.back(), t2.ice.back());
  if (!perm) throw NotApplicableError("final framed quivers are not frozen isomorphic");
  RenderedIdentity id;
  id.beta = beta;
  id.r.assign(r.begin(), r.end());
  id.permutation = std::move(*perm);
  id.lhs = render_side(t1, r, beta);
  id.rhs = render_side(t2, r, beta);
  return id;
}

std::string to_text(const RenderedIdentity& id) {
  std::ostringstream os;
  os << "coefficient of y^(";
  for (std::size_t i = 0; i < id.beta.size(); ++i) os << (i ? "," : "") << id.beta[i];
  os << ") at r=(";
  for (std::size_t i = 0; i < id.r.size(); ++i) os << (i ? "," : "") << id.r[i];
  os << ")\nleft:\n";
  render_side_text(os, id.lhs);
  os << "right:\n";
  render_side_text(os, id.rhs);
  os << "normalized: " << normalized(id.lhs.value) << "\n";
  os << (id.holds() ? "identity holds" : "identity FAILS") << "\n";
  return os.str();
}

}  // namespace qmut
