#include "qmut/trace.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qmut {

// --- LinForm -------------------------------------------------------------------

LinForm LinForm::k_var(std::size_t T, std::size_t n, std::size_t t) {
  LinForm f(T, n);
  f.k.at(t) = 1;
  return f;
}

LinForm LinForm::r_var(std::size_t T, std::size_t n, std::size_t i) {
  LinForm f(T, n);
  f.r.at(i) = 1;
  return f;
}

LinForm& LinForm::operator+=(const LinForm& o) {
  if (k.size() != o.k.size() || r.size() != o.r.size())
    throw std::invalid_argument("LinForm: shape mismatch");
  for (std::size_t i = 0; i < k.size(); ++i) k[i] += o.k[i];
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.r[i];
  constant += o.constant;
  return *this;
}

LinForm& LinForm::operator-=(const LinForm& o) { return *this += -o; }

LinForm& LinForm::operator*=(std::int64_t c) {
  for (auto& x : k) x *= c;
  for (auto& x : r) x *= c;
  constant *= c;
  return *this;
}

std::int64_t LinForm::evaluate(std::span<const std::int64_t> kv, std::span<const std::int64_t> rv) const {
  if (kv.size() != k.size() || rv.size() != r.size())
    throw std::invalid_argument("LinForm::evaluate: shape mismatch");
  std::int64_t s = constant;
  for (std::size_t i = 0; i < k.size(); ++i) s += k[i] * kv[i];
  for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * rv[i];
  return s;
}

std::int64_t LinForm::evaluate_prefix(std::span<const int> kv, std::span<const std::int64_t> rv) const {
  std::int64_t s = constant;
  const std::size_t upto = std::min(kv.size(), k.size());
  for (std::size_t i = 0; i < upto; ++i) s += k[i] * kv[i];
  for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * rv[i];
  return s;
}

std::string LinForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](std::int64_t c, const std::string& name) {
    if (c == 0) return;
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1 || name.empty()) os << mag;
    os << name;
    first = false;
  };
  for (std::size_t i = 0; i < k.size(); ++i) emit(k[i], "k" + std::to_string(i + 1));
  for (std::size_t i = 0; i < r.size(); ++i) emit(r[i], "r" + std::to_string(i + 1));
  emit(constant, "");
  return first ? "0" : os.str();
}

// --- trace ---------------------------------------------------------------------

std::vector<DilogFactor> MutationTrace::dilog_factors() const {
  std::vector<DilogFactor> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back({s.alpha, s.sign});
  return out;
}

MutationTrace run_trace(const Quiver& q, const MutationSequence& m) {
  validate_sequence(m, q.size());
  const std::size_t n = q.size();
  const std::size_t T = m.size();
  MutationTrace tr{q, make_form(q), m, {framed(q)}, {}, {}};
  tr.ice.reserve(T + 1);
  tr.steps.reserve(T);

  std::vector<LinForm> s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(LinForm::r_var(T, n, i));
  tr.s_table.push_back(s);

  for (std::size_t t = 0; t < T; ++t) {
    const IceQuiver& cur = tr.ice.back();
    const int v = m[t];
    const auto vi = static_cast<std::size_t>(v - 1);
    const Sign eps = vertex_sign(cur, v);
    const auto c = c_vector(cur, v);

    Multidegree alpha(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) alpha[i] = static_cast<int>(to_int(eps) * c[i]);

    // Arrow sums over the unframed quiver Q(t-1).
    LinForm into(T, n);
    LinForm out_of(T, n);
    for (std::size_t a = 0; a < n; ++a) {
      const std::int64_t b = cur.matrix()(a, vi);
      if (b > 0) into += b * s[a];
      if (b < 0) out_of += (-b) * s[a];
    }
    const LinForm kt = LinForm::k_var(T, n, t);
    LinForm s_new;
    LinForm kvee;
    if (eps == Sign::Plus) {
      s_new = kt - s[vi] + into;
      kvee = out_of - s[vi] - s_new;
    } else {
      s_new = -kt - s[vi] + out_of;
      kvee = s[vi] + s_new - into;
    }
    if (kvee.constant != 0 || s_new.constant != 0)
      throw ArithmeticError("run_trace: linear form acquired a constant term");

    s[vi] = std::move(s_new);
    tr.s_table.push_back(s);
    tr.steps.push_back({v, eps, std::move(alpha), std::move(kvee)});
    tr.ice.push_back(mutate(cur, v));
  }
  return tr;
}

std::vector<LinForm> state_vector(const MutationTrace& tr, std::size_t t) {
  if (t > tr.length()) throw std::out_of_range("state_vector: step out of range");
  const std::size_t n = tr.nvars();
  const IntMatrix c = tr.ice[t].c_matrix();
  std::vector<LinForm> psi(n, LinForm(tr.length(), n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c(i, j) != 0) psi[j] += c(i, j) * tr.s_table[t][i];
  return psi;
}

LaurentPoly mutation_weight(int k, std::int64_t kvee, Sign eps) {
  if (k < 0) throw std::invalid_argument("mutation_weight: negative k");
  const std::int64_t shift = -to_int(eps) * static_cast<std::int64_t>(k) * kvee;
  return qbinom(k + kvee, k, eps).shifted(static_cast<int>(shift));
}

namespace {

class WeightCache {
 public:
  const LaurentPoly& get(int k, std::int64_t kvee, Sign eps) {
    auto key = std::make_tuple(k, kvee, to_int(eps));
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, mutation_weight(k, kvee, eps)).first;
    return it->second;
  }

 private:
  std::map<std::tuple<int, std::int64_t, int>, LaurentPoly> cache_;
};

struct ZEnumerator {
  const MutationTrace& tr;
  std::span<const std::int64_t> r;
  int cutoff;
  std::vector<int> widths;
  std::vector<int> k;
  WeightCache weights;
  std::map<Multidegree, LaurentPoly, DegLexLess> acc;
  bool boundary = false;

  void descend(std::size_t t, int used, const LaurentPoly& c) {
    if (t == tr.length()) {
      Multidegree beta(tr.nvars(), 0);
      for (std::size_t s = 0; s < t; ++s)
        for (std::size_t i = 0; i < beta.size(); ++i) beta[i] += k[s] * tr.steps[s].alpha[i];
      acc[beta] += c;
      if (used == cutoff && t > 0) boundary = true;
      return;
    }
    const auto& step = tr.steps[t];
    for (int kt = 0; used + kt * widths[t] <= cutoff; ++kt) {
      k[t] = kt;
      const auto kvee = step.kvee.evaluate_prefix(std::span<const int>(k.data(), t + 1), r);
      const LaurentPoly& w = weights.get(kt, kvee, step.sign);
      if (w.is_zero()) continue;
      descend(t + 1, used + kt * widths[t], c * w);
    }
    k[t] = 0;
  }
};

// Enumerates k with sum_t k_t alpha_t = beta.
struct FiberEnumerator {
  const MutationTrace& tr;
  const Multidegree& beta;
  std::vector<std::vector<bool>> covered;  // covered[t][i]: some alpha_s, s >= t, has entry i > 0
  std::vector<int> k;
  Multidegree rem;
  std::vector<std::vector<int>> found;

  void descend(std::size_t t) {
    const std::size_t n = rem.size();
    for (std::size_t i = 0; i < n; ++i)
      if (rem[i] > 0 && !covered[t][i]) return;
    if (t == tr.length()) {
      found.push_back(k);
      return;
    }
    const auto& alpha = tr.steps[t].alpha;
    int kmax = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (alpha[i] > 0) kmax = kmax < 0 ? rem[i] / alpha[i] : std::min(kmax, rem[i] / alpha[i]);
    for (int kt = 0; kt <= kmax; ++kt) {
      k[t] = kt;
      for (std::size_t i = 0; i < n; ++i) rem[i] -= kt * alpha[i];
      descend(t + 1);
      for (std::size_t i = 0; i < n; ++i) rem[i] += kt * alpha[i];
    }
    k[t] = 0;
  }
};

void check_r(const MutationTrace& tr, std::span<const std::int64_t> r) {
  if (r.size() != tr.nvars()) throw std::invalid_argument("initial s-variables: length mismatch");
}

}  // namespace

PartitionFunction partition_function(const MutationTrace& tr, std::span<const std::int64_t> r,
                                     int cutoff) {
  check_r(tr, r);
  ZEnumerator z{tr, r, cutoff, std::vector<int>(tr.length()), std::vector<int>(tr.length(), 0), {}, {}};
  for (std::size_t t = 0; t < tr.length(); ++t) z.widths[t] = total_degree(tr.steps[t].alpha);
  z.descend(0, 0, LaurentPoly(1));
  PartitionFunction out{Series(tr.form, cutoff), z.boundary};
  for (auto& [beta, c] : z.acc) out.series.add_term(beta, RationalV(std::move(c)));
  return out;
}

std::vector<std::vector<int>> k_tuples_for(const MutationTrace& tr, const Multidegree& beta) {
  const std::size_t n = tr.nvars();
  const std::size_t T = tr.length();
  if (beta.size() != n) throw std::invalid_argument("beta: length mismatch");
  if (std::any_of(beta.begin(), beta.end(), [](int x) { return x < 0; })) return {};
  FiberEnumerator f{tr, beta, std::vector<std::vector<bool>>(T + 1, std::vector<bool>(n, false)),
                    std::vector<int>(T, 0), beta, {}};
  for (std::size_t t = T; t-- > 0;)
    for (std::size_t i = 0; i < n; ++i)
      f.covered[t][i] = f.covered[t + 1][i] || tr.steps[t].alpha[i] > 0;
  f.descend(0);
  return f.found;
}

LaurentPoly coefficient(const MutationTrace& tr, std::span<const std::int64_t> r,
                        const Multidegree& beta) {
  check_r(tr, r);
  WeightCache weights;
  LaurentPoly total;
  for (const auto& k : k_tuples_for(tr, beta)) {
    LaurentPoly c(1);
    for (std::size_t t = 0; t < k.size() && !c.is_zero(); ++t) {
      const auto& step = tr.steps[t];
      const auto kvee = step.kvee.evaluate_prefix(std::span<const int>(k.data(), t + 1), r);
      c *= weights.get(k[t], kvee, step.sign);
    }
    total += c;
  }
  return total;
}

}  // namespace qmut
