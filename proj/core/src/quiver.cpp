#include "qmut/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace qmut {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("quiver entry overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("quiver entry overflow");
  return r;
}

int sgn(std::int64_t x) { return (x > 0) - (x < 0); }

std::string describe(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

// Matrix mutation at row k. Entries with both endpoints at or beyond
// `frozen_from` stay zero.
IntMatrix mutate_matrix(const IntMatrix& b, std::size_t k, std::size_t frozen_from) {
  const std::size_t n = b.rows();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else if (i >= frozen_from && j >= frozen_from) {
        out(i, j) = 0;
      } else {
        const std::int64_t path = checked_mul(b(i, k), b(k, j));
        out(i, j) = path > 0 ? checked_add(b(i, j), sgn(b(i, k)) * path) : b(i, j);
      }
    }
  }
  return out;
}

}  // namespace

MixedSignError::MixedSignError(int vertex, std::vector<std::int64_t> cvec)
    : std::runtime_error("c-vector of vertex " + std::to_string(vertex) + " has mixed signs " +
                         describe(cvec)),
      vertex_(vertex),
      cvec_(std::move(cvec)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.front().size() : 0;
  IntMatrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  IntMatrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

bool IntMatrix::is_skew_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> rows(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    rows[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  return rows;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c(i, j) = checked_add(c(i, j), checked_mul(x, b(k, j)));
    }
  return c;
}

Quiver::Quiver(IntMatrix b) : b_(std::move(b)) {
  if (!b_.is_skew_symmetric()) throw QuiverError("B not skew-symmetric");
}

Quiver Quiver::from_arrows(std::size_t n, const std::vector<Arrow>& arrows) {
  IntMatrix b(n, n);
  for (const auto& a : arrows) {
    if (a.from < 1 || a.to < 1 || static_cast<std::size_t>(a.from) > n ||
        static_cast<std::size_t>(a.to) > n)
      throw QuiverError("arrow endpoint out of range: " + std::to_string(a.from) + " -> " +
                        std::to_string(a.to));
    if (a.from == a.to) throw QuiverError("loop at vertex " + std::to_string(a.from));
    if (a.mult < 0) throw QuiverError("negative arrow multiplicity");
    b(a.from - 1, a.to - 1) = checked_add(b(a.from - 1, a.to - 1), a.mult);
    b(a.to - 1, a.from - 1) = checked_add(b(a.to - 1, a.from - 1), -a.mult);
  }
  return Quiver(std::move(b));
}

IceQuiver::IceQuiver(IntMatrix btilde, std::size_t mutable_count)
    : b_(std::move(btilde)), n_(mutable_count) {
  if (!b_.is_skew_symmetric()) throw QuiverError("B~ not skew-symmetric");
  if (n_ > b_.rows()) throw QuiverError("mutable count exceeds vertex count");
  for (std::size_t i = n_; i < b_.rows(); ++i)
    for (std::size_t j = n_; j < b_.rows(); ++j)
      if (b_(i, j) != 0) throw QuiverError("arrow between frozen vertices");
}

Quiver IceQuiver::principal_part() const { return Quiver(b_.block(0, 0, n_, n_)); }

IntMatrix IceQuiver::c_matrix() const { return b_.block(0, n_, n_, frozen_count()); }

IceQuiver framed(const Quiver& q) {
  const std::size_t n = q.size();
  IntMatrix bt(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) bt(i, j) = q.matrix()(i, j);
    bt(i, n + i) = 1;
    bt(n + i, i) = -1;
  }
  return IceQuiver(std::move(bt), n);
}

Quiver mutate(const Quiver& q, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > q.size())
    throw QuiverError("mutation vertex out of range: " + std::to_string(k));
  const auto kk = static_cast<std::size_t>(k - 1);
  return Quiver(mutate_matrix(q.matrix(), kk, q.size()));
}

IceQuiver mutate(const IceQuiver& q, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > q.matrix().rows())
    throw QuiverError("mutation vertex out of range: " + std::to_string(k));
  if (static_cast<std::size_t>(k) > q.mutable_count())
    throw QuiverError("cannot mutate at frozen vertex " + std::to_string(k));
  const auto kk = static_cast<std::size_t>(k - 1);
  return IceQuiver(mutate_matrix(q.matrix(), kk, q.mutable_count()), q.mutable_count());
}

std::vector<std::int64_t> c_vector(const IceQuiver& q, int v) {
  if (v < 1 || static_cast<std::size_t>(v) > q.mutable_count())
    throw QuiverError("c-vector vertex out of range: " + std::to_string(v));
  const std::size_t n = q.mutable_count();
  std::vector<std::int64_t> c(q.frozen_count());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = q.matrix()(static_cast<std::size_t>(v - 1), n + i);
  return c;
}

Sign vertex_sign(const IceQuiver& q, int v) {
  auto c = c_vector(q, v);
  const bool nonneg = std::all_of(c.begin(), c.end(), [](auto x) { return x >= 0; });
  const bool nonpos = std::all_of(c.begin(), c.end(), [](auto x) { return x <= 0; });
  const bool zero = std::all_of(c.begin(), c.end(), [](auto x) { return x == 0; });
  if (zero || (!nonneg && !nonpos)) throw MixedSignError(v, std::move(c));
  return nonneg ? Sign::Plus : Sign::Minus;
}

void validate_sequence(const MutationSequence& m, std::size_t n) {
  for (std::size_t t = 0; t < m.size(); ++t)
    if (m[t] < 1 || static_cast<std::size_t>(m[t]) > n)
      throw QuiverError("sequence entry " + std::to_string(t + 1) + " = " + std::to_string(m[t]) +
                        " outside 1.." + std::to_string(n));
}

std::vector<IceQuiver> framed_orbit(const Quiver& q, const MutationSequence& m) {
  validate_sequence(m, q.size());
  std::vector<IceQuiver> orbit{framed(q)};
  orbit.reserve(m.size() + 1);
  for (int k : m) orbit.push_back(mutate(orbit.back(), k));
  return orbit;
}

Classification classify_sequence(const Quiver& q, const MutationSequence& m) {
  auto orbit = framed_orbit(q, m);
  Classification c;
  c.signs.reserve(m.size());
  for (std::size_t t = 0; t < m.size(); ++t) c.signs.push_back(vertex_sign(orbit[t], m[t]));
  c.is_green = std::all_of(c.signs.begin(), c.signs.end(), [](Sign s) { return s == Sign::Plus; });
  c.is_reddening = true;
  for (std::size_t v = 1; v <= q.size(); ++v)
    if (vertex_sign(orbit.back(), static_cast<int>(v)) != Sign::Minus) c.is_reddening = false;
  c.is_maximal_green = c.is_green && c.is_reddening;
  return c;
}

namespace {

struct IsoSearch {
  const IntMatrix& a;
  const IntMatrix& b;
  std::size_t n;
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::size_t> image;
  std::vector<bool> used;

  bool extend(std::size_t i) {
    if (i == n) return true;
    for (std::size_t j : candidates[i]) {
      if (used[j]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < i && ok; ++p) ok = a(i, p) == b(j, image[p]);
      if (!ok) continue;
      image[i] = j;
      used[j] = true;
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    return false;
  }
};

std::vector<std::int64_t> degree_signature(const IntMatrix& m, std::size_t i, std::size_t n) {
  std::vector<std::int64_t> row(n);
  for (std::size_t j = 0; j < n; ++j) row[j] = m(i, j);
  std::sort(row.begin(), row.end());
  return row;
}

}  // namespace

std::optional<std::vector<int>> frozen_isomorphism(const IceQuiver& a, const IceQuiver& b) {
  if (a.mutable_count() != b.mutable_count() || a.frozen_count() != b.frozen_count())
    throw QuiverError("frozen_isomorphism: size mismatch");
  const std::size_t n = a.mutable_count();
  const std::size_t f = a.frozen_count();
  IsoSearch s{a.matrix(), b.matrix(), n, std::vector<std::vector<std::size_t>>(n),
              std::vector<std::size_t>(n), std::vector<bool>(n, false)};
  for (std::size_t i = 0; i < n; ++i) {
    const auto sig = degree_signature(a.matrix(), i, n);
    for (std::size_t j = 0; j < n; ++j) {
      bool same_frozen = true;
      for (std::size_t l = 0; l < f && same_frozen; ++l)
        same_frozen = a.matrix()(i, n + l) == b.matrix()(j, n + l);
      if (same_frozen && degree_signature(b.matrix(), j, n) == sig) s.candidates[i].push_back(j);
    }
    if (s.candidates[i].empty()) return std::nullopt;
  }
  if (!s.extend(0)) return std::nullopt;
  std::vector<int> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = static_cast<int>(s.image[i] + 1);
  return sigma;
}

IceQuiver permute_mutable(const IceQuiver& q, const std::vector<int>& sigma) {
  const std::size_t n = q.mutable_count();
  const std::size_t total = q.matrix().rows();
  if (sigma.size() != n) throw QuiverError("permutation size mismatch");
  std::vector<std::size_t> map(total);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i] < 1 || static_cast<std::size_t>(sigma[i]) > n || seen[sigma[i] - 1])
      throw QuiverError("not a permutation of the mutable vertices");
    seen[sigma[i] - 1] = true;
    map[i] = static_cast<std::size_t>(sigma[i] - 1);
  }
  for (std::size_t i = n; i < total; ++i) map[i] = i;
  IntMatrix out(total, total);
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j) out(map[i], map[j]) = q.matrix()(i, j);
  return IceQuiver(std::move(out), n);
}

}  // namespace qmut
