#pragma once

// Quivers as skew-symmetric integer matrices, matrix mutation, framed (ice)
// quivers, c-vectors and green/red classification.
//
// Vertex arguments and mutation sequences use the labels 1..n. Matrix storage
// is indexed from 0, so vertex v lives in row v - 1.

#include "qmut/qcoeff.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmut {

class QuiverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A c-vector that is neither nonnegative nor nonpositive.
class MixedSignError : public std::runtime_error {
 public:
  MixedSignError(int vertex, std::vector<std::int64_t> cvec);
  int vertex() const noexcept { return vertex_; }
  const std::vector<std::int64_t>& cvector() const noexcept { return cvec_; }

 private:
  int vertex_;
  std::vector<std::int64_t> cvec_;
};

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  bool is_skew_symmetric() const;
  std::vector<std::vector<std::int64_t>> to_rows() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

using MutationSequence = std::vector<int>;

/// Arrow i -> j with multiplicity, vertices labelled from 1.
struct Arrow {
  int from;
  int to;
  std::int64_t mult = 1;
};

class Quiver {
 public:
  Quiver() = default;
  /// Throws QuiverError unless b is square and skew-symmetric.
  explicit Quiver(IntMatrix b);
  /// B_ij = Q_ij - Q_ji. Rejects loops and out-of-range endpoints.
  static Quiver from_arrows(std::size_t n, const std::vector<Arrow>& arrows);

  std::size_t size() const noexcept { return b_.rows(); }
  const IntMatrix& matrix() const noexcept { return b_; }
  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  IntMatrix b_;
};

/// Quiver with frozen vertices ordered after the mutable ones:
/// (1..n, 1'..f'). Arrows between frozen vertices are never present.
class IceQuiver {
 public:
  IceQuiver() = default;
  IceQuiver(IntMatrix btilde, std::size_t mutable_count);

  std::size_t mutable_count() const noexcept { return n_; }
  std::size_t frozen_count() const noexcept { return b_.rows() - n_; }
  const IntMatrix& matrix() const noexcept { return b_; }
  /// B(t): the mutable-mutable block.
  Quiver principal_part() const;
  /// C(t): the mutable-frozen block, one c-vector per row.
  IntMatrix c_matrix() const;
  friend bool operator==(const IceQuiver&, const IceQuiver&) = default;

 private:
  IntMatrix b_;
  std::size_t n_ = 0;
};

/// Q^: one frozen vertex i' per vertex with a single arrow i -> i'.
IceQuiver framed(const Quiver& q);

Quiver mutate(const Quiver& q, int k);
/// Throws QuiverError when k is frozen or out of range.
IceQuiver mutate(const IceQuiver& q, int k);

/// Row v of the c-matrix.
std::vector<std::int64_t> c_vector(const IceQuiver& q, int v);
/// +1 when c_v is nonnegative (green), -1 when nonpositive (red).
Sign vertex_sign(const IceQuiver& q, int v);

/// Throws QuiverError if any vertex label is outside 1..n.
void validate_sequence(const MutationSequence& m, std::size_t n);

/// Q~(0) = Q^, Q~(1), ..., Q~(T).
std::vector<IceQuiver> framed_orbit(const Quiver& q, const MutationSequence& m);

struct Classification {
  std::vector<Sign> signs;
  bool is_green = false;
  bool is_reddening = false;
  bool is_maximal_green = false;
};

Classification classify_sequence(const Quiver& q, const MutationSequence& m);

/// Permutation sigma of the mutable vertices (frozen ones fixed) with
/// b(sigma(i), sigma(j)) = a(i, j). sigma[i - 1] is the image of vertex i.
/// Returns the lexicographically smallest one, or nullopt.
std::optional<std::vector<int>> frozen_isomorphism(const IceQuiver& a, const IceQuiver& b);

/// Relabels mutable vertex i as sigma[i - 1].
IceQuiver permute_mutable(const IceQuiver& q, const std::vector<int>& sigma);

}  // namespace qmut
