// Sparse exact-rational matrices and the linear algebra used everywhere:
// fraction-free (Bareiss) rank/kernel/image, exact linear solves, and the
// exact Moore-Penrose pseudo-inverse for the standard inner products.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bgg/poly.hpp"
#include "bgg/rational.hpp"

namespace bgg {

class LinearOp {
 public:
  LinearOp() = default;
  LinearOp(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static LinearOp identity(std::size_t n);
  static LinearOp from_columns(std::size_t rows,
                               const std::vector<std::vector<Rational>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Entry (r, c); zero if absent.
  const Rational& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  void add_to(std::size_t r, std::size_t c, const Rational& v);

  LinearOp operator+(const LinearOp& o) const;
  LinearOp operator-(const LinearOp& o) const;
  LinearOp operator-() const;
  /// Composition (matrix product): (*this) * o.
  LinearOp operator*(const LinearOp& o) const;
  LinearOp operator*(const Rational& c) const;
  bool operator==(const LinearOp& o) const;
  bool operator!=(const LinearOp& o) const { return !(*this == o); }

  LinearOp transpose() const;
  bool is_zero() const { return e_.empty(); }

  std::vector<Rational> apply(const std::vector<Rational>& x) const;
  /// Apply a constant-coefficient map to a vector of polynomial coordinates.
  std::vector<Poly> apply(const std::vector<Poly>& x, int nvars) const;

  std::vector<Rational> column(std::size_t c) const;
  std::vector<Rational> row(std::size_t r) const;
  /// Copy src into this matrix with its (0,0) at (r0, c0), overwriting entries.
  void insert_block(std::size_t r0, std::size_t c0, const LinearOp& src);

  const std::map<std::pair<std::size_t, std::size_t>, Rational>& entries() const {
    return e_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rational> e_;
};

struct RankKernelImage {
  std::size_t rank = 0;
  /// Basis of the kernel (each vector has size cols).
  std::vector<std::vector<Rational>> kernel;
  /// Basis of the image: the original matrix columns at the pivot indices.
  std::vector<std::vector<Rational>> image;
  /// Column indices of the pivots, ascending.
  std::vector<std::size_t> pivot_cols;
};

/// Exact rank, kernel basis and image basis via fraction-free elimination.
RankKernelImage rank_kernel_image(const LinearOp& m);
std::size_t rank_of(const LinearOp& m);

/// Solve A X = B exactly. Returns one solution (free variables set to zero),
/// or nullopt when the system is inconsistent.
std::optional<LinearOp> solve_exact(const LinearOp& A, const LinearOp& B);

/// Inverse of a square nonsingular matrix; throws std::invalid_argument otherwise.
LinearOp exact_inverse(const LinearOp& A);

/// Exact Moore-Penrose pseudo-inverse (standard inner products on both sides).
LinearOp pseudo_inverse(const LinearOp& A);

}  // namespace bgg
