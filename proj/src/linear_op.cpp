#include "bgg/linear_op.hpp"

#include <stdexcept>

namespace bgg {

namespace {
const Rational kZero{0};

void check_same_shape(const LinearOp& a, const LinearOp& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch");
}
}  // namespace

LinearOp LinearOp::identity(std::size_t n) {
  LinearOp m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

LinearOp LinearOp::from_columns(std::size_t rows,
                                const std::vector<std::vector<Rational>>& cols) {
  LinearOp m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw std::invalid_argument("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

const Rational& LinearOp::at(std::size_t r, std::size_t c) const {
  auto it = e_.find({r, c});
  return it == e_.end() ? kZero : it->second;
}

void LinearOp::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  if (v == 0)
    e_.erase({r, c});
  else
    e_[{r, c}] = v;
}

void LinearOp::add_to(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  if (v == 0) return;
  auto [it, inserted] = e_.emplace(std::make_pair(r, c), v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) e_.erase(it);
  }
}

LinearOp LinearOp::operator+(const LinearOp& o) const {
  check_same_shape(*this, o);
  LinearOp r(*this);
  for (const auto& [rc, v] : o.e_) r.add_to(rc.first, rc.second, v);
  return r;
}

LinearOp LinearOp::operator-(const LinearOp& o) const {
  check_same_shape(*this, o);
  LinearOp r(*this);
  for (const auto& [rc, v] : o.e_) r.add_to(rc.first, rc.second, -v);
  return r;
}

LinearOp LinearOp::operator-() const {
  LinearOp r(rows_, cols_);
  for (const auto& [rc, v] : e_) r.e_.emplace(rc, -v);
  return r;
}

LinearOp LinearOp::operator*(const LinearOp& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("composition shape mismatch");
  // Group the right factor by row for sparse row-times-entry accumulation.
  LinearOp r(rows_, o.cols_);
  for (const auto& [rc, v] : e_) {
    const auto [i, k] = rc;
    auto it = o.e_.lower_bound({k, 0});
    const auto end = o.e_.lower_bound({k + 1, 0});
    for (; it != end; ++it) r.add_to(i, it->first.second, v * it->second);
  }
  return r;
}

LinearOp LinearOp::operator*(const Rational& c) const {
  LinearOp r(rows_, cols_);
  if (c == 0) return r;
  for (const auto& [rc, v] : e_) r.e_.emplace(rc, v * c);
  return r;
}

bool LinearOp::operator==(const LinearOp& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

LinearOp LinearOp::transpose() const {
  LinearOp r(cols_, rows_);
  for (const auto& [rc, v] : e_) r.e_.emplace(std::make_pair(rc.second, rc.first), v);
  return r;
}

std::vector<Rational> LinearOp::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: size mismatch");
  std::vector<Rational> y(rows_, Rational(0));
  for (const auto& [rc, v] : e_) y[rc.first] += v * x[rc.second];
  return y;
}

std::vector<Poly> LinearOp::apply(const std::vector<Poly>& x, int nvars) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: size mismatch");
  std::vector<Poly> y(rows_, Poly(nvars));
  for (const auto& [rc, v] : e_) {
    if (!x[rc.second].is_zero()) y[rc.first] += x[rc.second] * v;
  }
  return y;
}

std::vector<Rational> LinearOp::column(std::size_t c) const {
  std::vector<Rational> v(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    auto it = e_.find({r, c});
    if (it != e_.end()) v[r] = it->second;
  }
  return v;
}

std::vector<Rational> LinearOp::row(std::size_t r) const {
  std::vector<Rational> v(cols_, Rational(0));
  auto it = e_.lower_bound({r, 0});
  const auto end = e_.lower_bound({r + 1, 0});
  for (; it != end; ++it) v[it->first.second] = it->second;
  return v;
}

void LinearOp::insert_block(std::size_t r0, std::size_t c0, const LinearOp& src) {
  if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_)
    throw std::out_of_range("insert_block out of range");
  for (const auto& [rc, v] : src.e_) set(r0 + rc.first, c0 + rc.second, v);
}

std::string LinearOp::to_string() const {
  std::string s = "[" + std::to_string(rows_) + "x" + std::to_string(cols_) + "]";
  for (const auto& [rc, v] : e_)
    s += " (" + std::to_string(rc.first) + "," + std::to_string(rc.second) +
         ")=" + rational_to_string(v);
  return s;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination.

namespace {

// Dense integer copy: each row scaled by the LCM of its denominators.
// Row scaling preserves rank, kernel and pivot-column structure.
std::vector<std::vector<Int>> integer_rows(const LinearOp& m) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  std::vector<std::vector<Int>> M(m.rows(), std::vector<Int>(m.cols(), Int(0)));
  std::vector<Int> scale(m.rows(), Int(1));
  for (const auto& [rc, v] : m.entries())
    scale[rc.first] = boost::multiprecision::lcm(scale[rc.first], denominator(v));
  for (const auto& [rc, v] : m.entries())
    M[rc.first][rc.second] = numerator(v) * (scale[rc.first] / denominator(v));
  return M;
}

}  // namespace

RankKernelImage rank_kernel_image(const LinearOp& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  auto M = integer_rows(m);

  RankKernelImage out;
  Int prev(1);
  std::size_t pr = 0;  // next pivot row
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t r = pr; r < rows; ++r)
      if (M[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == rows) continue;  // free column
    if (piv != pr) std::swap(M[piv], M[pr]);
    for (std::size_t i = pr + 1; i < rows; ++i) {
      if (M[i][c] == 0) {
        // Still rescale the trailing entries to keep the Bareiss invariant.
        for (std::size_t j = c + 1; j < cols; ++j)
          if (M[i][j] != 0) M[i][j] = M[pr][c] * M[i][j] / prev;
        continue;
      }
      for (std::size_t j = c + 1; j < cols; ++j)
        M[i][j] = (M[pr][c] * M[i][j] - M[i][c] * M[pr][j]) / prev;
      M[i][c] = 0;
    }
    prev = M[pr][c];
    out.pivot_cols.push_back(c);
    ++pr;
  }
  out.rank = pr;

  // Kernel by back-substitution on the echelon form.
  std::vector<bool> is_pivot(cols, false);
  for (auto c : out.pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t ii = out.rank; ii-- > 0;) {
      const std::size_t p = out.pivot_cols[ii];
      Rational acc(0);
      for (std::size_t j = p + 1; j < cols; ++j)
        if (M[ii][j] != 0 && x[j] != 0) acc += Rational(M[ii][j]) * x[j];
      x[p] = -acc / Rational(M[ii][p]);
    }
    out.kernel.push_back(std::move(x));
  }

  out.image.reserve(out.rank);
  for (auto c : out.pivot_cols) out.image.push_back(m.column(c));
  return out;
}

std::size_t rank_of(const LinearOp& m) { return rank_kernel_image(m).rank; }

// ---------------------------------------------------------------------------
// Exact solves (rational Gaussian elimination).

std::optional<LinearOp> solve_exact(const LinearOp& A, const LinearOp& B) {
  if (A.rows() != B.rows()) throw std::invalid_argument("solve_exact: shape mismatch");
  const std::size_t rows = A.rows(), cols = A.cols(), bw = B.cols();
  std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(cols + bw, Rational(0)));
  for (const auto& [rc, v] : A.entries()) M[rc.first][rc.second] = v;
  for (const auto& [rc, v] : B.entries()) M[rc.first][cols + rc.second] = v;

  std::vector<std::size_t> pivot_cols;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t r = pr; r < rows; ++r)
      if (M[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    std::swap(M[piv], M[pr]);
    const Rational inv = Rational(1) / M[pr][c];
    for (std::size_t j = c; j < cols + bw; ++j)
      if (M[pr][j] != 0) M[pr][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr || M[i][c] == 0) continue;
      const Rational f = M[i][c];
      for (std::size_t j = c; j < cols + bw; ++j)
        if (M[pr][j] != 0) M[i][j] -= f * M[pr][j];
    }
    pivot_cols.push_back(c);
    ++pr;
  }
  // Consistency: rows beyond the pivots must have zero right-hand side.
  for (std::size_t i = pr; i < rows; ++i)
    for (std::size_t j = cols; j < cols + bw; ++j)
      if (M[i][j] != 0) return std::nullopt;

  LinearOp X(cols, bw);
  for (std::size_t ii = 0; ii < pivot_cols.size(); ++ii)
    for (std::size_t j = 0; j < bw; ++j)
      if (M[ii][cols + j] != 0) X.set(pivot_cols[ii], j, M[ii][cols + j]);
  return X;
}

LinearOp exact_inverse(const LinearOp& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("exact_inverse: not square");
  auto X = solve_exact(A, LinearOp::identity(A.rows()));
  if (!X || !(A * *X == LinearOp::identity(A.rows())))
    throw std::invalid_argument("exact_inverse: singular matrix");
  return *X;
}

LinearOp pseudo_inverse(const LinearOp& A) {
  const auto rki = rank_kernel_image(A);
  LinearOp pinv(A.cols(), A.rows());
  if (rki.rank == 0) return pinv;
  // Rank factorization A = C F with C the pivot columns of A.
  const LinearOp C = LinearOp::from_columns(A.rows(), rki.image);
  const auto Fopt = solve_exact(C, A);
  if (!Fopt) throw std::logic_error("pseudo_inverse: inconsistent factorization");
  const LinearOp& F = *Fopt;
  const LinearOp Ct = C.transpose(), Ft = F.transpose();
  // A+ = F^T (F F^T)^{-1} (C^T C)^{-1} C^T.
  const LinearOp mid = exact_inverse(F * Ft) * exact_inverse(Ct * C);
  return Ft * mid * Ct;
}

}  // namespace bgg
