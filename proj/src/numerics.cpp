#include "radonsvm/numerics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace radonsvm {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

Vec Matrix::multiply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  Vec y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec subtract(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("subtract: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scaled(const Vec& a, double s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

namespace {

struct PivotedQr {
  Matrix q;                       // rows x rows, orthogonal
  Matrix r;                       // rows x cols, upper triangular
  std::vector<std::size_t> perm;  // column j of r is input column perm[j]
};

// Householder QR with column pivoting. The pivot at step k is the remaining
// column with the largest trailing norm; ties go to the lowest column index.
// Trailing norms are recomputed each step rather than downdated, which keeps
// the pivot order exact for these small matrices.
PivotedQr qr_col_pivot(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  PivotedQr f;
  f.q = Matrix::identity(rows);
  f.r = m;
  f.perm.resize(cols);
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});

  const std::size_t steps = rows < cols ? rows : cols;
  Vec v(rows);
  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t pivot = k;
    double best = -1.0;
    for (std::size_t j = k; j < cols; ++j) {
      double s = 0.0;
      for (std::size_t i = k; i < rows; ++i) s += f.r(i, j) * f.r(i, j);
      if (s > best) {
        best = s;
        pivot = j;
      }
    }
    if (pivot != k) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(f.r(i, k), f.r(i, pivot));
      std::swap(f.perm[k], f.perm[pivot]);
    }
    if (best <= 0.0) break;  // remaining block is exactly zero

    double colnorm = std::sqrt(best);
    double head = f.r(k, k);
    double alpha = head >= 0.0 ? -colnorm : colnorm;
    for (std::size_t i = k; i < rows; ++i) v[i] = f.r(i, k);
    v[k] -= alpha;
    double vv = 0.0;
    for (std::size_t i = k; i < rows; ++i) vv += v[i] * v[i];
    if (vv == 0.0) continue;
    double beta = 2.0 / vv;

    for (std::size_t j = k; j < cols; ++j) {
      double s = 0.0;
      for (std::size_t i = k; i < rows; ++i) s += v[i] * f.r(i, j);
      s *= beta;
      for (std::size_t i = k; i < rows; ++i) f.r(i, j) -= s * v[i];
    }
    f.r(k, k) = alpha;
    for (std::size_t i = k + 1; i < rows; ++i) f.r(i, k) = 0.0;

    for (std::size_t i = 0; i < rows; ++i) {
      double s = 0.0;
      for (std::size_t l = k; l < rows; ++l) s += f.q(i, l) * v[l];
      s *= beta;
      for (std::size_t l = k; l < rows; ++l) f.q(i, l) -= s * v[l];
    }
  }
  return f;
}

std::size_t rank_from_diagonal(const Matrix& r, double tol) {
  const std::size_t d = r.rows() < r.cols() ? r.rows() : r.cols();
  double largest = 0.0;
  for (std::size_t k = 0; k < d; ++k) largest = std::max(largest, std::abs(r(k, k)));
  if (largest == 0.0) return 0;
  std::size_t count = 0;
  for (std::size_t k = 0; k < d; ++k)
    if (std::abs(r(k, k)) > tol * largest) ++count;
  return count;
}

}  // namespace

std::size_t rank(const Matrix& m, double tol) {
  if (tol < 0.0) throw std::invalid_argument("rank: negative tolerance");
  if (m.empty()) return 0;
  return rank_from_diagonal(qr_col_pivot(m).r, tol);
}

std::vector<Vec> null_space(const Matrix& m, double tol) {
  if (tol < 0.0) throw std::invalid_argument("null_space: negative tolerance");
  const std::size_t n = m.cols();
  if (n == 0) return {};
  if (m.rows() == 0) {
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < n; ++j) {
      Vec e(n, 0.0);
      e[j] = 1.0;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  // null(m) is the orthogonal complement of the row space, i.e. the trailing
  // columns of Q in the pivoted QR factorization of m^T.
  PivotedQr f = qr_col_pivot(m.transposed());
  std::size_t r = rank_from_diagonal(f.r, tol);
  std::vector<Vec> basis;
  basis.reserve(n - r);
  for (std::size_t j = r; j < n; ++j) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = f.q(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec project_onto_hyperplane(const Vec& x, const Vec& w, double b) {
  if (x.size() != w.size()) throw std::invalid_argument("projection: size mismatch");
  double ww = dot(w, w);
  if (ww == 0.0) throw std::invalid_argument("degenerate hyperplane");
  double t = (dot(w, x) + b) / ww;
  Vec p(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) p[i] = x[i] - t * w[i];
  return p;
}

Vec solve_linear(const Matrix& a, const Vec& rhs) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("solve_linear: matrix not square");
  if (rhs.size() != n) throw std::invalid_argument("solve_linear: rhs size mismatch");
  if (n == 0) return {};

  Matrix lu = a;
  Vec x = rhs;
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(lu(i, j)));
  const double pivot_floor = scale * 1e-14;

  std::vector<std::size_t> rowperm(n);
  std::iota(rowperm.begin(), rowperm.end(), std::size_t{0});
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu(rowperm[k], k));
    for (std::size_t i = k + 1; i < n; ++i) {
      double v = std::abs(lu(rowperm[i], k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best <= pivot_floor) throw std::runtime_error("singular system");
    std::swap(rowperm[k], rowperm[p]);
    const std::size_t rk = rowperm[k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::size_t ri = rowperm[i];
      double factor = lu(ri, k) / lu(rk, k);
      lu(ri, k) = 0.0;
      if (factor == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(ri, j) -= factor * lu(rk, j);
      x[ri] -= factor * x[rk];
    }
  }
  Vec out(n, 0.0);
  for (std::size_t ik = n; ik-- > 0;) {
    const std::size_t rk = rowperm[ik];
    double s = x[rk];
    for (std::size_t j = ik + 1; j < n; ++j) s -= lu(rk, j) * out[j];
    out[ik] = s / lu(rk, ik);
  }
  return out;
}

}  // namespace radonsvm
