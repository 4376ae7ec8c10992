#pragma once

#include <cstddef>
#include <vector>

namespace radonsvm {

using Vec = std::vector<double>;

/// Dense row-major matrix. Problem sizes in this library stay small (a few
/// dozen rows at most), so everything is stored and factored densely.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double value = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, value) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const;
  double frobenius_norm() const;
  Vec multiply(const Vec& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Relative rank cutoff: pivot magnitudes below tol * (largest pivot) are
/// treated as zero. 1e-10 leaves plenty of double-precision headroom for the
/// dimensions this library targets (n <= 10, a few dozen points).
inline constexpr double kDefaultRankTol = 1e-10;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
Vec add(const Vec& a, const Vec& b);
Vec subtract(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, double s);

/// Numerical rank via Householder QR with column pivoting. Pivot ties are
/// broken by the lowest column index, so the result is deterministic.
std::size_t rank(const Matrix& m, double tol = kDefaultRankTol);

/// Orthonormal basis of the null space of m, computed from the pivoted QR of
/// m^T (the trailing columns of Q). The basis is reproducible bit for bit for
/// identical input and tolerance.
std::vector<Vec> null_space(const Matrix& m, double tol = kDefaultRankTol);

/// Orthogonal projection of x onto the hyperplane {p : w.p + b = 0}.
/// Throws std::invalid_argument("degenerate hyperplane") when w is zero.
Vec project_onto_hyperplane(const Vec& x, const Vec& w, double b);

/// Solves the square system a x = rhs by partially pivoted LU.
/// Throws std::runtime_error("singular system") when a pivot collapses.
Vec solve_linear(const Matrix& a, const Vec& rhs);

}  // namespace radonsvm
