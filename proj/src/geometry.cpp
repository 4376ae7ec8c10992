#include "radonsvm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "radonsvm/linprog.hpp"

namespace radonsvm {

void validate_point_set(const PointSet& ps) {
  for (const Vec& p : ps.points)
    if (p.size() != ps.dim) throw std::invalid_argument("point dimension mismatch");
}

namespace {

// Lexicographic enumeration of all size-k index subsets of {0..m-1}.
bool next_combination(std::vector<std::size_t>& c, std::size_t m) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] + (k - i) < m) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

// Rows are the differences of the subset's points against its first point.
Matrix difference_matrix(const std::vector<Vec>& pts, const std::vector<std::size_t>& subset) {
  if (subset.size() < 2) return Matrix(0, pts.empty() ? 0 : pts.front().size());
  Matrix d(subset.size() - 1, pts[subset[0]].size());
  const Vec& base = pts[subset[0]];
  for (std::size_t i = 1; i < subset.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j)
      d(i - 1, j) = pts[subset[i]][j] - base[j];
  return d;
}

Matrix stack_rows(const Matrix& a, const Matrix& b) {
  Matrix s(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, j) = b(i, j);
  return s;
}

}  // namespace

RadonCertificate radon_partition(const PointSet& t) {
  validate_point_set(t);
  const std::size_t n = t.dim;
  const std::size_t k = n + 2;
  if (t.size() < k) throw std::invalid_argument("too few points for Radon's theorem");

  // Homogeneous system: one row per coordinate plus the all-ones row.
  Matrix m(n + 1, k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = t.points[j][i];
    m(n, j) = 1.0;
  }
  std::vector<Vec> basis = null_space(m);
  if (basis.empty()) throw std::runtime_error("radon system has no null vector");

  Vec a = basis.front();
  // Sign convention: the first coefficient of meaningful magnitude is
  // positive, so repeated runs partition identically.
  double amax = 0.0;
  for (double v : a) amax = std::max(amax, std::abs(v));
  for (double v : a) {
    if (std::abs(v) > 1e-12 * amax) {
      if (v < 0.0)
        for (double& w : a) w = -w;
      break;
    }
  }

  RadonCertificate cert;
  cert.coefficients = a;
  cert.degenerate_null_space = basis.size() > 1;
  double pos_sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] > 0.0) {
      cert.part_one.push_back(i);
      pos_sum += a[i];
    } else {
      cert.part_two.push_back(i);
    }
  }
  cert.scale = pos_sum;
  cert.radon_point.assign(n, 0.0);
  for (std::size_t idx : cert.part_one)
    for (std::size_t i = 0; i < n; ++i)
      cert.radon_point[i] += (a[idx] / pos_sum) * t.points[idx][i];
  return cert;
}

HullWitness hulls_intersect(const PointSet& a, const PointSet& b) {
  validate_point_set(a);
  validate_point_set(b);
  if (a.size() == 0 || b.size() == 0)
    throw std::invalid_argument("hulls_intersect: empty point set");
  if (a.dim != b.dim) throw std::invalid_argument("hulls_intersect: dimension mismatch");

  const std::size_t n = a.dim;
  const std::size_t na = a.size(), nb = b.size();
  // Shared centering keeps the matching rows homogeneous and the column
  // entries at the scale of the point spread; the feasible set is unchanged.
  Vec center(n, 0.0);
  for (const Vec& p : a.points)
    for (std::size_t i = 0; i < n; ++i) center[i] += p[i];
  for (const Vec& p : b.points)
    for (std::size_t i = 0; i < n; ++i) center[i] += p[i];
  for (double& c : center) c /= static_cast<double>(na + nb);

  // Feasibility of sum lambda_i a_i = sum mu_j b_j with both sets of weights
  // convex: n matching rows plus the two normalization rows.
  Matrix eq(n + 2, na + nb);
  Vec rhs(n + 2, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < na; ++j) eq(i, j) = a.points[j][i] - center[i];
    for (std::size_t j = 0; j < nb; ++j) eq(i, na + j) = -(b.points[j][i] - center[i]);
  }
  for (std::size_t j = 0; j < na; ++j) eq(n, j) = 1.0;
  for (std::size_t j = 0; j < nb; ++j) eq(n + 1, na + j) = 1.0;
  rhs[n] = 1.0;
  rhs[n + 1] = 1.0;

  PhaseOneResult lp = phase_one_feasible(eq, rhs);
  HullWitness w;
  w.intersects = lp.feasible;
  if (!lp.feasible) return w;

  w.weights_a.assign(lp.x.begin(), lp.x.begin() + na);
  w.weights_b.assign(lp.x.begin() + na, lp.x.end());
  // The simplex solution satisfies the normalizations to LP tolerance only;
  // snap the weights so downstream convexity checks are exact.
  for (auto* ws : {&w.weights_a, &w.weights_b}) {
    double s = 0.0;
    for (double& v : *ws) {
      if (v < 0.0) v = 0.0;
      s += v;
    }
    if (s > 0.0)
      for (double& v : *ws) v /= s;
  }
  w.witness.assign(n, 0.0);
  for (std::size_t j = 0; j < na; ++j)
    for (std::size_t i = 0; i < n; ++i) w.witness[i] += w.weights_a[j] * a.points[j][i];
  return w;
}

HullWitness point_in_hull(const Vec& p, const PointSet& hull) {
  validate_point_set(hull);
  if (hull.size() == 0) throw std::invalid_argument("point_in_hull: empty hull");
  if (p.size() != hull.dim) throw std::invalid_argument("point_in_hull: dimension mismatch");

  const std::size_t n = hull.dim, nh = hull.size();
  Matrix eq(n + 1, nh);
  Vec rhs(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < nh; ++j) eq(i, j) = hull.points[j][i] - p[i];
  for (std::size_t j = 0; j < nh; ++j) eq(n, j) = 1.0;
  rhs[n] = 1.0;

  PhaseOneResult lp = phase_one_feasible(eq, rhs);
  HullWitness w;
  w.intersects = lp.feasible;
  if (!lp.feasible) return w;
  w.weights_b = lp.x;
  double sum = 0.0;
  for (double& v : w.weights_b) {
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (sum > 0.0)
    for (double& v : w.weights_b) v /= sum;
  w.weights_a = {1.0};
  w.witness.assign(n, 0.0);
  for (std::size_t j = 0; j < nh; ++j)
    for (std::size_t i = 0; i < n; ++i) w.witness[i] += w.weights_b[j] * hull.points[j][i];
  return w;
}

GeneralPositionReport in_general_position(const PointSet& x) {
  validate_point_set(x);
  if (x.size() < 2) throw std::invalid_argument("in_general_position: need at least 2 points");
  GeneralPositionReport rep;
  const std::size_t m = x.size();
  const std::size_t max_size = std::min(x.dim + 1, m);
  // A (k+2)-subset inside a k-flat is exactly an affinely dependent subset,
  // so scan sizes 2..n+1 for affine rank defects.
  for (std::size_t s = 2; s <= max_size; ++s) {
    std::vector<std::size_t> c = first_combination(s);
    do {
      Matrix d = difference_matrix(x.points, c);
      if (rank(d) < s - 1) {
        rep.in_general_position = false;
        rep.violating_subset = c;
        return rep;
      }
    } while (next_combination(c, m));
  }
  rep.in_general_position = true;
  return rep;
}

ParallelFlatsReport flats_parallel_free(const PointSet& pos, const PointSet& neg,
                                        std::size_t max_pair_checks) {
  validate_point_set(pos);
  validate_point_set(neg);
  if (pos.dim != neg.dim && pos.size() > 0 && neg.size() > 0)
    throw std::invalid_argument("flats_parallel_free: dimension mismatch");

  const std::size_t n = std::max(pos.dim, neg.dim);
  std::vector<Vec> all = pos.points;
  all.insert(all.end(), neg.points.begin(), neg.points.end());
  const std::size_t m = all.size();

  ParallelFlatsReport rep;
  rep.parallel_free = true;
  if (m < 4 || n < 2) return rep;

  std::size_t checks = 0;
  // Unordered pairs of disjoint subsets; the subset holding the overall
  // smallest index is called A, so each pair is visited once.
  for (std::size_t sa = 2; sa + 1 <= n + 1; ++sa) {
    if (sa > m) break;
    std::vector<std::size_t> ca = first_combination(sa);
    do {
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < m; ++i)
        if (std::find(ca.begin(), ca.end(), i) == ca.end() && i > ca.front())
          rest.push_back(i);
      const std::size_t max_sb = std::min(n + 2 - sa, rest.size());
      for (std::size_t sb = 2; sb <= max_sb; ++sb) {
        std::vector<std::size_t> sel = first_combination(sb);
        do {
          std::vector<std::size_t> cb(sb);
          for (std::size_t i = 0; i < sb; ++i) cb[i] = rest[sel[i]];
          if (++checks > max_pair_checks) throw std::runtime_error("audit too large");
          Matrix da = difference_matrix(all, ca);
          Matrix db = difference_matrix(all, cb);
          std::size_t ra = rank(da), rb = rank(db);
          if (ra + rb != rank(stack_rows(da, db))) {
            rep.parallel_free = false;
            rep.flat_a = ca;
            rep.flat_b = cb;
            return rep;
          }
        } while (next_combination(sel, rest.size()));
      }
    } while (next_combination(ca, m));
  }
  return rep;
}

bool unique_radon_partition(const PointSet& t) {
  validate_point_set(t);
  const std::size_t k = t.dim + 2;
  if (t.size() != k)
    throw std::invalid_argument("unique_radon_partition requires exactly n+2 points");

  std::size_t intersecting = 0;
  // Masks with bit 0 set enumerate each unordered bipartition once.
  const std::size_t full = (std::size_t{1} << k) - 1;
  for (std::size_t mask = 1; mask < full; mask += 2) {
    PointSet a{t.dim, {}}, b{t.dim, {}};
    for (std::size_t i = 0; i < k; ++i)
      ((mask >> i) & 1 ? a : b).points.push_back(t.points[i]);
    if (b.points.empty()) continue;
    if (hulls_intersect(a, b).intersects) {
      if (++intersecting > 1) return false;
    }
  }
  return intersecting == 1;
}

PointSet simplex_vertices(std::size_t k) {
  if (k < 2) throw std::invalid_argument("simplex_vertices requires k >= 2");
  PointSet ps{k, {}};
  for (std::size_t i = 0; i < k; ++i) {
    Vec e(k, 0.0);
    e[i] = 1.0;
    ps.points.push_back(std::move(e));
  }
  return ps;
}

PointSet embedded_simplex_vertices(std::size_t k) {
  PointSet ambient = simplex_vertices(k);
  // Orthonormal basis of the direction space of the flat x_1+...+x_k = 1,
  // taken from the deterministic null-space routine.
  Matrix ones(1, k, 1.0);
  std::vector<Vec> basis = null_space(ones);
  PointSet out{k - 1, {}};
  for (const Vec& v : ambient.points) {
    Vec q(k - 1);
    for (std::size_t l = 0; l < k - 1; ++l) {
      double centered = 0.0;
      for (std::size_t j = 0; j < k; ++j) centered += basis[l][j] * (v[j] - 1.0 / k);
      q[l] = centered;
    }
    out.points.push_back(std::move(q));
  }
  return out;
}

}  // namespace radonsvm
