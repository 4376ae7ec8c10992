#include "radonsvm/radon_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "radonsvm/rng.hpp"

namespace radonsvm {

namespace {

constexpr double kKktGate = 1e-8;

PointSet projected_class_svs(const SvmSolution& s, const LabeledPointSet& d,
                             const std::vector<std::size_t>& sv_set, int label) {
  PointSet ps{d.dim, {}};
  for (std::size_t idx : sv_set)
    if (d.labels[idx] == label)
      ps.points.push_back(project_onto_hyperplane(d.points[idx], s.w, s.b));
  return ps;
}

Matrix direction_rows(const PointSet& ps) {
  if (ps.size() < 2) return Matrix(0, ps.dim);
  Matrix m(ps.size() - 1, ps.dim);
  for (std::size_t i = 1; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.dim; ++j)
      m(i - 1, j) = ps.points[i][j] - ps.points[0][j];
  return m;
}

Matrix stack_rows(const Matrix& a, const Matrix& b) {
  Matrix s(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, j) = b(i, j);
  return s;
}

// Condition (ii) certificate: the columns (y_i x_i; y_i) over the
// dual-positive support vectors must be linearly independent (tolerance 1e-8).
bool dual_representation_unique(const LabeledPointSet& d,
                                const std::vector<std::size_t>& dual_set) {
  if (dual_set.empty()) return true;
  Matrix m(d.dim + 1, dual_set.size());
  for (std::size_t c = 0; c < dual_set.size(); ++c) {
    std::size_t idx = dual_set[c];
    for (std::size_t r = 0; r < d.dim; ++r) m(r, c) = d.labels[idx] * d.points[idx][r];
    m(d.dim, c) = d.labels[idx];
  }
  return rank(m, 1e-8) == dual_set.size();
}

}  // namespace

Vec radon_point_from_duals(const SvmSolution& s, const LabeledPointSet& d) {
  validate_labeled_set(d);
  KktReport rep = kkt_check(s, d);
  if (!rep.passes(kKktGate)) throw std::runtime_error("not an SVM solution");

  double c = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.labels[i] > 0) c += s.alphas[i];
  if (c <= 0.0) throw std::runtime_error("not an SVM solution");

  Vec pos_bary(d.dim, 0.0), neg_bary(d.dim, 0.0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    double wgt = s.alphas[i] / c;
    Vec& target = d.labels[i] > 0 ? pos_bary : neg_bary;
    for (std::size_t j = 0; j < d.dim; ++j) target[j] += wgt * d.points[i][j];
  }
  Vec p = project_onto_hyperplane(pos_bary, s.w, s.b);
  Vec q = project_onto_hyperplane(neg_bary, s.w, s.b);
  if (norm(subtract(p, q)) > 1e-8 * (1.0 + norm(p)))
    throw std::runtime_error("projected class barycenters disagree");

  SupportSets sets = support_vectors(s, d);
  PointSet pos_proj = projected_class_svs(s, d, sets.margin_set, 1);
  PointSet neg_proj = projected_class_svs(s, d, sets.margin_set, -1);
  if (!point_in_hull(p, pos_proj).intersects || !point_in_hull(p, neg_proj).intersects)
    throw std::runtime_error("radon point escapes a projected support hull");
  return p;
}

bool verify_unique_radon_point(const SvmSolution& s, const LabeledPointSet& d, double tau) {
  SupportSets sets = support_vectors(s, d, tau);
  PointSet pos_proj = projected_class_svs(s, d, sets.margin_set, 1);
  PointSet neg_proj = projected_class_svs(s, d, sets.margin_set, -1);
  Matrix da = direction_rows(pos_proj);
  Matrix db = direction_rows(neg_proj);
  return rank(da) + rank(db) == rank(stack_rows(da, db));
}

ConfigurationReport classify_configuration(const SvmSolution& s, const LabeledPointSet& d,
                                           double tau) {
  validate_labeled_set(d);
  ConfigurationReport rep;
  SupportSets sets = support_vectors(s, d, tau);
  for (std::size_t idx : sets.margin_set)
    (d.labels[idx] > 0 ? rep.n_pos_sv : rep.n_neg_sv) += 1;
  if (sets.degenerate)
    rep.degeneracy_flags.push_back("margin-criterion and dual-criterion support sets differ");

  KktReport kkt = kkt_check(s, d);
  if (kkt.passes(kKktGate)) {
    try {
      rep.radon_point = radon_point_from_duals(s, d);
      rep.hulls_intersect = true;
    } catch (const std::runtime_error& e) {
      rep.degeneracy_flags.push_back(e.what());
    }
  } else {
    rep.degeneracy_flags.push_back("KKT residuals above 1e-8; dual-derived Radon point skipped");
    PointSet pos_proj = projected_class_svs(s, d, sets.margin_set, 1);
    PointSet neg_proj = projected_class_svs(s, d, sets.margin_set, -1);
    if (pos_proj.size() > 0 && neg_proj.size() > 0) {
      HullWitness hw = hulls_intersect(pos_proj, neg_proj);
      rep.hulls_intersect = hw.intersects;
      if (hw.intersects) rep.radon_point = hw.witness;
    }
  }

  rep.unique_point = verify_unique_radon_point(s, d, tau);

  PointSet pos_svs{d.dim, {}}, neg_svs{d.dim, {}};
  for (std::size_t idx : sets.margin_set)
    (d.labels[idx] > 0 ? pos_svs : neg_svs).points.push_back(d.points[idx]);
  rep.strong_gp_condition_i = flats_parallel_free(pos_svs, neg_svs).parallel_free;
  rep.strong_gp_condition_ii = dual_representation_unique(d, sets.dual_set);

  rep.exceeds_bound = rep.n_pos_sv + rep.n_neg_sv > d.dim + 1;
  if (rep.exceeds_bound) {
    rep.degeneracy_flags.push_back("support count exceeds the dim+1 bound");
    if (rep.strong_gp_condition_i && rep.strong_gp_condition_ii)
      rep.degeneracy_flags.push_back(
          "bound exceeded with both strong-general-position conditions intact: "
          "insufficient solver precision suspected");
  }
  return rep;
}

StabilityReport perturbation_stability(const LabeledPointSet& d, double eps,
                                       std::size_t trials, std::uint64_t seed) {
  validate_labeled_set(d);
  if (eps < 0.0) throw std::invalid_argument("eps must be nonnegative");

  StabilityReport rep;
  SvmSolution base = train_hard_margin(d);
  rep.baseline_set = base.support_indices;

  for (std::size_t t = 0; t < trials; ++t) {
    SplitMix64 rng = SplitMix64::stream(seed, t);
    LabeledPointSet shifted = d;
    for (Vec& p : shifted.points) {
      Vec delta = rng.next_in_ball(d.dim, eps);
      for (std::size_t j = 0; j < d.dim; ++j) p[j] += delta[j];
    }
    if (!is_linearly_separable(shifted)) {
      rep.has_counterexample = true;
      rep.failing_trial = t;
      rep.reason = "perturbed instance is not linearly separable";
      return rep;
    }
    SvmSolution sol = train_hard_margin(shifted);
    if (sol.support_indices != rep.baseline_set) {
      rep.has_counterexample = true;
      rep.failing_trial = t;
      rep.reason = "support-vector index set changed";
      rep.observed_set = sol.support_indices;
      return rep;
    }
  }
  rep.stable = true;
  return rep;
}

ShatterReport shatter_check(const PointSet& p) {
  validate_point_set(p);
  const std::size_t m = p.size();
  if (m > 20) throw std::runtime_error("shatter guard exceeded (more than 20 points)");
  if (m == 0) return {true, {}};

  auto separable_with = [&](const std::vector<int>& labels) {
    bool pos = false, neg = false;
    for (int y : labels) (y > 0 ? pos : neg) = true;
    if (!pos || !neg) return true;  // one-sided labelings are trivially realizable
    LabeledPointSet d{p.dim, p.points, labels};
    return is_linearly_separable(d);
  };

  // With dim+2 or more points a Radon labeling is unrealizable outright.
  if (m >= p.dim + 2) {
    RadonCertificate cert = radon_partition(p);
    std::vector<int> labels(m, -1);
    for (std::size_t idx : cert.part_one) labels[idx] = 1;
    if (!separable_with(labels)) return {false, labels};
  }

  const std::size_t total = std::size_t{1} << m;
  for (std::size_t i = 1; i < total; ++i) {
    std::size_t gray = i ^ (i >> 1);
    std::vector<int> labels(m);
    for (std::size_t j = 0; j < m; ++j) labels[j] = (gray >> j) & 1 ? 1 : -1;
    if (!separable_with(labels)) return {false, labels};
  }
  return {true, {}};
}

PrecisionAuditRecord precision_audit(const SvmSolution& s, const LabeledPointSet& d, double tau) {
  validate_labeled_set(d);
  PrecisionAuditRecord rec;
  rec.bound = d.dim + 1;

  KktReport kkt = kkt_check(s, d);
  double amax = 0.0;
  for (double a : s.alphas) amax = std::max(amax, a);
  double achieved = std::max({s.achieved_gap, kkt.worst_primal_violation,
                              kkt.complementary_slackness_worst / (1.0 + amax)});
  rec.effective_tau = std::max(tau, 10.0 * achieved);

  SupportSets sets = support_vectors(s, d, rec.effective_tau);
  rec.support_count = sets.margin_set.size();
  if (rec.support_count <= rec.bound) {
    rec.cause = PrecisionCause::none;
    rec.detail = "support count within the dim+1 bound";
    return rec;
  }

  PointSet pos_svs{d.dim, {}}, neg_svs{d.dim, {}};
  for (std::size_t idx : sets.margin_set)
    (d.labels[idx] > 0 ? pos_svs : neg_svs).points.push_back(d.points[idx]);
  if (!flats_parallel_free(pos_svs, neg_svs).parallel_free) {
    rec.cause = PrecisionCause::parallel_flats;
    rec.detail = "disjoint support-vector flats contain parallel directions";
    return rec;
  }
  if (!dual_representation_unique(d, sets.dual_set)) {
    rec.cause = PrecisionCause::rank_deficient_duals;
    rec.detail = "dual representation of w is not unique (rank-deficient active set)";
    return rec;
  }
  rec.cause = PrecisionCause::insufficient_precision;
  rec.recommended_tol = std::max(1e-12, achieved * 1e-4);
  rec.detail = "margin membership cannot be resolved at the achieved precision; retrain tighter";
  return rec;
}

LabeledPointSet simplex_instance(std::size_t n, std::size_t k, std::size_t i) {
  if (k < 2 || k > n + 1) throw std::invalid_argument("simplex_instance requires 2 <= k <= n+1");
  if (i < 1 || i > k - 1) throw std::invalid_argument("simplex_instance requires 1 <= i <= k-1");

  PointSet base = k <= n ? simplex_vertices(k) : embedded_simplex_vertices(k);
  LabeledPointSet d;
  d.dim = n;
  for (std::size_t j = 0; j < k; ++j) {
    Vec p = base.points[j];
    p.resize(n, 0.0);
    d.points.push_back(std::move(p));
    d.labels.push_back(j < i ? 1 : -1);
  }
  return d;
}

}  // namespace radonsvm
