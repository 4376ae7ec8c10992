#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "instance_factory.hpp"
#include "radonsvm/rng.hpp"
#include "radonsvm/svm.hpp"

using namespace radonsvm;

namespace {

const LabeledPointSet kPair1d{1, {{-1}, {1}}, {-1, 1}};
const LabeledPointSet kPair2d{2, {{0, 0}, {2, 0}}, {-1, 1}};
// One positive point against a vertical negative pair; all three are support
// vectors with duals (1/4, 1/4, 1/2).
const LabeledPointSet kThreePoint{2, {{0, 1}, {0, -1}, {2, 0}}, {-1, -1, 1}};

void check_matches(const SvmSolution& a, const SvmSolution& b, double tol) {
  REQUIRE(a.w.size() == b.w.size());
  CHECK(norm(subtract(a.w, b.w)) < tol);
  CHECK(std::abs(a.b - b.b) < tol);
}

}  // namespace

TEST_CASE("separability basics") {
  CHECK(is_linearly_separable(LabeledPointSet{2, {{0, 0}, {1, 1}}, {-1, 1}}));

  // Classes on opposite corners of a square: hulls cross at the origin.
  LabeledPointSet square{2, {{3, 3}, {-3, -3}, {-3, 3}, {3, -3}}, {1, 1, -1, -1}};
  CHECK_FALSE(is_linearly_separable(square));

  // A duplicated point across classes is never separable.
  CHECK_FALSE(is_linearly_separable(LabeledPointSet{1, {{2}, {2}, {0}}, {1, -1, -1}}));

  CHECK_THROWS_AS(is_linearly_separable(LabeledPointSet{1, {{0}, {1}}, {1, 1}}),
                  std::invalid_argument);
}

TEST_CASE("separability agrees with hull disjointness") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 1 + rng.next_u64() % 3;
    LabeledPointSet d;
    d.dim = n;
    std::size_t m = 2 + rng.next_u64() % 8;
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < m; ++i) {
      Vec p(n);
      for (double& v : p) v = rng.next_uniform(-1, 1);
      d.points.push_back(std::move(p));
      int y = rng.next_unit() < 0.5 ? -1 : 1;
      (y > 0 ? pos : neg) = true;
      d.labels.push_back(y);
    }
    if (!pos || !neg) continue;
    bool hulls_meet = hulls_intersect(d.class_points(1), d.class_points(-1)).intersects;
    CHECK(is_linearly_separable(d) == !hulls_meet);
  }
}

TEST_CASE("training the symmetric 1-D pair") {
  SvmSolution s = train_hard_margin(kPair1d);
  CHECK(s.w[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(s.b == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(s.margin == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(s.alphas[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(s.alphas[1] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(s.support_indices == std::vector<std::size_t>{0, 1});
}

TEST_CASE("training the perpendicular-bisector pair") {
  SvmSolution s = train_hard_margin(kPair2d);
  CHECK(norm(subtract(s.w, {1, 0})) < 1e-9);
  CHECK(s.b == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(s.margin == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("training the three-point wedge") {
  SvmSolution s = train_hard_margin(kThreePoint);
  CHECK(norm(subtract(s.w, {1, 0})) < 1e-8);
  CHECK(s.b == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK(s.margin == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(s.alphas[0] == doctest::Approx(0.25).epsilon(1e-7));
  CHECK(s.alphas[1] == doctest::Approx(0.25).epsilon(1e-7));
  CHECK(s.alphas[2] == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(s.support_indices == std::vector<std::size_t>{0, 1, 2});

  SvmSolution oracle = brute_force_train(kThreePoint);
  check_matches(s, oracle, 1e-8);
  CHECK(norm(subtract(Vec(s.alphas), Vec(oracle.alphas))) < 1e-7);
}

TEST_CASE("training rejects non-separable input") {
  LabeledPointSet square{2, {{3, 3}, {-3, -3}, {-3, 3}, {3, -3}}, {1, 1, -1, -1}};
  CHECK_THROWS_WITH_AS(train_hard_margin(square), "not linearly separable", std::runtime_error);
}

TEST_CASE("iteration budget error carries the best iterate") {
  SplitMix64 rng(7);
  LabeledPointSet d = testgen::separable_gaussians(rng, 2, 6, 6, 10.0);
  try {
    train_hard_margin(d, 1e-10, 2);
    FAIL("expected TrainingBudgetError");
  } catch (const TrainingBudgetError& e) {
    CHECK(e.best.alphas.size() == d.size());
    CHECK(e.report.constraint_values.size() == d.size());
  }
}

TEST_CASE("brute force agrees on the pinned instances") {
  check_matches(brute_force_train(kPair1d), train_hard_margin(kPair1d), 1e-9);
  check_matches(brute_force_train(kPair2d), train_hard_margin(kPair2d), 1e-9);

  LabeledPointSet big{1, std::vector<Vec>(26, Vec{0.0}), std::vector<int>(26, 1)};
  for (std::size_t i = 0; i < 26; ++i) big.points[i][0] = double(i);
  big.labels[0] = -1;
  CHECK_THROWS_AS(brute_force_train(big), std::runtime_error);
}

TEST_CASE("oracle equivalence on random instances") {
  SplitMix64 rng(55);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t m_pos = 1 + rng.next_u64() % 5;
      std::size_t m_neg = 1 + rng.next_u64() % 5;
      LabeledPointSet d = testgen::separable_gaussians(rng, n, m_pos, m_neg, 8.0);
      SvmSolution smo = train_hard_margin(d);
      SvmSolution oracle = brute_force_train(d);
      check_matches(smo, oracle, 1e-6);
    }
  }
}

TEST_CASE("margin, duality, and invariance properties") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + rng.next_u64() % 3;
    LabeledPointSet d = testgen::separable_gaussians(rng, n, 2 + rng.next_u64() % 4,
                                                     2 + rng.next_u64() % 4, 7.0);
    SvmSolution s = train_hard_margin(d);

    // Minimum geometric distance is 1/||w|| on both sides.
    double wn = norm(s.w);
    double min_pos = 1e300, min_neg = 1e300;
    for (std::size_t i = 0; i < d.size(); ++i) {
      double dist = std::abs(dot(s.w, d.points[i]) + s.b) / wn;
      double& slot = d.labels[i] > 0 ? min_pos : min_neg;
      slot = std::min(slot, dist);
    }
    CHECK(min_pos == doctest::Approx(1.0 / wn).epsilon(1e-9));
    CHECK(min_neg == doctest::Approx(1.0 / wn).epsilon(1e-9));

    // Strong duality: sum alpha equals ||w||^2 at the optimum.
    double asum = 0.0;
    for (double a : s.alphas) asum += a;
    CHECK(std::abs(asum - wn * wn) < 1e-8 * (1.0 + wn * wn));

    // Scaling by c scales w by 1/c and the margin by c.
    double c = 2.5;
    LabeledPointSet scaled_d = d;
    for (Vec& p : scaled_d.points)
      for (double& v : p) v *= c;
    SvmSolution sc = train_hard_margin(scaled_d);
    CHECK(norm(subtract(sc.w, scaled(s.w, 1.0 / c))) < 1e-6);
    CHECK(sc.margin == doctest::Approx(c * s.margin).epsilon(1e-6));
    CHECK(sc.support_indices == s.support_indices);

    // Translation leaves w and the support set alone.
    Vec shift(n);
    for (double& v : shift) v = rng.next_uniform(-5, 5);
    LabeledPointSet shifted = d;
    for (Vec& p : shifted.points)
      for (std::size_t j = 0; j < n; ++j) p[j] += shift[j];
    SvmSolution st = train_hard_margin(shifted);
    CHECK(norm(subtract(st.w, s.w)) < 1e-6);
    CHECK(st.support_indices == s.support_indices);
  }
}

TEST_CASE("support vector reporting and the degenerate margin point") {
  SvmSolution s = train_hard_margin(kPair1d);
  SupportSets sets = support_vectors(s, kPair1d);
  CHECK(sets.margin_set == std::vector<std::size_t>{0, 1});
  CHECK(sets.dual_set == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(sets.degenerate);

  s = train_hard_margin(kThreePoint);
  sets = support_vectors(s, kThreePoint);
  CHECK(sets.margin_set == std::vector<std::size_t>{0, 1, 2});
  CHECK(sets.dual_set == std::vector<std::size_t>{0, 1, 2});

  // One positive point against three negatives, the middle one on the margin
  // without being needed: w is representable with or without it, so the dual
  // optimum is a whole face. The oracle settles on the minimal subset, which
  // leaves the redundant point at alpha = 0 and trips the mismatch flag.
  LabeledPointSet redundant{2, {{-1, 0}, {1, 1}, {1, -1}, {1, 0}}, {1, -1, -1, -1}};
  SvmSolution oracle = brute_force_train(redundant);
  sets = support_vectors(oracle, redundant);
  CHECK(sets.margin_set == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(std::includes(sets.margin_set.begin(), sets.margin_set.end(), sets.dual_set.begin(),
                      sets.dual_set.end()));
  CHECK(sets.dual_set.size() < sets.margin_set.size());
  CHECK(sets.degenerate);

  // The iterative trainer may stop anywhere on that face, but the margin set
  // is the same and the solution agrees with the oracle.
  s = train_hard_margin(redundant);
  CHECK(norm(subtract(s.w, oracle.w)) < 1e-8);
  CHECK(support_vectors(s, redundant).margin_set == sets.margin_set);
}

TEST_CASE("kkt report on the oracle three-point solution") {
  SvmSolution s = brute_force_train(kThreePoint);
  KktReport rep = kkt_check(s, kThreePoint);
  CHECK(rep.stationarity_residual <= 1e-10);
  CHECK(rep.balance_residual <= 1e-10);
  CHECK(rep.worst_primal_violation <= 1e-10);
  CHECK(rep.complementary_slackness_worst <= 1e-10);
  CHECK(rep.passes(1e-8));

  // Nudging w along e1 moves exactly the stationarity residual.
  SvmSolution bent = s;
  bent.w[0] += 0.1;
  KktReport bent_rep = kkt_check(bent, kThreePoint);
  CHECK(bent_rep.stationarity_residual == doctest::Approx(0.1).epsilon(1e-9));
  CHECK_FALSE(bent_rep.passes(1e-8));
}

TEST_CASE("kkt report rejects a wide-pair hyperplane that pinches other points") {
  // Canonical w.r.t. the far pair (4,2)/(-2,2); the near points then sit
  // inside the margin band, so this cannot be an optimum.
  LabeledPointSet d{2, {{2, 0}, {4, 2}, {0, 0}, {-2, 2}}, {1, 1, -1, -1}};
  SvmSolution claimed;
  claimed.w = {1.0 / 3.0, 0.0};
  claimed.b = -1.0 / 3.0;
  claimed.alphas = {0.0, 1.0 / 18.0, 0.0, 1.0 / 18.0};
  claimed.margin = 2.0 / norm(claimed.w);
  KktReport rep = kkt_check(claimed, d);
  CHECK(rep.worst_primal_violation == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK_FALSE(rep.passes(1e-8));
}
