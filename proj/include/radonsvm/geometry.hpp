#pragma once

#include <cstddef>
#include <vector>

#include "radonsvm/numerics.hpp"

namespace radonsvm {

struct PointSet {
  std::size_t dim = 0;
  std::vector<Vec> points;

  std::size_t size() const { return points.size(); }
};

/// Throws std::invalid_argument when any point disagrees with the ambient dim.
void validate_point_set(const PointSet& ps);

/// Witness of the constructive Radon partition: coefficients a_i summing to
/// zero with sum a_i x_i = 0, split into the strictly-positive part and the
/// rest, plus the hull intersection point they certify.
struct RadonCertificate {
  std::vector<double> coefficients;
  std::vector<std::size_t> part_one;  // indices with a_i > 0
  std::vector<std::size_t> part_two;  // indices with a_i <= 0
  Vec radon_point;
  double scale = 0.0;  // A = sum of the positive coefficients
  // True when the homogeneous system has a null space of dimension > 1,
  // i.e. the points are not in general position.
  bool degenerate_null_space = false;
};

struct HullWitness {
  bool intersects = false;
  Vec witness;
  std::vector<double> weights_a;  // convex weights over the first hull
  std::vector<double> weights_b;  // convex weights over the second hull
};

struct GeneralPositionReport {
  bool in_general_position = false;
  std::vector<std::size_t> violating_subset;  // nonempty only on failure
};

struct ParallelFlatsReport {
  bool parallel_free = false;
  // On failure, index sets (into the concatenation pos ++ neg) spanning the
  // two flats whose direction spaces share a nonzero vector.
  std::vector<std::size_t> flat_a;
  std::vector<std::size_t> flat_b;
};

/// Radon partition of the first n+2 points of t (the construction reduces to
/// that case). Throws "too few points for Radon's theorem" when |t| < n+2.
RadonCertificate radon_partition(const PointSet& t);

/// Decides conv(a) ∩ conv(b) != {} as a linear feasibility problem over the
/// convex-combination weights; no hull is ever constructed explicitly.
HullWitness hulls_intersect(const PointSet& a, const PointSet& b);

/// Membership p ∈ conv(hull), solved on the translated system
/// sum mu_i (h_i - p) = 0, sum mu_i = 1, mu >= 0. On success weights_b holds
/// the mu and the witness is the reproduced combination.
HullWitness point_in_hull(const Vec& p, const PointSet& hull);

/// True iff no (k+2)-subset lies in a k-flat for any k < dim. On failure the
/// report carries one violating subset.
GeneralPositionReport in_general_position(const PointSet& x);

/// Checks that no two flats spanned by disjoint subsets of pos ++ neg with
/// (|A|-1) + (|B|-1) <= dim have intersecting direction spans. The subset
/// enumeration is exhaustive; exceeding max_pair_checks throws
/// "audit too large" rather than returning a partial verdict.
ParallelFlatsReport flats_parallel_free(const PointSet& pos, const PointSet& neg,
                                        std::size_t max_pair_checks = 1000000);

/// Exhaustive bipartition scan of an (n+2)-point set: true iff exactly one
/// unordered split has intersecting hulls.
bool unique_radon_partition(const PointSet& t);

/// Standard basis vectors e_1..e_k of R^k; the vertices of a regular
/// (k-1)-simplex with side sqrt(2) lying in the flat x_1+...+x_k = 1.
PointSet simplex_vertices(std::size_t k);

/// The same simplex expressed in intrinsic coordinates: k points in R^(k-1),
/// pairwise distances sqrt(2), centroid at the origin.
PointSet embedded_simplex_vertices(std::size_t k);

}  // namespace radonsvm
