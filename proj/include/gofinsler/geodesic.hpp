#pragma once

#include "gofinsler/finsler_metric.hpp"

#include <cstdint>
#include <vector>

namespace gofinsler {

/// Geodesic-vector system for one y in m: rows indexed by the m-basis U_a,
/// columns by the h-basis. A xi_h - b is the geodesic residual.
struct LinearSystem
{
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
};

struct GeodesicGraphResult
{
  AlgVector y;
  /// Supported on h.
  AlgVector xi;
  /// Max-norm of the geodesic residual at (y, xi).
  double residual_norm = 0.0;
  int rank = 0;
  bool unique = false;
};

inline constexpr double kRankTol = 1e-10;
inline constexpr double kGeodesicVectorTol = 1e-9;

// The overloads taking `block_weights` work with the Riemannian metric
// sum_i C_i alpha_i for fixed C. The FinslerMetric overloads evaluate C(y)
// first and delegate; for fixed y both describe the same linear system.

Eigen::VectorXd geodesic_residual(const ReductiveSpace& space, const Eigen::VectorXd& block_weights,
                                  const AlgVector& y, const AlgVector& xi);
Eigen::VectorXd geodesic_residual(const FinslerMetric& metric, const AlgVector& y, const AlgVector& xi);

LinearSystem assemble_system(const ReductiveSpace& space, const Eigen::VectorXd& block_weights, const AlgVector& y);
LinearSystem assemble_system(const FinslerMetric& metric, const AlgVector& y);

/// Minimal-norm least-squares xi; singular values below kRankTol * sigma_max are dropped.
GeodesicGraphResult solve_geodesic_graph(const ReductiveSpace& space, const Eigen::VectorXd& block_weights,
                                         const AlgVector& y);
GeodesicGraphResult solve_geodesic_graph(const FinslerMetric& metric, const AlgVector& y);

struct GeodesicVectorCheck
{
  bool geodesic = false;
  /// max_a |g_{y_m}(y_m, [w, U_a]_m)|
  double residual = 0.0;
  /// Tolerance actually applied: kGeodesicVectorTol * F(y_m)^2 * max |c_ijk|.
  double threshold = 0.0;
};

/// Geodesic lemma test for an arbitrary w in g with nonzero m-part.
GeodesicVectorCheck is_geodesic_vector(const FinslerMetric& metric, const AlgVector& w);

struct EquivarianceReport
{
  /// |xi(Ad y) - Ad xi(y)|
  double deviation = 0.0;
  bool both_unique = false;
};

/// Compares the geodesic graph at Ad(exp(t h)) y with Ad(exp(t h)) applied to xi(y); h in h.
EquivarianceReport check_equivariance(const FinslerMetric& metric, const AlgVector& y, const AlgVector& h, double t);

struct ScanSample
{
  AlgVector y;
  double residual = 0.0;
};

struct ScanReport
{
  double max_residual = 0.0;
  AlgVector worst_y;
  std::vector<ScanSample> samples;
};

/// Unit vectors of the base product sum_i alpha_i, uniformly distributed (normalized Gaussians).
std::vector<AlgVector> sample_unit_sphere(const ReductiveSpace& space, int n_samples, std::uint64_t seed);

/// Solves at n_samples seeded unit vectors; samples are evaluated in parallel and
/// reduced in sample order, so the report does not depend on the thread count.
ScanReport go_property_scan(const FinslerMetric& metric, int n_samples, std::uint64_t seed);

/// Faithful matrix representation of g acting on a vector space, with a base point.
struct MatrixRealization
{
  /// Image of each basis vector of g.
  std::vector<Eigen::MatrixXd> generators;
  Eigen::VectorXd origin;

  Eigen::MatrixXd represent(const AlgVector& w) const;
};

/// Points exp(t rho(w)) origin for each t.
std::vector<Eigen::VectorXd> orbit_curve(const ReductiveSpace& space, const AlgVector& w,
                                         const std::vector<double>& t_values, const MatrixRealization& rep);

} // namespace gofinsler
