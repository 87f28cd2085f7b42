#include "gofinsler/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace gofinsler {

namespace {

void require_nonzero_m(const ReductiveSpace& space, const AlgVector& y, const char* who)
{
  if (!space.in_m(y))
    throw std::invalid_argument(std::string(who) + ": y must lie in m");
  if (y.isZero(0.0))
    throw std::invalid_argument(std::string(who) + ": y must be nonzero");
}

void require_weights(const ReductiveSpace& space, const Eigen::VectorXd& w)
{
  if (w.size() != space.block_count())
    throw std::invalid_argument("geodesic: one block weight per block is required");
  if (!w.allFinite() || (w.array() <= 0.0).any())
    throw std::invalid_argument("geodesic: block weights must be strictly positive");
}

/// Row vector y^T G_C on m-coordinates.
Eigen::VectorXd weighted_covector(const ReductiveSpace& space, const Eigen::VectorXd& weights, const AlgVector& y)
{
  const Eigen::MatrixXd G = space.weighted_gram(std::span<const double>(weights.data(), weights.size()));
  return G * space.to_m_coords(y);
}

} // namespace

Eigen::VectorXd geodesic_residual(const ReductiveSpace& space, const Eigen::VectorXd& block_weights,
                                  const AlgVector& y, const AlgVector& xi)
{
  require_nonzero_m(space, y, "geodesic_residual");
  require_weights(space, block_weights);
  if (!space.in_h(xi))
    throw std::invalid_argument("geodesic_residual: xi must lie in h");
  const LieAlgebra& alg = space.algebra();
  const Eigen::VectorXd gy = weighted_covector(space, block_weights, y);
  const AlgVector w = y + xi;
  Eigen::VectorXd r(space.dim_m());
  for (int a = 0; a < space.dim_m(); ++a)
    r[a] = gy.dot(space.to_m_coords(alg.bracket(w, alg.basis_vector(space.m_indices()[a]))));
  return r;
}

Eigen::VectorXd geodesic_residual(const FinslerMetric& metric, const AlgVector& y, const AlgVector& xi)
{
  require_nonzero_m(metric.space(), y, "geodesic_residual");
  return geodesic_residual(metric.space(), C_coefficients(metric, y).values, y, xi);
}

LinearSystem assemble_system(const ReductiveSpace& space, const Eigen::VectorXd& block_weights, const AlgVector& y)
{
  require_nonzero_m(space, y, "assemble_system");
  require_weights(space, block_weights);
  const LieAlgebra& alg = space.algebra();
  const Eigen::VectorXd gy = weighted_covector(space, block_weights, y);

  LinearSystem sys{Eigen::MatrixXd::Zero(space.dim_m(), space.dim_h()), Eigen::VectorXd::Zero(space.dim_m())};
  for (int a = 0; a < space.dim_m(); ++a) {
    const AlgVector U = alg.basis_vector(space.m_indices()[a]);
    for (int c = 0; c < space.dim_h(); ++c)
      sys.A(a, c) = gy.dot(space.to_m_coords(alg.bracket(alg.basis_vector(space.h_indices()[c]), U)));
    sys.b[a] = -gy.dot(space.to_m_coords(alg.bracket(y, U)));
  }
  return sys;
}

LinearSystem assemble_system(const FinslerMetric& metric, const AlgVector& y)
{
  require_nonzero_m(metric.space(), y, "assemble_system");
  return assemble_system(metric.space(), C_coefficients(metric, y).values, y);
}

GeodesicGraphResult solve_geodesic_graph(const ReductiveSpace& space, const Eigen::VectorXd& block_weights,
                                         const AlgVector& y)
{
  const LinearSystem sys = assemble_system(space, block_weights, y);
  GeodesicGraphResult result;
  result.y = y;

  Eigen::VectorXd xi_h = Eigen::VectorXd::Zero(space.dim_h());
  if (space.dim_h() > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys.A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sigma = svd.singularValues();
    const double cutoff = kRankTol * (sigma.size() > 0 ? sigma[0] : 0.0);
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      if (!(sigma[i] > cutoff) || sigma[i] == 0.0)
        break;
      ++result.rank;
      xi_h += (svd.matrixU().col(i).dot(sys.b) / sigma[i]) * svd.matrixV().col(i);
    }
  }
  result.unique = result.rank == space.dim_h();
  result.xi = space.from_h_coords(xi_h);
  result.residual_norm = geodesic_residual(space, block_weights, y, result.xi).cwiseAbs().maxCoeff();
  return result;
}

GeodesicGraphResult solve_geodesic_graph(const FinslerMetric& metric, const AlgVector& y)
{
  require_nonzero_m(metric.space(), y, "solve_geodesic_graph");
  return solve_geodesic_graph(metric.space(), C_coefficients(metric, y).values, y);
}

GeodesicVectorCheck is_geodesic_vector(const FinslerMetric& metric, const AlgVector& w)
{
  const ReductiveSpace& space = metric.space();
  const LieAlgebra& alg = space.algebra();
  const AlgVector ym = project_m(space, w);
  if (ym.isZero(0.0))
    throw std::invalid_argument("is_geodesic_vector: w has zero m-part");

  const Eigen::VectorXd C = C_coefficients(metric, ym).values;
  const Eigen::VectorXd gy = weighted_covector(space, C, ym);
  GeodesicVectorCheck out;
  for (int a = 0; a < space.dim_m(); ++a) {
    const AlgVector U = alg.basis_vector(space.m_indices()[a]);
    out.residual = std::max(out.residual, std::abs(gy.dot(space.to_m_coords(alg.bracket(w, U)))));
  }
  const double F = F_value(metric, ym);
  out.threshold = kGeodesicVectorTol * F * F * alg.max_structure_constant();
  out.geodesic = out.residual <= out.threshold;
  return out;
}

EquivarianceReport check_equivariance(const FinslerMetric& metric, const AlgVector& y, const AlgVector& h, double t)
{
  const ReductiveSpace& space = metric.space();
  if (!space.in_h(h))
    throw std::invalid_argument("check_equivariance: h must lie in h");
  const Eigen::MatrixXd Ad = adjoint_group_element(space.algebra(), h, t);

  const GeodesicGraphResult base = solve_geodesic_graph(metric, y);
  const AlgVector moved_y = project_m(space, Ad * y);
  const GeodesicGraphResult moved = solve_geodesic_graph(metric, moved_y);

  EquivarianceReport report;
  report.deviation = (moved.xi - project_h(space, Ad * base.xi)).norm();
  report.both_unique = base.unique && moved.unique;
  return report;
}

std::vector<AlgVector> sample_unit_sphere(const ReductiveSpace& space, int n_samples, std::uint64_t seed)
{
  if (n_samples < 1)
    throw std::invalid_argument("sample_unit_sphere: n_samples must be at least 1");
  // y = L^{-T} g / |g| with G = L L^T has y^T G y = 1 and is uniform on the G-sphere.
  const Eigen::LLT<Eigen::MatrixXd> llt(space.base_gram());
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("sample_unit_sphere: base product is not positive definite");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<AlgVector> out;
  out.reserve(n_samples);
  while (static_cast<int>(out.size()) < n_samples) {
    Eigen::VectorXd g(space.dim_m());
    for (auto& v : g)
      v = normal(rng);
    const double len = g.norm();
    if (len < 1e-12)
      continue;
    const Eigen::VectorXd ym = llt.matrixU().solve(g / len);
    out.push_back(space.from_m_coords(ym));
  }
  return out;
}

ScanReport go_property_scan(const FinslerMetric& metric, int n_samples, std::uint64_t seed)
{
  const std::vector<AlgVector> ys = sample_unit_sphere(metric.space(), n_samples, seed);
  std::vector<double> residuals(ys.size());

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<unsigned>({hw, 8u, static_cast<unsigned>(ys.size())});
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < ys.size(); i += workers)
          residuals[i] = solve_geodesic_graph(metric, ys[i]).residual_norm;
      });
  }

  ScanReport report;
  report.samples.reserve(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (i == 0 || residuals[i] > report.max_residual) {
      report.max_residual = residuals[i];
      report.worst_y = ys[i];
    }
    report.samples.push_back({ys[i], residuals[i]});
  }
  return report;
}

Eigen::MatrixXd MatrixRealization::represent(const AlgVector& w) const
{
  if (w.size() != static_cast<Eigen::Index>(generators.size()))
    throw std::invalid_argument("MatrixRealization: vector dimension does not match generator count");
  const auto n = origin.size();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < generators.size(); ++i)
    out += w[static_cast<Eigen::Index>(i)] * generators[i];
  return out;
}

std::vector<Eigen::VectorXd> orbit_curve(const ReductiveSpace& space, const AlgVector& w,
                                         const std::vector<double>& t_values, const MatrixRealization& rep)
{
  if (static_cast<int>(rep.generators.size()) != space.dim() || w.size() != space.dim())
    throw std::invalid_argument("orbit_curve: realization does not match the algebra dimension");
  for (const auto& g : rep.generators)
    if (g.rows() != rep.origin.size() || g.cols() != rep.origin.size())
      throw std::invalid_argument("orbit_curve: generator size does not match the base point");

  const Eigen::MatrixXd rho = rep.represent(w);
  std::vector<Eigen::VectorXd> points;
  points.reserve(t_values.size());
  for (double t : t_values)
    points.push_back(matrix_exponential(rho, t) * rep.origin);
  return points;
}

} // namespace gofinsler
