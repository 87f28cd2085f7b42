#include "gofinsler/finsler_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace gofinsler {

namespace {

void require_weights(const std::vector<double>& w)
{
  if (w.empty())
    throw std::invalid_argument("LFunction: at least one weight is required");
  for (double x : w)
    if (!std::isfinite(x) || x <= 0.0)
      throw std::invalid_argument("LFunction: weights must be finite and strictly positive");
}

/// Uniform point on the positive part of the unit sphere.
Eigen::VectorXd orthant_sample(int k, std::mt19937_64& rng)
{
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd u(k);
  do {
    for (int j = 0; j < k; ++j)
      u[j] = std::abs(normal(rng));
  } while (u.norm() < 1e-3 || u.minCoeff() < 1e-6);
  return u / u.norm();
}

Eigen::VectorXd fd_gradient(const LFunction::ValueFn& f, const Eigen::VectorXd& u, double h)
{
  Eigen::VectorXd g(u.size());
  for (Eigen::Index j = 0; j < u.size(); ++j) {
    Eigen::VectorXd up = u;
    Eigen::VectorXd dn = u;
    up[j] += h;
    dn[j] -= h;
    g[j] = (f(up) - f(dn)) / (2.0 * h);
  }
  return g;
}

} // namespace

LFunction::LFunction(LKind kind, int arity, std::vector<double> weights)
  : m_kind(kind), m_arity(arity), m_weights(std::move(weights))
{}

LFunction LFunction::sum_of_squares(std::vector<double> weights)
{
  require_weights(weights);
  const int k = static_cast<int>(weights.size());
  return LFunction(LKind::SumOfSquares, k, std::move(weights));
}

LFunction LFunction::squared_sum(std::vector<double> weights)
{
  require_weights(weights);
  const int k = static_cast<int>(weights.size());
  return LFunction(LKind::SquaredSum, k, std::move(weights));
}

LFunction LFunction::linear_sum(std::vector<double> weights)
{
  require_weights(weights);
  const int k = static_cast<int>(weights.size());
  return LFunction(LKind::LinearSum, k, std::move(weights));
}

LFunction LFunction::custom(int arity, ValueFn value, GradientFn gradient)
{
  if (arity < 1)
    throw std::invalid_argument("LFunction: arity must be positive");
  if (!value || !gradient)
    throw std::invalid_argument("LFunction: custom L needs value and gradient callables");

  // Gradient must agree with central differences of the value.
  std::mt19937_64 rng(0x5eedULL);
  constexpr double h = 1e-6;
  for (int s = 0; s < 16; ++s) {
    const Eigen::VectorXd u = orthant_sample(arity, rng);
    const Eigen::VectorXd g = gradient(u);
    if (g.size() != arity)
      throw std::invalid_argument("LFunction: custom gradient has wrong length");
    const Eigen::VectorXd fd = fd_gradient(value, u, h);
    const double scale = std::max({g.cwiseAbs().maxCoeff(), std::abs(value(u)), 1e-300});
    if ((fd - g).cwiseAbs().maxCoeff() > 1e-6 * scale)
      throw std::invalid_argument("LFunction: custom gradient disagrees with finite differences");
  }

  LFunction L(LKind::Custom, arity, {});
  L.m_value = std::move(value);
  L.m_gradient = std::move(gradient);
  return L;
}

std::string LFunction::kind_name() const
{
  switch (m_kind) {
  case LKind::SumOfSquares:
    return "sum_sq";
  case LKind::SquaredSum:
    return "sq_sum";
  case LKind::LinearSum:
    return "sum";
  case LKind::Custom:
    break;
  }
  return "custom";
}

double LFunction::value(const Eigen::VectorXd& u) const
{
  if (u.size() != m_arity)
    throw std::invalid_argument("LFunction: argument count mismatch");
  const Eigen::Map<const Eigen::VectorXd> w(m_weights.data(), static_cast<Eigen::Index>(m_weights.size()));
  switch (m_kind) {
  case LKind::SumOfSquares:
    return w.dot(u.cwiseProduct(u));
  case LKind::SquaredSum: {
    const double s = w.dot(u);
    return s * s;
  }
  case LKind::LinearSum:
    return w.dot(u);
  case LKind::Custom:
    break;
  }
  return m_value(u);
}

Eigen::VectorXd LFunction::gradient(const Eigen::VectorXd& u) const
{
  if (u.size() != m_arity)
    throw std::invalid_argument("LFunction: argument count mismatch");
  const Eigen::Map<const Eigen::VectorXd> w(m_weights.data(), static_cast<Eigen::Index>(m_weights.size()));
  switch (m_kind) {
  case LKind::SumOfSquares:
    return 2.0 * w.cwiseProduct(u);
  case LKind::SquaredSum:
    return 2.0 * w.dot(u) * w;
  case LKind::LinearSum:
    return w;
  case LKind::Custom:
    break;
  }
  return m_gradient(u);
}

LValidationReport validate_L(const LFunction& L, int sample_count, std::uint64_t seed)
{
  if (sample_count < 1)
    throw std::invalid_argument("validate_L: sample_count must be at least 1");
  const int k = L.arity();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ray(0.1, 10.0);

  LValidationReport r;
  r.conditions[0] = {"positive", true, std::numeric_limits<double>::infinity(), {}};
  r.conditions[1] = {"homogeneous_degree_2", true, 0.0, {}};
  r.conditions[2] = {"nonnegative_partials", true, std::numeric_limits<double>::infinity(), {}};
  r.conditions[3] = {"hessian_psd", true, std::numeric_limits<double>::infinity(), {}};
  r.conditions[4] = {"positive_partial_sum", true, std::numeric_limits<double>::infinity(), {}};
  auto& [pos, hom, partial, hess, psum] = r.conditions;

  constexpr double h = 1e-4;

  for (int s = 0; s < sample_count; ++s) {
    const Eigen::VectorXd u = orthant_sample(k, rng);
    const double Lu = L.value(u);

    if (pos.witness.size() == 0 || Lu < pos.worst) {
      pos.worst = Lu;
      pos.witness = u;
    }

    for (double lambda : {0.5, 2.0, 10.0, ray(rng)}) {
      const double expected = lambda * lambda * Lu;
      const double dev = std::abs(L.value(lambda * u) - expected) / std::max(std::abs(expected), 1e-300);
      if (hom.witness.size() == 0 || dev > hom.worst) {
        hom.worst = dev;
        hom.witness = lambda * u;
      }
    }

    const Eigen::VectorXd g = L.gradient(u);
    if (partial.witness.size() == 0 || g.minCoeff() < partial.worst) {
      partial.worst = g.minCoeff();
      partial.witness = u;
    }
    if (psum.witness.size() == 0 || g.sum() < psum.worst) {
      psum.worst = g.sum();
      psum.witness = u;
    }

    // Hessian by central differences of the gradient.
    Eigen::MatrixXd H(k, k);
    for (int j = 0; j < k; ++j) {
      Eigen::VectorXd up = u;
      Eigen::VectorXd dn = u;
      up[j] += h;
      dn[j] -= h;
      H.col(j) = (L.gradient(up) - L.gradient(dn)) / (2.0 * h);
    }
    const Eigen::MatrixXd Hs = 0.5 * (H + H.transpose());
    const double min_eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(Hs, Eigen::EigenvaluesOnly)
                             .eigenvalues()
                             .minCoeff();
    if (hess.witness.size() == 0 || min_eig < hess.worst) {
      hess.worst = min_eig;
      hess.witness = u;
    }
  }

  pos.pass = pos.worst > 0.0;
  hom.pass = hom.worst < kHomogeneityTol;
  partial.pass = partial.worst >= -kPartialTol;
  hess.pass = hess.worst >= -kHessianTol;
  psum.pass = psum.worst > 0.0;
  r.pass = std::all_of(r.conditions.begin(), r.conditions.end(), [](const LCondition& c) { return c.pass; });
  return r;
}

FinslerMetric::FinslerMetric(MetricFamily family, LFunction L) : FinslerMetric(std::move(family), std::move(L), true) {}

FinslerMetric FinslerMetric::unchecked(MetricFamily family, LFunction L)
{
  return FinslerMetric(std::move(family), std::move(L), false);
}

FinslerMetric::FinslerMetric(MetricFamily family, LFunction L, bool validate)
  : m_family(std::move(family)), m_L(std::move(L)), m_checked(validate)
{
  if (m_L.arity() != m_family.k())
    throw std::invalid_argument("FinslerMetric: L arity " + std::to_string(m_L.arity()) +
                                " does not match the number of metrics " + std::to_string(m_family.k()));
  if (validate) {
    const LValidationReport report = validate_L(m_L, 200, 0);
    if (!report.pass) {
      std::string failed;
      for (const auto& c : report.conditions)
        if (!c.pass)
          failed += (failed.empty() ? "" : ", ") + c.name;
      throw std::invalid_argument("FinslerMetric: L fails " + failed);
    }
  }
}

namespace {

Eigen::VectorXd m_coords_in_m(const ReductiveSpace& S, const AlgVector& y, const char* who)
{
  if (!S.in_m(y))
    throw std::invalid_argument(std::string(who) + ": vector must lie in m (project it first)");
  return S.to_m_coords(y);
}

Eigen::VectorXd norms_from_m(const MetricFamily& family, const Eigen::VectorXd& ym)
{
  Eigen::VectorXd out(family.k());
  for (int j = 0; j < family.k(); ++j)
    out[j] = std::sqrt(std::max(0.0, ym.dot(family.grams()[j] * ym)));
  return out;
}

Eigen::VectorXd B_from_m(const FinslerMetric& metric, const Eigen::VectorXd& ym, const char* who)
{
  if (ym.isZero(0.0))
    throw std::invalid_argument(std::string(who) + ": y must be nonzero");
  const Eigen::VectorXd u = norms_from_m(metric.family(), ym);
  return metric.L().gradient(u).cwiseQuotient(2.0 * u);
}

} // namespace

Eigen::VectorXd component_norms(const FinslerMetric& metric, const AlgVector& y)
{
  return norms_from_m(metric.family(), m_coords_in_m(metric.space(), y, "component_norms"));
}

double F_value(const FinslerMetric& metric, const AlgVector& y)
{
  const Eigen::VectorXd ym = m_coords_in_m(metric.space(), y, "F_value");
  if (ym.isZero(0.0))
    return 0.0;
  return std::sqrt(std::max(0.0, metric.L().value(norms_from_m(metric.family(), ym))));
}

CoefficientVector B_coefficients(const FinslerMetric& metric, const AlgVector& y)
{
  const Eigen::VectorXd ym = m_coords_in_m(metric.space(), y, "B_coefficients");
  return {B_from_m(metric, ym, "B_coefficients"), y};
}

CoefficientVector C_coefficients(const FinslerMetric& metric, const AlgVector& y)
{
  const Eigen::VectorXd ym = m_coords_in_m(metric.space(), y, "C_coefficients");
  const Eigen::VectorXd B = B_from_m(metric, ym, "C_coefficients");
  return {metric.family().a().transpose() * B, y};
}

double fundamental_contraction(const FinslerMetric& metric, const AlgVector& y, const AlgVector& v)
{
  const auto& S = metric.space();
  const Eigen::VectorXd ym = m_coords_in_m(S, y, "fundamental_contraction");
  const Eigen::VectorXd vm = m_coords_in_m(S, v, "fundamental_contraction");
  const Eigen::VectorXd B = B_from_m(metric, ym, "fundamental_contraction");
  double out = 0.0;
  for (int j = 0; j < metric.family().k(); ++j)
    out += B[j] * ym.dot(metric.family().grams()[j] * vm);
  return out;
}

double fundamental_contraction_blocks(const FinslerMetric& metric, const AlgVector& y, const AlgVector& v)
{
  const auto& S = metric.space();
  const Eigen::VectorXd ym = m_coords_in_m(S, y, "fundamental_contraction_blocks");
  const Eigen::VectorXd vm = m_coords_in_m(S, v, "fundamental_contraction_blocks");
  const Eigen::VectorXd C = metric.family().a().transpose() * B_from_m(metric, ym, "fundamental_contraction_blocks");
  double out = 0.0;
  for (int b = 0; b < S.block_count(); ++b) {
    const auto off = S.block_offset(b);
    const auto bs = S.alpha(b).rows();
    out += C[b] * ym.segment(off, bs).dot(S.alpha(b) * vm.segment(off, bs));
  }
  return out;
}

double fd_fundamental(const FinslerMetric& metric, const AlgVector& y, const AlgVector& v, double step)
{
  if (!(step > 0.0))
    throw std::invalid_argument("fd_fundamental: step must be positive");
  const Eigen::VectorXd ym = m_coords_in_m(metric.space(), y, "fd_fundamental");
  m_coords_in_m(metric.space(), v, "fd_fundamental");
  if (ym.isZero(0.0))
    throw std::invalid_argument("fd_fundamental: y must be nonzero");
  const double fp = F_value(metric, y + step * v);
  const double fm = F_value(metric, y - step * v);
  return (fp * fp - fm * fm) / (4.0 * step);
}

} // namespace gofinsler
