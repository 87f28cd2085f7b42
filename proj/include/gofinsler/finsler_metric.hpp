#pragma once

#include "gofinsler/homogeneous_space.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gofinsler {

enum class LKind
{
  SumOfSquares, ///< L = sum_j w_j u_j^2
  SquaredSum,   ///< L = (sum_j w_j u_j)^2
  LinearSum,    ///< L = sum_j w_j u_j; degree 1, never a valid combiner
  Custom,
};

/// The k-argument combiner L in F = sqrt(L(sqrt g_1, ..., sqrt g_k)).
///
/// Built-in kinds have closed-form partials. A custom L supplies its own
/// gradient, which is compared against central differences when constructed.
/// Custom callables must be safe to call concurrently.
class LFunction
{
public:
  using ValueFn = std::function<double(const Eigen::VectorXd&)>;
  using GradientFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

  static LFunction sum_of_squares(std::vector<double> weights);
  static LFunction squared_sum(std::vector<double> weights);
  static LFunction linear_sum(std::vector<double> weights);
  static LFunction custom(int arity, ValueFn value, GradientFn gradient);

  int arity() const { return m_arity; }
  LKind kind() const { return m_kind; }
  const std::vector<double>& weights() const { return m_weights; }

  /// "sum_sq", "sq_sum", "sum" or "custom".
  std::string kind_name() const;

  double value(const Eigen::VectorXd& u) const;
  Eigen::VectorXd gradient(const Eigen::VectorXd& u) const;

private:
  LFunction(LKind kind, int arity, std::vector<double> weights);

  LKind m_kind;
  int m_arity;
  std::vector<double> m_weights;
  ValueFn m_value;
  GradientFn m_gradient;
};

struct LCondition
{
  std::string name;
  bool pass = true;
  /// Worst observed quantity for the condition (min value, max deviation, ...).
  double worst = 0.0;
  Eigen::VectorXd witness;
};

/// Conditions (i)-(v) on L for F to be a Minkowski norm, in order:
/// positivity, 2-homogeneity, nonnegative partials, PSD Hessian, positive partial sum.
struct LValidationReport
{
  std::array<LCondition, 5> conditions;
  bool pass = true;
};

inline constexpr double kHomogeneityTol = 1e-10;
inline constexpr double kPartialTol = 1e-12;
inline constexpr double kHessianTol = 1e-8;

/// Samples the open positive orthant (and rays through it) with a seeded generator.
LValidationReport validate_L(const LFunction& L, int sample_count, std::uint64_t seed);

/// F = sqrt(L(sqrt g_1, ..., sqrt g_k)) over a family of positively related metrics.
class FinslerMetric
{
public:
  /// Validates L; throws std::invalid_argument if any condition fails.
  FinslerMetric(MetricFamily family, LFunction L);

  /// Skips validation; the result reports checked() == false.
  static FinslerMetric unchecked(MetricFamily family, LFunction L);

  const MetricFamily& family() const { return m_family; }
  const ReductiveSpace& space() const { return m_family.space(); }
  const LFunction& L() const { return m_L; }
  bool checked() const { return m_checked; }

private:
  FinslerMetric(MetricFamily family, LFunction L, bool validate);

  MetricFamily m_family;
  LFunction m_L;
  bool m_checked;
};

struct CoefficientVector
{
  Eigen::VectorXd values;
  AlgVector at_point;
};

/// (sqrt g_1(y,y), ..., sqrt g_k(y,y)).
Eigen::VectorXd component_norms(const FinslerMetric& metric, const AlgVector& y);

/// y must lie in m exactly (project first).
double F_value(const FinslerMetric& metric, const AlgVector& y);

/// B_j(y) = L_{,j} / (2 sqrt g_j(y,y)).
CoefficientVector B_coefficients(const FinslerMetric& metric, const AlgVector& y);

/// C_i(y) = sum_j B_j(y) a_{ji}.
CoefficientVector C_coefficients(const FinslerMetric& metric, const AlgVector& y);

/// g_y(y, v) = sum_j B_j(y) g_j(y, v).
double fundamental_contraction(const FinslerMetric& metric, const AlgVector& y, const AlgVector& v);

/// g_y(y, v) = sum_i C_i(y) alpha_i(y, v); same value as fundamental_contraction.
double fundamental_contraction_blocks(const FinslerMetric& metric, const AlgVector& y, const AlgVector& v);

/// (1/2) d/dt F^2(y + t v) at t = 0 by central differences.
double fd_fundamental(const FinslerMetric& metric, const AlgVector& y, const AlgVector& v, double step);

} // namespace gofinsler
