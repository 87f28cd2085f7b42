#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include <cmath>

using namespace gofinsler;
using namespace gofinsler::testing;

namespace {

const LCondition& condition(const LValidationReport& r, const std::string& name)
{
  for (const auto& c : r.conditions)
    if (c.name == name)
      return c;
  throw std::out_of_range(name);
}

LFunction quartic_norm()
{
  return LFunction::custom(
    2, [](const Eigen::VectorXd& u) { return std::sqrt(std::pow(u[0], 4) + std::pow(u[1], 4)); },
    [](const Eigen::VectorXd& u) {
      const double r = std::sqrt(std::pow(u[0], 4) + std::pow(u[1], 4));
      Eigen::VectorXd g(2);
      g << 2.0 * std::pow(u[0], 3) / r, 2.0 * std::pow(u[1], 3) / r;
      return g;
    });
}

// Central difference of L itself, independent of the closed-form gradients.
Eigen::VectorXd fd_gradient(const LFunction& L, const Eigen::VectorXd& u)
{
  Eigen::VectorXd g(u.size());
  for (Eigen::Index j = 0; j < u.size(); ++j) {
    const double h = 1e-6 * std::max(1.0, std::abs(u[j]));
    Eigen::VectorXd p = u, m = u;
    p[j] += h;
    m[j] -= h;
    g[j] = (L.value(p) - L.value(m)) / (2.0 * h);
  }
  return g;
}

FinslerMetric two_metric(const LFunction& L)
{
  return FinslerMetric(s7_family(rows({{1, 1, 1}, {2, 1, 4}})), L);
}

} // namespace

TEST_CASE("validate_L accepts the built-in valid combiners")
{
  for (const auto& L : {LFunction::sum_of_squares({1, 1}), LFunction::sum_of_squares({0.3, 5}),
                        LFunction::squared_sum({1, 1}), LFunction::squared_sum({1, 3}),
                        LFunction::sum_of_squares({2})}) {
    const LValidationReport r = validate_L(L, 300, 7);
    CHECK_MESSAGE(r.pass, L.kind_name());
    for (const auto& c : r.conditions)
      CHECK_MESSAGE(c.pass, c.name);
  }
}

TEST_CASE("validate_L reports condition names in order")
{
  const LValidationReport r = validate_L(LFunction::sum_of_squares({1}), 10, 0);
  CHECK(r.conditions[0].name == "positive");
  CHECK(r.conditions[1].name == "homogeneous_degree_2");
  CHECK(r.conditions[2].name == "nonnegative_partials");
  CHECK(r.conditions[3].name == "hessian_psd");
  CHECK(r.conditions[4].name == "positive_partial_sum");
}

TEST_CASE("the degree-one sum fails homogeneity")
{
  const LValidationReport r = validate_L(LFunction::linear_sum({1, 1}), 100, 0);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(condition(r, "homogeneous_degree_2").pass);
  CHECK(condition(r, "homogeneous_degree_2").worst > 0.1);
  CHECK(condition(r, "homogeneous_degree_2").witness.size() == 2);
}

TEST_CASE("squared sum has a singular but PSD Hessian")
{
  // Hessian of (u1 + 2 u2)^2 is 2 [[1, 2], [2, 4]], eigenvalues 0 and 10.
  const LFunction L = LFunction::squared_sum({1, 2});
  const LValidationReport r = validate_L(L, 200, 3);
  CHECK(condition(r, "hessian_psd").pass);
  CHECK(std::abs(condition(r, "hessian_psd").worst) < 1e-6);

  Eigen::Matrix2d H;
  const Eigen::VectorXd u = vec({0.4, 0.9});
  for (int j = 0; j < 2; ++j) {
    Eigen::VectorXd p = u, m = u;
    p[j] += 1e-5;
    m[j] -= 1e-5;
    H.col(j) = (L.gradient(p) - L.gradient(m)) / 2e-5;
  }
  const Eigen::Vector2d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(H).eigenvalues();
  CHECK(std::abs(ev[0]) < 1e-8);
  CHECK(ev[1] == doctest::Approx(10.0).epsilon(1e-8));
}

TEST_CASE("custom combiners")
{
  CHECK(validate_L(quartic_norm(), 300, 1).pass);

  // u1 u2: homogeneous with nonnegative partials but an indefinite Hessian.
  const LFunction product = LFunction::custom(
    2, [](const Eigen::VectorXd& u) { return u[0] * u[1]; },
    [](const Eigen::VectorXd& u) { return Eigen::VectorXd(vec({u[1], u[0]})); });
  const LValidationReport pr = validate_L(product, 200, 1);
  CHECK_FALSE(condition(pr, "hessian_psd").pass);
  CHECK(condition(pr, "hessian_psd").worst < -0.5);
  CHECK(condition(pr, "homogeneous_degree_2").pass);

  // u1^2 - 0.5 u2^2 can be negative and has a negative partial.
  const LFunction difference = LFunction::custom(
    2, [](const Eigen::VectorXd& u) { return u[0] * u[0] - 0.5 * u[1] * u[1]; },
    [](const Eigen::VectorXd& u) { return Eigen::VectorXd(vec({2 * u[0], -u[1]})); });
  const LValidationReport dr = validate_L(difference, 200, 1);
  CHECK_FALSE(condition(dr, "nonnegative_partials").pass);
  CHECK_FALSE(condition(dr, "positive").pass);

  CHECK_THROWS_AS(LFunction::custom(
                    2, [](const Eigen::VectorXd& u) { return u.squaredNorm(); },
                    [](const Eigen::VectorXd& u) { return Eigen::VectorXd(u); }),
                  std::invalid_argument);
  CHECK_THROWS_AS(LFunction::custom(
                    2, [](const Eigen::VectorXd& u) { return u.squaredNorm(); },
                    [](const Eigen::VectorXd&) { return Eigen::VectorXd::Zero(3).eval(); }),
                  std::invalid_argument);
  CHECK_THROWS_AS(LFunction::custom(0, nullptr, nullptr), std::invalid_argument);
}

TEST_CASE("LFunction argument and weight checks")
{
  CHECK_THROWS_AS(LFunction::sum_of_squares({}), std::invalid_argument);
  CHECK_THROWS_AS(LFunction::squared_sum({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(LFunction::linear_sum({-1}), std::invalid_argument);
  CHECK_THROWS_AS(LFunction::sum_of_squares({1, 1}).value(vec({1})), std::invalid_argument);
  CHECK_THROWS_AS(validate_L(LFunction::sum_of_squares({1}), 0, 0), std::invalid_argument);
  CHECK(LFunction::sum_of_squares({1}).kind_name() == "sum_sq");
  CHECK(LFunction::squared_sum({1}).kind_name() == "sq_sum");
  CHECK(LFunction::linear_sum({1}).kind_name() == "sum");
  CHECK(quartic_norm().kind_name() == "custom");
}

TEST_CASE("FinslerMetric construction")
{
  CHECK(two_metric(LFunction::sum_of_squares({1, 1})).checked());
  CHECK_THROWS_AS(two_metric(LFunction::linear_sum({1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(two_metric(LFunction::sum_of_squares({1, 1, 1})), std::invalid_argument);
  const FinslerMetric raw =
    FinslerMetric::unchecked(s7_family(rows({{1, 1, 1}, {2, 1, 4}})), LFunction::linear_sum({1, 1}));
  CHECK_FALSE(raw.checked());
  CHECK_THROWS_AS(FinslerMetric::unchecked(s7_family(rows({{1, 1, 1}})), LFunction::sum_of_squares({1, 1})),
                  std::invalid_argument);
}

TEST_CASE("F_value examples")
{
  const FinslerMetric F = FinslerMetric(s7_family(rows({{1, 1, 1}, {1, 1, 1}})), LFunction::sum_of_squares({1, 1}));
  CHECK(F_value(F, s7_y({1, 0, 0, 0, 1, 0, 0})) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(F_value(F, s7_y({0, 0, 0, 0, 0, 0, 0})) == 0.0);
  CHECK_THROWS_AS(F_value(F, s7_y({1}) + s7_space().space.algebra().basis_vector(s7::kH1)), std::invalid_argument);

  // k = 1 recovers the Riemannian norm of g_1.
  const FinslerMetric R = FinslerMetric(s7_family(rows({{2, 3, 5}})), LFunction::sum_of_squares({1}));
  const AlgVector y = s7_y({1, 0, 0, 1, 1, 1, 0});
  CHECK(F_value(R, y) == doctest::Approx(std::sqrt(2 + 2 + 3 + 5)).epsilon(1e-15));
  CHECK(component_norms(R, y)[0] == doctest::Approx(std::sqrt(12.0)));

  const FinslerMetric G = two_metric(LFunction::squared_sum({1, 3}));
  std::mt19937_64 rng(4);
  for (int s = 0; s < 50; ++s) {
    const AlgVector v = random_m(s7_space().space, rng);
    for (double lambda : {0.1, 2.0, 37.0})
      CHECK(F_value(G, lambda * v) == doctest::Approx(lambda * F_value(G, v)).epsilon(1e-13));
    CHECK(F_value(G, -v) == doctest::Approx(F_value(G, v)).epsilon(1e-14));
  }
}

TEST_CASE("B coefficients")
{
  const ReductiveSpace& S = s7_space().space;
  std::mt19937_64 rng(5);

  const FinslerMetric sq = two_metric(LFunction::sum_of_squares({0.7, 2.5}));
  for (int s = 0; s < 20; ++s) {
    const AlgVector y = random_m(S, rng);
    const CoefficientVector B = B_coefficients(sq, y);
    CHECK(B.values[0] == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(B.values[1] == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(B.at_point == y);
  }

  const LFunction L = LFunction::squared_sum({1, 3});
  const FinslerMetric ss = two_metric(L);
  for (int s = 0; s < 20; ++s) {
    const AlgVector y = random_m(S, rng);
    const Eigen::VectorXd u = component_norms(ss, y);
    const Eigen::VectorXd expected = fd_gradient(L, u).cwiseQuotient(2.0 * u);
    CHECK((B_coefficients(ss, y).values - expected).cwiseAbs().maxCoeff() < 1e-7 * expected.cwiseAbs().maxCoeff());
  }

  const FinslerMetric one = FinslerMetric(s7_family(rows({{2, 3, 5}})), LFunction::sum_of_squares({1}));
  CHECK(B_coefficients(one, s7_y({0.3, 0, 1, 0, 0, 2, 0})).values[0] == doctest::Approx(1.0));

  CHECK_THROWS_AS(B_coefficients(sq, s7_y({})), std::invalid_argument);
}

TEST_CASE("C coefficients")
{
  const FinslerMetric F = two_metric(LFunction::sum_of_squares({1, 1}));
  const AlgVector y = s7_y({1, 0, 0, 0, 0, 0, 1});
  const Eigen::VectorXd C = C_coefficients(F, y).values;
  CHECK(C[0] == doctest::Approx(3.0));
  CHECK(C[1] == doctest::Approx(2.0));
  CHECK(C[2] == doctest::Approx(5.0));

  // Degree zero in y.
  const FinslerMetric G = two_metric(LFunction::squared_sum({1, 3}));
  std::mt19937_64 rng(6);
  for (int s = 0; s < 30; ++s) {
    const AlgVector v = random_m(s7_space().space, rng);
    const Eigen::VectorXd c1 = C_coefficients(G, v).values;
    const Eigen::VectorXd c2 = C_coefficients(G, 4.5 * v).values;
    CHECK((c1 - c2).cwiseAbs().maxCoeff() < 1e-13 * c1.cwiseAbs().maxCoeff());
    CHECK((c1 - G.family().a().transpose() * B_coefficients(G, v).values).norm() < 1e-13 * c1.norm());
    CHECK(c1.minCoeff() > 0.0);
  }
}

TEST_CASE("fundamental tensor contraction")
{
  const ReductiveSpace& S = s7_space().space;
  std::mt19937_64 rng(7);
  for (const auto& L : {LFunction::sum_of_squares({1, 1}), LFunction::squared_sum({1, 1}),
                        LFunction::squared_sum({1, 3}), quartic_norm()}) {
    const FinslerMetric F = two_metric(L);
    for (int s = 0; s < 50; ++s) {
      const AlgVector y = random_m(S, rng);
      const AlgVector v = random_m(S, rng);
      const double a = fundamental_contraction(F, y, v);
      const double b = fundamental_contraction_blocks(F, y, v);
      const double scale = std::max(std::abs(a), F_value(F, y) * F_value(F, v));
      CHECK(std::abs(a - b) <= 1e-12 * scale);
      CHECK(std::abs(a - fd_fundamental(F, y, v, 1e-4)) <= 1e-6 * scale);
      const double F2 = F_value(F, y) * F_value(F, y);
      CHECK(fundamental_contraction(F, y, y) == doctest::Approx(F2).epsilon(1e-12));
      CHECK(fundamental_contraction(F, y, S.algebra().zero()) == 0.0);
    }
  }
  const FinslerMetric F = two_metric(LFunction::sum_of_squares({1, 1}));
  CHECK_THROWS_AS(fd_fundamental(F, s7_y({1}), s7_y({0, 1}), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(fundamental_contraction(F, s7_y({}), s7_y({0, 1})), std::invalid_argument);
}
