#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

using namespace gofinsler;
using namespace gofinsler::testing;

namespace {

LieAlgebra so3()
{
  return LieAlgebra({"e1", "e2", "e3"}, {{0, 1, {{2, 1.0}}}, {1, 2, {{0, 1.0}}}, {0, 2, {{1, -1.0}}}});
}

const LieAlgebra& s7_alg()
{
  return s7_space().space.algebra();
}

} // namespace

TEST_CASE("construction completes the table by antisymmetry")
{
  const LieAlgebra g = so3();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(g.structure(i, j, k) == -g.structure(j, i, k));
  CHECK(g.structure(1, 0, 2) == -1.0);
  CHECK(g.index_of("e2") == 1);
  CHECK(g.index_of("nope") == -1);
}

TEST_CASE("construction rejects malformed tables")
{
  CHECK_THROWS_AS(LieAlgebra({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, {{1, 0, {{0, 1.0}}}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, {{0, 0, {{0, 1.0}}}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, {{0, 1, {{2, 1.0}}}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, {{0, 1, {{0, 1.0}}}, {0, 1, {{1, 1.0}}}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, {{0, 1, {{0, NAN}}}}), std::invalid_argument);
}

TEST_CASE("bracket on the S7 algebra")
{
  const LieAlgebra& g = s7_alg();
  const AlgVector X1 = g.basis_vector(s7::kX1);

  CHECK(g.bracket(X1, X1).isZero(0.0));
  CHECK(g.bracket(g.basis_vector(s7::kH1), X1) == g.basis_vector(1));
  CHECK(g.bracket(g.basis_vector(s7::kZ1), g.basis_vector(s7::kZ2)) == 2.0 * g.basis_vector(s7::kZ3));

  CHECK_THROWS_AS(g.bracket(X1, AlgVector::Zero(3)), std::invalid_argument);
}

TEST_CASE("bracket is bilinear and antisymmetric")
{
  const LieAlgebra& g = s7_alg();
  std::mt19937_64 rng(1);
  for (int s = 0; s < 50; ++s) {
    const AlgVector a = gaussian(11, rng);
    const AlgVector b = gaussian(11, rng);
    const AlgVector c = gaussian(11, rng);
    CHECK((g.bracket(a, b) + g.bracket(b, a)).norm() < 1e-13);
    CHECK((g.bracket(2.0 * a + c, b) - 2.0 * g.bracket(a, b) - g.bracket(c, b)).norm() < 1e-12);
  }
}

TEST_CASE("ad operator")
{
  const LieAlgebra& g = s7_alg();
  CHECK(g.ad(g.zero()).isZero(0.0));

  // Columns are brackets with basis vectors.
  const AlgVector H1 = g.basis_vector(s7::kH1);
  const Eigen::MatrixXd ad = g.ad(H1);
  for (int j = 0; j < g.dim(); ++j)
    CHECK(ad.col(j) == g.bracket(H1, g.basis_vector(j)));

  // Restricted to the m-columns: A12 + A34.
  CHECK(s7::ad_on_m(s7_space().space, H1) == s7::elementary_A(1, 2) + s7::elementary_A(3, 4));

  std::mt19937_64 rng(2);
  for (int s = 0; s < 20; ++s) {
    const AlgVector x = gaussian(11, rng);
    const AlgVector y = gaussian(11, rng);
    CHECK((g.ad(x) * y + g.ad(y) * x).norm() < 1e-13);
  }
}

TEST_CASE("check_jacobi")
{
  const JacobiReport s7r = check_jacobi(s7_alg(), 1e-12);
  CHECK(s7r.pass);
  CHECK(s7r.max_violation < 1e-12);

  const LieAlgebra abelian({"a", "b", "c", "d"}, {});
  const JacobiReport ab = check_jacobi(abelian, 1e-12);
  CHECK(ab.pass);
  CHECK(ab.max_violation == 0.0);

  CHECK(check_jacobi(so3(), 1e-12).pass);

  // c[1][2][3] += 0.1 on the S7 table.
  auto entries = s7_alg().upper_brackets();
  bool found = false;
  for (auto& e : entries)
    if (e.i == 1 && e.j == 2) {
      e.coeffs[3] += 0.1;
      found = true;
    }
  if (!found)
    entries.push_back({1, 2, {{3, 0.1}}});
  const LieAlgebra perturbed(s7_alg().labels(), entries);
  const JacobiReport bad = check_jacobi(perturbed, 1e-12);
  CHECK_FALSE(bad.pass);
  CHECK(bad.max_violation > 1e-3);
  CHECK(bad.witness[0] >= 0);

  CHECK_THROWS_AS(check_jacobi(so3(), 0.0), std::invalid_argument);
}

TEST_CASE("matrix_exponential basics")
{
  const Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(5, 5);
  CHECK(matrix_exponential(Z) == Eigen::MatrixXd::Identity(5, 5));

  const Eigen::MatrixXd A12 = s7::elementary_A(1, 2);
  for (double t : {0.1, 1.0, 2.5, -4.0, 30.0}) {
    const Eigen::MatrixXd R = matrix_exponential(A12, t);
    // X1 -> cos t X1 + sin t X2 on the (X1, X2) plane, identity elsewhere.
    CHECK(std::abs(R(0, 0) - std::cos(t)) < 1e-12);
    CHECK(std::abs(R(1, 0) - std::sin(t)) < 1e-12);
    CHECK(std::abs(R(0, 1) + std::sin(t)) < 1e-12);
    CHECK(std::abs(R(1, 1) - std::cos(t)) < 1e-12);
    CHECK((R.bottomRightCorner(5, 5) - Eigen::MatrixXd::Identity(5, 5)).norm() < 1e-13);
  }

  CHECK_THROWS_AS(matrix_exponential(Eigen::MatrixXd::Zero(2, 3)), std::invalid_argument);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(2, 2);
  bad(0, 1) = INFINITY;
  CHECK_THROWS_AS(matrix_exponential(bad), std::invalid_argument);
}

TEST_CASE("matrix_exponential matches an independent implementation")
{
  std::mt19937_64 rng(3);
  // Scales chosen to reach every Padé degree and the squaring branch.
  for (double scale : {1e-4, 1e-2, 0.1, 0.5, 1.5, 4.0, 20.0}) {
    for (int s = 0; s < 10; ++s) {
      const int n = 2 + s % 8;
      Eigen::MatrixXd M(n, n);
      for (int r = 0; r < n; ++r)
        M.row(r) = gaussian(n, rng).transpose();
      M *= scale / M.cwiseAbs().colwise().sum().maxCoeff();
      const Eigen::MatrixXd ours = matrix_exponential(M);
      const Eigen::MatrixXd ref = M.exp();
      CHECK((ours - ref).norm() <= 1e-10 * ref.norm());
      const Eigen::MatrixXd inv = matrix_exponential(M, -1.0);
      CHECK((ours * inv - Eigen::MatrixXd::Identity(n, n)).norm() < 1e-12 * ours.norm() * inv.norm());
    }
  }
}

TEST_CASE("adjoint_group_element")
{
  const ReductiveSpace& S = s7_space().space;
  const LieAlgebra& g = S.algebra();
  const AlgVector H1 = g.basis_vector(s7::kH1);
  CHECK((adjoint_group_element(g, H1, 0.0) - Eigen::MatrixXd::Identity(11, 11)).norm() == 0.0);

  std::mt19937_64 rng(4);
  for (double t : {0.3, 1.1, -2.0}) {
    const Eigen::MatrixXd Ad = adjoint_group_element(g, H1, t);
    for (int s = 0; s < 10; ++s) {
      const AlgVector x = gaussian(11, rng);
      const AlgVector y = gaussian(11, rng);
      CHECK((Ad * g.bracket(x, y) - g.bracket(Ad * x, Ad * y)).norm() < 1e-9);
    }
    // Rotates (X1, X2) and (X3, X4) by t.
    const AlgVector e1 = Ad * g.basis_vector(0);
    const AlgVector e3 = Ad * g.basis_vector(2);
    CHECK((e1 - (std::cos(t) * g.basis_vector(0) + std::sin(t) * g.basis_vector(1))).norm() < 1e-12);
    CHECK((e3 - (std::cos(t) * g.basis_vector(2) + std::sin(t) * g.basis_vector(3))).norm() < 1e-12);
  }
}

TEST_CASE("Ad of isotropy elements is orthogonal on m and preserves m")
{
  const ReductiveSpace& S = s7_space().space;
  const LieAlgebra& g = S.algebra();
  const Eigen::MatrixXd G0 = S.base_gram();
  std::mt19937_64 rng(5);
  for (int s = 0; s < 20; ++s) {
    const AlgVector h = random_h(S, rng);
    const double t = 2.0 * (s + 1) / 20.0;
    const Eigen::MatrixXd Ad = adjoint_group_element(g, h, t);
    Eigen::MatrixXd Ad_m(S.dim_m(), S.dim_m());
    for (int q = 0; q < S.dim_m(); ++q) {
      const AlgVector image = Ad * g.basis_vector(S.m_indices()[q]);
      CHECK(S.to_h_coords(image).norm() < 1e-10);
      Ad_m.col(q) = S.to_m_coords(image);
    }
    CHECK((Ad_m.transpose() * G0 * Ad_m - G0).norm() < 1e-9);
  }
}
