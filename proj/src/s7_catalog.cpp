#include "gofinsler/s7_catalog.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace gofinsler::s7 {

namespace {

using Complex = std::complex<double>;
using CMatrix = Eigen::Matrix<Complex, 4, 4>;
constexpr Complex I{0.0, 1.0};

CMatrix h_matrix(double h1, double h2, double h3)
{
  CMatrix M = CMatrix::Zero();
  M(0, 0) = I * h1;
  M(0, 1) = -h2 - I * h3;
  M(1, 0) = h2 - I * h3;
  M(1, 1) = -I * h1;
  return M;
}

CMatrix m_matrix(const std::array<double, 7>& c)
{
  const auto [x1, x2, x3, x4, z1, z2, z3] = c;
  CMatrix M;
  M << 0.0, 0.0, x1 + I * x2, -x3 - I * x4,
       0.0, 0.0, x3 - I * x4, x1 - I * x2,
       -x1 + I * x2, -x3 - I * x4, I * z1, -z2 - I * z3,
       x3 - I * x4, -x1 - I * x2, z2 - I * z3, -I * z1;
  return M;
}

/// sp(2) basis in catalog order X1..X4, Z1..Z3, H1..H3.
std::array<CMatrix, 10> sp2_basis()
{
  std::array<CMatrix, 10> out;
  for (int k = 0; k < 7; ++k) {
    std::array<double, 7> c{};
    c[k] = 1.0;
    out[k] = m_matrix(c);
  }
  out[7] = h_matrix(1, 0, 0);
  out[8] = h_matrix(0, 1, 0);
  out[9] = h_matrix(0, 0, 1);
  return out;
}

double real_inner(const CMatrix& a, const CMatrix& b)
{
  return (a.adjoint() * b).trace().real();
}

Eigen::MatrixXd realify(const CMatrix& M)
{
  Eigen::MatrixXd R(8, 8);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const double a = M(r, c).real();
      const double b = M(r, c).imag();
      R(2 * r, 2 * c) = a;
      R(2 * r, 2 * c + 1) = -b;
      R(2 * r + 1, 2 * c) = b;
      R(2 * r + 1, 2 * c + 1) = a;
    }
  return R;
}

void require(bool ok, const std::string& what)
{
  if (!ok)
    throw std::logic_error("build_s7_space: " + what);
}

void require_positive(const Eigen::VectorXd& C)
{
  if (C.size() != 3)
    throw std::invalid_argument("s7: expected three coefficients C1, C2, C3");
  if (!C.allFinite() || (C.array() <= 0.0).any())
    throw std::invalid_argument("s7: coefficients C must be strictly positive");
}

} // namespace

Eigen::MatrixXd elementary_A(int i, int j)
{
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(7, 7);
  M(j - 1, i - 1) = 1.0;
  M(i - 1, j - 1) = -1.0;
  return M;
}

Eigen::MatrixXd elementary_B(int i, int j)
{
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(7, 7);
  M(3 + j, 3 + i) = 1.0;
  M(3 + i, 3 + j) = -1.0;
  return M;
}

Eigen::MatrixXd ad_on_m(const ReductiveSpace& space, const AlgVector& x)
{
  const Eigen::MatrixXd ad = space.algebra().ad(x);
  const auto& mi = space.m_indices();
  Eigen::MatrixXd out(space.dim_m(), space.dim_m());
  for (int r = 0; r < space.dim_m(); ++r)
    for (int c = 0; c < space.dim_m(); ++c)
      out(r, c) = ad(mi[r], mi[c]);
  return out;
}

S7Space build_s7_space()
{
  const auto basis = sp2_basis();

  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b)
      require(real_inner(basis[a], basis[b]) == 0.0, "matrix basis is not orthogonal");

  // Expand every commutator in the (orthogonal) basis and confirm closure.
  std::vector<BracketEntry> brackets;
  std::array<std::array<Eigen::VectorXd, 10>, 10> sp2_bracket;
  for (int a = 0; a < 10; ++a)
    for (int b = 0; b < 10; ++b) {
      const CMatrix comm = basis[a] * basis[b] - basis[b] * basis[a];
      Eigen::VectorXd coeff = Eigen::VectorXd::Zero(11);
      CMatrix rebuilt = CMatrix::Zero();
      for (int k = 0; k < 10; ++k) {
        coeff[k] = real_inner(basis[k], comm) / real_inner(basis[k], basis[k]);
        rebuilt += coeff[k] * basis[k];
      }
      require((rebuilt - comm).norm() == 0.0, "commutators do not close on the matrix basis");
      sp2_bracket[a][b] = coeff;
    }

  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b) {
      BracketEntry e{a, b, {}};
      for (int k = 0; k < 10; ++k)
        if (sp2_bracket[a][b][k] != 0.0)
          e.coeffs[k] = sp2_bracket[a][b][k];
      if (!e.coeffs.empty())
        brackets.push_back(std::move(e));
    }
  // [u, W] = -[W, u] = -[Z1, u] on m; W commutes with h.
  for (int u = 0; u < 7; ++u) {
    BracketEntry e{u, kW, {}};
    for (int k = 0; k < 10; ++k)
      if (sp2_bracket[kZ1][u][k] != 0.0)
        e.coeffs[k] = -sp2_bracket[kZ1][u][k];
    if (!e.coeffs.empty())
      brackets.push_back(std::move(e));
  }

  LieAlgebra alg({"X1", "X2", "X3", "X4", "Z1", "Z2", "Z3", "H1", "H2", "H3", "W"}, brackets);

  const Eigen::MatrixXd I4 = Eigen::MatrixXd::Identity(4, 4);
  const Eigen::MatrixXd I1 = Eigen::MatrixXd::Identity(1, 1);
  const Eigen::MatrixXd I2 = Eigen::MatrixXd::Identity(2, 2);
  ReductiveSpace space(std::move(alg), {kH1, kH2, kH3, kW}, {{0, 1, 2, 3}, {kZ1}, {kZ2, kZ3}}, {I4, I1, I2});

  const Eigen::MatrixXd W_op = 2.0 * elementary_B(2, 3) - elementary_A(1, 2) + elementary_A(3, 4);
  const LieAlgebra& g = space.algebra();
  require(ad_on_m(space, g.basis_vector(kH1)) == elementary_A(1, 2) + elementary_A(3, 4), "ad(H1)|m pattern");
  require(ad_on_m(space, g.basis_vector(kH2)) == elementary_A(1, 3) - elementary_A(2, 4), "ad(H2)|m pattern");
  require(ad_on_m(space, g.basis_vector(kH3)) == elementary_A(1, 4) + elementary_A(2, 3), "ad(H3)|m pattern");
  require(ad_on_m(space, g.basis_vector(kZ1)) == W_op, "ad(Z1)|m pattern");
  require(ad_on_m(space, g.basis_vector(kW)) == W_op, "ad(W)|m pattern");
  require(check_jacobi(g, kStructuralTol).pass, "Jacobi identity");
  require(validate_space(space).pass, "reductive space invariants");

  MatrixRealization rep;
  for (int k = 0; k < 10; ++k)
    rep.generators.push_back(realify(basis[k]));
  rep.generators.push_back(realify(basis[kZ1] - I * CMatrix::Identity()));
  rep.origin = Eigen::VectorXd::Zero(8);
  rep.origin[4] = 1.0;
  for (int k : {kH1, kH2, kH3, kW})
    require((rep.generators[k] * rep.origin).norm() == 0.0, "isotropy does not fix the origin");

  return {std::move(space), std::move(rep)};
}

KCoefficients k_coefficients(const Eigen::VectorXd& C)
{
  require_positive(C);
  return {C[1] / C[2] - 2.0 * C[1] / C[0], 1.0 - 2.0 * C[2] / C[0], C[1] / C[2] - 1.0};
}

AlgVector closed_form_xi(const AlgVector& y, const Eigen::VectorXd& C)
{
  if (y.size() != 11)
    throw std::invalid_argument("closed_form_xi: expected an S7 algebra vector");
  const auto [K1, K2, K3] = k_coefficients(C);
  const double x1 = y[0], x2 = y[1], x3 = y[2], x4 = y[3];
  const double z1 = y[4], z2 = y[5], z3 = y[6];
  const double D = x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4;

  AlgVector xi = AlgVector::Zero(11);
  xi[kW] = K3 * z1;
  if (D == 0.0)
    return xi;
  xi[kH1] = (K1 * z1 * (x1 * x1 + x2 * x2 - x3 * x3 - x4 * x4) +
             2.0 * K2 * (z2 * (x2 * x3 - x1 * x4) + z3 * (x1 * x3 + x2 * x4))) / D;
  xi[kH2] = (2.0 * K1 * z1 * (x2 * x3 + x1 * x4) +
             K2 * (z2 * (x1 * x1 - x2 * x2 + x3 * x3 - x4 * x4) + 2.0 * z3 * (x3 * x4 - x1 * x2))) / D;
  xi[kH3] = (2.0 * K1 * z1 * (x2 * x4 - x1 * x3) +
             K2 * (2.0 * z2 * (x1 * x2 + x3 * x4) + z3 * (x1 * x1 - x2 * x2 - x3 * x3 + x4 * x4))) / D;
  return xi;
}

Eigen::MatrixXd extended_matrix(const AlgVector& y, const Eigen::VectorXd& C)
{
  require_positive(C);
  if (y.size() != 11)
    throw std::invalid_argument("extended_matrix: expected an S7 algebra vector");
  const double x1 = y[0], x2 = y[1], x3 = y[2], x4 = y[3];
  const double z1 = y[4], z2 = y[5], z3 = y[6];
  const double p = 1.0 - 2.0 * C[1] / C[0];
  const double q = 1.0 - 2.0 * C[2] / C[0];
  const double r = C[1] / C[2] - 1.0;

  Eigen::MatrixXd M(6, 5);
  M << x2, x3, x4, -x2, p * z1 * x2 + q * (z2 * x3 + z3 * x4),
       -x1, -x4, x3, x1, -p * z1 * x1 + q * (z2 * x4 - z3 * x3),
       x4, -x1, -x2, x4, -p * z1 * x4 + q * (-z2 * x1 + z3 * x2),
       -x3, x2, -x1, -x3, p * z1 * x3 - q * (z2 * x2 + z3 * x1),
       0, 0, 0, 2 * z3, 2 * z1 * z3 * r,
       0, 0, 0, -2 * z2, -2 * z1 * z2 * r;
  return M;
}

Eigen::MatrixXd scaled_assembled_matrix(const ReductiveSpace& space, const AlgVector& y, const Eigen::VectorXd& C)
{
  require_positive(C);
  const LinearSystem sys = assemble_system(space, C, y);
  // m-coordinate rows: 0..3 = X1..X4, 4 = Z1 (identically zero), 5..6 = Z2, Z3.
  constexpr std::array<int, 6> rows = {0, 1, 2, 3, 5, 6};
  Eigen::MatrixXd M(6, 5);
  for (int r = 0; r < 6; ++r) {
    const double scale = r < 4 ? C[0] : C[2];
    M.row(r).head(4) = sys.A.row(rows[r]) / scale;
    M(r, 4) = sys.b[rows[r]] / scale;
  }
  return M;
}

AlgVector random_generic_vector(std::mt19937_64& rng)
{
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    Eigen::VectorXd m(7);
    for (auto& v : m)
      v = normal(rng);
    if (m.norm() < 1e-12)
      continue;
    m.normalize();
    if (m.head(4).squaredNorm() < 0.05 || m.tail(2).squaredNorm() < 0.05)
      continue;
    AlgVector y = AlgVector::Zero(11);
    y.head(7) = m;
    return y;
  }
}

Eigen::VectorXd random_weights(std::mt19937_64& rng)
{
  std::uniform_real_distribution<double> expo(std::log(0.1), std::log(10.0));
  Eigen::VectorXd C(3);
  for (auto& c : C)
    c = std::exp(expo(rng));
  return C;
}

ClosedFormReport verify_closed_form(const S7Space& s7, int n_samples, std::uint64_t seed, double tol, int c_triples)
{
  if (n_samples < 1 || c_triples < 1)
    throw std::invalid_argument("verify_closed_form: sample counts must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<Eigen::VectorXd> Cs;
  for (int c = 0; c < c_triples; ++c)
    Cs.push_back(random_weights(rng));

  ClosedFormReport report;
  for (int s = 0; s < n_samples; ++s) {
    const AlgVector y = random_generic_vector(rng);
    for (const auto& C : Cs) {
      ++report.cases;
      const AlgVector xi = closed_form_xi(y, C);
      const double res = geodesic_residual(s7.space, C, y, xi).cwiseAbs().maxCoeff();
      if (report.worst_residual_y.size() == 0 || res > report.max_residual) {
        report.max_residual = res;
        report.worst_residual_y = y;
        report.worst_residual_C = C;
      }
      const GeodesicGraphResult solved = solve_geodesic_graph(s7.space, C, y);
      if (!solved.unique)
        continue;
      ++report.unique_cases;
      const double diff = (solved.xi - xi).cwiseAbs().maxCoeff();
      if (report.worst_difference_y.size() == 0 || diff > report.max_solver_difference) {
        report.max_solver_difference = diff;
        report.worst_difference_y = y;
        report.worst_difference_C = C;
      }
    }
  }
  report.pass = report.max_residual < tol && report.max_solver_difference < tol;
  return report;
}

} // namespace gofinsler::s7
