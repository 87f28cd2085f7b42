// Scaling and squaring with diagonal Padé approximants, after
// N. J. Higham, "The scaling and squaring method for the matrix exponential
// revisited", SIAM J. Matrix Anal. Appl. 26 (2005).

#include "gofinsler/lie_algebra.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace gofinsler {

namespace {

using Eigen::MatrixXd;

void pade3(const MatrixXd& A, MatrixXd& U, MatrixXd& V)
{
  constexpr std::array<double, 4> b = {120.0, 60.0, 12.0, 1.0};
  const MatrixXd I = MatrixXd::Identity(A.rows(), A.cols());
  const MatrixXd A2 = A * A;
  U = A * (b[3] * A2 + b[1] * I);
  V = b[2] * A2 + b[0] * I;
}

void pade5(const MatrixXd& A, MatrixXd& U, MatrixXd& V)
{
  constexpr std::array<double, 6> b = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
  const MatrixXd I = MatrixXd::Identity(A.rows(), A.cols());
  const MatrixXd A2 = A * A;
  const MatrixXd A4 = A2 * A2;
  U = A * (b[5] * A4 + b[3] * A2 + b[1] * I);
  V = b[4] * A4 + b[2] * A2 + b[0] * I;
}

void pade7(const MatrixXd& A, MatrixXd& U, MatrixXd& V)
{
  constexpr std::array<double, 8> b = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                       25200.0,    1512.0,    56.0,      1.0};
  const MatrixXd I = MatrixXd::Identity(A.rows(), A.cols());
  const MatrixXd A2 = A * A;
  const MatrixXd A4 = A2 * A2;
  const MatrixXd A6 = A4 * A2;
  U = A * (b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I);
  V = b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
}

void pade9(const MatrixXd& A, MatrixXd& U, MatrixXd& V)
{
  constexpr std::array<double, 10> b = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0,
                                        30270240.0,    2162160.0,    110880.0,     3960.0,
                                        90.0,          1.0};
  const MatrixXd I = MatrixXd::Identity(A.rows(), A.cols());
  const MatrixXd A2 = A * A;
  const MatrixXd A4 = A2 * A2;
  const MatrixXd A6 = A4 * A2;
  const MatrixXd A8 = A6 * A2;
  U = A * (b[9] * A8 + b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I);
  V = b[8] * A8 + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
}

void pade13(const MatrixXd& A, MatrixXd& U, MatrixXd& V)
{
  constexpr std::array<double, 14> b = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};
  const MatrixXd I = MatrixXd::Identity(A.rows(), A.cols());
  const MatrixXd A2 = A * A;
  const MatrixXd A4 = A2 * A2;
  const MatrixXd A6 = A4 * A2;
  const MatrixXd inner_u = A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2);
  U = A * (inner_u + b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I);
  V = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
}

} // namespace

Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& m, double t)
{
  if (m.rows() != m.cols())
    throw std::invalid_argument("matrix_exponential: matrix must be square");
  if (!m.allFinite() || !std::isfinite(t))
    throw std::invalid_argument("matrix_exponential: non-finite input");
  if (m.rows() == 0)
    return m;

  MatrixXd A = t * m;
  const double norm1 = A.cwiseAbs().colwise().sum().maxCoeff();

  MatrixXd U;
  MatrixXd V;
  int squarings = 0;
  if (norm1 < 1.495585217958292e-2) {
    pade3(A, U, V);
  } else if (norm1 < 2.539398330063230e-1) {
    pade5(A, U, V);
  } else if (norm1 < 9.504178996162932e-1) {
    pade7(A, U, V);
  } else if (norm1 < 2.097847961257068e0) {
    pade9(A, U, V);
  } else {
    constexpr double theta13 = 5.371920351148152e0;
    if (norm1 > theta13)
      squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
    A = std::ldexp(1.0, -squarings) * A;
    pade13(A, U, V);
  }

  MatrixXd result = (V - U).partialPivLu().solve(V + U);
  for (int s = 0; s < squarings; ++s)
    result = result * result;
  return result;
}

} // namespace gofinsler
