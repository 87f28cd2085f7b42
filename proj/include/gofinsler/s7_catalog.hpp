#pragma once

#include "gofinsler/geodesic.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

/// The sphere S^7 = Sp(2)U(1) / Sp(1)diag(U(1)) with isotropy algebra
/// sp(1) + u(1) = span{H1, H2, H3, W}.
///
/// Basis order of g (also the CLI coordinate order):
///   0..3  X1..X4   block m1
///   4     Z1       block m2
///   5..6  Z2, Z3   block m3
///   7..9  H1..H3
///   10    W
///
/// The sp(2) brackets are commutators of the 4x4 complex matrices
///
///   h:  [[ i h1, -h2 - i h3, 0, 0], [h2 - i h3, -i h1, 0, 0], 0, 0]
///   m:  [[0, 0, x1 + i x2, -x3 - i x4],
///        [0, 0, x3 - i x4,  x1 - i x2],
///        [-x1 + i x2, -x3 - i x4, i z1, -z2 - i z3],
///        [ x3 - i x4, -x1 - i x2, z2 - i z3, -i z1]]
///
/// Entry (3,4) of m is taken as -z2 - i z3; the skew-Hermitian partner (4,3)
/// is z2 - i z3, and this choice reproduces every ad-pattern below. W acts on
/// sp(2) as the derivation ad(Z1) and is realized as rho(Z1) - i*Id.
namespace gofinsler::s7 {

inline constexpr int kX1 = 0;
inline constexpr int kZ1 = 4;
inline constexpr int kZ2 = 5;
inline constexpr int kZ3 = 6;
inline constexpr int kH1 = 7;
inline constexpr int kH2 = 8;
inline constexpr int kH3 = 9;
inline constexpr int kW = 10;

struct S7Space
{
  ReductiveSpace space;
  /// Real 8x8 realization on C^4 = R^8 (Re/Im interleaved); origin is e3.
  MatrixRealization realization;
};

/// Throws std::logic_error if any internal consistency check fails.
S7Space build_s7_space();

/// Elementary operators on m-coordinates (1-based indices as in A_12, B_23):
/// A_ij X_i = X_j, A_ij X_j = -X_i; B_ij Z_i = Z_j, B_ij Z_j = -Z_i.
Eigen::MatrixXd elementary_A(int i, int j);
Eigen::MatrixXd elementary_B(int i, int j);

/// ad(x) compressed to m (rows and columns in m-coordinates).
Eigen::MatrixXd ad_on_m(const ReductiveSpace& space, const AlgVector& x);

struct KCoefficients
{
  double K1 = 0.0;
  double K2 = 0.0;
  double K3 = 0.0;
};

/// K1 = C2/C3 - 2 C2/C1, K2 = 1 - 2 C3/C1, K3 = C2/C3 - 1.
KCoefficients k_coefficients(const Eigen::VectorXd& C);

/// Rational closed form of the geodesic graph, returned on the h-coordinates
/// (H1, H2, H3, W). When x = 0 it returns (0, 0, 0, K3 z1).
AlgVector closed_form_xi(const AlgVector& y, const Eigen::VectorXd& C);

/// The 6x5 augmented matrix (A | B) in the normalization where rows 1-4
/// (test vectors X1..X4) are divided by C1 and rows 5-6 (Z2, Z3) by C3.
Eigen::MatrixXd extended_matrix(const AlgVector& y, const Eigen::VectorXd& C);

/// assemble_system restricted to the rows (X1..X4, Z2, Z3) and scaled into the
/// normalization of extended_matrix.
Eigen::MatrixXd scaled_assembled_matrix(const ReductiveSpace& space, const AlgVector& y, const Eigen::VectorXd& C);

/// Unit g0-vector with |x|^2 >= 0.05 and z2^2 + z3^2 >= 0.05, where the
/// system has full rank 4.
AlgVector random_generic_vector(std::mt19937_64& rng);

/// Positive C-triple, log-uniform in [0.1, 10].
Eigen::VectorXd random_weights(std::mt19937_64& rng);

struct ClosedFormReport
{
  int cases = 0;
  int unique_cases = 0;
  double max_residual = 0.0;
  double max_solver_difference = 0.0;
  AlgVector worst_residual_y;
  Eigen::VectorXd worst_residual_C;
  AlgVector worst_difference_y;
  Eigen::VectorXd worst_difference_C;
  bool pass = true;
};

/// Every combination of n_samples generic y and c_triples random C: the closed
/// form must have residual below tol and, where the solver reports a unique
/// solution, match it component-wise within tol.
ClosedFormReport verify_closed_form(const S7Space& s7, int n_samples, std::uint64_t seed, double tol,
                                    int c_triples = 1);

} // namespace gofinsler::s7
