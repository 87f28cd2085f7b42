#pragma once

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

namespace gofinsler {

/// Coordinates of an element of a Lie algebra in its basis.
using AlgVector = Eigen::VectorXd;

/// One entry of the upper-triangular bracket table: [e_i, e_j] = sum_k coeffs[k] e_k, i < j.
struct BracketEntry
{
  int i = 0;
  int j = 0;
  std::map<int, double> coeffs;
};

struct JacobiReport
{
  double max_violation = 0.0;
  bool pass = true;
  /// Basis triple attaining the maximum (-1 when dim < 3).
  int witness[3] = {-1, -1, -1};
};

/// Finite-dimensional real Lie algebra given by dense structure constants.
///
/// Only the i < j half of the table is supplied; the i > j half is filled in
/// by antisymmetry, so c[i][j][k] = -c[j][i][k] holds exactly for every
/// instance. The Jacobi identity is not assumed; see check_jacobi().
class LieAlgebra
{
public:
  LieAlgebra(std::vector<std::string> basis_labels, const std::vector<BracketEntry>& brackets);

  int dim() const { return m_dim; }
  const std::vector<std::string>& labels() const { return m_labels; }

  /// Index of a basis label, or -1.
  int index_of(const std::string& label) const;

  /// c[i][j][k].
  double structure(int i, int j, int k) const { return m_c[(i * m_dim + j) * m_dim + k]; }

  /// Nonzero i < j entries, the serialized form.
  std::vector<BracketEntry> upper_brackets() const;

  /// Largest |c[i][j][k]|.
  double max_structure_constant() const;

  AlgVector basis_vector(int i) const;
  AlgVector zero() const { return AlgVector::Zero(m_dim); }

  AlgVector bracket(const AlgVector& a, const AlgVector& b) const;

  /// Matrix of ad(x); column j is [x, e_j].
  Eigen::MatrixXd ad(const AlgVector& x) const;

private:
  void require_member(const AlgVector& v) const;

  int m_dim;
  std::vector<std::string> m_labels;
  std::vector<double> m_c;
};

/// Max over basis triples of |[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]|.
JacobiReport check_jacobi(const LieAlgebra& alg, double tol);

/// exp(t * m) by scaling and squaring with a Padé approximant.
Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& m, double t = 1.0);

/// Ad(exp(t h)) = exp(t ad(h)).
Eigen::MatrixXd adjoint_group_element(const LieAlgebra& alg, const AlgVector& h, double t);

} // namespace gofinsler
