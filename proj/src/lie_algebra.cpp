#include "gofinsler/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gofinsler {

LieAlgebra::LieAlgebra(std::vector<std::string> basis_labels, const std::vector<BracketEntry>& brackets)
  : m_dim(static_cast<int>(basis_labels.size())), m_labels(std::move(basis_labels))
{
  if (m_dim < 1)
    throw std::invalid_argument("LieAlgebra: dimension must be positive");
  for (int a = 0; a < m_dim; ++a)
    for (int b = a + 1; b < m_dim; ++b)
      if (m_labels[a] == m_labels[b])
        throw std::invalid_argument("LieAlgebra: duplicate basis label '" + m_labels[a] + "'");

  m_c.assign(static_cast<std::size_t>(m_dim) * m_dim * m_dim, 0.0);
  std::vector<bool> seen(static_cast<std::size_t>(m_dim) * m_dim, false);
  for (const auto& e : brackets) {
    if (e.i < 0 || e.j < 0 || e.i >= m_dim || e.j >= m_dim)
      throw std::invalid_argument("LieAlgebra: bracket index out of range");
    if (e.i >= e.j)
      throw std::invalid_argument("LieAlgebra: bracket entries must have i < j");
    if (seen[e.i * m_dim + e.j])
      throw std::invalid_argument("LieAlgebra: duplicate bracket entry");
    seen[e.i * m_dim + e.j] = true;
    for (const auto& [k, value] : e.coeffs) {
      if (k < 0 || k >= m_dim)
        throw std::invalid_argument("LieAlgebra: coefficient index out of range");
      if (!std::isfinite(value))
        throw std::invalid_argument("LieAlgebra: non-finite structure constant");
      m_c[(e.i * m_dim + e.j) * m_dim + k] = value;
      m_c[(e.j * m_dim + e.i) * m_dim + k] = -value;
    }
  }
}

int LieAlgebra::index_of(const std::string& label) const
{
  auto it = std::find(m_labels.begin(), m_labels.end(), label);
  return it == m_labels.end() ? -1 : static_cast<int>(it - m_labels.begin());
}

std::vector<BracketEntry> LieAlgebra::upper_brackets() const
{
  std::vector<BracketEntry> out;
  for (int i = 0; i < m_dim; ++i)
    for (int j = i + 1; j < m_dim; ++j) {
      BracketEntry e{i, j, {}};
      for (int k = 0; k < m_dim; ++k)
        if (structure(i, j, k) != 0.0)
          e.coeffs[k] = structure(i, j, k);
      if (!e.coeffs.empty())
        out.push_back(std::move(e));
    }
  return out;
}

double LieAlgebra::max_structure_constant() const
{
  double best = 0.0;
  for (double v : m_c)
    best = std::max(best, std::abs(v));
  return best;
}

AlgVector LieAlgebra::basis_vector(int i) const
{
  if (i < 0 || i >= m_dim)
    throw std::out_of_range("LieAlgebra: basis index out of range");
  AlgVector e = AlgVector::Zero(m_dim);
  e[i] = 1.0;
  return e;
}

void LieAlgebra::require_member(const AlgVector& v) const
{
  if (v.size() != m_dim)
    throw std::invalid_argument("LieAlgebra: vector dimension " + std::to_string(v.size()) +
                                " does not match algebra dimension " + std::to_string(m_dim));
}

AlgVector LieAlgebra::bracket(const AlgVector& a, const AlgVector& b) const
{
  require_member(a);
  require_member(b);
  AlgVector out = AlgVector::Zero(m_dim);
  for (int i = 0; i < m_dim; ++i) {
    if (a[i] == 0.0)
      continue;
    for (int j = 0; j < m_dim; ++j) {
      const double w = a[i] * b[j];
      if (w == 0.0)
        continue;
      const double* row = &m_c[(i * m_dim + j) * m_dim];
      for (int k = 0; k < m_dim; ++k)
        out[k] += w * row[k];
    }
  }
  return out;
}

Eigen::MatrixXd LieAlgebra::ad(const AlgVector& x) const
{
  require_member(x);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m_dim, m_dim);
  for (int i = 0; i < m_dim; ++i) {
    if (x[i] == 0.0)
      continue;
    for (int j = 0; j < m_dim; ++j)
      for (int k = 0; k < m_dim; ++k)
        out(k, j) += x[i] * structure(i, j, k);
  }
  return out;
}

JacobiReport check_jacobi(const LieAlgebra& alg, double tol)
{
  if (!(tol > 0.0))
    throw std::invalid_argument("check_jacobi: tol must be positive");
  JacobiReport report;
  const int n = alg.dim();
  std::vector<AlgVector> e;
  e.reserve(n);
  for (int i = 0; i < n; ++i)
    e.push_back(alg.basis_vector(i));
  // The cyclic sum is alternating once c is antisymmetric, so i < j < k covers every triple.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const AlgVector eij = alg.bracket(e[i], e[j]);
      for (int k = j + 1; k < n; ++k) {
        const AlgVector cyc = alg.bracket(eij, e[k]) + alg.bracket(alg.bracket(e[j], e[k]), e[i]) +
                              alg.bracket(alg.bracket(e[k], e[i]), e[j]);
        const double v = cyc.norm();
        if (report.witness[0] < 0 || v > report.max_violation) {
          report.max_violation = v;
          report.witness[0] = i;
          report.witness[1] = j;
          report.witness[2] = k;
        }
      }
    }
  report.pass = report.max_violation < tol;
  return report;
}

Eigen::MatrixXd adjoint_group_element(const LieAlgebra& alg, const AlgVector& h, double t)
{
  return matrix_exponential(alg.ad(h), t);
}

} // namespace gofinsler
