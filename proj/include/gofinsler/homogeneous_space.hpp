#pragma once

#include "gofinsler/lie_algebra.hpp"

#include <span>
#include <string>
#include <vector>

namespace gofinsler {

inline constexpr double kStructuralTol = 1e-12;
inline constexpr double kInvarianceTol = 1e-10;

/// Reductive decomposition g = h + m with m split into invariant blocks m_1..m_s,
/// each carrying a base scalar product alpha_i (Gram matrix in the block's basis).
///
/// "m-coordinates" are the coordinates of the m part listed block by block,
/// in the order the blocks were declared. "h-coordinates" follow h_indices.
///
/// The constructor only checks shapes (index partition, Gram sizes). The
/// algebraic invariants are evaluated by validate_space().
class ReductiveSpace
{
public:
  ReductiveSpace(LieAlgebra alg, std::vector<int> h_indices, std::vector<std::vector<int>> blocks,
                 std::vector<Eigen::MatrixXd> alpha);

  const LieAlgebra& algebra() const { return m_alg; }
  int dim() const { return m_alg.dim(); }
  int dim_h() const { return static_cast<int>(m_h.size()); }
  int dim_m() const { return static_cast<int>(m_m.size()); }
  int block_count() const { return static_cast<int>(m_blocks.size()); }

  const std::vector<int>& h_indices() const { return m_h; }
  /// Algebra indices of the m-coordinates (blocks concatenated).
  const std::vector<int>& m_indices() const { return m_m; }
  const std::vector<std::vector<int>>& blocks() const { return m_blocks; }
  const Eigen::MatrixXd& alpha(int i) const { return m_alpha.at(i); }
  /// Block containing m-coordinate p.
  int block_of(int p) const { return m_block_of[p]; }
  /// First m-coordinate of block i.
  int block_offset(int i) const { return m_offsets[i]; }

  Eigen::VectorXd to_m_coords(const AlgVector& v) const;
  Eigen::VectorXd to_h_coords(const AlgVector& v) const;
  AlgVector from_m_coords(const Eigen::VectorXd& m_coords) const;
  AlgVector from_h_coords(const Eigen::VectorXd& h_coords) const;

  bool in_m(const AlgVector& v) const;
  bool in_h(const AlgVector& v) const;

  /// Block-diagonal Gram sum_i w_i alpha_i on m-coordinates.
  Eigen::MatrixXd weighted_gram(std::span<const double> weights) const;

  /// Gram of the base product g0 = sum_i alpha_i.
  Eigen::MatrixXd base_gram() const;

private:
  LieAlgebra m_alg;
  std::vector<int> m_h;
  std::vector<int> m_m;
  std::vector<std::vector<int>> m_blocks;
  std::vector<Eigen::MatrixXd> m_alpha;
  std::vector<int> m_block_of;
  std::vector<int> m_offsets;
};

AlgVector project_m(const ReductiveSpace& space, const AlgVector& v);
AlgVector project_h(const ReductiveSpace& space, const AlgVector& v);

struct SpaceCheck
{
  std::string name;
  /// Max violation, or the minimum eigenvalue for the positive-definiteness check.
  double value = 0.0;
  double tol = 0.0;
  bool pass = true;
};

struct SpaceReport
{
  std::vector<SpaceCheck> checks;
  bool pass = true;

  const SpaceCheck& check(const std::string& name) const;
};

SpaceReport validate_space(const ReductiveSpace& space);

/// Positively related scalar products g_j = sum_i a(j, i) alpha_i, j = 0..k-1.
class MetricFamily
{
public:
  MetricFamily(ReductiveSpace space, Eigen::MatrixXd a);

  const ReductiveSpace& space() const { return m_space; }
  const Eigen::MatrixXd& a() const { return m_a; }
  int k() const { return static_cast<int>(m_a.rows()); }
  int s() const { return static_cast<int>(m_a.cols()); }

  /// Gram matrices of every g_j on m-coordinates, computed once.
  const std::vector<Eigen::MatrixXd>& grams() const { return m_grams; }

private:
  ReductiveSpace m_space;
  Eigen::MatrixXd m_a;
  std::vector<Eigen::MatrixXd> m_grams;
};

/// Gram of g_j on m-coordinates (0-based j).
Eigen::MatrixXd gram_of_metric(const MetricFamily& family, int j);

/// g_j(u, v); any h-components of u and v are projected away.
double evaluate_metric(const MetricFamily& family, int j, const AlgVector& u, const AlgVector& v);

} // namespace gofinsler
