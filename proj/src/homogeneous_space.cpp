#include "gofinsler/homogeneous_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gofinsler {

ReductiveSpace::ReductiveSpace(LieAlgebra alg, std::vector<int> h_indices,
                               std::vector<std::vector<int>> blocks, std::vector<Eigen::MatrixXd> alpha)
  : m_alg(std::move(alg)), m_h(std::move(h_indices)), m_blocks(std::move(blocks)), m_alpha(std::move(alpha))
{
  const int n = m_alg.dim();
  if (m_blocks.empty())
    throw std::invalid_argument("ReductiveSpace: at least one m block is required");
  if (m_alpha.size() != m_blocks.size())
    throw std::invalid_argument("ReductiveSpace: one alpha Gram matrix per block is required");

  std::vector<int> owner(n, 0);
  auto claim = [&](int idx) {
    if (idx < 0 || idx >= n)
      throw std::invalid_argument("ReductiveSpace: basis index out of range");
    if (owner[idx]++ != 0)
      throw std::invalid_argument("ReductiveSpace: basis index " + std::to_string(idx) +
                                  " assigned twice");
  };
  for (int idx : m_h)
    claim(idx);
  for (std::size_t b = 0; b < m_blocks.size(); ++b) {
    if (m_blocks[b].empty())
      throw std::invalid_argument("ReductiveSpace: empty m block");
    const auto bs = static_cast<Eigen::Index>(m_blocks[b].size());
    if (m_alpha[b].rows() != bs || m_alpha[b].cols() != bs)
      throw std::invalid_argument("ReductiveSpace: alpha Gram size does not match its block");
    m_offsets.push_back(static_cast<int>(m_m.size()));
    for (int idx : m_blocks[b]) {
      claim(idx);
      m_m.push_back(idx);
      m_block_of.push_back(static_cast<int>(b));
    }
  }
  if (std::any_of(owner.begin(), owner.end(), [](int c) { return c == 0; }))
    throw std::invalid_argument("ReductiveSpace: h and m indices must cover the whole basis");
}

Eigen::VectorXd ReductiveSpace::to_m_coords(const AlgVector& v) const
{
  if (v.size() != dim())
    throw std::invalid_argument("ReductiveSpace: vector dimension mismatch");
  Eigen::VectorXd out(dim_m());
  for (int p = 0; p < dim_m(); ++p)
    out[p] = v[m_m[p]];
  return out;
}

Eigen::VectorXd ReductiveSpace::to_h_coords(const AlgVector& v) const
{
  if (v.size() != dim())
    throw std::invalid_argument("ReductiveSpace: vector dimension mismatch");
  Eigen::VectorXd out(dim_h());
  for (int p = 0; p < dim_h(); ++p)
    out[p] = v[m_h[p]];
  return out;
}

AlgVector ReductiveSpace::from_m_coords(const Eigen::VectorXd& m_coords) const
{
  if (m_coords.size() != dim_m())
    throw std::invalid_argument("ReductiveSpace: m-coordinate length mismatch");
  AlgVector out = AlgVector::Zero(dim());
  for (int p = 0; p < dim_m(); ++p)
    out[m_m[p]] = m_coords[p];
  return out;
}

AlgVector ReductiveSpace::from_h_coords(const Eigen::VectorXd& h_coords) const
{
  if (h_coords.size() != dim_h())
    throw std::invalid_argument("ReductiveSpace: h-coordinate length mismatch");
  AlgVector out = AlgVector::Zero(dim());
  for (int p = 0; p < dim_h(); ++p)
    out[m_h[p]] = h_coords[p];
  return out;
}

bool ReductiveSpace::in_m(const AlgVector& v) const
{
  return v.size() == dim() && std::all_of(m_h.begin(), m_h.end(), [&](int i) { return v[i] == 0.0; });
}

bool ReductiveSpace::in_h(const AlgVector& v) const
{
  return v.size() == dim() && std::all_of(m_m.begin(), m_m.end(), [&](int i) { return v[i] == 0.0; });
}

Eigen::MatrixXd ReductiveSpace::weighted_gram(std::span<const double> weights) const
{
  if (static_cast<int>(weights.size()) != block_count())
    throw std::invalid_argument("ReductiveSpace: one weight per block is required");
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(dim_m(), dim_m());
  for (int b = 0; b < block_count(); ++b) {
    const auto bs = m_alpha[b].rows();
    G.block(m_offsets[b], m_offsets[b], bs, bs) = weights[b] * m_alpha[b];
  }
  return G;
}

Eigen::MatrixXd ReductiveSpace::base_gram() const
{
  const std::vector<double> ones(block_count(), 1.0);
  return weighted_gram(ones);
}

AlgVector project_m(const ReductiveSpace& space, const AlgVector& v)
{
  return space.from_m_coords(space.to_m_coords(v));
}

AlgVector project_h(const ReductiveSpace& space, const AlgVector& v)
{
  return space.from_h_coords(space.to_h_coords(v));
}

const SpaceCheck& SpaceReport::check(const std::string& name) const
{
  for (const auto& c : checks)
    if (c.name == name)
      return c;
  throw std::out_of_range("SpaceReport: no check named " + name);
}

SpaceReport validate_space(const ReductiveSpace& space)
{
  const LieAlgebra& alg = space.algebra();
  SpaceReport report;
  auto add = [&](std::string name, double value, double tol, bool pass) {
    report.checks.push_back({std::move(name), value, tol, pass});
    report.pass = report.pass && pass;
  };

  double sub = 0.0;
  for (int a : space.h_indices())
    for (int b : space.h_indices())
      sub = std::max(sub, space.to_m_coords(alg.bracket(alg.basis_vector(a), alg.basis_vector(b))).norm());
  add("subalgebra", sub, kStructuralTol, sub < kStructuralTol);

  double red = 0.0;
  double block_leak = 0.0;
  for (int a : space.h_indices())
    for (int q = 0; q < space.dim_m(); ++q) {
      const AlgVector br = alg.bracket(alg.basis_vector(a), alg.basis_vector(space.m_indices()[q]));
      red = std::max(red, space.to_h_coords(br).norm());
      const Eigen::VectorXd br_m = space.to_m_coords(br);
      for (int p = 0; p < space.dim_m(); ++p)
        if (space.block_of(p) != space.block_of(q))
          block_leak = std::max(block_leak, std::abs(br_m[p]));
    }
  add("reductive", red, kStructuralTol, red < kStructuralTol);
  add("block_invariance", block_leak, kStructuralTol, block_leak < kStructuralTol);

  double asym = 0.0;
  double min_eig = std::numeric_limits<double>::infinity();
  for (int b = 0; b < space.block_count(); ++b) {
    const Eigen::MatrixXd& G = space.alpha(b);
    asym = std::max(asym, (G - G.transpose()).cwiseAbs().maxCoeff());
    const Eigen::MatrixXd sym = 0.5 * (G + G.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym, Eigen::EigenvaluesOnly);
    min_eig = std::min(min_eig, eig.eigenvalues().minCoeff());
  }
  add("alpha_symmetric", asym, kStructuralTol, asym < kStructuralTol);
  add("alpha_positive_definite", min_eig, 0.0, min_eig > 0.0);

  // alpha_i(ad(h)u, v) + alpha_i(u, ad(h)v) on each block, with ad(h) compressed to m_i.
  double inv = 0.0;
  for (int a : space.h_indices()) {
    const Eigen::MatrixXd ad_full = alg.ad(alg.basis_vector(a));
    for (int b = 0; b < space.block_count(); ++b) {
      const auto& idx = space.blocks()[b];
      const auto bs = static_cast<Eigen::Index>(idx.size());
      Eigen::MatrixXd ad_block(bs, bs);
      for (Eigen::Index r = 0; r < bs; ++r)
        for (Eigen::Index c = 0; c < bs; ++c)
          ad_block(r, c) = ad_full(idx[r], idx[c]);
      const Eigen::MatrixXd& G = space.alpha(b);
      const Eigen::MatrixXd skew = ad_block.transpose() * G + G * ad_block;
      inv = std::max(inv, skew.cwiseAbs().maxCoeff());
    }
  }
  add("alpha_invariance", inv, kInvarianceTol, inv < kInvarianceTol);
  return report;
}

MetricFamily::MetricFamily(ReductiveSpace space, Eigen::MatrixXd a) : m_space(std::move(space)), m_a(std::move(a))
{
  if (m_a.rows() < 1)
    throw std::invalid_argument("MetricFamily: at least one metric is required");
  if (m_a.cols() != m_space.block_count())
    throw std::invalid_argument("MetricFamily: coefficient rows must have one entry per block");
  if (!m_a.allFinite() || (m_a.array() <= 0.0).any())
    throw std::invalid_argument("MetricFamily: coefficients must be finite and strictly positive");
  for (int j = 0; j < k(); ++j) {
    const Eigen::VectorXd row = m_a.row(j).transpose();
    m_grams.push_back(m_space.weighted_gram(std::span<const double>(row.data(), row.size())));
  }
}

Eigen::MatrixXd gram_of_metric(const MetricFamily& family, int j)
{
  if (j < 0 || j >= family.k())
    throw std::out_of_range("gram_of_metric: metric index out of range");
  return family.grams()[j];
}

double evaluate_metric(const MetricFamily& family, int j, const AlgVector& u, const AlgVector& v)
{
  if (j < 0 || j >= family.k())
    throw std::out_of_range("evaluate_metric: metric index out of range");
  const auto& S = family.space();
  return S.to_m_coords(u).dot(family.grams()[j] * S.to_m_coords(v));
}

} // namespace gofinsler
