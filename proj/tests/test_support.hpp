#pragma once

#include "gofinsler/s7_catalog.hpp"

#include <random>

namespace gofinsler::testing {

inline const s7::S7Space& s7_space()
{
  static const s7::S7Space s = s7::build_s7_space();
  return s;
}

inline MetricFamily s7_family(const Eigen::MatrixXd& a)
{
  return MetricFamily(s7_space().space, a);
}

inline Eigen::MatrixXd rows(std::initializer_list<std::initializer_list<double>> r)
{
  Eigen::MatrixXd M(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(r.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : r) {
    Eigen::Index j = 0;
    for (double v : row)
      M(i, j++) = v;
    ++i;
  }
  return M;
}

/// S7 vector from m-coordinates (x1..x4, z1..z3).
inline AlgVector s7_y(std::initializer_list<double> m)
{
  AlgVector y = AlgVector::Zero(11);
  Eigen::Index i = 0;
  for (double v : m)
    y[i++] = v;
  return y;
}

inline Eigen::VectorXd vec(std::initializer_list<double> v)
{
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v)
    out[i++] = x;
  return out;
}

inline Eigen::VectorXd gaussian(int n, std::mt19937_64& rng)
{
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(n);
  for (auto& x : v)
    x = normal(rng);
  return v;
}

inline AlgVector random_m(const ReductiveSpace& S, std::mt19937_64& rng)
{
  return S.from_m_coords(gaussian(S.dim_m(), rng));
}

inline AlgVector random_h(const ReductiveSpace& S, std::mt19937_64& rng)
{
  return S.from_h_coords(gaussian(S.dim_h(), rng));
}

/// Commutative algebra with every index in m, one block per coordinate.
inline ReductiveSpace abelian_space(int n, bool with_h)
{
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    labels.push_back("e" + std::to_string(i));
  LieAlgebra alg(labels, {});
  std::vector<int> h;
  std::vector<std::vector<int>> blocks;
  std::vector<Eigen::MatrixXd> alpha;
  for (int i = 0; i < n; ++i) {
    if (with_h && i == 0) {
      h.push_back(i);
      continue;
    }
    blocks.push_back({i});
    alpha.push_back(Eigen::MatrixXd::Identity(1, 1));
  }
  return ReductiveSpace(std::move(alg), h, blocks, alpha);
}

} // namespace gofinsler::testing
