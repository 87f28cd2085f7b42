#include "gofinsler/serialization.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace gofinsler {

namespace {

int resolve_index(const std::vector<std::string>& labels, const json& key)
{
  if (key.is_number_integer())
    return key.get<int>();
  const std::string s = key.get<std::string>();
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == s)
      return static_cast<int>(i);
  int idx = -1;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), idx);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("unknown basis label '" + s + "'");
  return idx;
}

std::vector<int> resolve_labels(const LieAlgebra& alg, const json& arr)
{
  std::vector<int> out;
  for (const auto& item : arr) {
    const int idx = resolve_index(alg.labels(), item);
    if (idx < 0 || idx >= alg.dim())
      throw std::invalid_argument("basis reference out of range");
    out.push_back(idx);
  }
  return out;
}

json vector_json(const Eigen::VectorXd& v)
{
  json arr = json::array();
  for (double x : v)
    arr.push_back(x);
  return arr;
}

} // namespace

json algebra_to_json(const LieAlgebra& alg)
{
  json brackets = json::array();
  for (const auto& e : alg.upper_brackets()) {
    json coeffs = json::object();
    for (const auto& [k, v] : e.coeffs)
      coeffs[std::to_string(k)] = v;
    brackets.push_back({{"i", e.i}, {"j", e.j}, {"coeffs", coeffs}});
  }
  return {{"dim", alg.dim()}, {"basis", alg.labels()}, {"brackets", brackets}};
}

LieAlgebra algebra_from_json(const json& doc)
{
  try {
    auto labels = doc.at("basis").get<std::vector<std::string>>();
    if (doc.contains("dim") && doc.at("dim").get<int>() != static_cast<int>(labels.size()))
      throw std::invalid_argument("algebra: dim does not match the basis length");
    std::vector<BracketEntry> entries;
    if (doc.contains("brackets"))
      for (const auto& b : doc.at("brackets")) {
        BracketEntry e{resolve_index(labels, b.at("i")), resolve_index(labels, b.at("j")), {}};
        for (const auto& [key, value] : b.at("coeffs").items())
          e.coeffs[resolve_index(labels, json(key))] = value.get<double>();
        entries.push_back(std::move(e));
      }
    return LieAlgebra(std::move(labels), entries);
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("algebra: malformed document: ") + ex.what());
  }
}

json space_to_json(const ReductiveSpace& space, const std::optional<Eigen::MatrixXd>& family_a)
{
  const auto& labels = space.algebra().labels();
  json h = json::array();
  for (int i : space.h_indices())
    h.push_back(labels[i]);
  json blocks = json::array();
  json alpha = json::array();
  for (int b = 0; b < space.block_count(); ++b) {
    json blk = json::array();
    for (int i : space.blocks()[b])
      blk.push_back(labels[i]);
    blocks.push_back(blk);
    json gram = json::array();
    const Eigen::MatrixXd& G = space.alpha(b);
    for (Eigen::Index r = 0; r < G.rows(); ++r)
      for (Eigen::Index c = 0; c < G.cols(); ++c)
        gram.push_back(G(r, c));
    alpha.push_back(gram);
  }
  json doc = {{"algebra", algebra_to_json(space.algebra())}, {"h", h}, {"m_blocks", blocks}, {"alpha", alpha}};
  if (family_a) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < family_a->rows(); ++r)
      rows.push_back(vector_json(family_a->row(r).transpose()));
    doc["family_a"] = rows;
  }
  return doc;
}

SpaceDocument space_from_json(const json& doc)
{
  try {
    LieAlgebra alg = algebra_from_json(doc.at("algebra"));
    std::vector<int> h = doc.contains("h") ? resolve_labels(alg, doc.at("h")) : std::vector<int>{};
    std::vector<std::vector<int>> blocks;
    for (const auto& blk : doc.at("m_blocks"))
      blocks.push_back(resolve_labels(alg, blk));

    std::vector<Eigen::MatrixXd> alpha;
    if (doc.contains("alpha")) {
      const auto& arr = doc.at("alpha");
      if (arr.size() != blocks.size())
        throw std::invalid_argument("space: one alpha Gram per block is required");
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto vals = arr[b].get<std::vector<double>>();
        const auto n = static_cast<Eigen::Index>(blocks[b].size());
        if (static_cast<Eigen::Index>(vals.size()) != n * n)
          throw std::invalid_argument("space: alpha Gram has the wrong number of entries");
        Eigen::MatrixXd G(n, n);
        for (Eigen::Index r = 0; r < n; ++r)
          for (Eigen::Index c = 0; c < n; ++c)
            G(r, c) = vals[r * n + c];
        alpha.push_back(G);
      }
    } else {
      for (const auto& blk : blocks)
        alpha.push_back(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(blk.size()),
                                                  static_cast<Eigen::Index>(blk.size())));
    }

    std::optional<Eigen::MatrixXd> family;
    if (doc.contains("family_a")) {
      const auto rows = doc.at("family_a").get<std::vector<std::vector<double>>>();
      if (rows.empty())
        throw std::invalid_argument("space: family_a must have at least one row");
      Eigen::MatrixXd a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size())
          throw std::invalid_argument("space: family_a rows differ in length");
        for (std::size_t c = 0; c < rows[r].size(); ++c)
          a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
      }
      family = a;
    }
    return {ReductiveSpace(std::move(alg), std::move(h), std::move(blocks), std::move(alpha)), family};
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("space: malformed document: ") + ex.what());
  }
}

SpaceDocument load_space_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open space file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& ex) {
    throw std::invalid_argument("space file '" + path + "' is not valid JSON: " + ex.what());
  }
  return space_from_json(doc);
}

json result_to_json(const ReductiveSpace& space, const GeodesicGraphResult& result)
{
  return {{"y", vector_json(space.to_m_coords(result.y))},
          {"xi", vector_json(space.to_h_coords(result.xi))},
          {"residual", result.residual_norm},
          {"rank", result.rank},
          {"unique", result.unique}};
}

std::string format_double(double value)
{
  if (!std::isfinite(value))
    return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc())
    throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

void write_scan_csv(std::ostream& out, const ReductiveSpace& space, const ScanReport& report)
{
  out << "sample";
  for (int i : space.m_indices())
    out << ',' << space.algebra().labels()[i];
  out << ",residual\n";
  for (std::size_t s = 0; s < report.samples.size(); ++s) {
    out << s;
    const Eigen::VectorXd ym = space.to_m_coords(report.samples[s].y);
    for (double v : ym)
      out << ',' << format_double(v);
    out << ',' << format_double(report.samples[s].residual) << '\n';
  }
}

} // namespace gofinsler
