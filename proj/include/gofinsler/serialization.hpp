#pragma once

#include "gofinsler/geodesic.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>

namespace gofinsler {

using json = nlohmann::json;

/// {"dim": n, "basis": [...], "brackets": [{"i": .., "j": .., "coeffs": {"k": value}}]}
/// with i < j only. Indices are written 0-based; on input "i", "j" and the
/// coefficient keys may also be basis labels.
json algebra_to_json(const LieAlgebra& alg);
LieAlgebra algebra_from_json(const json& doc);

struct SpaceDocument
{
  ReductiveSpace space;
  std::optional<Eigen::MatrixXd> family_a;
};

/// {"algebra": ..., "h": [labels], "m_blocks": [[labels], ...],
///  "alpha": [[row-major Gram], ...], "family_a": [[a_ji], ...]}
json space_to_json(const ReductiveSpace& space, const std::optional<Eigen::MatrixXd>& family_a = std::nullopt);
SpaceDocument space_from_json(const json& doc);

/// Throws std::runtime_error when the file cannot be read or parsed.
SpaceDocument load_space_file(const std::string& path);

/// {"y": [m-coords], "xi": [h-coords], "residual": r, "rank": k, "unique": bool}
json result_to_json(const ReductiveSpace& space, const GeodesicGraphResult& result);

/// Shortest decimal string that round-trips to the same double (at most 17 digits).
std::string format_double(double value);

/// Header "sample,<m labels>,residual", then one row per sample.
void write_scan_csv(std::ostream& out, const ReductiveSpace& space, const ScanReport& report);

} // namespace gofinsler
