#pragma once

#include <filesystem>
#include <string>

#include "ladderlab/quadrature.hpp"

namespace ladderlab {

// Sidecar paths next to a checkpoint CSV.
std::filesystem::path manifest_path(const std::filesystem::path& csv);
std::filesystem::path moments_path(const std::filesystem::path& csv);

// Writes `t,I` rows, the manifest (t_max, max_step, rel_tol, abs_tol,
// engine_version, A) and the moments file. Throws IoError.
void save_checkpoints(const CumulativeTable& table, const std::filesystem::path& csv);

// Reads and validates all three files. A missing moments file yields a table
// without moments (usable for I(T) only). Throws IoError or PreconditionError.
CumulativeTable load_checkpoints(const std::filesystem::path& csv);

// %.17g
std::string format_real(double v);
double parse_real(const std::string& s);

}  // namespace ladderlab
