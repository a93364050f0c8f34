#include "ladderlab/checkpoint_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <vector>

#include "ladderlab/errors.hpp"

namespace ladderlab {

namespace fs = std::filesystem;

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_real(const std::string& s) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) throw IoError("not a real number: '" + s + "'");
  return v;
}

fs::path manifest_path(const fs::path& csv) { return fs::path(csv.string() + ".manifest.json"); }
fs::path moments_path(const fs::path& csv) { return fs::path(csv.string() + ".moments.csv"); }

namespace {

std::ofstream open_out(const fs::path& p) {
  if (p.has_parent_path() && !p.parent_path().empty()) {
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + p.string());
  return out;
}

void close_checked(std::ofstream& out, const fs::path& p) {
  out.close();
  if (!out) throw IoError("write failed for " + p.string());
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string chomp(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) s.pop_back();
  return s;
}

}  // namespace

void save_checkpoints(const CumulativeTable& table, const fs::path& csv) {
  if (table.empty()) throw PreconditionError("save_checkpoints: empty table");
  {
    std::ofstream out = open_out(csv);
    out << "t,I\n";
    const auto t = table.t();
    const auto I = table.I();
    for (std::size_t k = 0; k < t.size(); ++k) out << format_real(t[k]) << ',' << format_real(I[k]) << '\n';
    close_checked(out, csv);
  }
  {
    const auto& m = table.meta();
    nlohmann::ordered_json j;
    j["t_max"] = m.t_max;
    j["max_step"] = m.max_step;
    j["rel_tol"] = m.rel_tol;
    j["abs_tol"] = m.abs_tol;
    j["engine_version"] = m.engine_version;
    j["A"] = table.A();
    j["A_observed"] = m.A_observed;
    j["A_safety_factor"] = kTailSafety;
    j["calibration_range"] = {kCalibrationLo, m.calibration_hi};
    j["knots"] = table.t().size();
    j["moments"] = table.has_moments() ? moments_path(csv).filename().string() : std::string();
    const fs::path mp = manifest_path(csv);
    std::ofstream out = open_out(mp);
    out << j.dump(2) << '\n';
    close_checked(out, mp);
  }
  if (table.has_moments()) {
    const fs::path mp = moments_path(csv);
    std::ofstream out = open_out(mp);
    out << "interval";
    for (int j = 0; j < kMomentCount; ++j) out << ",m" << j;
    out << '\n';
    for (std::size_t k = 0; k < table.intervals(); ++k) {
      out << k;
      for (double v : table.moments(k)) out << ',' << format_real(v);
      out << '\n';
    }
    close_checked(out, mp);
  }
}

CumulativeTable load_checkpoints(const fs::path& csv) {
  std::ifstream in(csv, std::ios::binary);
  if (!in) throw IoError("cannot read " + csv.string());
  std::string line;
  if (!std::getline(in, line) || chomp(line) != "t,I") throw IoError(csv.string() + ": expected header 't,I'");
  std::vector<double> t, I;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    line = chomp(line);
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != 2) throw IoError(csv.string() + ": row " + std::to_string(row) + " needs 2 columns");
    t.push_back(parse_real(cells[0]));
    I.push_back(parse_real(cells[1]));
  }

  const fs::path mp = manifest_path(csv);
  std::ifstream min(mp, std::ios::binary);
  if (!min) throw IoError("cannot read manifest " + mp.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(min);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(mp.string() + ": " + e.what());
  }
  CumulativeTable::Meta meta;
  try {
    meta.t_max = j.at("t_max").get<double>();
    meta.max_step = j.at("max_step").get<double>();
    meta.rel_tol = j.at("rel_tol").get<double>();
    meta.abs_tol = j.at("abs_tol").get<double>();
    meta.engine_version = j.at("engine_version").get<std::string>();
    meta.A_observed = j.contains("A_observed") ? j.at("A_observed").get<double>() : j.at("A").get<double>() / kTailSafety;
    meta.calibration_hi = j.contains("calibration_range") ? j.at("calibration_range").at(1).get<double>() : meta.t_max;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(mp.string() + ": " + e.what());
  }
  if (meta.engine_version != kEngineVersion) {
    throw IoError(mp.string() + ": engine_version '" + meta.engine_version + "' does not match '" + kEngineVersion + "'");
  }

  std::vector<double> moments;
  const fs::path mop = moments_path(csv);
  std::ifstream mom(mop, std::ios::binary);
  if (mom) {
    if (!std::getline(mom, line)) throw IoError(mop.string() + ": empty file");
    const std::size_t intervals = t.empty() ? 0 : t.size() - 1;
    moments.reserve(intervals * kMomentCount);
    std::size_t k = 0;
    while (std::getline(mom, line)) {
      line = chomp(line);
      if (line.empty()) continue;
      const auto cells = split(line);
      if (cells.size() != kMomentCount + 1 || cells[0] != std::to_string(k))
        throw IoError(mop.string() + ": malformed row for interval " + std::to_string(k));
      for (int c = 1; c <= kMomentCount; ++c) moments.push_back(parse_real(cells[c]));
      ++k;
    }
  }
  return CumulativeTable(meta, std::move(t), std::move(I), std::move(moments));
}

}  // namespace ladderlab
