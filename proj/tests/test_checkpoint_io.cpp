#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include <json.hpp>

#include "fixtures.hpp"
#include "ladderlab/checkpoint_io.hpp"
#include "ladderlab/errors.hpp"

using namespace ladderlab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ladderlab-unit";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_SUITE("checkpoint_io") {
  TEST_CASE("format_real round-trips") {
    for (double v : {0.0, 1.0 / 3.0, 75272.114989777678, 1e-300, 6.02214076e23}) CHECK(parse_real(format_real(v)) == v);
    CHECK_THROWS_AS(parse_real("1.5x"), IoError);
    CHECK_THROWS_AS(parse_real(""), IoError);
  }

  TEST_CASE("save and load are lossless and deterministic") {
    const CumulativeTable t = build_checkpoints(1500.0);
    const fs::path a = scratch("a.csv"), b = scratch("b.csv");
    save_checkpoints(t, a);
    save_checkpoints(t, b);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(moments_path(a)) == slurp(moments_path(b)));
    const CumulativeTable u = load_checkpoints(a);
    REQUIRE(u.t().size() == t.t().size());
    for (std::size_t k = 0; k < t.t().size(); ++k) {
      CHECK(u.t()[k] == t.t()[k]);
      CHECK(u.I()[k] == t.I()[k]);
    }
    CHECK(u.meta().A_observed == t.meta().A_observed);
    REQUIRE(u.has_moments());
    for (std::size_t k = 0; k < t.intervals(); k += 97)
      for (int j = 0; j < kMomentCount; ++j) CHECK(u.moments(k)[j] == t.moments(k)[j]);
    const auto manifest = nlohmann::json::parse(slurp(manifest_path(a)));
    CHECK(manifest["engine_version"] == kEngineVersion);
    CHECK(manifest["t_max"].get<double>() == 1500.0);
  }

  TEST_CASE("missing moments give an I-only table") {
    const fs::path a = scratch("nomom.csv");
    save_checkpoints(build_checkpoints(200.0), a);
    fs::remove(moments_path(a));
    const CumulativeTable u = load_checkpoints(a);
    CHECK_FALSE(u.has_moments());
    CHECK(hl_integral(100.0, u) > 0.0);
  }

  TEST_CASE("malformed files are rejected") {
    const fs::path a = scratch("bad.csv");
    save_checkpoints(build_checkpoints(200.0), a);
    CHECK_THROWS_AS(load_checkpoints(scratch("does-not-exist.csv")), IoError);

    std::string body = slurp(a);
    {
      std::ofstream(a, std::ios::binary) << "x,y\n" << body.substr(body.find('\n') + 1);
    }
    CHECK_THROWS_AS(load_checkpoints(a), IoError);

    {
      std::ofstream(a, std::ios::binary) << body;
    }
    auto manifest = nlohmann::ordered_json::parse(slurp(manifest_path(a)));
    manifest["engine_version"] = "something-else";
    {
      std::ofstream(manifest_path(a), std::ios::binary) << manifest.dump(2);
    }
    CHECK_THROWS_AS(load_checkpoints(a), IoError);
  }

  TEST_CASE("non-monotone data is rejected") {
    CumulativeTable::Meta meta;
    meta.t_max = 2.0;
    CHECK_THROWS_AS(CumulativeTable(meta, {0.0, 1.0, 2.0}, {0.0, 2.0, 1.0}, {}), PreconditionError);
    CHECK_THROWS_AS(CumulativeTable(meta, {0.0, 2.0, 2.0}, {0.0, 1.0, 2.0}, {}), PreconditionError);
    CHECK_THROWS_AS(CumulativeTable(meta, {1.0, 2.0}, {0.0, 1.0}, {}), PreconditionError);
  }
}
