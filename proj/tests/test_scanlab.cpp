#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fvs/scanlab.hpp"
#include "fvs/spectral.hpp"
#include "fvs/state_space.hpp"

using namespace fvs;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("fvs_scan_" + name)).string();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

bool same(const ScanReport& a, const ScanReport& b) {
  auto eq = [](double x, double y) { return x == y || (std::isnan(x) && std::isnan(y)); };
  return eq(a.min_value, b.min_value) && eq(a.argmin_gamma, b.argmin_gamma) &&
         eq(a.argmin_mach, b.argmin_mach) && a.negative_count == b.negative_count &&
         a.total == b.total && a.boundary_min == b.boundary_min;
}

}  // namespace

TEST_SUITE("scanlab") {

TEST_CASE("target names") {
  CHECK(parse_scan_target("vanleer-h") == ScanTarget::VanLeerH);
  CHECK(parse_scan_target("ausm2-disc") == ScanTarget::Ausm2Discriminant);
  CHECK_FALSE(parse_scan_target("h").has_value());
  CHECK(to_string(ScanTarget::Ausm2Discriminant) == "ausm2-disc");
}

TEST_CASE("config validation") {
  ScanConfig cfg;
  cfg.n_gamma = 1;
  CHECK_THROWS_AS(grid_scan(cfg), DomainError);
  cfg = {};
  cfg.gamma_lo = 0.5;
  CHECK_THROWS_AS(grid_scan(cfg), DomainError);
  cfg = {};
  cfg.mach_lo = 0.5;
  cfg.mach_hi = 0.2;
  CHECK_THROWS_AS(random_scan(cfg), DomainError);
  cfg = {};
  cfg.tolerance = -1.0;
  CHECK_THROWS_AS(random_scan(cfg), DomainError);
}

TEST_CASE("corner grid") {
  ScanConfig cfg;
  cfg.n_gamma = cfg.n_mach = 2;
  const ScanReport r = grid_scan(cfg);
  CHECK(r.total == 4);
  CHECK(r.min_value == 64.0);
  CHECK(r.argmin_gamma == 1.0);
  CHECK(r.argmin_mach == 1.0);
  CHECK(r.boundary_min);
  CHECK(h_vanleer(1, -1) == 576.0);
  CHECK(h_vanleer(3, 1) == 2304.0);
  CHECK(h_vanleer(3, -1) == 9216.0);
}

TEST_CASE("512 x 512 grids") {
  ScanConfig cfg;
  cfg.n_gamma = cfg.n_mach = 512;
  ScanReport r = grid_scan(cfg);
  CHECK(r.min_value == doctest::Approx(64.0).epsilon(1e-14));
  CHECK(r.argmin_gamma == 1.0);
  CHECK(r.argmin_mach == 1.0);
  CHECK(r.negative_count == 0);

  cfg.target = ScanTarget::Ausm2Discriminant;
  r = grid_scan(cfg);
  CHECK(r.min_value == 0.0);
  CHECK(r.argmin_mach == -1.0);
  CHECK(r.negative_count == 0);
  CHECK(r.boundary_min);
}

TEST_CASE("random scans") {
  ScanConfig cfg;
  cfg.samples = 100000;
  ScanReport r = random_scan(cfg);
  CHECK(r.total == 100000);
  CHECK(r.negative_count == 0);
  CHECK(r.min_value > 64.0);

  cfg.target = ScanTarget::Ausm2Discriminant;
  r = random_scan(cfg);
  CHECK(r.negative_count == 0);
  CHECK(r.min_value >= 0.0);
  CHECK(r.argmin_mach < -0.9);

  cfg.samples = 0;
  r = random_scan(cfg);
  CHECK(r.empty());
  CHECK(r.min_value == std::numeric_limits<double>::infinity());
}

TEST_CASE("samples stay inside the box, M in the open interval") {
  ScanConfig cfg;
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const ScanPoint p = random_sample(cfg, i);
    REQUIRE(p.gamma >= 1.0);
    REQUIRE(p.gamma < 3.0);
    REQUIRE(p.mach > -1.0);
    REQUIRE(p.mach < 1.0);
  }
}

TEST_CASE("SplitMix64 reference outputs") {
  // First outputs of SplitMix64 seeded with 0 and with 42.
  CHECK(splitmix64_at(0, 0) == 0xE220A8397B1DCDAFULL);
  CHECK(splitmix64_at(0, 1) == 0x6E789E6AA1B965F4ULL);
  CHECK(splitmix64_at(42, 0) == 0xBDD732262FEB6E95ULL);
}

TEST_CASE("determinism across thread counts and seeds") {
  ScanConfig cfg;
  cfg.samples = 50000;
  cfg.n_gamma = cfg.n_mach = 97;
  cfg.target = ScanTarget::Ausm2Discriminant;
  cfg.threads = 1;
  const ScanReport g1 = grid_scan(cfg), r1 = random_scan(cfg);
  for (unsigned t : {2u, 3u, 8u}) {
    cfg.threads = t;
    CHECK(same(grid_scan(cfg), g1));
    CHECK(same(random_scan(cfg), r1));
  }
  cfg.seed = 43;
  CHECK_FALSE(same(random_scan(cfg), r1));
}

TEST_CASE("combine") {
  ScanConfig cfg;
  cfg.n_gamma = cfg.n_mach = 2;
  cfg.samples = 10;
  const ScanReport g = grid_scan(cfg), r = random_scan(cfg);
  const ScanReport c = combine(cfg, g, r);
  CHECK(c.total == 14);
  CHECK(c.min_value == 64.0);
  CHECK(same(combine(cfg, r, g), c));
  CHECK(same(combine(cfg, ScanReport{}, r), r));
}

TEST_CASE("refinement") {
  RefineResult r = refine_min(ScanTarget::VanLeerH, {1.5, 0.5});
  CHECK(r.value == doctest::Approx(64.0).epsilon(1e-8));
  CHECK(std::abs(r.gamma - 1.0) < 1e-3);
  CHECK(std::abs(r.mach - 1.0) < 1e-3);
  CHECK(r.converged);

  r = refine_min(ScanTarget::Ausm2Discriminant, {2.0, -0.9});
  CHECK(std::abs(r.value) <= 1e-12);
  CHECK(r.mach == -1.0);

  r = refine_min([](double, double) { return 5.0; }, {2.0, 0.3});
  CHECK(r.value == 5.0);
  CHECK(r.gamma == 2.0);
  CHECK(r.mach == 0.3);

  RefineOptions tight;
  tight.max_evaluations = 20;
  r = refine_min([](double g, double m) { return (g - 2) * (g - 2) + (m - 0.1) * (m - 0.1); }, {1.2, -0.5},
                 tight);
  CHECK_FALSE(r.converged);
  CHECK(r.evaluations <= 22);

  CHECK_THROWS_AS(refine_min(ScanTarget::VanLeerH, {0.5, 0.0}), DomainError);
}

TEST_CASE("CSV emission") {
  ScanConfig cfg;
  cfg.n_gamma = cfg.n_mach = 2;
  const std::string path = temp_path("grid.csv");
  write_grid_csv(cfg, path);
  const auto lines = read_lines(path);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "gamma,mach,value");
  CHECK(lines[1] == "1,-1,576");
  for (const auto& l : lines) CHECK(l.find('\r') == std::string::npos);

  cfg.n_gamma = 33;
  cfg.n_mach = 17;
  cfg.target = ScanTarget::Ausm2Discriminant;
  write_grid_csv(cfg, path);
  const auto rows = read_lines(path);
  REQUIRE(rows.size() == 33 * 17 + 1);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::istringstream ss(rows[i]);
    std::string g, m, v;
    std::getline(ss, g, ',');
    std::getline(ss, m, ',');
    std::getline(ss, v, ',');
    best = std::min(best, std::stod(v));
  }
  const ScanReport rep = grid_scan(cfg);
  CHECK(best == rep.min_value);

  const std::string summary = temp_path("summary.csv");
  write_summary_csv(cfg, rep, summary);
  const auto s = read_lines(summary);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == "target,min_value,argmin_gamma,argmin_mach,negative_count,total,seed");
  CHECK(s[1].rfind("ausm2-disc,", 0) == 0);
  std::remove(path.c_str());
  std::remove(summary.c_str());

  try {
    write_grid_csv(cfg, "/nonexistent-dir/grid.csv");
    FAIL("expected an I/O error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent-dir/grid.csv") != std::string::npos);
  }
}

TEST_CASE("interior positivity") {
  for (auto t : {ScanTarget::VanLeerH, ScanTarget::Ausm2Discriminant}) {
    ScanConfig cfg;
    cfg.target = t;
    cfg.gamma_lo = 1.01;
    cfg.gamma_hi = 2.99;
    cfg.mach_lo = -0.99;
    cfg.mach_hi = 0.99;
    cfg.n_gamma = cfg.n_mach = 256;
    CHECK(grid_scan(cfg).min_value > 0.0);
  }
}

}
