#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace fvs {

enum class ScanTarget { VanLeerH, Ausm2Discriminant };

// CLI spellings: "vanleer-h", "ausm2-disc".
std::string_view to_string(ScanTarget t);
std::optional<ScanTarget> parse_scan_target(std::string_view name);

// Target value at (gamma, M) with a = rho = 1.
double evaluate_target(ScanTarget t, double gamma, double mach);

struct ScanConfig {
  ScanTarget target = ScanTarget::VanLeerH;
  double gamma_lo = 1.0;
  double gamma_hi = 3.0;
  double mach_lo = -1.0;
  double mach_hi = 1.0;
  int n_gamma = 1024;
  int n_mach = 1024;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 42;
  double tolerance = 1e-12;  // a value counts as negative below -tolerance
  unsigned threads = 0;      // 0: hardware concurrency
};

// Throws DomainError on unordered ranges, ranges outside [1,3] x [-1,1],
// grid dimensions below 2 or a negative tolerance.
void validate(const ScanConfig& cfg);

inline constexpr double kBoundaryTolerance = 1e-9;

struct ScanReport {
  // +inf when no sample was evaluated ("empty").
  double min_value = std::numeric_limits<double>::infinity();
  double argmin_gamma = std::numeric_limits<double>::quiet_NaN();
  double argmin_mach = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t negative_count = 0;
  std::uint64_t total = 0;
  // argmin within kBoundaryTolerance of a range endpoint in gamma or M
  bool boundary_min = false;

  bool empty() const { return total == 0; }
};

// Tensor grid including both endpoints of each range.
ScanReport grid_scan(const ScanConfig& cfg);

// Union of two reports over the same target and ranges.
ScanReport combine(const ScanConfig& cfg, const ScanReport& a, const ScanReport& b);

// SplitMix64, counter-based: sample i takes outputs 2i (gamma) and 2i+1 (M)
// of the stream seeded with cfg.seed. gamma is uniform on [lo, hi), M on the
// open interval (lo, hi). The report does not depend on the thread count.
ScanReport random_scan(const ScanConfig& cfg);

// k-th output of SplitMix64 started from `seed` (k = 0 is the first output).
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t k);

struct ScanPoint {
  double gamma;
  double mach;
};

// Node (i, j) of the scan grid.
ScanPoint grid_node(const ScanConfig& cfg, int i, int j);
ScanPoint random_sample(const ScanConfig& cfg, std::uint64_t index);

struct RefineResult {
  double value = 0.0;
  double gamma = 0.0;
  double mach = 0.0;
  int evaluations = 0;
  bool converged = false;  // false: stopped at the evaluation limit
};

struct RefineOptions {
  double tol_x = 1e-10;
  double tol_fun = 1e-10;
  int max_evaluations = 10000;
  std::array<double, 2> lo = {1.0, -1.0};
  std::array<double, 2> hi = {3.0, 1.0};
};

// Nelder-Mead (reflection 1, expansion 2, contraction 1/2, shrink 1/2), every
// trial point clamped to the box. Initial simplex perturbs each coordinate by
// 5% (0.00025 when it is zero). Throws DomainError if start is outside the box.
RefineResult refine_min(const std::function<double(double, double)>& f, ScanPoint start,
                        const RefineOptions& opts = {});
RefineResult refine_min(ScanTarget target, ScanPoint start, const RefineOptions& opts = {});

// One row per grid node, header "gamma,mach,value".
void write_grid_csv(const ScanConfig& cfg, const std::string& path);

// Header "target,min_value,argmin_gamma,argmin_mach,negative_count,total,seed".
void write_summary_csv(const ScanConfig& cfg, const ScanReport& report, const std::string& path);

}  // namespace fvs
