#include "fvs/scanlab.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "fvs/format.hpp"
#include "fvs/spectral.hpp"
#include "fvs/state_space.hpp"

namespace fvs {

namespace {

struct Partial {
  double value = std::numeric_limits<double>::infinity();
  double gamma = std::numeric_limits<double>::quiet_NaN();
  double mach = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t negative = 0;
  std::uint64_t total = 0;
};

bool lex_less(double v1, double g1, double m1, double v2, double g2, double m2) {
  if (v1 != v2) return v1 < v2;
  if (g1 != g2) return g1 < g2;
  return m1 < m2;
}

void absorb(Partial& acc, const Partial& other) {
  acc.negative += other.negative;
  acc.total += other.total;
  if (other.total == 0) return;
  if (acc.total == other.total ||
      lex_less(other.value, other.gamma, other.mach, acc.value, acc.gamma, acc.mach)) {
    acc.value = other.value;
    acc.gamma = other.gamma;
    acc.mach = other.mach;
  }
}

unsigned worker_count(unsigned requested, std::uint64_t total) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  constexpr std::uint64_t kMinPerWorker = 4096;
  const std::uint64_t useful = std::max<std::uint64_t>(1, total / kMinPerWorker);
  return static_cast<unsigned>(std::min<std::uint64_t>(n, useful));
}

// Evaluates point(k) for k in [0, total) and reduces deterministically.
template <class PointFn>
Partial reduce(const ScanConfig& cfg, std::uint64_t total, PointFn point) {
  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    Partial p;
    for (std::uint64_t k = begin; k < end; ++k) {
      const ScanPoint x = point(k);
      const double v = evaluate_target(cfg.target, x.gamma, x.mach);
      if (v < -cfg.tolerance) ++p.negative;
      if (p.total == 0 || lex_less(v, x.gamma, x.mach, p.value, p.gamma, p.mach)) {
        p.value = v;
        p.gamma = x.gamma;
        p.mach = x.mach;
      }
      ++p.total;
    }
    return p;
  };

  const unsigned workers = worker_count(cfg.threads, total);
  if (workers <= 1) return run_range(0, total);

  std::vector<Partial> parts(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(total, w * chunk);
    const std::uint64_t end = std::min(total, begin + chunk);
    pool.emplace_back([&, w, begin, end] { parts[w] = run_range(begin, end); });
  }
  for (auto& t : pool) t.join();
  Partial out;
  for (const auto& p : parts) absorb(out, p);
  return out;
}

ScanReport finish(const ScanConfig& cfg, const Partial& p) {
  ScanReport r;
  r.total = p.total;
  r.negative_count = p.negative;
  if (p.total == 0) return r;
  r.min_value = p.value;
  r.argmin_gamma = p.gamma;
  r.argmin_mach = p.mach;
  auto near = [](double x, double y) { return std::abs(x - y) <= kBoundaryTolerance; };
  r.boundary_min = near(p.gamma, cfg.gamma_lo) || near(p.gamma, cfg.gamma_hi) ||
                   near(p.mach, cfg.mach_lo) || near(p.mach, cfg.mach_hi);
  return r;
}

double unit_closed_open(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }
double unit_open(std::uint64_t x) { return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53; }

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing: " + std::strerror(errno));
  }
  return out;
}

void close_checked(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
  out.close();
}

}  // namespace

std::string_view to_string(ScanTarget t) {
  return t == ScanTarget::VanLeerH ? "vanleer-h" : "ausm2-disc";
}

std::optional<ScanTarget> parse_scan_target(std::string_view name) {
  if (name == "vanleer-h") return ScanTarget::VanLeerH;
  if (name == "ausm2-disc") return ScanTarget::Ausm2Discriminant;
  return std::nullopt;
}

double evaluate_target(ScanTarget t, double gamma, double mach) {
  return t == ScanTarget::VanLeerH ? h_vanleer(gamma, mach) : ausm2_discriminant(gamma, mach, 1.0);
}

void validate(const ScanConfig& cfg) {
  auto fail = [](const std::string& what) { throw DomainError("scan config: " + what); };
  if (!(cfg.gamma_lo < cfg.gamma_hi)) fail("gamma range must satisfy lo < hi");
  if (!(cfg.mach_lo < cfg.mach_hi)) fail("mach range must satisfy lo < hi");
  if (cfg.gamma_lo < 1.0 || cfg.gamma_hi > 3.0) fail("gamma range must lie inside [1, 3]");
  if (cfg.mach_lo < -1.0 || cfg.mach_hi > 1.0) fail("mach range must lie inside [-1, 1]");
  if (cfg.n_gamma < 2 || cfg.n_mach < 2) fail("grid dimensions must be >= 2");
  if (!(cfg.tolerance >= 0.0)) fail("tolerance must be >= 0");
}

ScanPoint grid_node(const ScanConfig& cfg, int i, int j) {
  auto lerp = [](double lo, double hi, int k, int n) {
    if (k == n - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
  };
  return {lerp(cfg.gamma_lo, cfg.gamma_hi, i, cfg.n_gamma),
          lerp(cfg.mach_lo, cfg.mach_hi, j, cfg.n_mach)};
}

ScanReport combine(const ScanConfig& cfg, const ScanReport& a, const ScanReport& b) {
  Partial pa{a.min_value, a.argmin_gamma, a.argmin_mach, a.negative_count, a.total};
  const Partial pb{b.min_value, b.argmin_gamma, b.argmin_mach, b.negative_count, b.total};
  absorb(pa, pb);
  return finish(cfg, pa);
}

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + (k + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ScanPoint random_sample(const ScanConfig& cfg, std::uint64_t index) {
  const double ug = unit_closed_open(splitmix64_at(cfg.seed, 2 * index));
  const double um = unit_open(splitmix64_at(cfg.seed, 2 * index + 1));
  return {cfg.gamma_lo + (cfg.gamma_hi - cfg.gamma_lo) * ug,
          cfg.mach_lo + (cfg.mach_hi - cfg.mach_lo) * um};
}

ScanReport grid_scan(const ScanConfig& cfg) {
  validate(cfg);
  const auto nm = static_cast<std::uint64_t>(cfg.n_mach);
  const std::uint64_t total = static_cast<std::uint64_t>(cfg.n_gamma) * nm;
  return finish(cfg, reduce(cfg, total, [&](std::uint64_t k) {
                  return grid_node(cfg, static_cast<int>(k / nm), static_cast<int>(k % nm));
                }));
}

ScanReport random_scan(const ScanConfig& cfg) {
  validate(cfg);
  return finish(cfg, reduce(cfg, cfg.samples,
                            [&](std::uint64_t k) { return random_sample(cfg, k); }));
}

RefineResult refine_min(const std::function<double(double, double)>& f, ScanPoint start,
                        const RefineOptions& opts) {
  using P = std::array<double, 2>;
  const P x0 = {start.gamma, start.mach};
  for (int d = 0; d < 2; ++d) {
    if (!(x0[d] >= opts.lo[d] && x0[d] <= opts.hi[d])) {
      std::ostringstream msg;
      msg << "refine_min start (" << start.gamma << ", " << start.mach << ") is outside the box";
      throw DomainError(msg.str());
    }
  }
  auto clamp = [&](P x) {
    for (int d = 0; d < 2; ++d) x[d] = std::clamp(x[d], opts.lo[d], opts.hi[d]);
    return x;
  };
  RefineResult res;
  auto eval = [&](const P& x) {
    ++res.evaluations;
    return f(x[0], x[1]);
  };
  auto along = [&](const P& c, const P& dir_from, double t) {
    // c + t (c - dir_from)
    return clamp({c[0] + t * (c[0] - dir_from[0]), c[1] + t * (c[1] - dir_from[1])});
  };

  std::array<P, 3> s{};
  std::array<double, 3> fs{};
  s[0] = x0;
  for (int d = 0; d < 2; ++d) {
    P y = x0;
    y[d] = y[d] != 0.0 ? 1.05 * y[d] : 0.00025;
    s[d + 1] = clamp(y);
  }
  for (int k = 0; k < 3; ++k) fs[k] = eval(s[k]);

  while (true) {
    std::array<int, 3> order = {0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return fs[i] < fs[j]; });
    const std::array<P, 3> ss = {s[order[0]], s[order[1]], s[order[2]]};
    const std::array<double, 3> ff = {fs[order[0]], fs[order[1]], fs[order[2]]};
    s = ss;
    fs = ff;

    double dx = 0.0, df = 0.0;
    for (int k = 1; k < 3; ++k) {
      df = std::max(df, std::abs(fs[0] - fs[k]));
      for (int d = 0; d < 2; ++d) dx = std::max(dx, std::abs(s[k][d] - s[0][d]));
    }
    if (dx <= opts.tol_x && df <= opts.tol_fun) {
      res.converged = true;
      break;
    }
    if (res.evaluations >= opts.max_evaluations) break;

    const P c = {0.5 * (s[0][0] + s[1][0]), 0.5 * (s[0][1] + s[1][1])};
    const P xr = along(c, s[2], 1.0);
    const double fr = eval(xr);
    if (fr < fs[0]) {
      const P xe = along(c, s[2], 2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        s[2] = xe;
        fs[2] = fe;
      } else {
        s[2] = xr;
        fs[2] = fr;
      }
      continue;
    }
    if (fr < fs[1]) {
      s[2] = xr;
      fs[2] = fr;
      continue;
    }
    if (fr < fs[2]) {
      const P xc = along(c, s[2], 0.5);  // outside contraction, towards xr
      const double fc = eval(xc);
      if (fc <= fr) {
        s[2] = xc;
        fs[2] = fc;
        continue;
      }
    } else {
      const P xcc = along(c, s[2], -0.5);
      const double fcc = eval(xcc);
      if (fcc < fs[2]) {
        s[2] = xcc;
        fs[2] = fcc;
        continue;
      }
    }
    for (int k = 1; k < 3; ++k) {
      s[k] = {s[0][0] + 0.5 * (s[k][0] - s[0][0]), s[0][1] + 0.5 * (s[k][1] - s[0][1])};
      fs[k] = eval(s[k]);
    }
  }
  res.value = fs[0];
  res.gamma = s[0][0];
  res.mach = s[0][1];
  return res;
}

RefineResult refine_min(ScanTarget target, ScanPoint start, const RefineOptions& opts) {
  return refine_min([target](double g, double m) { return evaluate_target(target, g, m); }, start,
                    opts);
}

void write_grid_csv(const ScanConfig& cfg, const std::string& path) {
  validate(cfg);
  auto out = open_for_write(path);
  out << "gamma,mach,value\n";
  for (int i = 0; i < cfg.n_gamma; ++i) {
    for (int j = 0; j < cfg.n_mach; ++j) {
      const ScanPoint x = grid_node(cfg, i, j);
      out << fmt17(x.gamma) << ',' << fmt17(x.mach) << ','
          << fmt17(evaluate_target(cfg.target, x.gamma, x.mach)) << '\n';
    }
  }
  close_checked(out, path);
}

void write_summary_csv(const ScanConfig& cfg, const ScanReport& report, const std::string& path) {
  auto out = open_for_write(path);
  out << "target,min_value,argmin_gamma,argmin_mach,negative_count,total,seed\n";
  out << to_string(cfg.target) << ',' << fmt17(report.min_value) << ','
      << fmt17(report.argmin_gamma) << ',' << fmt17(report.argmin_mach) << ','
      << report.negative_count << ',' << report.total << ',' << cfg.seed << '\n';
  close_checked(out, path);
}

}  // namespace fvs
