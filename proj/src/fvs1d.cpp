#include "fvs/fvs1d.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "fvs/format.hpp"

namespace fvs {

namespace {

struct Neumaier {
  double sum = 0.0, comp = 0.0;
  void add(double t) {
    const double s = sum + t;
    if (std::abs(sum) >= std::abs(t))
      comp += (sum - s) + t;
    else
      comp += (t - s) + sum;
    sum = s;
  }
  double value() const { return sum + comp; }
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out))
    throw DomainError("config key '" + key + "': not a number: '" + v + "'");
  return out;
}

long parse_long(const std::string& key, const std::string& v) {
  long out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw DomainError("config key '" + key + "': not an integer: '" + v + "'");
  return out;
}

PrimitiveState from_rup(double rho, double u, double p, const GasParams& gas) {
  if (!(rho > 0.0) || !(p > 0.0))
    throw DomainError("initial state needs rho > 0 and p > 0");
  const double a = std::sqrt(gas.gamma * p / rho);
  return {rho, a, u / a};
}

}  // namespace

PositivityError::PositivityError(std::size_t cell, double time, const std::string& what)
    : std::runtime_error(what), cell_(cell), time_(time) {}

void validate(const Grid1D& grid, const GasParams& gas) {
  require_valid(gas);
  if (grid.size() < 3) throw DomainError("grid needs at least 3 cells");
  if (!(grid.dx > 0.0) || !std::isfinite(grid.dx)) throw DomainError("grid spacing must be > 0");
  for (const auto& c : grid.cells) conservative_to_primitive(c, gas);
}

Flux3 interface_flux(const ConservativeState& ul, const ConservativeState& ur,
                     const GasParams& gas, Scheme scheme) {
  return split_flux_plus(conservative_to_primitive(ul, gas), gas, scheme) +
         split_flux_minus(conservative_to_primitive(ur, gas), gas, scheme);
}

double stable_dt(const Grid1D& grid, const GasParams& gas, double cfl) {
  double smax = 0.0;
  for (const auto& c : grid.cells) {
    const PrimitiveState w = conservative_to_primitive(c, gas);
    smax = std::max(smax, std::abs(w.velocity()) + w.a);
  }
  return cfl * grid.dx / smax;
}

StepResult step(Grid1D& grid, const GasParams& gas, Scheme scheme, double cfl, double dt_max,
                double time) {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw DomainError("cfl must lie in (0, 1]");
  const std::size_t n = grid.size();
  if (n < 3) throw DomainError("grid needs at least 3 cells");

  StepResult res;
  res.dt = std::min(stable_dt(grid, gas, cfl), dt_max);

  // Interface k sits between cells k-1 and k; ghosts copy the end cells.
  std::vector<Flux3> flux(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const auto& left = grid.cells[k == 0 ? 0 : k - 1];
    const auto& right = grid.cells[k == n ? n - 1 : k];
    flux[k] = interface_flux(left, right, gas, scheme);
  }
  res.flux_left = flux.front();
  res.flux_right = flux.back();

  const double r = res.dt / grid.dx;
  std::vector<ConservativeState> next(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Flux3 d = flux[i + 1] - flux[i];
    const auto& c = grid.cells[i];
    next[i] = {c.rho - r * d.mass, c.mom - r * d.mom, c.energy - r * d.en};
    const double p = next[i].pressure(gas);
    if (!(next[i].rho > 0.0) || !(p > 0.0)) {
      std::ostringstream msg;
      msg << "positivity lost in cell " << i << " at t = " << time + res.dt << " (rho = "
          << next[i].rho << ", p = " << p << ")";
      throw PositivityError(i, time + res.dt, msg.str());
    }
  }
  grid.cells = std::move(next);
  return res;
}

Flux3 conserved_totals(const Grid1D& grid) {
  Neumaier m, q, e;
  for (const auto& c : grid.cells) {
    m.add(c.rho * grid.dx);
    q.add(c.mom * grid.dx);
    e.add(c.energy * grid.dx);
  }
  return {m.value(), q.value(), e.value()};
}

void validate(const RunConfig& cfg) {
  require_valid(GasParams{cfg.gamma});
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw DomainError("cfl must lie in (0, 1]");
  if (!(cfg.t_end >= 0.0) || !std::isfinite(cfg.t_end)) throw DomainError("t_end must be >= 0");
  if (cfg.n_cells < 3) throw DomainError("n_cells must be >= 3");
  if (!(cfg.length > 0.0) || !std::isfinite(cfg.length)) throw DomainError("length must be > 0");
  if (!(cfg.snapshot_interval >= 0.0)) throw DomainError("snapshot_interval must be >= 0");
  if (cfg.max_steps < 1) throw DomainError("max_steps must be >= 1");
  if (cfg.initial_condition == "riemann") {
    const auto& r = cfg.riemann;
    if (!(r.rho_left > 0.0 && r.p_left > 0.0 && r.rho_right > 0.0 && r.p_right > 0.0))
      throw DomainError("riemann data need rho > 0 and p > 0 on both sides");
    if (!(r.split > 0.0 && r.split < 1.0)) throw DomainError("split must lie in (0, 1)");
  } else if (cfg.initial_condition != "sod") {
    throw DomainError("unknown initial condition '" + cfg.initial_condition + "'");
  }
}

Grid1D initial_grid(const RunConfig& cfg) {
  validate(cfg);
  const GasParams gas{cfg.gamma};
  const RiemannData r = cfg.initial_condition == "sod" ? RiemannData{} : cfg.riemann;
  const ConservativeState left =
      primitive_to_conservative(from_rup(r.rho_left, r.u_left, r.p_left, gas), gas);
  const ConservativeState right =
      primitive_to_conservative(from_rup(r.rho_right, r.u_right, r.p_right, gas), gas);
  Grid1D grid;
  grid.dx = cfg.length / cfg.n_cells;
  grid.cells.resize(static_cast<std::size_t>(cfg.n_cells));
  for (std::size_t i = 0; i < grid.size(); ++i)
    grid.cells[i] = grid.center(i) < r.split * cfg.length ? left : right;
  return grid;
}

RunResult run(const RunConfig& cfg) {
  validate(cfg);
  const GasParams gas{cfg.gamma};
  RunResult res;
  Grid1D grid = initial_grid(cfg);

  auto observe = [&](const Grid1D& g) {
    for (const auto& c : g.cells) {
      res.audit.min_rho = std::min(res.audit.min_rho, c.rho);
      res.audit.min_p = std::min(res.audit.min_p, c.pressure(gas));
    }
  };
  observe(grid);
  res.snapshots.push_back({0.0, grid});

  double t = 0.0;
  double next_snap = cfg.snapshot_interval > 0.0 ? cfg.snapshot_interval : cfg.t_end;
  while (t < cfg.t_end) {
    if (res.steps >= cfg.max_steps) {
      std::ostringstream msg;
      msg << "step limit " << cfg.max_steps << " reached at t = " << t;
      throw std::runtime_error(msg.str());
    }
    const double target = std::min(next_snap, cfg.t_end);
    const Flux3 before = conserved_totals(grid);
    const StepResult s = step(grid, gas, cfg.scheme, cfg.cfl, target - t, t);
    const Flux3 after = conserved_totals(grid);
    for (std::size_t k = 0; k < 3; ++k) {
      const double expected = s.dt * (s.flux_left[k] - s.flux_right[k]);
      res.audit.max_defect =
          std::max(res.audit.max_defect, std::abs((after[k] - before[k]) - expected));
    }
    t = s.dt == target - t ? target : t + s.dt;
    ++res.steps;
    observe(grid);
    if (t >= next_snap && t < cfg.t_end) {
      res.snapshots.push_back({t, grid});
      next_snap += cfg.snapshot_interval;
    }
  }
  if (res.snapshots.back().time != t) res.snapshots.push_back({t, grid});
  res.time = t;
  res.final_grid = std::move(grid);
  return res;
}

RunConfig parse_run_config(const std::string& text, RunConfig base) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw DomainError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string val = trim(std::string_view(body).substr(eq + 1));
    auto& r = base.riemann;
    if (key == "scheme") {
      const auto s = parse_scheme(val);
      if (!s) throw DomainError("config key 'scheme': unknown scheme '" + val + "'");
      base.scheme = *s;
    } else if (key == "gamma") {
      base.gamma = parse_double(key, val);
    } else if (key == "cfl") {
      base.cfl = parse_double(key, val);
    } else if (key == "t_end") {
      base.t_end = parse_double(key, val);
    } else if (key == "n_cells") {
      base.n_cells = static_cast<int>(parse_long(key, val));
    } else if (key == "length") {
      base.length = parse_double(key, val);
    } else if (key == "initial_condition") {
      base.initial_condition = val;
    } else if (key == "snapshot_interval") {
      base.snapshot_interval = parse_double(key, val);
    } else if (key == "max_steps") {
      base.max_steps = parse_long(key, val);
    } else if (key == "rho_left") {
      r.rho_left = parse_double(key, val);
    } else if (key == "u_left") {
      r.u_left = parse_double(key, val);
    } else if (key == "p_left") {
      r.p_left = parse_double(key, val);
    } else if (key == "rho_right") {
      r.rho_right = parse_double(key, val);
    } else if (key == "u_right") {
      r.u_right = parse_double(key, val);
    } else if (key == "p_right") {
      r.p_right = parse_double(key, val);
    } else if (key == "split") {
      r.split = parse_double(key, val);
    } else {
      throw DomainError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return base;
}

RunConfig load_run_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "': " + std::strerror(errno));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str(), std::move(base));
}

void write_snapshot_csv(const Grid1D& grid, const GasParams& gas, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing: " + std::strerror(errno));
  out << "x,rho,u,p\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& c = grid.cells[i];
    out << fmt17(grid.center(i)) << ',' << fmt17(c.rho) << ',' << fmt17(c.velocity()) << ','
        << fmt17(c.pressure(gas)) << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace fvs
