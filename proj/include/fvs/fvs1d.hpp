#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "fvs/splitting.hpp"
#include "fvs/state_space.hpp"

namespace fvs {

// A cell lost positivity (rho <= 0 or p <= 0) during an update.
class PositivityError : public std::runtime_error {
 public:
  PositivityError(std::size_t cell, double time, const std::string& what);
  std::size_t cell() const { return cell_; }
  double time() const { return time_; }

 private:
  std::size_t cell_;
  double time_;
};

// Uniform 1D grid on [x0, x0 + n dx], transmissive (zero-gradient) ends.
struct Grid1D {
  double x0 = 0.0;
  double dx = 1.0;
  std::vector<ConservativeState> cells;

  std::size_t size() const { return cells.size(); }
  double center(std::size_t i) const { return x0 + (static_cast<double>(i) + 0.5) * dx; }
};

// Throws DomainError for fewer than 3 cells, dx <= 0 or an inadmissible cell.
void validate(const Grid1D& grid, const GasParams& gas);

// F+(UL) + F-(UR).
Flux3 interface_flux(const ConservativeState& ul, const ConservativeState& ur,
                     const GasParams& gas, Scheme scheme);

// dt = cfl dx / max(|u| + a).
double stable_dt(const Grid1D& grid, const GasParams& gas, double cfl);

struct StepResult {
  double dt = 0.0;
  Flux3 flux_left;   // flux through the left end of the domain
  Flux3 flux_right;  // flux through the right end
};

// One explicit Euler step, dt = min(stable_dt, dt_max). `time` is only used to
// label a PositivityError; on error the grid is left untouched.
StepResult step(Grid1D& grid, const GasParams& gas, Scheme scheme, double cfl,
                double dt_max = std::numeric_limits<double>::infinity(), double time = 0.0);

// Totals sum_i U_i dx, each component summed with compensation.
Flux3 conserved_totals(const Grid1D& grid);

struct RiemannData {
  double rho_left = 1.0, u_left = 0.0, p_left = 1.0;
  double rho_right = 0.125, u_right = 0.0, p_right = 0.1;
  double split = 0.5;  // interface position as a fraction of the length
};

struct RunConfig {
  Scheme scheme = Scheme::VanLeer;
  double gamma = 1.4;
  double cfl = 0.5;
  double t_end = 0.2;
  int n_cells = 400;
  double length = 1.0;
  std::string initial_condition = "sod";  // "sod" or "riemann"
  RiemannData riemann;                      // used when initial_condition == "riemann"
  double snapshot_interval = 0.0;           // 0: initial and final state only
  long max_steps = 1000000;
};

// Throws DomainError on cfl outside (0, 1], negative t_end, n_cells < 3,
// length <= 0, unknown preset or non-physical Riemann data.
void validate(const RunConfig& cfg);

Grid1D initial_grid(const RunConfig& cfg);

struct Snapshot {
  double time = 0.0;
  Grid1D grid;
};

struct ConservationAudit {
  // max over steps and components of |change of totals - dt (F_left - F_right)|
  double max_defect = 0.0;
  double min_rho = std::numeric_limits<double>::infinity();
  double min_p = std::numeric_limits<double>::infinity();
};

struct RunResult {
  double time = 0.0;
  long steps = 0;
  Grid1D final_grid;
  std::vector<Snapshot> snapshots;
  ConservationAudit audit;
};

RunResult run(const RunConfig& cfg);

// key = value lines; '#' starts a comment. Unknown keys and malformed values
// throw DomainError. Keys not present keep the values already in `base`.
RunConfig parse_run_config(const std::string& text, RunConfig base = {});
RunConfig load_run_config(const std::string& path, RunConfig base = {});

// Header "x,rho,u,p", one row per cell.
void write_snapshot_csv(const Grid1D& grid, const GasParams& gas, const std::string& path);

}  // namespace fvs
