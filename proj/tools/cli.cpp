#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <regex>
#include <sstream>
#include <thread>

#include "fvs/exactpoly.hpp"
#include "fvs/format.hpp"
#include "fvs/fvs1d.hpp"
#include "fvs/jacobian.hpp"
#include "fvs/scanlab.hpp"
#include "fvs/spectral.hpp"

namespace fvs::cli {

namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string json_number(double x) {
  if (std::isfinite(x)) return fmt17(x);
  return "null";
}

Scheme scheme_or_throw(const std::string& name) {
  const auto s = parse_scheme(name);
  if (!s) throw DomainError("unknown scheme '" + name + "' (expected vanleer, ausm-lin, ausm-2nd)");
  return *s;
}

const std::vector<std::string> kSchemeNames = {"vanleer", "ausm-lin", "ausm-2nd"};

struct JacobianArgs {
  std::string scheme;
  double gamma = 1.4, mach = 0.0, a = 1.0, rho = 1.0;
  std::string format = "csv";
};

void cmd_jacobian(const JacobianArgs& args, std::ostream& out) {
  const Scheme scheme = scheme_or_throw(args.scheme);
  const GasParams gas{args.gamma};
  const PrimitiveState w{args.rho, args.a, args.mach};
  require_admissible(w, gas);
  const Mat3 j = jac_plus_conservative(w, gas, scheme);
  const FdCheck fd = fd_check_plus(w, gas, scheme);

  if (args.format == "json") {
    out << "{\"command\":\"jacobian\",\"config\":{\"scheme\":" << quote(args.scheme)
        << ",\"gamma\":" << fmt17(args.gamma) << ",\"mach\":" << fmt17(args.mach)
        << ",\"a\":" << fmt17(args.a) << ",\"rho\":" << fmt17(args.rho)
        << ",\"format\":\"json\"},\"dFplus_dU\":[";
    for (int r = 0; r < 3; ++r) {
      out << (r ? "," : "") << '[';
      for (int c = 0; c < 3; ++c) out << (c ? "," : "") << json_number(j(r, c));
      out << ']';
    }
    out << "],\"fd_residual\":" << json_number(fd.residual)
        << ",\"fd_residual_refined\":" << json_number(fd.residual_refined) << "}\n";
    return;
  }
  out << "# jacobian scheme=" << args.scheme << " gamma=" << fmt17(args.gamma)
      << " mach=" << fmt17(args.mach) << " a=" << fmt17(args.a) << " rho=" << fmt17(args.rho)
      << " format=csv\n";
  out << "row,d_rho,d_mom,d_energy\n";
  const char* rows[] = {"mass", "momentum", "energy"};
  for (int r = 0; r < 3; ++r)
    out << rows[r] << ',' << fmt17(j(r, 0)) << ',' << fmt17(j(r, 1)) << ',' << fmt17(j(r, 2))
        << '\n';
  out << "# fd_residual=" << fmt17(fd.residual) << '\n';
  out << "# fd_residual_refined=" << fmt17(fd.residual_refined) << '\n';
}

struct SpectrumArgs {
  std::string scheme;
  double gamma = 1.4, mach = 0.0, a = 1.0;
  std::string format = "text";
};

void cmd_spectrum(const SpectrumArgs& args, std::ostream& out) {
  const Scheme scheme = scheme_or_throw(args.scheme);
  const SpectrumReport rep = classify_spectrum(scheme, args.gamma, args.mach, args.a);
  const CharCoeffs c = closed_form_coeffs(scheme, args.gamma, args.mach, args.a);

  if (args.format == "json") {
    out << "{\"command\":\"spectrum\",\"config\":{\"scheme\":" << quote(args.scheme)
        << ",\"gamma\":" << fmt17(args.gamma) << ",\"mach\":" << fmt17(args.mach)
        << ",\"a\":" << fmt17(args.a) << ",\"format\":\"json\"},\"T\":" << json_number(c.T)
        << ",\"S\":" << json_number(c.S) << ",\"D\":" << json_number(c.D) << ",\"eigenvalues\":[";
    for (int k = 0; k < 3; ++k)
      out << (k ? "," : "") << '[' << json_number(rep.eigenvalues[k].real()) << ','
          << json_number(rep.eigenvalues[k].imag()) << ']';
    out << "],\"discriminant\":" << json_number(rep.discriminant)
        << ",\"classification\":" << quote(to_string(rep.classification)) << "}\n";
    return;
  }
  out << "# spectrum scheme=" << args.scheme << " gamma=" << fmt17(args.gamma)
      << " mach=" << fmt17(args.mach) << " a=" << fmt17(args.a) << " format=text\n";
  out << "T=" << fmt17(c.T) << '\n' << "S=" << fmt17(c.S) << '\n' << "D=" << fmt17(c.D) << '\n';
  for (int k = 0; k < 3; ++k) {
    const auto& mu = rep.eigenvalues[k];
    out << "mu" << k + 1 << '=' << fmt17(mu.real());
    if (mu.imag() != 0.0) out << (mu.imag() < 0 ? "-" : "+") << fmt17(std::abs(mu.imag())) << 'i';
    out << '\n';
  }
  out << "discriminant=" << fmt17(rep.discriminant) << '\n';
  out << "classification=" << to_string(rep.classification) << '\n';
}

struct SturmArgs {
  std::string gamma;
  std::string lo = "-1", hi = "1";
};

void cmd_sturm(const SturmArgs& args, std::ostream& out) {
  const BigRational gamma = parse_rational(args.gamma);
  const BigRational lo = parse_rational(args.lo), hi = parse_rational(args.hi);
  if (!(gamma > 1)) throw DomainError("gamma must be > 1 (got " + to_string(gamma) + ")");
  const RationalPoly h = h_poly_exact(gamma);
  const RootCount rc = count_roots_in_interval(h, lo, hi);

  const std::string slo = to_string(lo), shi = to_string(hi);
  out << "# sturm gamma=" << to_string(gamma) << " lo=" << slo << " hi=" << shi << '\n';
  out << "H(M) = " << h.to_string("M") << '\n';
  out << "chain degrees:";
  for (int d : rc.chain_degrees) out << ' ' << d;
  out << '\n';
  if (rc.lo_perturbed) out << "note: H(" << slo << ") = 0, lower endpoint moved to " << to_string(rc.lo) << '\n';
  if (rc.hi_perturbed) out << "note: H(" << shi << ") = 0, upper endpoint moved to " << to_string(rc.hi) << '\n';
  out << "roots in (" << slo << ',' << shi << "): " << rc.count << "; V(" << slo
      << ")=" << rc.variations_lo << " V(" << shi << ")=" << rc.variations_hi << '\n';
}

struct ScanArgs {
  std::string target;
  std::string grid = "1024x1024";
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 42;
  double gamma_lo = 1.0, gamma_hi = 3.0, mach_lo = -1.0, mach_hi = 1.0;
  double tolerance = 1e-12;
  unsigned threads = 0;
  std::string out;
  std::string summary;
};

unsigned thread_cap(unsigned requested) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FVS_SPECTRA_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (*end != '\0' || cap < 1)
      throw DomainError(std::string("FVS_SPECTRA_THREADS must be a positive integer (got '") + env +
                        "')");
    n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

std::string summary_path_for(const std::string& out) {
  const std::string ext = ".csv";
  if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0)
    return out.substr(0, out.size() - ext.size()) + ".summary.csv";
  return out + ".summary.csv";
}

void print_report_row(std::ostream& out, std::string_view mode, const ScanReport& r) {
  out << mode << ',' << fmt17(r.min_value) << ',' << fmt17(r.argmin_gamma) << ','
      << fmt17(r.argmin_mach) << ',' << r.negative_count << ',' << r.total << ','
      << (r.boundary_min ? "true" : "false") << '\n';
}

void cmd_scan(const ScanArgs& args, std::ostream& out) {
  const auto target = parse_scan_target(args.target);
  if (!target) throw DomainError("unknown scan target '" + args.target + "' (expected vanleer-h, ausm2-disc)");
  std::smatch m;
  static const std::regex grid_re(R"((\d+)x(\d+))");
  if (!std::regex_match(args.grid, m, grid_re))
    throw DomainError("--grid must look like NxM (got '" + args.grid + "')");

  ScanConfig cfg;
  cfg.target = *target;
  cfg.gamma_lo = args.gamma_lo;
  cfg.gamma_hi = args.gamma_hi;
  cfg.mach_lo = args.mach_lo;
  cfg.mach_hi = args.mach_hi;
  try {
    cfg.n_gamma = std::stoi(m[1].str());
    cfg.n_mach = std::stoi(m[2].str());
  } catch (const std::out_of_range&) {
    throw DomainError("--grid dimensions are too large");
  }
  cfg.samples = args.samples;
  cfg.seed = args.seed;
  cfg.tolerance = args.tolerance;
  cfg.threads = thread_cap(args.threads);
  validate(cfg);

  out << "# scan target=" << args.target << " gamma_lo=" << fmt17(cfg.gamma_lo)
      << " gamma_hi=" << fmt17(cfg.gamma_hi) << " mach_lo=" << fmt17(cfg.mach_lo)
      << " mach_hi=" << fmt17(cfg.mach_hi) << " grid=" << cfg.n_gamma << 'x' << cfg.n_mach
      << " samples=" << cfg.samples << " seed=" << cfg.seed << " tolerance=" << fmt17(cfg.tolerance)
      << " threads=" << cfg.threads << " prng=splitmix64\n";

  const ScanReport grid = grid_scan(cfg);
  const ScanReport rnd = random_scan(cfg);
  const ScanReport all = combine(cfg, grid, rnd);
  out << "mode,min_value,argmin_gamma,argmin_mach,negative_count,total,boundary_min\n";
  print_report_row(out, "grid", grid);
  print_report_row(out, "random", rnd);
  print_report_row(out, "combined", all);

  if (!args.out.empty()) {
    const std::string summary = args.summary.empty() ? summary_path_for(args.out) : args.summary;
    write_grid_csv(cfg, args.out);
    write_summary_csv(cfg, all, summary);
    out << "# wrote " << args.out << " and " << summary << '\n';
  }
}

struct SolveArgs {
  std::string config;
  std::string scheme;
  double gamma = 0, cfl = 0, t_end = 0, length = 0, snapshot_interval = 0;
  int cells = 0;
  std::string ic;
  std::string out_dir;
};

void echo_run_config(std::ostream& out, const RunConfig& c) {
  const auto& r = c.riemann;
  out << "# scheme = " << to_string(c.scheme) << '\n'
      << "# gamma = " << fmt17(c.gamma) << '\n'
      << "# cfl = " << fmt17(c.cfl) << '\n'
      << "# t_end = " << fmt17(c.t_end) << '\n'
      << "# n_cells = " << c.n_cells << '\n'
      << "# length = " << fmt17(c.length) << '\n'
      << "# initial_condition = " << c.initial_condition << '\n'
      << "# rho_left = " << fmt17(r.rho_left) << '\n'
      << "# u_left = " << fmt17(r.u_left) << '\n'
      << "# p_left = " << fmt17(r.p_left) << '\n'
      << "# rho_right = " << fmt17(r.rho_right) << '\n'
      << "# u_right = " << fmt17(r.u_right) << '\n'
      << "# p_right = " << fmt17(r.p_right) << '\n'
      << "# split = " << fmt17(r.split) << '\n'
      << "# snapshot_interval = " << fmt17(c.snapshot_interval) << '\n'
      << "# max_steps = " << c.max_steps << '\n';
}

void cmd_solve(const SolveArgs& args, const CLI::App& sub, std::ostream& out) {
  RunConfig cfg;
  if (!args.config.empty()) cfg = load_run_config(args.config, cfg);
  if (sub.count("--scheme")) cfg.scheme = scheme_or_throw(args.scheme);
  if (sub.count("--gamma")) cfg.gamma = args.gamma;
  if (sub.count("--cfl")) cfg.cfl = args.cfl;
  if (sub.count("--t-end")) cfg.t_end = args.t_end;
  if (sub.count("--cells")) cfg.n_cells = args.cells;
  if (sub.count("--length")) cfg.length = args.length;
  if (sub.count("--ic")) cfg.initial_condition = args.ic;
  if (sub.count("--snapshot-interval")) cfg.snapshot_interval = args.snapshot_interval;
  validate(cfg);

  out << "# solve effective config, key=value lines follow\n";
  echo_run_config(out, cfg);
  const RunResult res = run(cfg);
  const GasParams gas{cfg.gamma};
  out << "# steps=" << res.steps << '\n'
      << "# time=" << fmt17(res.time) << '\n'
      << "# max_conservation_defect=" << fmt17(res.audit.max_defect) << '\n'
      << "# min_rho=" << fmt17(res.audit.min_rho) << '\n'
      << "# min_p=" << fmt17(res.audit.min_p) << '\n';

  if (!args.out_dir.empty()) {
    std::filesystem::create_directories(args.out_dir);
    for (std::size_t k = 0; k < res.snapshots.size(); ++k) {
      std::ostringstream name;
      name << "snapshot_" << std::setw(4) << std::setfill('0') << k << ".csv";
      const std::string path = (std::filesystem::path(args.out_dir) / name.str()).string();
      write_snapshot_csv(res.snapshots[k].grid, gas, path);
      out << "# snapshot t=" << fmt17(res.snapshots[k].time) << " -> " << path << '\n';
    }
  }
  const Grid1D& g = res.final_grid;
  out << "x,rho,u,p\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& c = g.cells[i];
    out << fmt17(g.center(i)) << ',' << fmt17(c.rho) << ',' << fmt17(c.velocity()) << ','
        << fmt17(c.pressure(gas)) << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flux-vector-splitting Jacobian spectra toolkit", "fvs-spectra"};
  app.require_subcommand(1);

  JacobianArgs ja;
  auto* jac = app.add_subcommand("jacobian", "dF+/dU of a split flux plus its finite-difference residual");
  jac->add_option("--scheme", ja.scheme, "vanleer | ausm-lin | ausm-2nd")->required()
      ->check(CLI::IsMember(kSchemeNames));
  jac->add_option("--gamma", ja.gamma, "ratio of specific heats")->capture_default_str();
  jac->add_option("--mach", ja.mach, "Mach number, |M| < 1")->required();
  jac->add_option("--a", ja.a, "sound speed")->capture_default_str();
  jac->add_option("--rho", ja.rho, "density")->capture_default_str();
  jac->add_option("--format", ja.format, "csv | json")->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));

  SpectrumArgs sa;
  auto* spec = app.add_subcommand("spectrum", "characteristic invariants, eigenvalues and sign class of dF+/dU");
  spec->add_option("--scheme", sa.scheme, "vanleer | ausm-lin | ausm-2nd")->required()
      ->check(CLI::IsMember(kSchemeNames));
  spec->add_option("--gamma", sa.gamma, "ratio of specific heats")->capture_default_str();
  spec->add_option("--mach", sa.mach, "Mach number, |M| < 1")->required();
  spec->add_option("--a", sa.a, "sound speed")->capture_default_str();
  spec->add_option("--format", sa.format, "text | json")->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));

  SturmArgs st;
  auto* sturm = app.add_subcommand("sturm", "exact Sturm root count of H(gamma, M) in M");
  sturm->add_option("--gamma", st.gamma, "exact gamma, e.g. 7/5")->required();
  sturm->add_option("--lo", st.lo, "lower endpoint (exact)")->capture_default_str();
  sturm->add_option("--hi", st.hi, "upper endpoint (exact)")->capture_default_str();

  ScanArgs sc;
  auto* scan = app.add_subcommand("scan", "grid and random scans of H or the AUSM second-order discriminant");
  scan->add_option("--target", sc.target, "vanleer-h | ausm2-disc")->required()
      ->check(CLI::IsMember({"vanleer-h", "ausm2-disc"}));
  scan->add_option("--grid", sc.grid, "grid size NxM")->capture_default_str();
  scan->add_option("--samples", sc.samples, "random samples")->capture_default_str();
  scan->add_option("--seed", sc.seed, "PRNG seed")->capture_default_str();
  scan->add_option("--gamma-lo", sc.gamma_lo)->capture_default_str();
  scan->add_option("--gamma-hi", sc.gamma_hi)->capture_default_str();
  scan->add_option("--mach-lo", sc.mach_lo)->capture_default_str();
  scan->add_option("--mach-hi", sc.mach_hi)->capture_default_str();
  scan->add_option("--tolerance", sc.tolerance, "negativity threshold")->capture_default_str();
  scan->add_option("--threads", sc.threads, "worker threads (0: all cores)")->capture_default_str();
  scan->add_option("--out", sc.out, "grid CSV path");
  scan->add_option("--summary", sc.summary, "summary CSV path (default derived from --out)");

  SolveArgs so;
  auto* solve = app.add_subcommand("solve", "first-order finite-volume run with conservation audit");
  solve->add_option("--config", so.config, "key = value run configuration file");
  solve->add_option("--scheme", so.scheme, "vanleer | ausm-lin | ausm-2nd")
      ->check(CLI::IsMember(kSchemeNames));
  solve->add_option("--gamma", so.gamma);
  solve->add_option("--cfl", so.cfl);
  solve->add_option("--t-end", so.t_end);
  solve->add_option("--cells", so.cells);
  solve->add_option("--length", so.length);
  solve->add_option("--ic", so.ic, "sod | riemann");
  solve->add_option("--snapshot-interval", so.snapshot_interval);
  solve->add_option("--out-dir", so.out_dir, "directory for snapshot CSV files");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*jac) cmd_jacobian(ja, out);
    else if (*spec) cmd_spectrum(sa, out);
    else if (*sturm) cmd_sturm(st, out);
    else if (*scan) cmd_scan(sc, out);
    else if (*solve) cmd_solve(so, *solve, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kOk;
}

}  // namespace fvs::cli
