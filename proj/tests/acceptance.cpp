// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance              run all criteria
//   acceptance --criterion N

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fvs/exactpoly.hpp"
#include "fvs/fvs1d.hpp"
#include "fvs/jacobian.hpp"
#include "fvs/scanlab.hpp"
#include "fvs/spectral.hpp"
#include "root_oracle.hpp"
#include "support.hpp"

using namespace fvs;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? " ok" : " FAILED");
  }
};

const std::vector<double> kGamma20 = testing::linspace(1.01, 3.0, 20);
const std::vector<double> kMach20 = testing::linspace(-0.99, 0.99, 20);
const std::vector<double> kGamma200 = testing::linspace(1.01, 3.0, 200);
const std::vector<double> kMach200 = testing::linspace(-0.99, 0.99, 200);

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

void jacobian_regression(Outcome& o) {
  double worst = 0.0, worst_fd = 0.0;
  for (double g : kGamma20)
    for (double M : kMach20)
      for (double a : {0.5, 1.0, 2.0})
        for (Scheme s : kAllSchemes) {
          const PrimitiveState w{1.0, a, M};
          const Mat3 closed = closed_form_jacobian(s, g, M, a);
          const Mat3 computed = jac_plus_conservative(w, {g}, s);
          for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
              const double ref = std::abs(closed(r, c));
              const double err = std::abs(closed(r, c) - computed(r, c));
              worst = std::max(worst, ref > 0.0 ? err / ref : err);
            }
          worst_fd = std::max(worst_fd, fd_check_plus(w, {g}, s).residual);
        }
  o.check(worst <= 1e-12, "27 closed-form entries vs dF+/dW*dW/dU, max entrywise rel err " + sci(worst));
  o.check(worst_fd <= 1e-5, "finite differences, max rel residual " + sci(worst_fd));
}

void vanleer_rank(Outcome& o) {
  double worst = 0.0;
  for (double g : kGamma20)
    for (double M : kMach20)
      for (double a : {0.5, 1.0, 2.0}) {
        const Mat3 j = jac_plus_conservative({1.0, a, M}, {g}, Scheme::VanLeer);
        const double n = j.norm_inf();
        worst = std::max(worst, std::abs(j.det()) / (n * n * n));
      }
  o.check(worst < 1e-10, "max |det J|/||J||^3 = " + sci(worst));
}

void vanleer_theorem(Outcome& o) {
  long bad_class = 0, bad_t = 0, bad_s = 0, bad_disc = 0;
  for (double g : kGamma200)
    for (double M : kMach200) {
      const CharCoeffs c = closed_form_coeffs(Scheme::VanLeer, g, M, 1.0);
      bad_t += !(c.T > 0.0);
      bad_s += !(c.S > 0.0);
      bad_disc += !(vanleer_discriminant(g, M, 1.0) >= 0.0);
      bad_class += classify_spectrum(Scheme::VanLeer, g, M, 1.0).classification !=
                   SpectrumClass::ZeroPlusTwoPositive;
    }
  o.check(bad_class == 0, "zero_plus_two_positive at 40000 nodes (" + std::to_string(bad_class) + " misses)");
  o.check(bad_t == 0 && bad_s == 0, "T > 0 and S > 0");
  o.check(bad_disc == 0, "quadratic discriminant >= 0");
}

void sturm_verification(Outcome& o) {
  int bad_count = 0, bad_v = 0, bad_ends = 0;
  for (const char* gs : {"11/10", "13/10", "7/5", "3/2", "5/3", "2", "12/5", "27/10", "29/10"}) {
    const BigRational g = parse_rational(gs);
    const RationalPoly h = h_poly_exact(g);
    const RootCount rc = count_roots_in_interval(h, -1, 1);
    bad_count += rc.count != 0 || rc.lo_perturbed || rc.hi_perturbed;
    bad_v += rc.variations_lo != 3 || rc.variations_hi != 3;
    const BigRational q = 2 * g * g + g + 3;
    const BigRational at_one = 16 * g * g * (g + 1) * (g + 1), at_minus = 16 * q * q;
    bad_ends += h.eval(BigRational(1)) != at_one || h.eval(BigRational(-1)) != at_minus;
  }
  o.check(bad_count == 0, "no roots of H in (-1,1) for 9 rational gammas");
  o.check(bad_v == 0, "V(-1) = V(1) = 3");
  o.check(bad_ends == 0, "exact endpoint identities");
}

void scan_reproduction(Outcome& o) {
  for (ScanTarget t : {ScanTarget::VanLeerH, ScanTarget::Ausm2Discriminant}) {
    ScanConfig cfg;
    cfg.target = t;
    const ScanReport g = grid_scan(cfg), r = random_scan(cfg);
    o.check(g.negative_count == 0 && r.negative_count == 0 && g.total == 1024u * 1024u &&
                r.total == 1000000u,
            std::string(to_string(t)) + " negatives (grid " + std::to_string(g.negative_count) +
                ", random " + std::to_string(r.negative_count) + ")");
  }
  const RefineResult h = refine_min(ScanTarget::VanLeerH, {1.5, 0.5});
  o.check(std::abs(h.value - 64.0) <= 1e-6 && std::abs(h.gamma - 1.0) <= 1e-3 &&
              std::abs(h.mach - 1.0) <= 1e-3,
          "H min " + sci(h.value) + " at (" + sci(h.gamma) + ", " + sci(h.mach) + ")");
  const RefineResult d = refine_min(ScanTarget::Ausm2Discriminant, {2.0, -0.9});
  o.check(std::abs(d.value) <= 1e-12, "disc2 min value " + sci(d.value));
  o.check(std::abs(d.mach + 1.0) <= 5e-4, "disc2 argmin M = " + sci(d.mach));
  o.check(std::abs(d.gamma - 2.114) <= 0.01, "disc2 argmin gamma = " + sci(d.gamma) + " (target 2.114 +- 0.01)");
}

void ausm_linear_pathology(Outcome& o) {
  const double eps = 1e-4;
  for (double g : {1.2, 1.4, 5.0 / 3.0, 2.5}) {
    const double m0 = ausm_linear_s_root(g);
    const bool located = m0 > -1.0 && m0 < 0.0 && std::abs(ausm_linear_s_bracket(g, m0)) < 1e-12;
    const double s_before = closed_form_coeffs(Scheme::AusmLinear, g, m0 - eps, 1.0).S;
    const double s_after = closed_form_coeffs(Scheme::AusmLinear, g, m0 + eps, 1.0).S;
    const double d_neg = closed_form_coeffs(Scheme::AusmLinear, g, -0.9, 1.0).D;
    const double d_pos = closed_form_coeffs(Scheme::AusmLinear, g, 0.9, 1.0).D;
    const std::string tag = "gamma " + sci(g) + ": ";
    o.check(located, tag + "M0 = " + sci(m0));
    o.check(s_before * s_after < 0.0, tag + "S changes sign");
    o.check(s_before > 0.0 && s_after < 0.0,
            tag + "S + to - (S(M0-eps) = " + sci(s_before) + ", S(M0+eps) = " + sci(s_after) + ")");
    o.check(d_neg < 0.0 && d_pos > 0.0, tag + "D(-0.9) < 0 < D(0.9)");
  }
}

void ausm_second_positive(Outcome& o) {
  long bad_class = 0, bad_coeff = 0;
  for (double g : kGamma200)
    for (double M : kMach200) {
      const CharCoeffs c = closed_form_coeffs(Scheme::AusmSecond, g, M, 1.0);
      bad_coeff += !(c.T > 0.0 && c.S > 0.0 && c.D > 0.0);
      bad_class += classify_spectrum(Scheme::AusmSecond, g, M, 1.0).classification !=
                   SpectrumClass::AllPositive;
    }
  o.check(bad_class == 0, "all_positive at 40000 nodes (" + std::to_string(bad_class) + " misses)");
  o.check(bad_coeff == 0, "T, S, D > 0");
}

void sturm_oracle(Outcome& o) {
  std::mt19937_64 gen(2024);
  int agree = 0, total = 0;
  while (total < 1000) {
    const testing::IntPoly p = testing::random_test_poly(gen);
    if (testing::int_degree(p) < 0) continue;
    std::vector<BigRational> c;
    for (long long v : p) c.emplace_back(static_cast<long>(v));
    agree += count_roots_in_interval(RationalPoly(std::move(c)), -1, 1).count ==
             testing::oracle_root_count(p);
    ++total;
  }
  o.check(agree == total, std::to_string(agree) + "/" + std::to_string(total) + " counts agree");
}

void solver_sanity(Outcome& o) {
  for (Scheme s : kAllSchemes) {
    RunConfig cfg;
    cfg.scheme = s;
    const auto t0 = std::chrono::steady_clock::now();
    const RunResult r = run(cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.check(r.time == 0.2 && r.audit.max_defect < 1e-12 && r.audit.min_rho > 0.0 && r.audit.min_p > 0.0 &&
                secs < 10.0,
            std::string(to_string(s)) + " defect " + sci(r.audit.max_defect) + ", min rho " +
                sci(r.audit.min_rho) + ", min p " + sci(r.audit.min_p) + ", " + sci(secs) + " s");
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

const std::vector<Criterion> kCriteria = {
    {1, "Jacobian regression", 10.0, jacobian_regression},
    {2, "Van Leer rank deficiency", 5.0, vanleer_rank},
    {3, "Van Leer spectrum on 200x200 grid", 30.0, vanleer_theorem},
    {4, "Sturm verification of H", 60.0, sturm_verification},
    {5, "discriminant scans and minima", 120.0, scan_reproduction},
    {6, "linear AUSM sign pathology", 1.0, ausm_linear_pathology},
    {7, "second-order AUSM positivity", 30.0, ausm_second_positive},
    {8, "Sturm engine vs sign-scan oracle", 30.0, sturm_oracle},
    {9, "Sod solver sanity", 30.0, solver_sanity},
};

bool run_one(const Criterion& c) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    c.body(o);
  } catch (const std::exception& e) {
    o.check(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.check(secs < c.limit_seconds, "runtime " + sci(secs) + " s < " + sci(c.limit_seconds) + " s");
  std::printf("[%s] criterion %d: %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.str().c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(kCriteria.size())) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  bool all = true;
  for (const auto& c : kCriteria)
    if (only == 0 || c.id == only) all = run_one(c) && all;
  return all ? 0 : 1;
}
