// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "qnh/dynamics.hpp"
#include "qnh/measures.hpp"
#include "qnh/oracle.hpp"
#include "qnh/states.hpp"
#include "qnh/sweep.hpp"

using namespace qnh;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt3 = 0.57735026918962576451;
constexpr double kSqrtTwoThirds = 0.81649658092772603273;

struct Outcome {
  bool pass;
  std::string detail;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

DensityMatrix4 phi_plus() { return make_initial(PurePhi{kInvSqrt2, kInvSqrt2}); }

SweepConfig phi_plus_sweep(double g, MeasureMode mode) {
  SweepConfig cfg;
  cfg.family = PurePhi{kInvSqrt2, kInvSqrt2};
  cfg.gamma_tilde_list = {g};
  cfg.tau_max = 10.0;
  cfg.steps = 1001;
  cfg.mode = mode;
  return cfg;
}

Outcome bell_baseline() {
  const auto m = measure_all(phi_plus(), MeasureMode::Faithful);
  const double err = std::max({std::abs(m.concurrence - 1.0), std::abs(m.hs_min - 0.5),
                               std::abs(m.trace_min - 1.0), std::abs(m.bell - 2.0 * std::numbers::sqrt2)});
  return {err <= 1e-9, fmt("C=%.12g N2=%.12g N1=%.12g B=%.12g max err %.2e", m.concurrence, m.hs_min,
                           m.trace_min, m.bell, err)};
}

Outcome closed_form_equivalence() {
  const Stopwatch clock;
  const std::vector<StateFamily> families{PurePhi{kInvSqrt2, kInvSqrt2}, PurePhi{kInvSqrt3, kSqrtTwoThirds},
                                          PurePsi{kInvSqrt2, kInvSqrt2}, PurePsi{kInvSqrt3, kSqrtTwoThirds},
                                          MixedPhi{0.5},                 MixedPhi{1.0},
                                          MixedPsi{0.5},                 MixedPsi{0.2}};
  double worst = 0.0;
  std::string where;
  for (const auto& family : families) {
    const auto rho0 = make_initial(family);
    for (double g : {0.0, 0.1, 0.25, 0.5, 1.0, 1.5, 3.0})
      for (int k = 0; k <= 100; ++k) {
        const double tau = k / 10.0;
        const double d = max_abs_diff(closed_form(family, g, tau).matrix(),
                                      evolve(rho0, HamiltonianParams(g, tau)).rho.matrix());
        if (d > worst) {
          worst = d;
          where = fmt("%s g=%g tau=%g", describe(family).c_str(), g, tau);
        }
      }
  }
  const double t = clock.seconds();
  return {worst <= 1e-10 && t <= 5.0,
          fmt("max |closed - engine| = %.2e at %s; %.2f s", worst, where.c_str(), t)};
}

Outcome min_oracle() {
  const Stopwatch clock;
  oracle::Rng rng(20240601);
  double worst_x = 0.0;
  double worst_zero = 0.0;
  int n_zero = 0;
  for (int i = 0; i < 500; ++i) {
    const bool x_zero = i % 5 == 0;
    const auto rho = x_zero ? oracle::random_x_zero_state(rng) : oracle::random_density(rng, 1 + i % 4);
    const double dh = std::abs(hs_min(rho, MeasureMode::Faithful) - min_bruteforce(rho, NormKind::HilbertSchmidt).value);
    const double dt = std::abs(trace_min(rho, MeasureMode::Faithful) - min_bruteforce(rho, NormKind::Trace).value);
    const bool zero_branch = std::holds_alternative<AllDirections>(locally_invariant_directions(rho));
    double& worst = zero_branch ? worst_zero : worst_x;
    worst = std::max({worst, dh, dt});
    n_zero += zero_branch;
  }
  const double t = clock.seconds();
  return {worst_x <= 1e-6 && worst_zero <= 1e-4 && t <= 60.0,
          fmt("x!=0: %d states, max dev %.2e; x=0: %d states, max dev %.2e; %.2f s", 500 - n_zero, worst_x, n_zero,
              worst_zero, t)};
}

double column_spread(const std::vector<TimeSeriesRow>& rows, double TimeSeriesRow::*field) {
  const auto [lo, hi] = std::minmax_element(rows.begin(), rows.end(),
                                            [field](const auto& a, const auto& b) { return a.*field < b.*field; });
  return (*hi).*field - (*lo).*field;
}

Outcome hermitian_freezing() {
  double spread = 0.0;
  double trace_dev = 0.0;
  for (MeasureMode mode : {MeasureMode::Faithful, MeasureMode::PaperRaw}) {
    const auto rows = run_sweep(phi_plus_sweep(0.0, mode));
    for (auto field : {&TimeSeriesRow::concurrence, &TimeSeriesRow::hs_min, &TimeSeriesRow::trace_min,
                       &TimeSeriesRow::bell})
      spread = std::max(spread, column_spread(rows, field));
    for (const auto& r : rows) {
      // r.norm is Tr of the unnormalized evolved state, 1 under unitary dynamics.
      trace_dev = std::max(trace_dev, std::abs(r.norm - 1.0));
      const auto out = evolve(phi_plus(), HamiltonianParams(0.0, r.tau));
      trace_dev = std::max(trace_dev, std::abs(out.rho.matrix().trace().real() - 1.0));
    }
  }
  return {spread < 1e-9 && trace_dev <= 1e-12,
          fmt("max column spread %.2e; max |Tr - 1| %.2e", spread, trace_dev)};
}

Outcome paper_plateau() {
  const auto evolved = evolve(phi_plus(), HamiltonianParams(1.5, 10.0)).rho;
  const double tr_paper = trace_min(evolved, MeasureMode::PaperRaw);
  const double bell = bell_max(evolved, MeasureMode::Faithful);
  const double c = concurrence(evolved);
  const double hs = hs_min(evolved, MeasureMode::Faithful);
  const bool ok = std::abs(tr_paper - 0.497) <= 0.005 && std::abs(bell - 2.0) <= 1e-3 && c <= 1e-6 && hs <= 1e-6;
  return {ok, fmt("paper trace_min %.6f, faithful bell %.9f, C %.2e, faithful hs_min %.2e", tr_paper, bell, c, hs)};
}

Outcome mixed_bell() {
  double bell_max_seen = 0.0;
  double c0 = 0.0;
  double n0 = 0.0;
  for (double g : {0.5, 1.5}) {
    SweepConfig cfg;
    cfg.family = MixedPhi{0.5};
    cfg.gamma_tilde_list = {g};
    cfg.mode = MeasureMode::Faithful;
    const auto rows = run_sweep(cfg);
    for (const auto& r : rows) bell_max_seen = std::max(bell_max_seen, r.bell);
    c0 = rows.front().concurrence;
    n0 = rows.front().trace_min;
  }
  const bool ok = bell_max_seen < 2.0 && std::abs(n0 - 0.5) <= 1e-9 && std::abs(c0 - 0.25) <= 1e-9;
  return {ok, fmt("max faithful bell %.9f; trace_min(0) %.12g; C(0) %.12g", bell_max_seen, n0, c0)};
}

Outcome exceptional_continuity() {
  double worst = 0.0;
  std::string where;
  for (MeasureMode mode : {MeasureMode::Faithful, MeasureMode::PaperRaw}) {
    const auto at = run_sweep(phi_plus_sweep(1.0, mode));
    for (double g : {1.0 - 1e-6, 1.0 + 1e-6}) {
      const auto near = run_sweep(phi_plus_sweep(g, mode));
      for (std::size_t i = 0; i < at.size(); ++i) {
        const double d = std::max({std::abs(at[i].concurrence - near[i].concurrence),
                                   std::abs(at[i].hs_min - near[i].hs_min),
                                   std::abs(at[i].trace_min - near[i].trace_min), std::abs(at[i].bell - near[i].bell)});
        if (d > worst) {
          worst = d;
          where = fmt("%s g=%.7f tau=%g", to_string(mode), g, at[i].tau);
        }
      }
    }
  }
  return {worst < 1e-4, fmt("max |measure(1 +- 1e-6) - measure(1)| = %.2e at %s", worst, where.c_str())};
}

// Golden-section maximum of f on [lo, hi].
double golden_max(const std::function<double(double)>& f, double lo, double hi) {
  constexpr double kRatio = 0.61803398874989484820;
  double c = hi - kRatio * (hi - lo);
  double d = lo + kRatio * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > 1e-9) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kRatio * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kRatio * (hi - lo);
      fd = f(d);
    }
  }
  return std::max(fc, fd);
}

Outcome oscillation() {
  const double g = 0.25;
  const auto rows = run_sweep(phi_plus_sweep(g, MeasureMode::Faithful));
  const auto rho0 = phi_plus();
  const auto conc = [&](double tau) { return concurrence(evolve(rho0, HamiltonianParams(g, tau)).rho); };

  // Interior sample maxima of the sweep, each refined inside its bracketing cell.
  std::vector<double> maxima;
  double min_seen = rows.front().concurrence;
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    min_seen = std::min(min_seen, rows[i].concurrence);
    if (rows[i].concurrence >= rows[i - 1].concurrence && rows[i].concurrence > rows[i + 1].concurrence)
      maxima.push_back(golden_max(conc, rows[i - 1].tau, rows[i + 1].tau));
  }
  double spread = 0.0;
  for (std::size_t k = 1; k < maxima.size(); ++k) spread = std::max(spread, std::abs(maxima[k] - maxima[k - 1]));
  const double initial = rows.front().concurrence;
  const bool ok = maxima.size() >= 2 && spread <= 1e-6 && min_seen < initial;
  return {ok, fmt("%zu interior maxima, successive spread %.2e; min %.6f < initial %.6f", maxima.size(), spread,
                  min_seen, initial)};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome figure_presets() {
  const auto root = std::filesystem::temp_directory_path() / ("qnh_acceptance_" + std::to_string(::getpid()));
  std::filesystem::remove_all(root);
  std::vector<std::filesystem::path> files;
  const Stopwatch clock;
  for (int n = 1; n <= 6; ++n) {
    const auto out = run_figure(n, root / "a");
    files.push_back(out.paper_csv.filename());
    files.push_back(out.faithful_csv.filename());
  }
  const double t = clock.seconds();
  for (int n = 1; n <= 6; ++n) run_figure(n, root / "b");
  int identical = 0;
  for (const auto& f : files) identical += slurp(root / "a" / f) == slurp(root / "b" / f) && !slurp(root / "a" / f).empty();
  std::filesystem::remove_all(root);
  const int count = static_cast<int>(files.size());
  return {count == 12 && identical == 12 && t <= 10.0,
          fmt("%d CSVs in %.2f s; %d/%d byte-identical on re-run", count, t, identical, count)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Bell-state baseline", bell_baseline},
      {"closed-form/engine equivalence", closed_form_equivalence},
      {"MIN oracle equivalence", min_oracle},
      {"Hermitian-limit freezing", hermitian_freezing},
      {"plateau at gamma_tilde=1.5, tau=10", paper_plateau},
      {"mixed-state Bell sub-threshold", mixed_bell},
      {"exceptional-point continuity", exceptional_continuity},
      {"oscillatory regime", oscillation},
      {"figure-preset generation", figure_presets},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s [%zu] %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
