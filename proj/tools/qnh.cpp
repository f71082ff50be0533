// qnh: sweeps, figure presets and single-state measurements for two qubits
// under local non-Hermitian evolution.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qnh/error.hpp"
#include "qnh/oracle.hpp"
#include "qnh/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

int exit_code_for(qnh::ErrorKind kind) {
  using qnh::ErrorKind;
  switch (kind) {
    case ErrorKind::NotHermitian:
    case ErrorKind::NoConvergence:
    case ErrorKind::NotPSD:
    case ErrorKind::NonRealBlochComponent:
    case ErrorKind::DegenerateNorm:
    case ErrorKind::InvalidState:
      return kExitNumerical;
    default:
      return kExitConfig;
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::istringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw qnh::Error(qnh::ErrorKind::ConfigError, "bad gamma-tilde value '" + cell + "'");
    }
  }
  return values;
}

void print_report(const qnh::MeasureReport& r) {
  std::printf("mode         %s\n", qnh::to_string(r.mode));
  std::printf("concurrence  %.12g\n", r.concurrence);
  std::printf("hs_min       %.12g\n", r.hs_min);
  std::printf("trace_min    %.12g\n", r.trace_min);
  std::printf("bell         %.12g\n", r.bell);
  if (r.argmax_direction) {
    const auto& n = r.argmax_direction->n();
    std::printf("direction    %.12g %.12g %.12g\n", n[0], n[1], n[2]);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit correlations under local non-Hermitian evolution"};
  app.require_subcommand(1);

  const std::map<std::string, qnh::MeasureMode> modes{{"faithful", qnh::MeasureMode::Faithful},
                                                      {"paper", qnh::MeasureMode::PaperRaw}};

  auto* sweep = app.add_subcommand("sweep", "Evolve one state family over a (gamma_tilde, tau) grid");
  std::string family = "phi";
  std::optional<double> coef_a;
  std::optional<double> coef_b;
  std::optional<double> mixed_r;
  std::string gamma_text;
  double tau_max = 10.0;
  int steps = 1001;
  qnh::MeasureMode sweep_mode = qnh::MeasureMode::Faithful;
  std::string out_path;
  sweep->add_option("--family", family, "phi (a|00>+b|11>) or psi (a|01>+b|10>)")
      ->check(CLI::IsMember({"phi", "psi"}));
  auto* opt_a = sweep->add_option("--a", coef_a, "Coefficient a (pure state)");
  auto* opt_b = sweep->add_option("--b", coef_b, "Coefficient b (pure state)");
  auto* opt_r = sweep->add_option("--mixed-r", mixed_r, "Weight r of the Bell state in a Werner-like mixture");
  opt_r->excludes(opt_a)->excludes(opt_b);
  sweep->add_option("--gamma-tilde", gamma_text, "Comma-separated gamma/Delta values")->required();
  sweep->add_option("--tau-max", tau_max, "Largest tau = Delta t");
  sweep->add_option("--steps", steps, "Number of tau grid points, endpoints included");
  sweep->add_option("--mode", sweep_mode, "faithful or paper")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  sweep->add_option("--out", out_path, "CSV output path")->required();

  auto* figure = app.add_subcommand("figure", "Write the paper-mode and faithful CSVs of a figure preset");
  int figure_number = 0;
  std::string outdir = ".";
  figure->add_option("n", figure_number, "Figure number 1..6")->required();
  figure->add_option("--outdir", outdir, "Output directory");

  auto* measure = app.add_subcommand("measure", "Evaluate all quantifiers of a state stored as JSON");
  std::string rho_path;
  qnh::MeasureMode measure_mode = qnh::MeasureMode::Faithful;
  measure->add_option("--rho", rho_path, "JSON file {\"rho\": 4x4 [re, im]}")->required();
  measure->add_option("--mode", measure_mode, "faithful or paper")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));

  auto* selftest = app.add_subcommand("selftest", "Run the oracle-equivalence checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*sweep) {
      qnh::SweepConfig cfg;
      if (mixed_r) {
        cfg.family = family == "phi" ? qnh::StateFamily{qnh::MixedPhi{*mixed_r}}
                                     : qnh::StateFamily{qnh::MixedPsi{*mixed_r}};
      } else {
        if (!coef_a || !coef_b)
          throw qnh::Error(qnh::ErrorKind::ConfigError, "pure families need both --a and --b");
        cfg.family = family == "phi" ? qnh::StateFamily{qnh::PurePhi{*coef_a, *coef_b}}
                                     : qnh::StateFamily{qnh::PurePsi{*coef_a, *coef_b}};
      }
      cfg.gamma_tilde_list = parse_list(gamma_text);
      cfg.tau_max = tau_max;
      cfg.steps = steps;
      cfg.mode = sweep_mode;
      cfg.output_path = out_path;
      const auto rows = qnh::run_sweep(cfg);
      qnh::emit_csv(rows, cfg.output_path);
      std::printf("wrote %zu rows to %s\n", rows.size(), cfg.output_path.c_str());
    } else if (*figure) {
      const auto out = qnh::run_figure(figure_number, outdir);
      std::printf("wrote %s and %s (%zu rows each)\n", out.paper_csv.c_str(), out.faithful_csv.c_str(),
                  out.rows);
    } else if (*measure) {
      print_report(qnh::measure_file(rho_path, measure_mode));
    } else if (*selftest) {
      return qnh::oracle::run_selftest(std::cout) ? kExitOk : kExitNumerical;
    }
  } catch (const qnh::Error& e) {
    std::fprintf(stderr, "qnh: %s\n", e.what());
    return exit_code_for(e.kind());
  }
  return kExitOk;
}
