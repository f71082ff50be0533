#pragma once

// Time sweeps over (gamma_tilde, tau), CSV output and figure presets.

#include <filesystem>
#include <string>
#include <vector>

#include "qnh/measures.hpp"
#include "qnh/states.hpp"

namespace qnh {

struct SweepConfig {
  StateFamily family = PurePhi{0.70710678118654752440, 0.70710678118654752440};
  std::vector<double> gamma_tilde_list;
  double tau_max = 10.0;
  int steps = 1001;
  MeasureMode mode = MeasureMode::PaperRaw;
  std::string output_path;
};

struct TimeSeriesRow {
  double gamma_tilde = 0.0;
  double tau = 0.0;
  double concurrence = 0.0;
  double hs_min = 0.0;
  double trace_min = 0.0;
  double bell = 0.0;
  double norm = 0.0;
};

/// Throws Error(ConfigError) describing the first invalid field.
void validate(const SweepConfig& cfg);

/// tau_k = tau_max * k / (steps - 1), k = 0 .. steps - 1.
std::vector<double> tau_grid(const SweepConfig& cfg);

/// Rows ordered by gamma_tilde list order, then ascending tau. Grid points are
/// evaluated with OpenMP and written by index.
std::vector<TimeSeriesRow> run_sweep(const SweepConfig& cfg);

/// Single-threaded reference for run_sweep; bitwise identical output.
std::vector<TimeSeriesRow> run_sweep_serial(const SweepConfig& cfg);

/// Sweep configurations behind figures 1..6, one per gamma_tilde value,
/// tau in [0, 10] with 1001 points, PaperRaw mode.
/// Throws Error(UnknownFigure) outside 1..6.
std::vector<SweepConfig> figure_preset(int n);

struct FigureOutputs {
  std::filesystem::path paper_csv;
  std::filesystem::path faithful_csv;
  std::size_t rows = 0;
};

/// Runs every configuration of a preset in both modes and writes
/// fig<n>.paper.csv and fig<n>.faithful.csv into outdir.
FigureOutputs run_figure(int n, const std::filesystem::path& outdir);

inline constexpr const char* kCsvHeader = "gamma_tilde,tau,concurrence,hs_min,trace_min,bell,norm";

/// Header plus one line per row, 12 significant digits, LF endings.
std::string format_csv(const std::vector<TimeSeriesRow>& rows);
void emit_csv(const std::vector<TimeSeriesRow>& rows, const std::filesystem::path& path);

/// Inverse of format_csv. Throws Error(ParseError).
std::vector<TimeSeriesRow> parse_csv(const std::string& text);

/// Reads {"rho": [[[re, im] x 4] x 4]}. Throws Error(ParseError) for
/// malformed input and Error(InvalidState) when the matrix is not a state.
DensityMatrix4 parse_density_json(const std::string& text);
DensityMatrix4 read_density_json(const std::filesystem::path& path);
std::string density_to_json(const DensityMatrix4& rho);

MeasureReport measure_file(const std::filesystem::path& path, MeasureMode mode);

}  // namespace qnh
