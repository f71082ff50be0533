#include "qnh/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qnh/dynamics.hpp"
#include "qnh/error.hpp"

namespace qnh {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt3 = 0.57735026918962576451;
constexpr double kSqrtTwoThirds = 0.81649658092772603273;

TimeSeriesRow evaluate(const DensityMatrix4& rho0, double gamma_tilde, double tau, MeasureMode mode) {
  const auto evolved = evolve(rho0, HamiltonianParams(gamma_tilde, tau));
  const MeasureReport m = measure_all(evolved.rho, mode);
  return {gamma_tilde, tau, m.concurrence, m.hs_min, m.trace_min, m.bell, evolved.norm};
}

template <bool Parallel>
std::vector<TimeSeriesRow> sweep(const SweepConfig& cfg) {
  validate(cfg);
  const DensityMatrix4 rho0 = make_initial(cfg.family);
  const std::vector<double> taus = tau_grid(cfg);
  const std::size_t per_gamma = taus.size();
  const auto total = static_cast<long long>(per_gamma * cfg.gamma_tilde_list.size());
  std::vector<TimeSeriesRow> rows(static_cast<std::size_t>(total));

  if constexpr (Parallel) {
    // Exceptions must not escape an OpenMP region; the first one is rethrown.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < total; ++i) {
      try {
        const auto k = static_cast<std::size_t>(i);
        rows[k] = evaluate(rho0, cfg.gamma_tilde_list[k / per_gamma], taus[k % per_gamma], cfg.mode);
      } catch (...) {
#pragma omp critical(qnh_sweep_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (long long i = 0; i < total; ++i) {
      const auto k = static_cast<std::size_t>(i);
      rows[k] = evaluate(rho0, cfg.gamma_tilde_list[k / per_gamma], taus[k % per_gamma], cfg.mode);
    }
  }
  return rows;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

void validate(const SweepConfig& cfg) {
  try {
    qnh::validate(cfg.family);
  } catch (const Error& e) {
    throw Error(ErrorKind::ConfigError, std::string("family: ") + e.what());
  }
  if (cfg.gamma_tilde_list.empty()) throw Error(ErrorKind::ConfigError, "gamma_tilde list is empty");
  for (double g : cfg.gamma_tilde_list)
    if (!std::isfinite(g) || g < 0.0)
      throw Error(ErrorKind::ConfigError, "gamma_tilde must be finite and >= 0");
  if (!std::isfinite(cfg.tau_max) || cfg.tau_max <= 0.0)
    throw Error(ErrorKind::ConfigError, "tau_max must be finite and > 0");
  if (cfg.steps < 2) throw Error(ErrorKind::ConfigError, "steps must be >= 2");
}

std::vector<double> tau_grid(const SweepConfig& cfg) {
  std::vector<double> taus(static_cast<std::size_t>(cfg.steps));
  for (int k = 0; k < cfg.steps; ++k) taus[k] = cfg.tau_max * k / (cfg.steps - 1);
  return taus;
}

std::vector<TimeSeriesRow> run_sweep(const SweepConfig& cfg) { return sweep<true>(cfg); }

std::vector<TimeSeriesRow> run_sweep_serial(const SweepConfig& cfg) { return sweep<false>(cfg); }

std::vector<SweepConfig> figure_preset(int n) {
  StateFamily family;
  std::vector<double> gammas;
  switch (n) {
    case 1:
      family = PurePhi{kInvSqrt2, kInvSqrt2};
      gammas = {0.1, 0.25, 0.5, 1.5};
      break;
    case 2:
      family = PurePhi{kInvSqrt3, kSqrtTwoThirds};
      gammas = {0.5, 1.5};
      break;
    case 3:
      family = PurePsi{kInvSqrt2, kInvSqrt2};
      gammas = {0.1, 0.25, 0.5, 1.5};
      break;
    case 4:
      family = PurePsi{kInvSqrt3, kSqrtTwoThirds};
      gammas = {0.5, 1.5};
      break;
    case 5:
      family = MixedPhi{0.5};
      gammas = {0.5, 1.5};
      break;
    case 6:
      family = MixedPsi{0.5};
      gammas = {0.5, 1.5};
      break;
    default:
      throw Error(ErrorKind::UnknownFigure, "figure " + std::to_string(n) + " (expected 1..6)");
  }
  std::vector<SweepConfig> configs;
  for (double g : gammas) {
    SweepConfig cfg;
    cfg.family = family;
    cfg.gamma_tilde_list = {g};
    cfg.tau_max = 10.0;
    cfg.steps = 1001;
    cfg.mode = MeasureMode::PaperRaw;
    cfg.output_path = "fig" + std::to_string(n);
    configs.push_back(cfg);
  }
  return configs;
}

FigureOutputs run_figure(int n, const std::filesystem::path& outdir) {
  const auto configs = figure_preset(n);
  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create " + outdir.string() + ": " + ec.message());

  FigureOutputs out;
  const std::string stem = "fig" + std::to_string(n);
  out.paper_csv = outdir / (stem + ".paper.csv");
  out.faithful_csv = outdir / (stem + ".faithful.csv");
  for (MeasureMode mode : {MeasureMode::PaperRaw, MeasureMode::Faithful}) {
    std::vector<TimeSeriesRow> rows;
    for (SweepConfig cfg : configs) {
      cfg.mode = mode;
      const auto part = run_sweep(cfg);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    emit_csv(rows, mode == MeasureMode::PaperRaw ? out.paper_csv : out.faithful_csv);
    out.rows = rows.size();
  }
  return out;
}

std::string format_csv(const std::vector<TimeSeriesRow>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    for (double v : {r.gamma_tilde, r.tau, r.concurrence, r.hs_min, r.trace_min, r.bell}) {
      out += format_number(v);
      out += ',';
    }
    out += format_number(r.norm);
    out += '\n';
  }
  return out;
}

void emit_csv(const std::vector<TimeSeriesRow>& rows, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  f << format_csv(rows);
  if (!f) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

std::vector<TimeSeriesRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw Error(ErrorKind::ParseError, "missing or unexpected CSV header");
  std::vector<TimeSeriesRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::array<double, 7> v{};
    std::istringstream fields(line);
    std::string cell;
    std::size_t count = 0;
    while (std::getline(fields, cell, ',')) {
      if (count == v.size()) throw Error(ErrorKind::ParseError, "too many fields on line " + std::to_string(line_no));
      try {
        std::size_t used = 0;
        v[count] = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad number '" + cell + "' on line " + std::to_string(line_no));
      }
      ++count;
    }
    if (count != v.size()) throw Error(ErrorKind::ParseError, "expected 7 fields on line " + std::to_string(line_no));
    rows.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6]});
  }
  return rows;
}

DensityMatrix4 parse_density_json(const std::string& text) {
  Mat4 m;
  try {
    const auto doc = nlohmann::json::parse(text);
    const auto& rows = doc.at("rho");
    if (!rows.is_array() || rows.size() != 4) throw Error(ErrorKind::ParseError, "\"rho\" must have 4 rows");
    for (std::size_t r = 0; r < 4; ++r) {
      const auto& row = rows[r];
      if (!row.is_array() || row.size() != 4)
        throw Error(ErrorKind::ParseError, "row " + std::to_string(r) + " must have 4 entries");
      for (std::size_t c = 0; c < 4; ++c) {
        const auto& e = row[c];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
          throw Error(ErrorKind::ParseError, "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                                 ") must be [re, im]");
        m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return DensityMatrix4::from_matrix(m);
}

DensityMatrix4 read_density_json(const std::filesystem::path& path) {
  return parse_density_json(read_file(path));
}

std::string density_to_json(const DensityMatrix4& rho) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < 4; ++c) row.push_back({rho(r, c).real(), rho(r, c).imag()});
    rows.push_back(row);
  }
  return nlohmann::json{{"rho", rows}}.dump();
}

MeasureReport measure_file(const std::filesystem::path& path, MeasureMode mode) {
  return measure_all(read_density_json(path), mode);
}

}  // namespace qnh
