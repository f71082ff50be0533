#include "qnh/error.hpp"

namespace qnh {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NonRealBlochComponent: return "NonRealBlochComponent";
    case ErrorKind::DegenerateNorm: return "DegenerateNorm";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NormalizationError: return "NormalizationError";
    case ErrorKind::PurityOutOfRange: return "PurityOutOfRange";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::UnknownFigure: return "UnknownFigure";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace qnh
