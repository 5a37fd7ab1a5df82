#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxgrowth {

enum class ErrorKind {
  DuplicateEdge,
  InvalidLabel,
  BadIndex,
  BadInjection,
  InvalidBlock,
  ZeroInput,
  OnCircleOrDegenerate,
  NotApplicable,
  DimensionTooHigh,
  WrongChi,
  Edgeless,
  ClassificationAnomaly,
  SeriesAnomaly,
  NotMonic,
  NotSquarefree,
  BadIsolation,
  BadFamily,
  MixedLabels,
  ScanTooLarge,
  ParseError,
  ConfigError,
  InvariantBreach,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::BadInjection: return "BadInjection";
    case ErrorKind::InvalidBlock: return "InvalidBlock";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::OnCircleOrDegenerate: return "OnCircleOrDegenerate";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorKind::WrongChi: return "WrongChi";
    case ErrorKind::Edgeless: return "Edgeless";
    case ErrorKind::ClassificationAnomaly: return "ClassificationAnomaly";
    case ErrorKind::SeriesAnomaly: return "SeriesAnomaly";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::BadIsolation: return "BadIsolation";
    case ErrorKind::BadFamily: return "BadFamily";
    case ErrorKind::MixedLabels: return "MixedLabels";
    case ErrorKind::ScanTooLarge: return "ScanTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::InvariantBreach: return "InvariantBreach";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Input or hypothesis rejections, as opposed to internal anomalies.
  bool is_rejection() const noexcept {
    switch (kind_) {
      case ErrorKind::ClassificationAnomaly:
      case ErrorKind::SeriesAnomaly:
      case ErrorKind::InvariantBreach:
        return false;
      default:
        return true;
    }
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace coxgrowth
