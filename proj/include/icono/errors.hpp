#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace icono {

// Error vocabulary shared by every stage. The code drives the process exit
// status: configuration problems exit 2, data problems 3, stage failures 4.
enum class ErrorCode {
  ConfigError,
  MissingColumn,
  BadLabel,
  BoxOutOfBounds,
  InsufficientClassCount,
  InsufficientContent,
  MissingWeights,
  WeightMismatch,
  UndecodableImage,
  SingleClassData,
  DimensionMismatch,
  LengthMismatch,
  UnknownLabel,
  EmptyMatrix,
  ArchitectureMismatch,
  Precondition,
  Divergence,
  StageFailure,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::BadLabel: return "BadLabel";
    case ErrorCode::BoxOutOfBounds: return "BoxOutOfBounds";
    case ErrorCode::InsufficientClassCount: return "InsufficientClassCount";
    case ErrorCode::InsufficientContent: return "InsufficientContent";
    case ErrorCode::MissingWeights: return "MissingWeights";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::UndecodableImage: return "UndecodableImage";
    case ErrorCode::SingleClassData: return "SingleClassData";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::ArchitectureMismatch: return "ArchitectureMismatch";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::Divergence: return "Divergence";
    case ErrorCode::StageFailure: return "StageFailure";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

  int exit_code() const {
    switch (code_) {
      case ErrorCode::ConfigError:
        return 2;
      case ErrorCode::Divergence:
      case ErrorCode::StageFailure:
        return 4;
      default:
        return 3;
    }
  }

 private:
  ErrorCode code_;
};

// One offending manifest row. Row numbers are 1-based over data rows
// (the header is row 0).
struct RowIssue {
  int row = 0;
  ErrorCode code = ErrorCode::BadLabel;
  std::string message;
};

// Aggregate of every issue found in a manifest scan; nothing is dropped
// silently, the whole file is validated before this is thrown.
class ManifestError : public Error {
 public:
  ManifestError(std::vector<RowIssue> issues, const std::string& path)
      : Error(issues.empty() ? ErrorCode::MissingColumn : issues.front().code,
              format(issues, path)),
        issues_(std::move(issues)) {}

  const std::vector<RowIssue>& issues() const { return issues_; }

 private:
  static std::string format(const std::vector<RowIssue>& issues,
                            const std::string& path) {
    std::string out = path + ": " + std::to_string(issues.size()) + " issue(s)";
    for (const auto& i : issues) {
      out += "\n  row " + std::to_string(i.row) + ": " +
             error_code_name(i.code) + ": " + i.message;
    }
    return out;
  }

  std::vector<RowIssue> issues_;
};

}  // namespace icono
