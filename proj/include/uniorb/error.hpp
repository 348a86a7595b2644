#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uniorb {

enum class ErrorKind {
    InvalidInput,
    ParseError,
    NotUnimodular,
    DegenerateGenerator,
    Unbounded,
    NonPrimitiveRay,
    DuplicateRay,
    NonSimplicialCone,
    FanConditionViolated,
    NotComplete,
    NotFinite,
    InvalidSpec,
    NotApplicable,
    Internal,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::DegenerateGenerator: return "DegenerateGenerator";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorKind::DuplicateRay: return "DuplicateRay";
    case ErrorKind::NonSimplicialCone: return "NonSimplicialCone";
    case ErrorKind::FanConditionViolated: return "FanConditionViolated";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind),
          detail_(message) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

  private:
    ErrorKind kind_;
    std::string detail_;
};

} // namespace uniorb
