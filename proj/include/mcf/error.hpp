#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcf {

enum class Errc {
  EmptyPalette,
  InvalidColor,
  RuleEndpointOutsidePalette,
  SelfLoopRule,
  DuplicateRule,
  SelfLoopEdge,
  DuplicateEdge,
  VertexIndexOutOfRange,
  UncoloredVertex,
  ColorOutsidePalette,
  LimitExceeded,
  NotTerminated,
  DomainMismatch,
  ThreeColorsPresent,
  NotContracted,
  MissingColor,
  NotComplete,
  NotCompleteBipartite,
  TooLong,
  UnsupportedNetwork,
  Disconnected,
  InvalidParams,
  BudgetExceeded,
  UnknownClaim,
  ParseError,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyPalette: return "EmptyPalette";
    case Errc::InvalidColor: return "InvalidColor";
    case Errc::RuleEndpointOutsidePalette: return "RuleEndpointOutsidePalette";
    case Errc::SelfLoopRule: return "SelfLoopRule";
    case Errc::DuplicateRule: return "DuplicateRule";
    case Errc::SelfLoopEdge: return "SelfLoopEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::VertexIndexOutOfRange: return "VertexIndexOutOfRange";
    case Errc::UncoloredVertex: return "UncoloredVertex";
    case Errc::ColorOutsidePalette: return "ColorOutsidePalette";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::NotTerminated: return "NotTerminated";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::ThreeColorsPresent: return "ThreeColorsPresent";
    case Errc::NotContracted: return "NotContracted";
    case Errc::MissingColor: return "MissingColor";
    case Errc::NotComplete: return "NotComplete";
    case Errc::NotCompleteBipartite: return "NotCompleteBipartite";
    case Errc::TooLong: return "TooLong";
    case Errc::UnsupportedNetwork: return "UnsupportedNetwork";
    case Errc::Disconnected: return "Disconnected";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::UnknownClaim: return "UnknownClaim";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `code()` identifies the failure kind;
/// `what()` carries "<Kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mcf
