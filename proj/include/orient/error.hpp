#pragma once

#include <stdexcept>
#include <string>

namespace orient {

enum class Errc {
  InvalidArgument,
  OutOfRange,
  SelfLoop,
  AlreadyOriented,
  NotATournament,
  BadLength,
  InvalidCycle,
  BudgetExceeded,
  TooLarge,
  SizeMismatch,
  NotFas1,
  NoFreeElements,
  StrategyStuck,
  CriterionUnmet,
  StageComplete,
  NoAgreeingPair,
  FasTooSmall,
  AllDestroyed,
  CorruptTranscript,
  ParseError,
  UnknownStrategy,
  BadConfig,
};

inline const char* to_string(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::AlreadyOriented: return "AlreadyOriented";
    case Errc::NotATournament: return "NotATournament";
    case Errc::BadLength: return "BadLength";
    case Errc::InvalidCycle: return "InvalidCycle";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::TooLarge: return "TooLarge";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NotFas1: return "NotFas1";
    case Errc::NoFreeElements: return "NoFreeElements";
    case Errc::StrategyStuck: return "StrategyStuck";
    case Errc::CriterionUnmet: return "CriterionUnmet";
    case Errc::StageComplete: return "StageComplete";
    case Errc::NoAgreeingPair: return "NoAgreeingPair";
    case Errc::FasTooSmall: return "FasTooSmall";
    case Errc::AllDestroyed: return "AllDestroyed";
    case Errc::CorruptTranscript: return "CorruptTranscript";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownStrategy: return "UnknownStrategy";
    case Errc::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the Errc kinds so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace orient
