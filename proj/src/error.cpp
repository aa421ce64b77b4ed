#include "setconc/error.hpp"

namespace setconc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Input: return "input";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Capacity: return "capacity";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Hypothesis: return "hypothesis";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Internal: return "internal";
  }
  return "internal";
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::Input: return 2;
    case ErrorCode::Parse: return 3;
    case ErrorCode::Capacity: return 4;
    case ErrorCode::Domain: return 5;
    case ErrorCode::Hypothesis: return 6;
    case ErrorCode::Precondition: return 7;
    case ErrorCode::Internal: return 70;
  }
  return 70;
}

}  // namespace setconc
