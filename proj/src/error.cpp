#include "lcsurf/error.hpp"

namespace lcsurf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::GlueMismatch: return "GlueMismatch";
    case ErrorKind::NoneFound: return "NoneFound";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace lcsurf
