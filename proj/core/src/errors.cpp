#include "qloop/errors.hpp"

namespace qloop {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::TruncationOverflow: return "TruncationOverflow";
    case ErrorKind::UnsupportedKind: return "UnsupportedKind";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::WrapInconsistency: return "WrapInconsistency";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::InvalidRegime: return "InvalidRegime";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::ResourceError: return "ResourceError";
  }
  return "Unknown";
}

}  // namespace qloop
