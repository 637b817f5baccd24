#include "factor/errors.hpp"

namespace factor {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::NumericError: return "NumericError";
    case ErrorKind::ConvergenceError: return "ConvergenceError";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::CatalogTooSmall: return "CatalogTooSmall";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
  }
  return "UnknownError";
}

}  // namespace factor
