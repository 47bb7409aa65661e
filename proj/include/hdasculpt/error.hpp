#pragma once

#include <stdexcept>
#include <string>

namespace hdasculpt {

enum class ErrorKind {
  InvalidInput,
  IllegalPath,
  NotConsistent,
  NotConnected,
  NotRegular,
  NotProper,
  Cyclic,
  RepeatingEvents,
  ResourceLimit,
  NotFaceClosed,
  SyntaxError,
  UnmatchedV,
  HeldAtEnd,
  InitialForbidden,
  NonExtensional,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::IllegalPath: return "IllegalPath";
    case ErrorKind::NotConsistent: return "NotConsistent";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::Cyclic: return "Cyclic";
    case ErrorKind::RepeatingEvents: return "RepeatingEvents";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::NotFaceClosed: return "NotFaceClosed";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnmatchedV: return "UnmatchedV";
    case ErrorKind::HeldAtEnd: return "HeldAtEnd";
    case ErrorKind::InitialForbidden: return "InitialForbidden";
    case ErrorKind::NonExtensional: return "NonExtensional";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse errors remember where they happened (1-based).
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& what, int line, int column)
      : Error(kind, what + " at line " + std::to_string(line) + ", column " +
                        std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace hdasculpt
