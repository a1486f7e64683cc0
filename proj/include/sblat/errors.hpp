#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sblat {

enum class ErrorKind {
  CycleDetected,
  RedundantCover,
  IdOutOfRange,
  NotUnique,
  NotComparable,
  BudgetExceeded,
  IntervalTooLarge,
  FaceBudgetExceeded,
  AtomCountExceeded,
  IdealCountExceeded,
  ParamTooLarge,
  UnsupportedType,
  NotVerified,
  InvalidInput,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::RedundantCover: return "RedundantCover";
    case ErrorKind::IdOutOfRange: return "IdOutOfRange";
    case ErrorKind::NotUnique: return "NotUnique";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::IntervalTooLarge: return "IntervalTooLarge";
    case ErrorKind::FaceBudgetExceeded: return "FaceBudgetExceeded";
    case ErrorKind::AtomCountExceeded: return "AtomCountExceeded";
    case ErrorKind::IdealCountExceeded: return "IdealCountExceeded";
    case ErrorKind::ParamTooLarge: return "ParamTooLarge";
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::NotVerified: return "NotVerified";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class ToolkitError : public std::runtime_error {
 public:
  ToolkitError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  /// True for overflow-style errors that should map to a distinct exit status.
  bool is_budget() const {
    switch (kind_) {
      case ErrorKind::BudgetExceeded:
      case ErrorKind::IntervalTooLarge:
      case ErrorKind::FaceBudgetExceeded:
      case ErrorKind::AtomCountExceeded:
      case ErrorKind::IdealCountExceeded:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

/// Enumeration caps shared across the toolkit.  Exceeding a budget raises a
/// ToolkitError; nothing is ever silently truncated.
struct Budgets {
  std::uint64_t chain_budget = 200000;        // saturated chains per interval
  std::uint64_t move_edge_budget = 5000000;   // basic-move graph edges
  std::uint64_t face_budget = 50000;          // simplicial complex faces
  std::uint64_t search_budget = 2000000;      // sb_exists search nodes
  int atom_cap = 20;                          // atoms per interval for subset enumeration
};

}  // namespace sblat
