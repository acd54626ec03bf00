#pragma once

#include <stdexcept>

namespace eggdrop {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct ContradictionError : Error { using Error::Error; };
struct OutOfEggs : Error { using Error::Error; };
struct OutOfRegion : Error { using Error::Error; };
struct InsufficientEggs : Error { using Error::Error; };
struct AmbiguousResult : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };
struct AuditTooLarge : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };

}  // namespace eggdrop
