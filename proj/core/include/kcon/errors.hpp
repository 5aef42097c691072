#pragma once

#include <stdexcept>
#include <string>

namespace kcon {

// Common base so callers can catch any library error with one handler.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File loading
struct UnsupportedMagicError : Error { using Error::Error; };
struct MalformedHeaderError : Error { using Error::Error; };
struct TruncatedPayloadError : Error { using Error::Error; };
struct SizeMismatchError : Error { using Error::Error; };
struct NonFiniteError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// Validation / preconditions
struct InvalidArgumentError : Error { using Error::Error; };
struct DegenerateImageError : Error { using Error::Error; };
struct DegenerateVarianceError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };

// Wavelet configuration
struct InvalidKernelError : Error { using Error::Error; };
struct BankConfigError : Error { using Error::Error; };
struct KernelTooLongError : Error { using Error::Error; };

// Analysis
struct EmptyReportError : Error { using Error::Error; };
struct InsufficientSubbandsError : Error { using Error::Error; };

// Verification
struct UnsupportedConfigError : Error { using Error::Error; };

}  // namespace kcon
