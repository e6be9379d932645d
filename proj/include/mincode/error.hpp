#ifndef MINCODE_ERROR_HPP
#define MINCODE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mincode {

enum class ErrorKind {
  NonPrimeCharacteristic,
  ReducibleModulus,
  UnsupportedOrder,
  ZeroInverse,
  InvalidArgument,
  ZeroNormal,
  DimensionOutOfRange,
  NotScalarCompatible,
  OriginInSet,
  SameHyperplane,
  BudgetExceeded,
  EnumerationCap,
  InputFormat,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroNormal: return "ZeroNormal";
    case ErrorKind::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorKind::NotScalarCompatible: return "NotScalarCompatible";
    case ErrorKind::OriginInSet: return "OriginInSet";
    case ErrorKind::SameHyperplane: return "SameHyperplane";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::EnumerationCap: return "EnumerationCap";
    case ErrorKind::InputFormat: return "InputFormat";
  }
  return "Unknown";
}

/// Every library failure is reported as an Error carrying a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mincode

#endif  // MINCODE_ERROR_HPP
