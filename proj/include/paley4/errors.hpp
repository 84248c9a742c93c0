#pragma once

#include <stdexcept>
#include <string>

namespace paley4 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimeCharacteristic : Error { using Error::Error; };
struct ReducibleModulus : Error { using Error::Error; };
struct NoBuiltinModulus : Error { using Error::Error; };
struct ZeroInverse : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct NotPaleyAdmissible : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace paley4
