/*
   Copyright 2026 The sepinv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SEPINV_ERROR_HPP
#define SEPINV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sepinv {

enum class ErrorCode {
    NonPrimeCharacteristic,
    ReducibleModulus,
    MissingModulus,
    DivisionByZero,
    EnumerationCapExceeded,
    SyntaxError,
    UnknownVariable,
    RingMismatch,
    DimensionMismatch,
    ResourceCapExceeded,
    UnitIdeal,
    NonHomogeneousInput,
    GroupCapExceeded,
    NotGeneratedByFixedPointElements,
    NotInvariant,
    EquivalenceViolation,
    InternalInconsistency,
    InvalidArgument,
    ManifestError,
};

inline std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::MissingModulus: return "MissingModulus";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownVariable: return "UnknownVariable";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ResourceCapExceeded: return "ResourceCapExceeded";
        case ErrorCode::UnitIdeal: return "UnitIdeal";
        case ErrorCode::NonHomogeneousInput: return "NonHomogeneousInput";
        case ErrorCode::GroupCapExceeded: return "GroupCapExceeded";
        case ErrorCode::NotGeneratedByFixedPointElements: return "NotGeneratedByFixedPointElements";
        case ErrorCode::NotInvariant: return "NotInvariant";
        case ErrorCode::EquivalenceViolation: return "EquivalenceViolation";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ManifestError: return "ManifestError";
    }
    return "Unknown";
}

/// Resource exhaustion as opposed to bad input or a failed internal check.
inline bool is_resource_error(ErrorCode code) noexcept {
    return code == ErrorCode::ResourceCapExceeded || code == ErrorCode::GroupCapExceeded ||
           code == ErrorCode::EnumerationCapExceeded;
}

inline bool is_internal_error(ErrorCode code) noexcept {
    return code == ErrorCode::EquivalenceViolation || code == ErrorCode::InternalInconsistency;
}

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace sepinv

#endif
