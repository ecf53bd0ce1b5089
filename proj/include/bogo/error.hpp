/*
   Copyright 2026 The bogomolov-toolkit Authors

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

#ifndef BOGO_ERROR_HPP
#define BOGO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace bogo {

enum class ErrorKind {
    NonPrimeP,
    ReduciblePolynomial,
    InvalidSpec,
    MixedParents,
    NotAUnit,
    TooLarge,
    SingularMatrix,
    NotSubgroup,
    NonzeroTrace,
    NotUnipotentAtLevel,
    PreconditionViolated,
    OddWeight,
    Overflow,
    ZeroPolynomial,
    RootIsolationFailure,
    NonpositiveConstant,
    MissingCoefficient,
    NetworkError,
    NotFound,
    SchemaMismatch,
    InsufficientCoefficients,
    ParseError,
    InvariantViolation,
    OfflineViolation,
    CacheConflict,
    MalformedLabel,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
    case ErrorKind::NonPrimeP: return "NonPrimeP";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::MixedParents: return "MixedParents";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NonzeroTrace: return "NonzeroTrace";
    case ErrorKind::NotUnipotentAtLevel: return "NotUnipotentAtLevel";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::OddWeight: return "OddWeight";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::RootIsolationFailure: return "RootIsolationFailure";
    case ErrorKind::NonpositiveConstant: return "NonpositiveConstant";
    case ErrorKind::MissingCoefficient: return "MissingCoefficient";
    case ErrorKind::NetworkError: return "NetworkError";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::InsufficientCoefficients: return "InsufficientCoefficients";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::OfflineViolation: return "OfflineViolation";
    case ErrorKind::CacheConflict: return "CacheConflict";
    case ErrorKind::MalformedLabel: return "MalformedLabel";
    }
    return "Unknown";
}

/// Typed domain error. Every failure the toolkit reports carries a kind so
/// callers (and the CLI's JSON error channel) can dispatch on it.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace bogo

#endif  // BOGO_ERROR_HPP
