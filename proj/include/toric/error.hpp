#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

/// Domain error kinds. The CLI reports these by name and exits with 2.
enum class ErrorKind {
    InvalidInput,
    ZeroVector,
    DependentRows,
    ContainsLine,
    NotSimplicial,
    NotFullDimensional,
    NotPointed,
    NotInMonoid,
    NotSaturated,
    EmptyPolyhedron,
    NotLatticePolyhedron,
    NotTruncating,
    NotAFan,
    NotAFacet,
    NoRays,
    InconsistentOrder,
    CriterionMismatch,
    NotIntegrallyClosed,
    AlreadySaturated,
    PairSearchFailed,
    NotInSupport,
    FiniteOrderClass,
    StepLimitExceeded,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace toric
