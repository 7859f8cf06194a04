#pragma once

#include <stdexcept>
#include <string>

namespace xlag {

/// Failure categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
    spec_invalid,        ///< bad user input or violated precondition
    not_divisible,       ///< exact division by a power of z failed
    oracle_mismatch,     ///< two independent routes disagree
    unclassifiable,      ///< endpoint behaviour outside the I/II/III cases
    inapplicable,        ///< identity does not apply to this configuration
    zero_polynomial,
    boundary_root,       ///< root-count interval endpoint is itself a root
    null_space_dimension,
    quadrature_nonconvergence,
    grid_too_coarse,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for failures that indicate an internal inconsistency rather than
    /// bad input.
    bool is_internal() const noexcept {
        switch (kind_) {
        case ErrorKind::not_divisible:
        case ErrorKind::oracle_mismatch:
        case ErrorKind::null_space_dimension:
        case ErrorKind::quadrature_nonconvergence:
        case ErrorKind::grid_too_coarse:
            return true;
        default:
            return false;
        }
    }

private:
    ErrorKind kind_;
};

#define XLAG_DEFINE_ERROR(Name, Kind)                                          \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
    };

XLAG_DEFINE_ERROR(SpecInvalid, spec_invalid)
XLAG_DEFINE_ERROR(NotDivisible, not_divisible)
XLAG_DEFINE_ERROR(OracleMismatch, oracle_mismatch)
XLAG_DEFINE_ERROR(Unclassifiable, unclassifiable)
XLAG_DEFINE_ERROR(Inapplicable, inapplicable)
XLAG_DEFINE_ERROR(ZeroPolynomial, zero_polynomial)
XLAG_DEFINE_ERROR(BoundaryRoot, boundary_root)
XLAG_DEFINE_ERROR(NullSpaceDimension, null_space_dimension)
XLAG_DEFINE_ERROR(QuadratureNonconvergence, quadrature_nonconvergence)
XLAG_DEFINE_ERROR(GridTooCoarse, grid_too_coarse)

#undef XLAG_DEFINE_ERROR

} // namespace xlag
