#ifndef CTM_ERRORS_HPP
#define CTM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ctm {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed argument: wrong variable set, non-homogeneous input, bad name, ...
struct ArgumentError : Error {
    using Error::Error;
};

/// Matrix shape mismatch (non-square determinant, size mismatch).
struct DimensionError : Error {
    using Error::Error;
};

/// A stated precondition does not hold (e.g. the point is not singular).
struct PreconditionError : Error {
    using Error::Error;
};

/// Series operation needs a unit (or a rational square) constant term.
struct NotInvertibleError : Error {
    using Error::Error;
};

/// The cubic does not vanish on the line x2=x3=x4=0.
struct LineNotContainedError : Error {
    LineNotContainedError(const std::string& what, std::string offending)
        : Error(what), offending_monomials(std::move(offending)) {}
    std::string offending_monomials;
};

/// D or Q vanish identically: the chosen line is special.
struct DegenerateLineError : Error {
    using Error::Error;
};

/// q vanishes at the singular point of D (line of the second type).
struct LineOfSecondTypeError : Error {
    using Error::Error;
};

/// No generic coordinate change found within the retry budget.
struct GenericityError : Error {
    using Error::Error;
};

/// Singular point of corank > 2 where the tangent quadric has rank < 2.
struct UnsupportedCorankError : Error {
    using Error::Error;
};

/// K + alpha*e = beta*L has no (or no unique) exact solution.
struct NoProportionalityError : Error {
    using Error::Error;
};

/// A recomputed multiplicity disagrees with the stored divisor ledger.
struct LedgerInconsistencyError : Error {
    using Error::Error;
};

/// A computed dimension disagrees with the stored boundary table row.
struct TableMismatchError : Error {
    using Error::Error;
};

/// Fewer linearly independent test curves than unknown coefficients.
struct InsufficientTestCurvesError : Error {
    using Error::Error;
};

} // namespace ctm

#endif
