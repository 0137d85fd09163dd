#pragma once

#include <stdexcept>
#include <string>

namespace germ {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands built over different variable lists.
struct RingMismatchError : Error {
    using Error::Error;
};

// Malformed mathematical input (zero germ, nonzero constant term, ...).
struct InvalidInputError : Error {
    using Error::Error;
};

// Text failed to parse; carries a 1-based position when one is known.
struct ParseError : Error {
    int line = 0;
    int column = 0;
    explicit ParseError(const std::string& msg) : Error(msg) {}
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

// A germ with a non-isolated singularity was fed to an operation that
// requires a finite Milnor number.
struct NonIsolatedError : Error {
    using Error::Error;
    NonIsolatedError() : Error("germ has a non-isolated singularity") {}
};

// A jet dimension failed to stabilize below the configured maximum
// truncation.
struct TruncationTooLowError : Error {
    using Error::Error;
};

struct NotTangentToIdentityError : Error {
    using Error::Error;
    NotTangentToIdentityError() : Error("map is not tangent to the identity") {}
};

// No unit g with compose(f, phi) = g*f exists at the working truncation.
struct NotIsotropyError : Error {
    using Error::Error;
    NotIsotropyError() : Error("map does not preserve the hypersurface at this truncation") {}
};

// Same, identically in the time parameter.
struct NotIsotropyFamilyError : Error {
    using Error::Error;
    NotIsotropyFamilyError() : Error("family does not preserve the hypersurface identically in t") {}
};

// Claimed volume-form equivalence does not hold at the truncation.
struct NotEquivalentError : Error {
    using Error::Error;
    NotEquivalentError() : Error("pullback of omega' does not reproduce omega at this truncation") {}
};

// Coefficient vanishes at the origin, so the top form is not a volume form.
struct NotVolumeError : Error {
    using Error::Error;
    NotVolumeError() : Error("top-form coefficient vanishes at the origin") {}
};

// Primitive requested for a form that is not closed.
struct NotClosedError : Error {
    using Error::Error;
    NotClosedError() : Error("form is not closed") {}
};

}  // namespace germ
