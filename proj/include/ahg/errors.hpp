#ifndef AHG_ERRORS_HPP
#define AHG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ahg {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Matrix inversion attempted on a singular matrix.
struct SingularMatrixError : Error {
    explicit SingularMatrixError(const std::string& msg = "matrix is singular") : Error(msg) {}
};

// A rational function was evaluated at a zero of its denominator.
struct PoleError : Error {
    long at;
    explicit PoleError(long k0)
        : Error("pole at k = " + std::to_string(k0)), at(k0) {}
};

// A vector is not a nonnegative integer combination of the matrix columns.
struct NotInSemigroupError : Error {
    explicit NotInSemigroupError(const std::string& msg = "vector is not in the column semigroup") : Error(msg) {}
};

// The contiguity extraction could not express every target through the state
// basis, even at the largest tried truncation order.
struct GenericityError : Error {
    explicit GenericityError(const std::string& msg) : Error(msg) {}
};

// A state-basis monomial is reducible modulo the toric ideal.
struct BasisError : Error {
    explicit BasisError(const std::string& msg) : Error(msg) {}
};

// A step matrix of the recurrence became singular (or had a pole) at a
// concrete integer shift.
struct SingularStepError : Error {
    long at;
    explicit SingularStepError(long k)
        : Error("singular step matrix at k = " + std::to_string(k)), at(k) {}
};

// Expectation requested while the normalizing constant is zero.
struct ZeroNormalizerError : Error {
    explicit ZeroNormalizerError() : Error("normalizing constant is zero") {}
};

// The supplied linear form does not evaluate to 1 on every column.
struct NoHyperplaneError : Error {
    explicit NoHyperplaneError(const std::string& msg = "no valid degree hyperplane") : Error(msg) {}
};

// Problem-file syntax or semantic validation failure.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// The two evaluation methods of the benchmark disagreed.
struct MethodMismatchError : Error {
    explicit MethodMismatchError(const std::string& msg) : Error(msg) {}
};

}  // namespace ahg

#endif
