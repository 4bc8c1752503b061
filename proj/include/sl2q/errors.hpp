#ifndef SL2Q_ERRORS_HPP
#define SL2Q_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sl2q {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& msg = "operands live in different fields") : Error(msg) {}
};

struct PoleAtEvaluationPoint : Error {
    explicit PoleAtEvaluationPoint(const std::string& msg = "denominator vanishes at evaluation point")
        : Error(msg) {}
};

// Representation-construction errors.
struct ZeroC : Error {
    explicit ZeroC(const std::string& msg = "parameter c must be nonzero") : Error(msg) {}
};
struct ZeroMu : Error {
    explicit ZeroMu(const std::string& msg = "parameter mu must be nonzero") : Error(msg) {}
};
struct BadLevel : Error {
    explicit BadLevel(const std::string& msg = "level n out of range") : Error(msg) {}
};
struct BadParity : Error {
    explicit BadParity(const std::string& msg = "root order N must be even") : Error(msg) {}
};
struct WeightInSpecialCase : Error {
    explicit WeightInSpecialCase(const std::string& msg) : Error(msg) {}
};
struct CrelViolation : Error {
    explicit CrelViolation(const std::string& msg = "highest weight violates the restricted-weight constraint")
        : Error(msg) {}
};
struct NotScalar : Error {
    explicit NotScalar(const std::string& msg = "matrix is not a scalar multiple of the identity") : Error(msg) {}
};
struct NonUnitarizable : Error {
    explicit NonUnitarizable(const std::string& msg = "a squared norm evaluates negative") : Error(msg) {}
};

/// Bad user input (CLI flags, malformed JSON, unparsable scalars).
struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

} // namespace sl2q

#endif // SL2Q_ERRORS_HPP
