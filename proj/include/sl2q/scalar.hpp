#ifndef SL2Q_SCALAR_HPP
#define SL2Q_SCALAR_HPP

#include <complex>
#include <string>
#include <variant>

#include "sl2q/cyclotomic.hpp"
#include "sl2q/laurent.hpp"

namespace sl2q {

/// Which exact field coefficients live in: rational functions of q, or
/// the cyclotomic field fixing q = e^{i*pi/N} (a primitive 2N-th root
/// of unity), N >= 2.
struct FieldSpec {
    enum class Kind { Generic, RootOfUnity };
    Kind kind = Kind::Generic;
    int N = 0;

    static FieldSpec generic() { return {}; }
    static FieldSpec root_of_unity(int N);

    bool is_root() const { return kind == Kind::RootOfUnity; }
    bool operator==(const FieldSpec&) const = default;
    std::string to_string() const;
};

/// Exact field element: a reduced fraction of Laurent polynomials in q
/// (generic), or a cyclotomic-field element (root of unity). Immutable
/// value type; all operations are pure.
class Scalar {
public:
    Scalar() : field_(), v_(RationalFunction()) {}

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_rational(const Rational& r, const FieldSpec& f);
    static Scalar from_int(long n, const FieldSpec& f);
    static Scalar q_power(int k, const FieldSpec& f);
    static Scalar lambda(const FieldSpec& f); // q - q^-1
    /// The element i with i^2 = -1 and positive imaginary part; exists in
    /// Q(zeta_2N) iff N is even (i = zeta^(N/2) = e^{i*pi/2}).
    static Scalar imaginary_unit(const FieldSpec& f);

    static Scalar from_rational_function(RationalFunction rf);
    static Scalar from_cyclotomic(CycloElement ce);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws DivisionByZero
    Scalar negated() const;
    Scalar inverse() const; // throws DivisionByZero
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const RationalFunction& rational_function() const; // generic only
    const CycloElement& cyclotomic() const;            // root only

    std::string to_string() const;

private:
    Scalar(FieldSpec f, RationalFunction rf) : field_(f), v_(std::move(rf)) {}
    Scalar(FieldSpec f, CycloElement ce) : field_(f), v_(std::move(ce)) {}
    void check_same_field(const Scalar& o) const;

    FieldSpec field_;
    std::variant<RationalFunction, CycloElement> v_;
};

/// The q-integer [k] = (q^k - q^-k)/(q - q^-1), computed as the explicit
/// Laurent sum q^(k-1) + q^(k-3) + ... + q^(1-k) so no division is ever
/// performed. [0] = 0 and [-k] = -[k].
Scalar q_int(int k, const FieldSpec& f);

/// [k]! = [k][k-1]...[1], with [0]! = 1. Requires k >= 0.
Scalar q_factorial(int k, const FieldSpec& f);

/// Floating evaluation. Generic scalars are evaluated at q_value
/// (PoleAtEvaluationPoint if the denominator vanishes there); scalars
/// over a root-of-unity field require q_value = e^{i*pi/N}.
std::complex<double> evaluate_numeric(const Scalar& s, std::complex<double> q_value);

/// Evaluation of a root-of-unity scalar at its own root.
std::complex<double> evaluate_numeric(const Scalar& s);

/// Parses a signed Laurent-polynomial literal such as "2", "-3/2",
/// "q-q^-1", "1+2q^-1" or "3/2q^2", reduced into the given field.
Scalar parse_scalar(const std::string& text, const FieldSpec& f);

} // namespace sl2q

#endif // SL2Q_SCALAR_HPP
