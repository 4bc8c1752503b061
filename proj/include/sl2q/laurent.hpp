#ifndef SL2Q_LAURENT_HPP
#define SL2Q_LAURENT_HPP

#include <complex>
#include <map>
#include <string>

#include "sl2q/rational.hpp"

namespace sl2q {

/// Laurent polynomial in one variable q with rational coefficients,
/// stored sparsely as exponent -> coefficient. Zero coefficients are
/// never stored, so coefficient-wise comparison is canonical.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(const Rational& r);
    static LaurentPoly q_power(int k); // the monomial q^k

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    int min_exp() const; // requires nonzero
    int max_exp() const; // requires nonzero
    Rational coeff(int e) const;
    const std::map<int, Rational>& coeffs() const { return c_; }

    void add_term(int e, const Rational& v); // accumulates, drops zeros

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly negated() const;
    LaurentPoly scaled(const Rational& r) const;
    LaurentPoly shifted(int k) const; // multiply by q^k

    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

    std::complex<double> eval(std::complex<double> q) const;
    std::string to_string() const;

private:
    std::map<int, Rational> c_;
};

/// Quotient of two Laurent polynomials, kept in a canonical form:
///  - gcd(num, den) = 1 as ordinary polynomials (common q-power shifted out),
///  - den has minimal exponent 0 and its lowest coefficient equals 1.
/// Zero is stored as 0/1. Equality is then component-wise.
class RationalFunction {
public:
    RationalFunction(); // zero
    explicit RationalFunction(LaurentPoly n);
    RationalFunction(LaurentPoly n, LaurentPoly d); // throws DivisionByZero on d = 0

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction negated() const;
    RationalFunction inverse() const; // throws DivisionByZero on 0

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// Re-runs canonicalization. A no-op on anything this class hands out;
    /// exposed so idempotence is testable.
    void reduce();

    std::complex<double> eval(std::complex<double> q) const; // throws PoleAtEvaluationPoint
    std::string to_string() const;

private:
    LaurentPoly num_, den_;
};

} // namespace sl2q

#endif // SL2Q_LAURENT_HPP
