#ifndef SL2Q_CYCLOTOMIC_HPP
#define SL2Q_CYCLOTOMIC_HPP

#include <complex>
#include <string>
#include <vector>

#include "sl2q/rational.hpp"

namespace sl2q {

/// Shared data for the field Q(zeta), zeta = e^{i*pi/N} a primitive
/// 2N-th root of unity: the 2N-th cyclotomic polynomial (the minimal
/// polynomial of zeta) and its degree phi(2N). Contexts are built once
/// per N and cached.
class CyclotomicContext {
public:
    static const CyclotomicContext& get(int N); // N >= 2

    int root_index() const { return N_; }   // q = e^{i*pi/N}
    int order() const { return 2 * N_; }     // zeta^(2N) = 1
    int degree() const { return degree_; }   // phi(2N)
    /// Monic modulus, index = degree, size degree()+1.
    const std::vector<Rational>& modulus() const { return modulus_; }

private:
    CyclotomicContext(int N, std::vector<Rational> modulus);
    int N_;
    int degree_;
    std::vector<Rational> modulus_;
};

/// Element of Q(zeta) as a coordinate vector in the power basis
/// 1, zeta, ..., zeta^(phi(2N)-1). Always fully reduced, so equality
/// is coordinate-wise.
class CycloElement {
public:
    explicit CycloElement(int N); // zero
    static CycloElement constant(int N, const Rational& r);
    static CycloElement zeta_power(int N, long k); // q^k for any integer k

    int root_index() const { return N_; }
    const std::vector<Rational>& coords() const { return coords_; }
    bool is_zero() const;
    bool is_one() const;

    CycloElement operator+(const CycloElement& o) const;
    CycloElement operator-(const CycloElement& o) const;
    CycloElement operator*(const CycloElement& o) const;
    CycloElement negated() const;
    CycloElement scaled(const Rational& r) const;
    CycloElement inverse() const; // throws DivisionByZero on 0

    bool operator==(const CycloElement& o) const { return N_ == o.N_ && coords_ == o.coords_; }

    std::complex<double> eval() const; // at zeta = e^{i*pi/N}
    std::string to_string() const;

private:
    int N_;
    std::vector<Rational> coords_; // size phi(2N)
};

} // namespace sl2q

#endif // SL2Q_CYCLOTOMIC_HPP
