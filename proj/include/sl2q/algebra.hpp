#ifndef SL2Q_ALGEBRA_HPP
#define SL2Q_ALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include "sl2q/scalar.hpp"

namespace sl2q {

/// Generators of the quadratic algebra on X+, X0, X-, C. The enum order
/// is the normal-form order Xm < X0 < Cc < Xp, so a sorted word reads
/// Xm^a X0^b C^d Xp^e (lowering part first, matching the triangular
/// decomposition).
enum class Generator { Xm = 0, X0 = 1, Cc = 2, Xp = 3 };

std::string generator_name(Generator g);

/// Exponent vector of an ordered monomial Xm^a X0^b C^d Xp^e.
struct Monomial {
    int a = 0, b = 0, d = 0, e = 0;

    auto operator<=>(const Monomial&) const = default;
    bool is_unit() const { return a == 0 && b == 0 && d == 0 && e == 0; }
    int degree() const { return a + b + d + e; }
    std::vector<Generator> word() const;
    std::string to_string() const;
};

/// Which disordered pair a rewriting step picks first. Both strategies
/// must produce the same normal form (confluence).
enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

/// Finite linear combination of ordered monomials with Scalar
/// coefficients. Zero coefficients are never stored. When `restricted`
/// is set the element lives in the quotient where C^2 is tied to the
/// quadratic Casimir, and every monomial has C-degree <= 1.
class AlgebraElement {
public:
    AlgebraElement(FieldSpec field, bool restricted)
        : field_(field), restricted_(restricted) {}

    static AlgebraElement zero(const FieldSpec& f, bool restricted = false);
    static AlgebraElement unit(const FieldSpec& f, bool restricted = false);
    static AlgebraElement generator(Generator g, const FieldSpec& f, bool restricted = false);
    static AlgebraElement monomial(const Monomial& m, const Scalar& coeff, bool restricted = false);

    const FieldSpec& field() const { return field_; }
    bool restricted() const { return restricted_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const Scalar& c);

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement negated() const;
    AlgebraElement scaled(const Scalar& s) const;

    bool operator==(const AlgebraElement& o) const;

    std::string to_string() const;

private:
    FieldSpec field_;
    bool restricted_;
    std::map<Monomial, Scalar> terms_;
};

/// Rewrites an arbitrary word in the generators into the ordered-monomial
/// basis. Rewriting terminates: each step removes an inversion or
/// produces strictly shorter words. With `restricted`, C-degrees >= 2 are
/// then eliminated.
AlgebraElement normal_form(const std::vector<Generator>& word, const FieldSpec& f, bool restricted,
                           RewriteStrategy strategy = RewriteStrategy::LeftmostFirst);

/// Product in normal form. Operands must share field and restricted flag.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

/// xy - yx in normal form.
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);

/// The quadratic Casimir (q+q^-1) X0^2 + q X- X+ + q^-1 X+ X-, normal-ordered.
AlgebraElement casimir2(const FieldSpec& f, bool restricted = false);

/// Eliminates every monomial with C-degree >= 2 by substituting
/// C^2 = 1 + lambda^2/(q+q^-1) * casimir2 and re-ordering. Idempotent;
/// the result carries the restricted flag.
AlgebraElement restricted_reduce(const AlgebraElement& x);

} // namespace sl2q

#endif // SL2Q_ALGEBRA_HPP
