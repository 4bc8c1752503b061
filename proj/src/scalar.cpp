#include "sl2q/scalar.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include "sl2q/errors.hpp"

namespace sl2q {

// ---- FieldSpec ----

FieldSpec FieldSpec::root_of_unity(int N) {
    if (N < 2) throw UsageError("root-of-unity order N must be at least 2");
    FieldSpec f;
    f.kind = Kind::RootOfUnity;
    f.N = N;
    return f;
}

std::string FieldSpec::to_string() const {
    if (!is_root()) return "generic";
    return "root" + std::to_string(N);
}

// ---- Scalar constructors ----

Scalar Scalar::zero(const FieldSpec& f) {
    if (f.is_root()) return Scalar(f, CycloElement(f.N));
    return Scalar(f, RationalFunction());
}

Scalar Scalar::one(const FieldSpec& f) { return from_rational(Rational(1), f); }

Scalar Scalar::from_rational(const Rational& r, const FieldSpec& f) {
    if (f.is_root()) return Scalar(f, CycloElement::constant(f.N, r));
    return Scalar(f, RationalFunction(LaurentPoly::constant(r)));
}

Scalar Scalar::from_int(long n, const FieldSpec& f) { return from_rational(Rational(n), f); }

Scalar Scalar::q_power(int k, const FieldSpec& f) {
    if (f.is_root()) return Scalar(f, CycloElement::zeta_power(f.N, k));
    return Scalar(f, RationalFunction(LaurentPoly::q_power(k)));
}

Scalar Scalar::lambda(const FieldSpec& f) { return q_power(1, f) - q_power(-1, f); }

Scalar Scalar::imaginary_unit(const FieldSpec& f) {
    if (!f.is_root() || f.N % 2 != 0)
        throw UsageError("the imaginary unit lives in Q(zeta_2N) only for even N");
    return q_power(f.N / 2, f); // zeta^(N/2) = e^{i*pi/2}
}

Scalar Scalar::from_rational_function(RationalFunction rf) {
    return Scalar(FieldSpec::generic(), std::move(rf));
}

Scalar Scalar::from_cyclotomic(CycloElement ce) {
    FieldSpec f = FieldSpec::root_of_unity(ce.root_index());
    return Scalar(f, std::move(ce));
}

// ---- field operations ----

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatch("cannot combine " + field_.to_string() + " and " + o.field_.to_string() +
                            " scalars");
}

bool Scalar::is_zero() const {
    if (field_.is_root()) return std::get<CycloElement>(v_).is_zero();
    return std::get<RationalFunction>(v_).is_zero();
}

bool Scalar::is_one() const {
    if (field_.is_root()) return std::get<CycloElement>(v_).is_one();
    const auto& rf = std::get<RationalFunction>(v_);
    return rf.den().is_one() && rf.num().is_one();
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_root()) return Scalar(field_, std::get<CycloElement>(v_) + std::get<CycloElement>(o.v_));
    return Scalar(field_, std::get<RationalFunction>(v_) + std::get<RationalFunction>(o.v_));
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_root()) return Scalar(field_, std::get<CycloElement>(v_) - std::get<CycloElement>(o.v_));
    return Scalar(field_, std::get<RationalFunction>(v_) - std::get<RationalFunction>(o.v_));
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_root()) return Scalar(field_, std::get<CycloElement>(v_) * std::get<CycloElement>(o.v_));
    return Scalar(field_, std::get<RationalFunction>(v_) * std::get<RationalFunction>(o.v_));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::negated() const {
    if (field_.is_root()) return Scalar(field_, std::get<CycloElement>(v_).negated());
    return Scalar(field_, std::get<RationalFunction>(v_).negated());
}

Scalar Scalar::inverse() const {
    if (field_.is_root()) return Scalar(field_, std::get<CycloElement>(v_).inverse());
    return Scalar(field_, std::get<RationalFunction>(v_).inverse());
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = one(field_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return v_ == o.v_;
}

const RationalFunction& Scalar::rational_function() const {
    if (field_.is_root()) throw FieldMismatch("scalar is not generic");
    return std::get<RationalFunction>(v_);
}

const CycloElement& Scalar::cyclotomic() const {
    if (!field_.is_root()) throw FieldMismatch("scalar is not cyclotomic");
    return std::get<CycloElement>(v_);
}

std::string Scalar::to_string() const {
    if (field_.is_root()) return std::get<CycloElement>(v_).to_string();
    return std::get<RationalFunction>(v_).to_string();
}

// ---- q-combinatorics ----

Scalar q_int(int k, const FieldSpec& f) {
    if (k < 0) return q_int(-k, f).negated();
    Scalar acc = Scalar::zero(f);
    for (int j = 0; j < k; ++j) acc = acc + Scalar::q_power(k - 1 - 2 * j, f);
    return acc;
}

Scalar q_factorial(int k, const FieldSpec& f) {
    if (k < 0) throw UsageError("q_factorial requires k >= 0");
    Scalar acc = Scalar::one(f);
    for (int j = 1; j <= k; ++j) acc = acc * q_int(j, f);
    return acc;
}

// ---- numeric evaluation ----

std::complex<double> evaluate_numeric(const Scalar& s, std::complex<double> q_value) {
    if (s.field().is_root()) {
        const double theta = std::numbers::pi / static_cast<double>(s.field().N);
        const std::complex<double> zeta(std::cos(theta), std::sin(theta));
        if (std::abs(q_value - zeta) > 1e-9)
            throw FieldMismatch("root-of-unity scalar must be evaluated at q = e^{i*pi/N}");
        return s.cyclotomic().eval();
    }
    return s.rational_function().eval(q_value);
}

std::complex<double> evaluate_numeric(const Scalar& s) {
    if (!s.field().is_root()) throw FieldMismatch("generic scalar needs an evaluation point");
    return s.cyclotomic().eval();
}

// ---- literal parsing ----

namespace {

struct Scanner {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(start, i - start);
    }
    int integer() {
        bool neg = eat('-');
        if (!neg) eat('+');
        std::string d = digits();
        if (d.empty()) throw UsageError("expected integer in scalar literal: '" + s + "'");
        long v = std::stol(d);
        return static_cast<int>(neg ? -v : v);
    }
};

} // namespace

Scalar parse_scalar(const std::string& text, const FieldSpec& f) {
    Scanner sc{text};
    LaurentPoly poly;
    bool first = true;
    while (!sc.done()) {
        Rational sign(1);
        if (sc.eat('-')) {
            sign = -1;
        } else if (sc.eat('+')) {
            // explicit plus
        } else if (!first) {
            throw UsageError("expected '+' or '-' in scalar literal: '" + text + "'");
        }
        first = false;
        // coefficient (optional when a q-part follows)
        Rational coef(1);
        bool have_coef = false;
        std::string numpart = sc.digits();
        if (!numpart.empty()) {
            have_coef = true;
            std::string denpart = "1";
            if (sc.eat('/')) {
                denpart = sc.digits();
                if (denpart.empty()) throw UsageError("expected denominator in scalar literal: '" + text + "'");
            }
            coef = rat_from_string(numpart + "/" + denpart);
        }
        int exp = 0;
        if (sc.eat('q')) {
            exp = 1;
            if (sc.eat('^')) exp = sc.integer();
        } else if (!have_coef) {
            throw UsageError("expected term in scalar literal: '" + text + "'");
        }
        Rational v = coef * sign;
        poly.add_term(exp, v);
    }
    if (first) throw UsageError("empty scalar literal");
    if (!f.is_root()) return Scalar::from_rational_function(RationalFunction(std::move(poly)));
    Scalar acc = Scalar::zero(f);
    for (const auto& [e, v] : poly.coeffs())
        acc = acc + Scalar::q_power(e, f) * Scalar::from_rational(v, f);
    return acc;
}

} // namespace sl2q
