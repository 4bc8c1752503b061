#include "sl2q/laurent.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace sl2q {

// ---- LaurentPoly ----

LaurentPoly LaurentPoly::constant(const Rational& r) {
    LaurentPoly p;
    p.add_term(0, r);
    return p;
}

LaurentPoly LaurentPoly::q_power(int k) {
    LaurentPoly p;
    p.add_term(k, Rational(1));
    return p;
}

bool LaurentPoly::is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

int LaurentPoly::min_exp() const {
    assert(!c_.empty());
    return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
    assert(!c_.empty());
    return c_.rbegin()->first;
}

Rational LaurentPoly::coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int e, const Rational& v) {
    if (v == 0) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
        c_.emplace(e, v);
    } else {
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, v] : o.c_) r.add_term(e, v);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, v] : o.c_) {
        Rational nv = -v;
        r.add_term(e, nv);
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, v1] : c_)
        for (const auto& [e2, v2] : o.c_) {
            Rational p = v1 * v2;
            r.add_term(e1 + e2, p);
        }
    return r;
}

LaurentPoly LaurentPoly::negated() const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_.emplace(e, -v);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& s) const {
    LaurentPoly r;
    if (s == 0) return r;
    for (const auto& [e, v] : c_) {
        Rational p = v * s;
        r.c_.emplace(e, p);
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_.emplace(e + k, v);
    return r;
}

std::complex<double> LaurentPoly::eval(std::complex<double> q) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, v] : c_) acc += rat_to_double(v) * std::pow(q, e);
    return acc;
}

std::string LaurentPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending exponents read naturally: q^2 + 1 + q^-2
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Rational v = it->second;
        bool neg = v < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational a = neg ? Rational(-v) : v;
        int e = it->first;
        if (e == 0) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

// ---- polynomial gcd machinery (ordinary polynomials, index = degree) ----

namespace {

using DenseZ = std::vector<Integer>;
using DenseQ = std::vector<Rational>;

void trim(DenseZ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
void trim(DenseQ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer int_content(const DenseZ& p) {
    Integer g(0);
    for (const auto& c : p) {
        if (c == 0) continue;
        Integer a = abs(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(DenseZ& p) {
    trim(p);
    if (p.empty()) return;
    Integer g = int_content(p);
    if (p.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : p) c /= g;
}

// Clears denominators; content is irrelevant for gcd purposes.
DenseZ to_integer(const DenseQ& p) {
    Integer l(1);
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    DenseZ r;
    r.reserve(p.size());
    for (const auto& c : p) {
        Rational s = c * Rational(l);
        s.canonicalize();
        assert(s.get_den() == 1);
        r.push_back(s.get_num());
    }
    make_primitive(r);
    return r;
}

// Remainder of a by b over Q, scaled to stay integral (b nonzero). The
// result is only used for gcds, so it is content-stripped after every
// elimination step; plain pseudo-division would blow coefficients up
// exponentially in the degree gap.
DenseZ pseudo_rem(DenseZ a, const DenseZ& b) {
    trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    const Integer& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int da = static_cast<int>(a.size()) - 1;
        Integer la = a.back();
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
        make_primitive(a);
    }
    return a;
}

// Primitive PRS keeps the coefficient growth of the Euclidean
// remainder sequence in check.
DenseZ gcd_primitive(DenseZ a, DenseZ b) {
    make_primitive(a);
    make_primitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        DenseZ r = pseudo_rem(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Exact division over Q; the remainder must vanish.
DenseQ div_exact(DenseQ a, const DenseQ& b) {
    trim(a);
    assert(!b.empty());
    if (a.empty()) return {};
    assert(a.size() >= b.size());
    DenseQ q(a.size() - b.size() + 1, Rational(0));
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int k = static_cast<int>(a.size()) - 1 - db;
        Rational f = a.back() / b.back();
        q[k] = f;
        for (int j = 0; j <= db; ++j) {
            Rational t = f * b[j];
            a[k + j] -= t;
        }
        trim(a);
    }
    assert(a.empty() && "division was not exact");
    return q;
}

DenseQ to_dense(const LaurentPoly& p, int shift) {
    DenseQ r(static_cast<size_t>(p.max_exp() - shift) + 1, Rational(0));
    for (const auto& [e, v] : p.coeffs()) r[static_cast<size_t>(e - shift)] = v;
    return r;
}

LaurentPoly from_dense(const DenseQ& p, int shift) {
    LaurentPoly r;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) r.add_term(static_cast<int>(i) + shift, p[i]);
    return r;
}

} // namespace

// ---- RationalFunction ----

RationalFunction::RationalFunction() : num_(), den_(LaurentPoly::constant(Rational(1))) {}

RationalFunction::RationalFunction(LaurentPoly n)
    : num_(std::move(n)), den_(LaurentPoly::constant(Rational(1))) {}

RationalFunction::RationalFunction(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(Rational(1));
        return;
    }
    if (den_.is_one()) return; // already canonical
    const int a = num_.min_exp();
    const int b = den_.min_exp();
    DenseQ n0 = to_dense(num_, a);
    DenseQ d0 = to_dense(den_, b);
    DenseZ g = gcd_primitive(to_integer(n0), to_integer(d0));
    if (g.size() > 1) {
        DenseQ gq;
        gq.reserve(g.size());
        for (const auto& c : g) gq.emplace_back(c);
        n0 = div_exact(std::move(n0), gq);
        d0 = div_exact(std::move(d0), gq);
    }
    // den gets lowest exponent 0 and lowest coefficient 1
    Rational l = d0.front();
    assert(l != 0);
    LaurentPoly n1 = from_dense(n0, 0);
    LaurentPoly d1 = from_dense(d0, 0);
    num_ = n1.scaled(Rational(1) / l).shifted(a - b);
    den_ = d1.scaled(Rational(1) / l);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    RationalFunction r;
    if (den_ == o.den_) { // common case: identical denominators
        r.num_ = num_ + o.num_;
        r.den_ = den_;
    } else {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
    }
    r.reduce();
    return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + o.negated();
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    RationalFunction r;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.reduce();
    return r;
}

RationalFunction RationalFunction::negated() const {
    RationalFunction r;
    r.num_ = num_.negated();
    r.den_ = den_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (num_.is_zero()) throw DivisionByZero("inverse of zero");
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;
    r.reduce();
    return r;
}

std::complex<double> RationalFunction::eval(std::complex<double> q) const {
    std::complex<double> d = den_.eval(q);
    if (std::abs(d) < 1e-300) throw PoleAtEvaluationPoint();
    return num_.eval(q) / d;
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace sl2q
