#include "sl2q/cyclotomic.hpp"

#include <cassert>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "sl2q/errors.hpp"

namespace sl2q {

namespace {

using DenseQ = std::vector<Rational>; // index = degree, trimmed

void trim(DenseQ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder over Q.
std::pair<DenseQ, DenseQ> poly_divmod(DenseQ a, const DenseQ& b) {
    assert(!b.empty());
    trim(a);
    DenseQ q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
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
    return {q, a};
}

DenseQ poly_mul(const DenseQ& a, const DenseQ& b) {
    if (a.empty() || b.empty()) return {};
    DenseQ r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) {
            Rational t = a[i] * b[j];
            r[i + j] += t;
        }
    trim(r);
    return r;
}

DenseQ poly_sub(DenseQ a, const DenseQ& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// n-th cyclotomic polynomial: divide x^n - 1 by the cyclotomic
// polynomials of all proper divisors.
DenseQ cyclotomic_poly(int n, std::map<int, DenseQ>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    DenseQ f(static_cast<size_t>(n) + 1, Rational(0));
    f[0] = -1;
    f[static_cast<size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = poly_divmod(f, cyclotomic_poly(d, memo));
        assert(r.empty());
        f = std::move(q);
    }
    memo.emplace(n, f);
    return f;
}

// Reduce an arbitrary-degree polynomial modulo the monic modulus m.
void reduce_mod(DenseQ& p, const DenseQ& m) {
    const int dm = static_cast<int>(m.size()) - 1;
    trim(p);
    for (int i = static_cast<int>(p.size()) - 1; i >= dm; --i) {
        if (p[static_cast<size_t>(i)] == 0) continue;
        Rational f = p[static_cast<size_t>(i)];
        p[static_cast<size_t>(i)] = 0;
        for (int j = 0; j < dm; ++j) {
            Rational t = f * m[static_cast<size_t>(j)];
            p[static_cast<size_t>(i - dm + j)] -= t;
        }
    }
    p.resize(static_cast<size_t>(dm), Rational(0));
}

} // namespace

// ---- CyclotomicContext ----

CyclotomicContext::CyclotomicContext(int N, std::vector<Rational> modulus)
    : N_(N), degree_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {}

const CyclotomicContext& CyclotomicContext::get(int N) {
    if (N < 2) throw UsageError("root-of-unity order N must be at least 2");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CyclotomicContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it == cache.end()) {
        std::map<int, DenseQ> memo;
        DenseQ mod = cyclotomic_poly(2 * N, memo);
        it = cache.emplace(N, std::unique_ptr<CyclotomicContext>(new CyclotomicContext(N, std::move(mod)))).first;
    }
    return *it->second;
}

// ---- CycloElement ----

CycloElement::CycloElement(int N)
    : N_(N), coords_(static_cast<size_t>(CyclotomicContext::get(N).degree()), Rational(0)) {}

CycloElement CycloElement::constant(int N, const Rational& r) {
    CycloElement e(N);
    e.coords_[0] = r;
    return e;
}

CycloElement CycloElement::zeta_power(int N, long k) {
    const auto& ctx = CyclotomicContext::get(N);
    const long order = ctx.order();
    long r = k % order;
    if (r < 0) r += order;
    DenseQ p(static_cast<size_t>(r) + 1, Rational(0));
    p[static_cast<size_t>(r)] = 1;
    reduce_mod(p, ctx.modulus());
    CycloElement e(N);
    e.coords_ = std::move(p);
    return e;
}

bool CycloElement::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool CycloElement::is_one() const {
    if (coords_.empty() || coords_[0] != 1) return false;
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

CycloElement CycloElement::operator+(const CycloElement& o) const {
    assert(N_ == o.N_);
    CycloElement r = *this;
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += o.coords_[i];
    return r;
}

CycloElement CycloElement::operator-(const CycloElement& o) const {
    assert(N_ == o.N_);
    CycloElement r = *this;
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] -= o.coords_[i];
    return r;
}

CycloElement CycloElement::operator*(const CycloElement& o) const {
    assert(N_ == o.N_);
    const auto& ctx = CyclotomicContext::get(N_);
    DenseQ prod = poly_mul(coords_, o.coords_);
    // poly_mul trims; restore full length after reduction
    reduce_mod(prod, ctx.modulus());
    CycloElement r(N_);
    r.coords_ = std::move(prod);
    r.coords_.resize(static_cast<size_t>(ctx.degree()), Rational(0));
    return r;
}

CycloElement CycloElement::negated() const {
    CycloElement r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

CycloElement CycloElement::scaled(const Rational& s) const {
    CycloElement r = *this;
    for (auto& c : r.coords_) c *= s;
    return r;
}

CycloElement CycloElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    const auto& ctx = CyclotomicContext::get(N_);
    // Extended Euclid against the (irreducible) modulus: the gcd is a
    // nonzero constant g = s*a + t*m, so a^-1 = s/g mod m.
    DenseQ r0 = ctx.modulus(), r1 = coords_;
    trim(r1);
    DenseQ s0{}, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        DenseQ s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    assert(r0.size() == 1 && "modulus must be irreducible");
    CycloElement res(N_);
    for (size_t i = 0; i < s0.size(); ++i) res.coords_[i] = s0[i] / r0[0];
    return res;
}

std::complex<double> CycloElement::eval() const {
    const double theta = std::numbers::pi / static_cast<double>(N_);
    const std::complex<double> zeta(std::cos(theta), std::sin(theta));
    std::complex<double> acc(0.0, 0.0);
    std::complex<double> p(1.0, 0.0);
    for (const auto& c : coords_) {
        acc += rat_to_double(c) * p;
        p *= zeta;
    }
    return acc;
}

std::string CycloElement::to_string() const {
    bool all_zero = true;
    std::ostringstream os;
    bool first = true;
    for (int e = static_cast<int>(coords_.size()) - 1; e >= 0; --e) {
        const Rational& v = coords_[static_cast<size_t>(e)];
        if (v == 0) continue;
        all_zero = false;
        bool neg = v < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational a = neg ? Rational(-v) : v;
        if (e == 0) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return all_zero ? "0" : os.str();
}

} // namespace sl2q
