#include "sl2q/algebra.hpp"

#include <sstream>

#include "sl2q/errors.hpp"

namespace sl2q {

std::string generator_name(Generator g) {
    switch (g) {
        case Generator::Xm: return "Xm";
        case Generator::X0: return "X0";
        case Generator::Cc: return "C";
        case Generator::Xp: return "Xp";
    }
    return "?";
}

std::vector<Generator> Monomial::word() const {
    std::vector<Generator> w;
    w.reserve(static_cast<size_t>(degree()));
    for (int i = 0; i < a; ++i) w.push_back(Generator::Xm);
    for (int i = 0; i < b; ++i) w.push_back(Generator::X0);
    for (int i = 0; i < d; ++i) w.push_back(Generator::Cc);
    for (int i = 0; i < e; ++i) w.push_back(Generator::Xp);
    return w;
}

std::string Monomial::to_string() const {
    if (is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    auto put = [&](const char* name, int k) {
        if (k == 0) return;
        if (!first) os << "*";
        first = false;
        os << name;
        if (k > 1) os << "^" << k;
    };
    put("Xm", a);
    put("X0", b);
    put("C", d);
    put("Xp", e);
    return os.str();
}

// ---- AlgebraElement ----

AlgebraElement AlgebraElement::zero(const FieldSpec& f, bool restricted) {
    return AlgebraElement(f, restricted);
}

AlgebraElement AlgebraElement::unit(const FieldSpec& f, bool restricted) {
    AlgebraElement x(f, restricted);
    x.add_term(Monomial{}, Scalar::one(f));
    return x;
}

AlgebraElement AlgebraElement::generator(Generator g, const FieldSpec& f, bool restricted) {
    Monomial m;
    switch (g) {
        case Generator::Xm: m.a = 1; break;
        case Generator::X0: m.b = 1; break;
        case Generator::Cc: m.d = 1; break;
        case Generator::Xp: m.e = 1; break;
    }
    AlgebraElement x(f, restricted);
    x.add_term(m, Scalar::one(f));
    return x;
}

AlgebraElement AlgebraElement::monomial(const Monomial& m, const Scalar& coeff, bool restricted) {
    AlgebraElement x(coeff.field(), restricted);
    x.add_term(m, coeff);
    return x;
}

Scalar AlgebraElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void AlgebraElement::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (!(field_ == o.field_) || restricted_ != o.restricted_)
        throw FieldMismatch("elements live in different algebras");
    AlgebraElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + o.negated(); }

AlgebraElement AlgebraElement::negated() const {
    AlgebraElement r(field_, restricted_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.negated());
    return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& s) const {
    AlgebraElement r(field_, restricted_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return field_ == o.field_ && restricted_ == o.restricted_ && terms_ == o.terms_;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (m.is_unit()) {
            os << "(" << c.to_string() << ")";
        } else if (c.is_one()) {
            os << m.to_string();
        } else {
            os << "(" << c.to_string() << ")*" << m.to_string();
        }
    }
    return os.str();
}

// ---- rewriting ----

namespace {

using Word = std::vector<Generator>;

struct RuleTerm {
    Scalar coeff;
    Word replacement;
};

// Replacements for an adjacent out-of-order pair g1 g2 (g1 > g2 in the
// normal-form order). Everything follows from the four defining
// relations; C is central.
std::vector<RuleTerm> rewrite_pair(Generator g1, Generator g2, const FieldSpec& f) {
    const Scalar q1 = Scalar::q_power(1, f);
    const Scalar q2 = Scalar::q_power(2, f);
    const Scalar two_q = Scalar::q_power(1, f) + Scalar::q_power(-1, f); // q + q^-1
    const Scalar lam = Scalar::lambda(f);

    using G = Generator;
    if (g1 == G::Xp && g2 == G::X0) {
        // Xp X0 = q^2 X0 Xp - q C Xp
        return {{q2, {G::X0, G::Xp}}, {q1.negated(), {G::Cc, G::Xp}}};
    }
    if (g1 == G::Xp && g2 == G::Xm) {
        // Xp Xm = Xm Xp + (q+q^-1) X0 C - (q+q^-1) lambda X0^2
        return {{Scalar::one(f), {G::Xm, G::Xp}},
                {two_q, {G::X0, G::Cc}},
                {(two_q * lam).negated(), {G::X0, G::X0}}};
    }
    if (g1 == G::X0 && g2 == G::Xm) {
        // X0 Xm = q^2 Xm X0 - q Xm C
        return {{q2, {G::Xm, G::X0}}, {q1.negated(), {G::Xm, G::Cc}}};
    }
    // remaining disordered pairs just move the central C
    return {{Scalar::one(f), {g2, g1}}};
}

int find_disordered(const Word& w, RewriteStrategy strategy) {
    if (strategy == RewriteStrategy::LeftmostFirst) {
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (static_cast<int>(w[i]) > static_cast<int>(w[i + 1])) return static_cast<int>(i);
        return -1;
    }
    for (size_t i = w.size(); i >= 2; --i)
        if (static_cast<int>(w[i - 2]) > static_cast<int>(w[i - 1])) return static_cast<int>(i - 2);
    return -1;
}

Monomial monomial_of_sorted(const Word& w) {
    Monomial m;
    for (Generator g : w) {
        switch (g) {
            case Generator::Xm: ++m.a; break;
            case Generator::X0: ++m.b; break;
            case Generator::Cc: ++m.d; break;
            case Generator::Xp: ++m.e; break;
        }
    }
    return m;
}

AlgebraElement normal_form_unrestricted(const Word& word, const FieldSpec& f, RewriteStrategy strategy) {
    AlgebraElement result(f, false);
    // Frontier keyed by word so parallel derivations of the same word merge.
    std::map<Word, Scalar> frontier;
    frontier.emplace(word, Scalar::one(f));
    while (!frontier.empty()) {
        std::map<Word, Scalar> next;
        for (const auto& [w, coeff] : frontier) {
            int i = find_disordered(w, strategy);
            if (i < 0) {
                result.add_term(monomial_of_sorted(w), coeff);
                continue;
            }
            for (auto& term : rewrite_pair(w[static_cast<size_t>(i)], w[static_cast<size_t>(i) + 1], f)) {
                Word nw;
                nw.reserve(w.size() + term.replacement.size());
                nw.insert(nw.end(), w.begin(), w.begin() + i);
                nw.insert(nw.end(), term.replacement.begin(), term.replacement.end());
                nw.insert(nw.end(), w.begin() + i + 2, w.end());
                Scalar c = coeff * term.coeff;
                auto it = next.find(nw);
                if (it == next.end()) {
                    next.emplace(std::move(nw), std::move(c));
                } else {
                    it->second = it->second + c;
                    if (it->second.is_zero()) next.erase(it);
                }
            }
        }
        frontier = std::move(next);
    }
    return result;
}

// ---- ordered products via closed-form crossings ----
//
// Right-multiplying an ordered monomial by one generator needs the
// crossings Xp^e X0 = q^2e X0 Xp^e - q^e [e] C Xp^e and, for X-, the
// substitution X0 -> q^2 X0 - q C per crossing plus the recursion
// Xp^e Xm = Xp^(e-1) Xm Xp + (q+q^-1) Xp^(e-1) (X0 C - lambda X0^2).
// Words never appear, so products of high-degree elements stay cheap.

AlgebraElement mul_gen(const AlgebraElement& x, Generator g);

AlgebraElement mono_times_xm(const Monomial& m, const FieldSpec& f) {
    if (m.e == 0) {
        // Xm^a X0^b C^d Xm = Xm^(a+1) (q^2 X0 - q C)^b C^d
        AlgebraElement out(f, false);
        Rational binom(1);
        for (int j = m.b; j >= 0; --j) {
            // binom holds C(b, j)
            Scalar coeff = Scalar::from_rational(binom, f) * Scalar::q_power(2 * j, f) *
                           Scalar::q_power(m.b - j, f);
            if ((m.b - j) % 2 == 1) coeff = coeff.negated();
            out.add_term(Monomial{m.a + 1, j, m.d + (m.b - j), 0}, coeff);
            binom = binom * j / (m.b - j + 1);
        }
        return out;
    }
    Monomial m1 = m;
    m1.e -= 1;
    const Scalar two_q = Scalar::q_power(1, f) + Scalar::q_power(-1, f);
    AlgebraElement head(f, false);
    head.add_term(m1, Scalar::one(f));
    AlgebraElement res = mul_gen(mono_times_xm(m1, f), Generator::Xp);
    AlgebraElement mid = mul_gen(head, Generator::X0);
    res = res + mul_gen(mid, Generator::Cc).scaled(two_q);
    res = res - mul_gen(mid, Generator::X0).scaled(Scalar::lambda(f) * two_q);
    return res;
}

AlgebraElement mul_gen(const AlgebraElement& x, Generator g) {
    const FieldSpec& f = x.field();
    AlgebraElement out(f, false);
    for (const auto& [m, c] : x.terms()) {
        switch (g) {
            case Generator::Xp: {
                Monomial n = m;
                n.e += 1;
                out.add_term(n, c);
                break;
            }
            case Generator::Cc: {
                Monomial n = m;
                n.d += 1;
                out.add_term(n, c);
                break;
            }
            case Generator::X0: {
                Monomial n = m;
                n.b += 1;
                out.add_term(n, c * Scalar::q_power(2 * m.e, f));
                if (m.e > 0) {
                    Monomial k = m;
                    k.d += 1;
                    out.add_term(k, (c * Scalar::q_power(m.e, f) * q_int(m.e, f)).negated());
                }
                break;
            }
            case Generator::Xm: {
                AlgebraElement piece = mono_times_xm(m, f);
                for (const auto& [pm, pc] : piece.terms()) out.add_term(pm, pc * c);
                break;
            }
        }
    }
    return out;
}

AlgebraElement multiply_unrestricted(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out(x.field(), false);
    for (const auto& [my, cy] : y.terms()) {
        AlgebraElement acc(x.field(), false);
        for (const auto& [mx, cx] : x.terms()) acc.add_term(mx, cx);
        for (Generator g : my.word()) acc = mul_gen(acc, g);
        for (const auto& [m, c] : acc.terms()) out.add_term(m, c * cy);
    }
    return out;
}

} // namespace

AlgebraElement normal_form(const std::vector<Generator>& word, const FieldSpec& f, bool restricted,
                           RewriteStrategy strategy) {
    AlgebraElement nf = normal_form_unrestricted(word, f, strategy);
    return restricted ? restricted_reduce(nf) : nf;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
    if (!(x.field() == y.field()) || x.restricted() != y.restricted())
        throw FieldMismatch("elements live in different algebras");
    AlgebraElement prod = multiply_unrestricted(x, y);
    return x.restricted() ? restricted_reduce(prod) : prod;
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
    return multiply(x, y) - multiply(y, x);
}

AlgebraElement casimir2(const FieldSpec& f, bool restricted) {
    using G = Generator;
    const Scalar two_q = Scalar::q_power(1, f) + Scalar::q_power(-1, f);
    AlgebraElement c2 = normal_form({G::X0, G::X0}, f, false).scaled(two_q) +
                        normal_form({G::Xm, G::Xp}, f, false).scaled(Scalar::q_power(1, f)) +
                        normal_form({G::Xp, G::Xm}, f, false).scaled(Scalar::q_power(-1, f));
    // no C-degree >= 2 arises, so the terms transfer verbatim
    AlgebraElement out(f, restricted);
    for (const auto& [m, c] : c2.terms()) out.add_term(m, c);
    return out;
}

AlgebraElement restricted_reduce(const AlgebraElement& x) {
    const FieldSpec& f = x.field();
    const Scalar lam = Scalar::lambda(f);
    const Scalar two_q = Scalar::q_power(1, f) + Scalar::q_power(-1, f);
    const Scalar factor = lam * lam * two_q.inverse(); // lambda^2/(q+q^-1)
    const AlgebraElement c2 = casimir2(f, false);

    AlgebraElement out(f, true);
    std::vector<std::pair<Monomial, Scalar>> work(x.terms().begin(), x.terms().end());
    while (!work.empty()) {
        auto [m, c] = std::move(work.back());
        work.pop_back();
        if (m.d <= 1) {
            out.add_term(m, c);
            continue;
        }
        // m = m' C^2 with C^2 central: substitute 1 + lambda^2/(q+q^-1) C2.
        Monomial m2 = m;
        m2.d -= 2;
        work.emplace_back(m2, c);
        AlgebraElement tail = multiply_unrestricted(AlgebraElement::monomial(m2, Scalar::one(f)), c2);
        for (const auto& [tm, tc] : tail.terms()) work.emplace_back(tm, tc * c * factor);
    }
    return out;
}

} // namespace sl2q
