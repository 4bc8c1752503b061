#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sl2q/algebra.hpp"
#include "sl2q/errors.hpp"

using namespace sl2q;
using G = Generator;

namespace {

const FieldSpec GEN = FieldSpec::generic();

Scalar qp(int k) { return Scalar::q_power(k, GEN); }
Scalar two_q() { return qp(1) + qp(-1); }

AlgebraElement elem(std::initializer_list<std::pair<Monomial, Scalar>> terms,
                    const FieldSpec& f = FieldSpec::generic(), bool restricted = false) {
    AlgebraElement x(f, restricted);
    for (const auto& [m, c] : terms) x.add_term(m, c);
    return x;
}

AlgebraElement gen_elem(G g, const FieldSpec& f = FieldSpec::generic(), bool r = false) {
    return AlgebraElement::generator(g, f, r);
}

} // namespace

TEST_CASE("normal form of the defining disordered pairs") {
    // Xp X0 -> q^2 X0 Xp - q C Xp
    CHECK(normal_form({G::Xp, G::X0}, GEN, false) ==
          elem({{Monomial{0, 1, 0, 1}, qp(2)}, {Monomial{0, 0, 1, 1}, qp(1).negated()}}));

    // Xp Xm -> Xm Xp + (q+q^-1) X0 C - (q+q^-1) lambda X0^2
    CHECK(normal_form({G::Xp, G::Xm}, GEN, false) ==
          elem({{Monomial{1, 0, 0, 1}, Scalar::one(GEN)},
                {Monomial{0, 1, 1, 0}, two_q()},
                {Monomial{0, 2, 0, 0}, (two_q() * Scalar::lambda(GEN)).negated()}}));

    // C is central: C Xp is already ordered
    CHECK(normal_form({G::Cc, G::Xp}, GEN, false) == elem({{Monomial{0, 0, 1, 1}, Scalar::one(GEN)}}));

    // X0 Xm -> q^2 Xm X0 - q Xm C
    CHECK(normal_form({G::X0, G::Xm}, GEN, false) ==
          elem({{Monomial{1, 1, 0, 0}, qp(2)}, {Monomial{1, 0, 1, 0}, qp(1).negated()}}));

    // empty word is the unit
    CHECK(normal_form({}, GEN, false) == AlgebraElement::unit(GEN));
}

TEST_CASE("multiply") {
    AlgebraElement x0 = gen_elem(G::X0);
    AlgebraElement xm = gen_elem(G::Xm);

    CHECK(multiply(x0, xm) ==
          elem({{Monomial{1, 1, 0, 0}, qp(2)}, {Monomial{1, 0, 1, 0}, qp(1).negated()}}));

    AlgebraElement any = normal_form({G::Xp, G::Xm, G::X0}, GEN, false);
    CHECK(multiply(AlgebraElement::unit(GEN), any) == any);
    CHECK(multiply(any, AlgebraElement::unit(GEN)) == any);

    // X0 * Xm^2 = q^4 Xm^2 X0 - q^2 [2] Xm^2 C
    AlgebraElement xm2 = AlgebraElement::monomial(Monomial{2, 0, 0, 0}, Scalar::one(GEN));
    CHECK(multiply(x0, xm2) ==
          elem({{Monomial{2, 1, 0, 0}, qp(4)}, {Monomial{2, 0, 1, 0}, (qp(2) * q_int(2, GEN)).negated()}}));

    // associativity spot check
    AlgebraElement xp = gen_elem(G::Xp);
    CHECK(multiply(multiply(xp, x0), xm) == multiply(xp, multiply(x0, xm)));
}

TEST_CASE("X0 through Xm^k") {
    // X0 Xm^k = Xm^k (q^2k X0 - q^k [k] C)
    for (int k = 1; k <= 10; ++k) {
        AlgebraElement lhs = multiply(gen_elem(G::X0),
                                      AlgebraElement::monomial(Monomial{k, 0, 0, 0}, Scalar::one(GEN)));
        AlgebraElement rhs = elem({{Monomial{k, 1, 0, 0}, qp(2 * k)},
                                   {Monomial{k, 0, 1, 0}, (qp(k) * q_int(k, GEN)).negated()}});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("commutator of Xp with Xm^k") {
    // [Xp, Xm^k] = Xm^(k-1) q^(2k-2) (C - lambda X0) ([2k] X0 - q [k][k-1] C)
    AlgebraElement xp = gen_elem(G::Xp);
    AlgebraElement c_minus = gen_elem(G::Cc) - gen_elem(G::X0).scaled(Scalar::lambda(GEN));
    for (int k = 1; k <= 10; ++k) {
        AlgebraElement lhs =
            commutator(xp, AlgebraElement::monomial(Monomial{k, 0, 0, 0}, Scalar::one(GEN)));
        AlgebraElement bracket = gen_elem(G::X0).scaled(q_int(2 * k, GEN)) -
                                 gen_elem(G::Cc).scaled(qp(1) * q_int(k, GEN) * q_int(k - 1, GEN));
        AlgebraElement rhs =
            multiply(AlgebraElement::monomial(Monomial{k - 1, 0, 0, 0}, Scalar::one(GEN)),
                     multiply(c_minus, bracket))
                .scaled(qp(2 * k - 2));
        CHECK(lhs == rhs);
    }

    // k = 1 reads (q+q^-1)(X0 C - lambda X0^2)
    CHECK(commutator(xp, gen_elem(G::Xm)) ==
          elem({{Monomial{0, 1, 1, 0}, two_q()},
                {Monomial{0, 2, 0, 0}, (two_q() * Scalar::lambda(GEN)).negated()}}));
}

TEST_CASE("centrality of C") {
    AlgebraElement c = gen_elem(G::Cc);
    CHECK(commutator(c, AlgebraElement::monomial(Monomial{3, 0, 0, 0}, Scalar::one(GEN))).is_zero());
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b)
            for (int d = 0; a + b + d <= 4; ++d)
                for (int e = 0; a + b + d + e <= 4; ++e) {
                    AlgebraElement m =
                        AlgebraElement::monomial(Monomial{a, b, d, e}, Scalar::one(GEN));
                    CHECK(commutator(c, m).is_zero());
                }
}

TEST_CASE("quadratic casimir") {
    // expected ordered form, with Xp Xm pushed through the relations by hand
    AlgebraElement expected =
        elem({{Monomial{0, 2, 0, 0}, two_q() * qp(-2)},
              {Monomial{1, 0, 0, 1}, two_q()},
              {Monomial{0, 1, 1, 0}, qp(-1) * two_q()}});
    CHECK(casimir2(GEN) == expected);

    for (G g : {G::Xm, G::X0, G::Cc, G::Xp}) {
        CAPTURE(generator_name(g));
        CHECK(commutator(casimir2(GEN), gen_elem(g)).is_zero());
    }

    // centrality also at a root of unity
    FieldSpec root3 = FieldSpec::root_of_unity(3);
    for (G g : {G::Xm, G::X0, G::Cc, G::Xp})
        CHECK(commutator(casimir2(root3), gen_elem(g, root3)).is_zero());
}

TEST_CASE("restricted reduction") {
    const Scalar factor = Scalar::lambda(GEN).pow(2) * two_q().inverse();

    AlgebraElement c2word = AlgebraElement::monomial(Monomial{0, 0, 2, 0}, Scalar::one(GEN));
    AlgebraElement reduced = restricted_reduce(c2word);
    CHECK(reduced.restricted());
    AlgebraElement expected = AlgebraElement::unit(GEN, true) + casimir2(GEN, true).scaled(factor);
    CHECK(reduced == expected);

    // no C^2: untouched
    AlgebraElement x0 = gen_elem(G::X0, GEN, true);
    CHECK(restricted_reduce(gen_elem(G::X0)) == x0);

    // C^3 reduces to the reduction of C + factor * C * casimir2
    AlgebraElement c3 = AlgebraElement::monomial(Monomial{0, 0, 3, 0}, Scalar::one(GEN));
    AlgebraElement once =
        AlgebraElement::generator(G::Cc, GEN) +
        multiply(AlgebraElement::generator(G::Cc, GEN), casimir2(GEN)).scaled(factor);
    AlgebraElement c3_reduced = restricted_reduce(c3);
    CHECK(c3_reduced == restricted_reduce(once));
    for (const auto& [m, c] : c3_reduced.terms()) CHECK(m.d <= 1);

    // idempotence on assorted elements
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> exp_dist(0, 2);
    std::uniform_int_distribution<int> coef_dist(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        AlgebraElement x(GEN, false);
        for (int t = 0; t < 3; ++t) {
            Monomial m{exp_dist(rng), exp_dist(rng), exp_dist(rng), exp_dist(rng)};
            x.add_term(m, Scalar::from_int(coef_dist(rng), GEN));
        }
        AlgebraElement r1 = restricted_reduce(x);
        CHECK(restricted_reduce(r1) == r1);
    }
}

TEST_CASE("restricted reduction commutes with multiplication") {
    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> exp_dist(0, 2);
    std::uniform_int_distribution<int> coef_dist(-2, 2);
    auto random_elem = [&]() {
        AlgebraElement x(GEN, false);
        for (int t = 0; t < 2; ++t) {
            Monomial m{exp_dist(rng), exp_dist(rng), exp_dist(rng), exp_dist(rng)};
            x.add_term(m, Scalar::from_int(coef_dist(rng), GEN));
        }
        return x;
    };
    for (int trial = 0; trial < 12; ++trial) {
        AlgebraElement x = random_elem();
        AlgebraElement y = random_elem();
        AlgebraElement via_b = restricted_reduce(multiply(x, y));
        AlgebraElement via_f = multiply(restricted_reduce(x), restricted_reduce(y));
        CHECK(via_b == via_f);
    }
}

TEST_CASE("rewriting strategies agree on every length-3 word") {
    const G gens[] = {G::Xm, G::X0, G::Cc, G::Xp};
    for (const FieldSpec& f : {FieldSpec::generic(), FieldSpec::root_of_unity(5)}) {
        for (G g1 : gens)
            for (G g2 : gens)
                for (G g3 : gens) {
                    std::vector<G> w{g1, g2, g3};
                    for (bool restricted : {false, true}) {
                        AlgebraElement left = normal_form(w, f, restricted, RewriteStrategy::LeftmostFirst);
                        AlgebraElement right = normal_form(w, f, restricted, RewriteStrategy::RightmostFirst);
                        CHECK(left == right);
                    }
                }
    }
}

TEST_CASE("algebra mismatch is rejected") {
    AlgebraElement a = gen_elem(G::X0);
    AlgebraElement b = gen_elem(G::X0, FieldSpec::root_of_unity(4));
    CHECK_THROWS_AS(multiply(a, b), FieldMismatch);
    AlgebraElement c = gen_elem(G::X0, GEN, true);
    CHECK_THROWS_AS(multiply(a, c), FieldMismatch);
}

TEST_CASE("rendering") {
    AlgebraElement x = normal_form({G::Xp, G::Xm}, GEN, false);
    CHECK(x.to_string() == "(q + q^-1)*X0*C + (-q^2 + q^-2)*X0^2 + Xm*Xp");
    CHECK(AlgebraElement::zero(GEN).to_string() == "0");
    CHECK(AlgebraElement::unit(GEN).to_string() == "(1)");
}
