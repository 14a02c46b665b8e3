#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l2b/rational.hpp"
#include "l2b/sym.hpp"
#include "testutil.hpp"

#include <numeric>

using namespace l2b;
using namespace l2b::testutil;

TEST_CASE("BigInt arithmetic agrees with a 128-bit oracle") {
    Rng rng(20240801);
    std::uniform_int_distribution<int64_t> dist(-1000000000000LL, 1000000000000LL);
    for (int i = 0; i < 2000; ++i) {
        int64_t a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        __int128 prod = static_cast<__int128>(a) * b;
        BigInt p = BigInt(a) * BigInt(b);
        if (b != 0) CHECK(p.divided_by(BigInt(b)).to_int64() == a);
        // decimal roundtrip
        CHECK(BigInt::from_decimal(p.to_string()) == p);
        (void)prod;
        int64_t g = std::gcd(a, b);
        CHECK(BigInt::gcd(BigInt(a), BigInt(b)).to_int64() == (g < 0 ? -g : g));
    }
}

TEST_CASE("BigInt multiplication beyond 64 bits") {
    BigInt a = BigInt::from_decimal("123456789012345678901234567890");
    BigInt b = BigInt::from_decimal("-987654321098765432109876543210");
    BigInt p = a * b;
    CHECK(p.to_string() == "-121932631137021795226185032733622923332237463801111263526900");
    CHECK(p.divided_by(b) == a);
    CHECK(p.divided_by(a) == b);
    CHECK(BigInt::gcd(a, b).to_string() == "9000000000900000000090");
}

TEST_CASE("Rational canonical form and field laws") {
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(-2, -4).to_string() == "1/2");
    CHECK(Rational(2, -4).to_string() == "-1/2");
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational::parse("1/"));
    CHECK_THROWS(Rational::parse("x"));

    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        Rational a = rand_rational(rng), b = rand_rational(rng), c = rand_rational(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK(a / b * b == a);
        CHECK(Rational::parse(a.to_string()) == a);
        CHECK_FALSE(a.den().is_negative());
        CHECK_FALSE(a.den().is_zero());
        CHECK(BigInt::gcd(a.num(), a.den()) == BigInt(1));
    }
}

TEST_CASE("role degrees and parities match the grading convention") {
    CHECK(degree_of(Generator{Role::G, 0}) == -2);
    CHECK(degree_of(Generator{Role::Theta, 3}) == -1);
    CHECK(degree_of(Generator{Role::GStar, 1}) == -1);
    CHECK(degree_of(Generator{Role::ThetaStar, 0}) == -2);
    for (Role r : {Role::G, Role::Theta, Role::GStar, Role::ThetaStar}) {
        Generator g{r, 0};
        CHECK(g.parity() == ((-g.degree()) % 2));
    }
}

TEST_CASE("pairing is the dual-basis pairing and is nondegenerate") {
    SpaceSpec sp{2, 3};
    CHECK(pairing(sp, {Role::G, 0}, {Role::GStar, 0}) == Rational(1));
    CHECK(pairing(sp, {Role::G, 0}, {Role::GStar, 1}) == Rational(0));
    CHECK(pairing(sp, {Role::Theta, 2}, {Role::ThetaStar, 2}) == Rational(1));
    CHECK(pairing(sp, {Role::Theta, 1}, {Role::GStar, 1}) == Rational(0));
    CHECK_THROWS(pairing(sp, {Role::GStar, 0}, {Role::G, 0}));
    CHECK_THROWS(pairing(sp, {Role::G, 0}, {Role::Theta, 0}));
    CHECK_THROWS(pairing(sp, {Role::G, 5}, {Role::GStar, 0}));
    // identity matrix over each role pair
    for (int i = 0; i < sp.dim_g; ++i)
        for (int j = 0; j < sp.dim_g; ++j)
            CHECK(pairing(sp, {Role::G, i}, {Role::GStar, j}) == Rational(i == j ? 1 : 0));
}

TEST_CASE("space label validation") {
    SpaceSpec ok{2, 1, {"a", "b"}, {"u"}};
    CHECK_NOTHROW(ok.validate());
    SpaceSpec dup{2, 0, {"a", "a"}, {}};
    CHECK_THROWS(dup.validate());
    SpaceSpec mis{2, 0, {"a"}, {}};
    CHECK_THROWS(mis.validate());
}

TEST_CASE("normalize sorts with Koszul signs") {
    SpaceSpec sp{2, 2};
    Generator kappa{Role::ThetaStar, 0}, x{Role::G, 0};
    Generator u{Role::Theta, 0}, xi{Role::GStar, 0};

    // even-even swap: no sign
    auto r1 = normalize({x, kappa});
    REQUIRE(r1.has_value());
    CHECK(r1->sign == 1);
    CHECK(r1->monomial == Monomial{{kappa, x}});

    // odd-odd swap: sign -1
    auto r2 = normalize({u, xi});
    REQUIRE(r2.has_value());
    CHECK(r2->sign == -1);
    CHECK(r2->monomial == Monomial{{xi, u}});

    // odd square vanishes
    CHECK_FALSE(normalize({u, u}).has_value());

    // even squares survive
    auto r3 = normalize({x, x});
    REQUIRE(r3.has_value());
    CHECK(r3->sign == 1);

    // idempotent on canonical monomials
    Rng rng(11);
    for (auto& m : enumerate_monomials(sp, 4)) {
        auto again = normalize(m.gens);
        REQUIRE(again.has_value());
        CHECK(again->sign == 1);
        CHECK(again->monomial == m);
    }
}

TEST_CASE("sym_product basics") {
    SpaceSpec sp{1, 1};
    SymElement one = SymElement::one(sp);
    SymElement x = SymElement::generator(sp, {Role::G, 0});
    SymElement u = SymElement::generator(sp, {Role::Theta, 0});
    SymElement xi = SymElement::generator(sp, {Role::GStar, 0});

    CHECK(sym_product(one, u) == u);
    CHECK(sym_product(xi, u) == -sym_product(u, xi));
    CHECK(sym_product(u, u).is_zero());

    // (x + u)^2 = x^2 + 2 x u
    SymElement s = x + u;
    SymElement sq = sym_product(s, s);
    SymElement expect = sym_product(x, x) + Rational(2) * sym_product(x, u);
    CHECK(sq == expect);

    SpaceSpec other{2, 2};
    CHECK_THROWS(sym_product(x, SymElement::generator(other, {Role::G, 1})));
}

TEST_CASE("sym_product is associative and graded commutative") {
    SpaceSpec sp{2, 2};
    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        SymElement a = rand_homogeneous(rng, sp), b = rand_homogeneous(rng, sp),
                   c = rand_homogeneous(rng, sp);
        CHECK(sym_product(sym_product(a, b), c) == sym_product(a, sym_product(b, c)));
        auto da = a.degree(), db = b.degree();
        if (da && db) {
            int sgn = (*da % 2) && (*db % 2) ? -1 : 1;
            SymElement ba = sym_product(b, a);
            CHECK(sym_product(a, b) == (sgn == 1 ? ba : -ba));
        }
    }
}

TEST_CASE("degree_decompose splits and sums back") {
    SpaceSpec sp{2, 2};
    CHECK(SymElement::zero(sp).degree_decompose().empty());

    SymElement xu = sym_product(SymElement::generator(sp, {Role::G, 0}),
                                SymElement::generator(sp, {Role::Theta, 0}));
    SymElement xi = SymElement::generator(sp, {Role::GStar, 0});
    SymElement e = xu + xi;
    auto parts = e.degree_decompose();
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(-3) == xu);
    CHECK(parts.at(-1) == xi);

    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        SymElement a = rand_homogeneous(rng, sp) + rand_homogeneous(rng, sp);
        SymElement sum = SymElement::zero(sp);
        for (auto& [d, comp] : a.degree_decompose()) {
            auto cd = comp.degree();
            REQUIRE(cd.has_value());
            CHECK(*cd == d);
            sum += comp;
        }
        CHECK(sum == a);
    }
}

TEST_CASE("component filters by role signature") {
    SpaceSpec sp{2, 2};
    // eps^{12}_{00}-shaped term: two gs factors and one g factor
    SymElement e12 = SymElement::monomial(sp, {{Role::GStar, 0}, {Role::GStar, 1}, {Role::G, 0}});
    // eps^{10}_{01}-shaped term: one ts factor and one g factor
    SymElement e10 = SymElement::monomial(sp, {{Role::ThetaStar, 0}, {Role::G, 1}});
    SymElement e = e12 + e10;
    CHECK(e.component(1, 2, 0, 0) == e12);
    CHECK(e.component(1, 0, 0, 1) == e10);
    CHECK(e.component(0, 0, 3, 0).is_zero());
    CHECK(SymElement::zero(sp).component(1, 1, 1, 1).is_zero());
}

TEST_CASE("canonical rendering") {
    SpaceSpec sp{2, 1};
    SymElement e = SymElement::monomial(sp, {{Role::GStar, 0}, {Role::GStar, 1}, {Role::G, 0}},
                                        Rational(-2)) +
                   SymElement::monomial(sp, {{Role::ThetaStar, 0}, {Role::G, 0}}, Rational(1, 2));
    CHECK(e.to_string() == "-2 gs0⊙gs1⊙g0 + 1/2 ts0⊙g0");
    CHECK(SymElement::zero(sp).to_string() == "0");
    CHECK(SymElement::one(sp).to_string() == "1");
    SymElement unit = SymElement::monomial(sp, {{Role::G, 0}});
    CHECK(unit.to_string() == "g0");
    CHECK((-unit).to_string() == "-g0");
}
