#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ppalg/cyclotomic.hpp"
#include "ppalg/rational.hpp"

using namespace ppalg;

TEST_CASE("rational construction and canonical form") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(6, 3).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), division_by_zero);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("+4/6") == Rational(2, 3));
    CHECK(Rational::parse("5/-10") == Rational(-1, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), division_by_zero);
    CHECK_THROWS_AS(Rational::parse(""), validation_error);
    CHECK_THROWS_AS(Rational::parse("a/2"), validation_error);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), validation_error);
    CHECK_THROWS_AS(Rational::parse("1 / 2"), validation_error);
    CHECK_THROWS_AS(Rational::parse("1.5"), validation_error);
}

TEST_CASE("rational arithmetic") {
    const Rational a(1, 3), b(1, 6);
    CHECK((a + b) == Rational(1, 2));
    CHECK((a - b) == Rational(1, 6));
    CHECK((a * b) == Rational(1, 18));
    CHECK((a / b) == Rational(2));
    CHECK(a.inverse() == Rational(3));
    CHECK_THROWS_AS(Rational(0).inverse(), division_by_zero);
    CHECK_THROWS_AS(a / Rational(0), division_by_zero);
    CHECK(Rational(-5, 3) < Rational(-1, 3));
    CHECK(Rational(2, 3) > Rational(1, 2));
}

TEST_CASE("rational field axioms on random samples") {
    std::mt19937_64 rng(12345);
    auto draw = [&rng]() {
        const long num = static_cast<long>(rng() % 2001) - 1000;
        const long den = static_cast<long>(rng() % 50) + 1;
        return Rational(num, den);
    };
    for (int i = 0; i < 200; ++i) {
        const Rational a = draw(), b = draw(), c = draw();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("cyclotomic polynomial table") {
    CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<mpz_class>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<mpz_class>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
    CHECK(euler_phi(60) == 16);
    CHECK(euler_phi(120) == 32);
}

TEST_CASE("roots of unity have the right order") {
    for (int m = 1; m <= 40; ++m) {
        const Cyclotomic z = Cyclotomic::zeta(m);
        CHECK(z.pow(m) == Cyclotomic(1));
        if (m > 2) CHECK(z.pow(1) != Cyclotomic(1));
    }
    CHECK(Cyclotomic::zeta(2) == Cyclotomic(-1));
    CHECK(Cyclotomic::zeta(1) == Cyclotomic(1));
}

TEST_CASE("power basis reduction") {
    // 1 + z3 + z3^2 = 0.
    const Cyclotomic z3 = Cyclotomic::zeta(3);
    CHECK(Cyclotomic(1) + z3 + z3.pow(2) == Cyclotomic(0));
    // Sum of all primitive fifth roots is -1.
    const Cyclotomic z5 = Cyclotomic::zeta(5);
    CHECK(z5 + z5.pow(2) + z5.pow(3) + z5.pow(4) == Cyclotomic(-1));
    // Golden ratio tau = -z5^2 - z5^3 satisfies tau^2 = tau + 1.
    const Cyclotomic tau = -(z5.pow(2) + z5.pow(3));
    CHECK(tau * tau == tau + Cyclotomic(1));
}

TEST_CASE("mixed conductor arithmetic promotes to the lcm") {
    const Cyclotomic i = Cyclotomic::zeta(4);
    const Cyclotomic w = Cyclotomic::zeta(6);
    const Cyclotomic prod = i * w;
    CHECK(prod.conductor() == 12);
    CHECK(prod == Cyclotomic::zeta_power(12, 5));
    CHECK(Cyclotomic::zeta_power(6, 3) == Cyclotomic(-1));
    CHECK(Cyclotomic::zeta_power(10, 5) == Cyclotomic(-1));
    // Same value reached through different conductors.
    CHECK(Cyclotomic::zeta_power(12, 6) == Cyclotomic::zeta_power(4, 2));
}

TEST_CASE("conjugation is a ring map fixing rationals") {
    const Cyclotomic a = Cyclotomic::zeta(12) + Cyclotomic(Rational(1, 2));
    const Cyclotomic b = Cyclotomic::zeta_power(12, 7) - Cyclotomic(3);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK(Cyclotomic(Rational(5, 7)).conj() == Cyclotomic(Rational(5, 7)));
    // z * conj(z) = 1 for roots of unity.
    CHECK(Cyclotomic::zeta(7) * Cyclotomic::zeta(7).conj() == Cyclotomic(1));
    // Real combinations are fixed.
    const Cyclotomic real = Cyclotomic::zeta(8) + Cyclotomic::zeta_power(8, 7);
    CHECK(real.conj() == real);
    CHECK(real * real == Cyclotomic(2)); // (sqrt 2)^2
}

TEST_CASE("rationality detection") {
    CHECK(Cyclotomic::zeta_power(8, 4).is_rational());
    CHECK(Cyclotomic::zeta_power(8, 4).to_rational() == Rational(-1));
    CHECK_FALSE(Cyclotomic::zeta(8).is_rational());
    CHECK_THROWS_AS(Cyclotomic::zeta(8).to_rational(), not_rational);
    const Cyclotomic z = Cyclotomic::zeta(5);
    CHECK((z * z.conj()).to_rational() == Rational(1));
}

TEST_CASE("cyclotomic ring axioms on random samples") {
    std::mt19937_64 rng(777);
    auto draw = [&rng]() {
        const int ms[] = {1, 2, 3, 4, 6, 8, 12};
        const int m = ms[rng() % 7];
        Cyclotomic acc;
        for (int k = 0; k < 3; ++k) {
            const long c = static_cast<long>(rng() % 11) - 5;
            acc += Cyclotomic(Rational(c)) * Cyclotomic::zeta_power(m, static_cast<long>(rng() % m));
        }
        return acc;
    };
    for (int i = 0; i < 100; ++i) {
        const Cyclotomic a = draw(), b = draw(), c = draw();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("from_coeffs validates the length") {
    CHECK_THROWS_AS(Cyclotomic::from_coeffs(12, {Rational(1)}), validation_error);
    const Cyclotomic z = Cyclotomic::from_coeffs(4, {Rational(0), Rational(1)});
    CHECK(z == Cyclotomic::zeta(4));
}
