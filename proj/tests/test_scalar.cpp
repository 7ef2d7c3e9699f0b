#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kfold/scalar.hpp"

using kfold::Error;
using kfold::ErrorCode;
using kfold::Int;
using kfold::Rat;
using kfold::Scalar;

namespace {

// Deterministic random scalars over Q(sqrt(d)).
struct ScalarGen {
    std::mt19937_64 rng;
    std::int64_t disc;

    explicit ScalarGen(uint64_t seed, std::int64_t d) : rng(seed), disc(d) {}

    Rat rat(int span = 20) {
        std::uniform_int_distribution<int> num(-span, span);
        std::uniform_int_distribution<int> den(1, 9);
        return Rat(num(rng), den(rng));
    }
    Scalar next() {
        std::uniform_int_distribution<int> pick(0, 3);
        if (pick(rng) == 0) return Scalar(rat());
        return Scalar(rat(), rat(), disc);
    }
};

}  // namespace

TEST_CASE("scalar_sign examples") {
    CHECK(Scalar(Rat(1, 2)).sign() == 1);
    CHECK(Scalar(0).sign() == 0);
    // 1 - sqrt(2) < 0 because 1^2 < 2*1^2.
    CHECK(Scalar(Rat(1), Rat(-1), 2).sign() == -1);
    CHECK(Scalar(Rat(-1), Rat(1), 2).sign() == 1);
    CHECK(Scalar(Rat(3), Rat(-1), 2).sign() == 1);
    CHECK(Scalar(Rat(0), Rat(-2), 3).sign() == -1);
}

TEST_CASE("is_rational examples") {
    CHECK(Scalar(Rat(3, 4)).is_rational());
    CHECK_FALSE(Scalar(Rat(0), Rat(1, 2), 2).is_rational());
    CHECK(Scalar(Rat(5), Rat(0), 2).is_rational());  // zero surd collapses
}

TEST_CASE("normalization is canonical") {
    // d=1 folds into the rational part; zero surd resets d to 0.
    CHECK(Scalar(Rat(1, 2), Rat(1, 3), 1) == Scalar(Rat(5, 6)));
    CHECK(Scalar(Rat(2), Rat(0), 7) == Scalar(2));
    CHECK(Scalar(Rat(2), Rat(0), 7).discriminant() == 0);
    CHECK_THROWS_AS(Scalar(Rat(0), Rat(1), 8), Error);   // 8 = 2^2 * 2
    CHECK_THROWS_AS(Scalar(Rat(0), Rat(1), -2), Error);  // negative d
}

TEST_CASE("mixed discriminants are rejected") {
    Scalar a(Rat(0), Rat(1), 2);
    Scalar b(Rat(0), Rat(1), 3);
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(a * b, Error);
    // Plain rationals interoperate with any discriminant.
    CHECK((a + Scalar(1)).discriminant() == 2);
}

TEST_CASE("field axioms hold exactly on random scalars") {
    ScalarGen gen(0xA11CE, 5);
    for (int iter = 0; iter < 200; ++iter) {
        Scalar a = gen.next(), b = gen.next(), c = gen.next();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Scalar(0));
        if (!b.is_zero()) {
            CHECK(b * b.inverse() == Scalar(1));
            CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("sign properties") {
    ScalarGen gen(0xBEEF, 2);
    for (int iter = 0; iter < 200; ++iter) {
        Scalar s = gen.next();
        CHECK(s.sign() * (-s).sign() <= 0);
        CHECK((s * s).sign() >= 0);
        // Total order consistency.
        Scalar t = gen.next();
        if (s < t) CHECK(t > s);
        if (s == t) CHECK((s - t).is_zero());
    }
}

TEST_CASE("floor and ceil are exact") {
    CHECK(Scalar(Rat(7, 2)).floor() == 3);
    CHECK(Scalar(Rat(-7, 2)).floor() == -4);
    CHECK(Scalar(Rat(0), Rat(1), 2).floor() == 1);    // sqrt(2) = 1.41..
    CHECK(Scalar(Rat(0), Rat(-1), 2).floor() == -2);  // -sqrt(2)
    ScalarGen gen(0xF100D, 3);
    for (int iter = 0; iter < 100; ++iter) {
        Scalar s = gen.next();
        Int n = s.floor();
        CHECK(Scalar(n) <= s);
        CHECK(s < Scalar(n + 1));
        CHECK(Scalar(s.ceil()) >= s);
    }
}

TEST_CASE("parse/format round-trip") {
    for (const char* text : {"0", "-3", "3/4", "1/2", "sqrt(2)", "-1/2*sqrt(2)",
                             "1/2+1/2*sqrt(2)", "-2/3-5*sqrt(3)", "7-sqrt(5)"}) {
        Scalar s = Scalar::parse(text);
        CHECK(Scalar::parse(s.str()) == s);
    }
    ScalarGen gen(0xCAFE, 7);
    for (int iter = 0; iter < 200; ++iter) {
        Scalar s = gen.next();
        CHECK(Scalar::parse(s.str()) == s);
    }
}

TEST_CASE("parse accepts whitespace and rejects junk") {
    CHECK(Scalar::parse(" 1/2 + 1/2*sqrt(2) ") == Scalar(Rat(1, 2), Rat(1, 2), 2));
    CHECK(Scalar::parse("2*sqrt(3)") == Scalar(Rat(0), Rat(2), 3));
    CHECK_THROWS_AS(Scalar::parse(""), Error);
    CHECK_THROWS_AS(Scalar::parse("1/0"), Error);
    CHECK_THROWS_AS(Scalar::parse("1+2"), Error);
    CHECK_THROWS_AS(Scalar::parse("sqrt(8)"), Error);
    CHECK_THROWS_AS(Scalar::parse("1/2 банан"), Error);
    try {
        Scalar::parse("sqrt(12)");
        FAIL("expected parse error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}
