#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hopf16/cyclotomic.hpp"
#include "hopf16/prime_field.hpp"

using namespace hopf16;

namespace {

Cyclotomic random_cyc(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    Cyclotomic c;
    for (int i = 0; i < Cyclotomic::degree; ++i) {
        c[i] = Rational(num(rng), den(rng));
        c[i].canonicalize();
    }
    return c;
}

} // namespace

TEST_CASE("minimal polynomial relations") {
    Cyclotomic z = Cyclotomic::zeta_pow(1);
    Cyclotomic p = Cyclotomic::one();
    for (int i = 0; i < 8; ++i) p = p * z;
    CHECK(p == Cyclotomic(-1));
    for (int i = 0; i < 8; ++i) p = p * z;
    CHECK(p == Cyclotomic::one()); // zeta^16 = 1

    // (1 + zeta^4)(1 - zeta^4) = 2, since zeta^4 = i
    Cyclotomic i4 = Cyclotomic::zeta_pow(4);
    CHECK((Cyclotomic::one() + i4) * (Cyclotomic::one() - i4) == Cyclotomic(2));
}

TEST_CASE("root_of_unity constructor") {
    CHECK(Cyclotomic::root_of_unity(1, 2) == Cyclotomic(-1));
    Cyclotomic i = Cyclotomic::root_of_unity(1, 4);
    CHECK(i * i == Cyclotomic(-1));
    CHECK(i * i * i * i == Cyclotomic::one());
    Cyclotomic z = Cyclotomic::root_of_unity(1, 16);
    Cyclotomic z8 = Cyclotomic::one();
    for (int k = 0; k < 8; ++k) z8 = z8 * z;
    CHECK(z8 == Cyclotomic(-1));
    CHECK_THROWS_AS(Cyclotomic::root_of_unity(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(Cyclotomic::root_of_unity(1, 5), std::invalid_argument);
}

TEST_CASE("explicit inverse, cross-checked in two prime fields") {
    // a = 3 + zeta - 2 zeta^5
    Cyclotomic a = Cyclotomic(3) + Cyclotomic::zeta_pow(1) - Cyclotomic(2) * Cyclotomic::zeta_pow(5);
    Cyclotomic inv = a.inverse();
    CHECK(a * inv == Cyclotomic::one());

    for (const PrimeContext* ctx : {&default_prime1(), &default_prime2()}) {
        auto ea = ctx->embed(a);
        auto ei = ctx->embed(inv);
        CHECK(ctx->mul(ea, ei) == 1);
    }
}

TEST_CASE("division and errors") {
    CHECK_THROWS_AS(Cyclotomic::one() / Cyclotomic::zero(), std::domain_error);
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        Cyclotomic a = random_cyc(rng);
        if (a.is_zero()) continue;
        CHECK(a / a == Cyclotomic::one());
    }
}

TEST_CASE("field axioms on randomized triples") {
    std::mt19937 rng(42);
    for (int t = 0; t < 200; ++t) {
        Cyclotomic a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("canonical-form equality: a - a has all-zero coordinates") {
    std::mt19937 rng(5);
    Cyclotomic a = random_cyc(rng);
    Cyclotomic d = a - a;
    for (int i = 0; i < Cyclotomic::degree; ++i) CHECK(d[i] == 0);
}

TEST_CASE("prime contexts") {
    const PrimeContext& p1 = default_prime1();
    const PrimeContext& p2 = default_prime2();
    CHECK(p1.p == 97);
    CHECK(p2.p == 193);
    // the fixed root has multiplicative order exactly 16
    for (const PrimeContext* ctx : {&p1, &p2}) {
        CHECK(ctx->pow(ctx->zeta, 16) == 1);
        CHECK(ctx->pow(ctx->zeta, 8) == ctx->p - 1);
    }
    CHECK_THROWS_AS(PrimeContext(7), std::invalid_argument);
}

TEST_CASE("embedding is a ring homomorphism") {
    CHECK(default_prime1().embed(Cyclotomic::one()) == 1);
    std::mt19937 rng(11);
    for (const PrimeContext* ctx : {&default_prime1(), &default_prime2()}) {
        CHECK(ctx->pow(ctx->embed(Cyclotomic::zeta_pow(1)), 16) == 1);
        CHECK(ctx->pow(ctx->embed(Cyclotomic::zeta_pow(1)), 8) == ctx->p - 1);
        for (int t = 0; t < 1000; ++t) {
            Cyclotomic a = random_cyc(rng), b = random_cyc(rng);
            CHECK(ctx->embed(a * b) == ctx->mul(ctx->embed(a), ctx->embed(b)));
            CHECK(ctx->embed(a + b) == ctx->add(ctx->embed(a), ctx->embed(b)));
        }
    }
}

TEST_CASE("rational reconstruction round trips") {
    for (const PrimeContext* ctx : {&default_prime1(), &default_prime2()}) {
        auto r1 = rational_reconstruct(ctx->embed(Rational(3, 2)), *ctx, 16);
        REQUIRE(r1.has_value());
        CHECK(*r1 == Rational(3, 2));
        auto r2 = rational_reconstruct(ctx->embed(Rational(-1, 4)), *ctx, 16);
        REQUIRE(r2.has_value());
        CHECK(*r2 == Rational(-1, 4));
    }
}

TEST_CASE("embed(zeta) is recognized as non-rational") {
    // Exhaustive: no a/b with b <= 16 and |a| <= p/(2*16) maps onto embed(zeta)
    // in both default primes simultaneously.
    auto v1 = default_prime1().embed(Cyclotomic::zeta_pow(1));
    auto v2 = default_prime2().embed(Cyclotomic::zeta_pow(1));
    bool found = false;
    for (long b = 1; b <= 16 && !found; ++b) {
        for (long a = -(97 / 32); a <= 97 / 32 && !found; ++a) {
            Rational q(a, b);
            q.canonicalize();
            if (default_prime1().embed(q) == v1 && default_prime2().embed(q) == v2) found = true;
        }
    }
    CHECK_FALSE(found);
    // and the reconstruction interface agrees in at least one prime
    auto r1 = rational_reconstruct(v1, default_prime1(), 16);
    auto r2 = rational_reconstruct(v2, default_prime2(), 16);
    bool both_claim = r1.has_value() && r2.has_value() && *r1 == *r2;
    CHECK_FALSE(both_claim);
}
