#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hopf16/cyclotomic.hpp"

namespace hopf16 {

/// Modular context for a prime p = 1 (mod 16), together with a fixed
/// primitive 16th root of unity mod p. Values are plain residues; all
/// arithmetic goes through the context, which is passed explicitly.
struct PrimeContext {
    std::uint64_t p = 0;
    std::uint64_t zeta = 0; // primitive 16th root of unity mod p

    explicit PrimeContext(std::uint64_t prime) : p(prime) {
        if (p < 3 || (p - 1) % 16 != 0)
            throw std::invalid_argument("PrimeContext: need a prime p = 1 (mod 16)");
        for (std::uint64_t g = 2; g < p; ++g) {
            if (order_divides(g, 16) && !order_divides(g, 8)) { zeta = g; break; }
        }
        if (zeta == 0) throw std::invalid_argument("PrimeContext: no element of order 16 (p not prime?)");
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b % p) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a % p) * (b % p) % p; }
    std::uint64_t neg(std::uint64_t a) const { return (p - a % p) % p; }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t inv(std::uint64_t a) const {
        a %= p;
        if (a == 0) throw std::domain_error("PrimeContext: inverse of zero");
        return pow(a, p - 2);
    }

    /// Residue of a rational; throws if the denominator vanishes mod p.
    std::uint64_t embed(const Rational& r) const {
        mpz_class num = r.get_num() % mpz_class(static_cast<unsigned long>(p));
        mpz_class den = r.get_den() % mpz_class(static_cast<unsigned long>(p));
        std::uint64_t n = mpz_class(num < 0 ? num + static_cast<long>(p) : num).get_ui();
        std::uint64_t d = den.get_ui();
        if (d == 0) throw std::domain_error("PrimeContext: denominator divisible by p");
        return mul(n, inv(d));
    }

    /// Ring homomorphism Q(zeta_16) -> F_p determined by zeta_16 -> zeta.
    std::uint64_t embed(const Cyclotomic& c) const {
        std::uint64_t acc = 0, zp = 1;
        for (int i = 0; i < Cyclotomic::degree; ++i) {
            acc = add(acc, mul(embed(c[i]), zp));
            zp = mul(zp, zeta);
        }
        return acc;
    }

private:
    bool order_divides(std::uint64_t g, std::uint64_t n) const { return pow(g, n) == 1; }
};

/// A residue tagged with its context; convenience value type for character
/// tables. Arithmetic requires matching contexts.
struct PrimeField {
    const PrimeContext* ctx = nullptr;
    std::uint64_t v = 0;

    PrimeField() = default;
    PrimeField(const PrimeContext& c, std::uint64_t value) : ctx(&c), v(value % c.p) {}

    friend PrimeField operator+(PrimeField a, PrimeField b) { return {*a.ctx, a.ctx->add(a.v, b.v)}; }
    friend PrimeField operator-(PrimeField a, PrimeField b) { return {*a.ctx, a.ctx->sub(a.v, b.v)}; }
    friend PrimeField operator*(PrimeField a, PrimeField b) { return {*a.ctx, a.ctx->mul(a.v, b.v)}; }
    friend PrimeField operator/(PrimeField a, PrimeField b) { return {*a.ctx, a.ctx->mul(a.v, a.ctx->inv(b.v))}; }
    friend bool operator==(PrimeField a, PrimeField b) { return a.v == b.v; }
};

/// Bounded rational reconstruction: the unique a/b with |a| <= p/(2*denom_bound),
/// 0 < b <= denom_bound and a = v*b (mod p), if it exists.
inline std::optional<Rational> rational_reconstruct(std::uint64_t v, const PrimeContext& ctx,
                                                    std::uint64_t denom_bound) {
    const std::int64_t p = static_cast<std::int64_t>(ctx.p);
    const std::int64_t num_bound = p / (2 * static_cast<std::int64_t>(denom_bound));
    // extended Euclid on (p, v): r_i = s_i*p + t_i*v
    std::int64_t r0 = p, r1 = static_cast<std::int64_t>(v % ctx.p);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 > num_bound) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    std::int64_t a = r1, b = t1;
    if (b == 0) return std::nullopt;
    if (b < 0) { a = -a; b = -b; }
    if (b > static_cast<std::int64_t>(denom_bound)) return std::nullopt;
    if (std::abs(a) > num_bound) return std::nullopt;
    Rational q(a, b);
    q.canonicalize();
    // verify a = v*b mod p after reduction to lowest terms
    std::int64_t an = q.get_num().get_si(), bd = q.get_den().get_si();
    std::int64_t lhs = ((an % p) + p) % p;
    std::int64_t rhs = static_cast<std::int64_t>(ctx.mul(v, static_cast<std::uint64_t>(bd)));
    if (lhs != rhs) return std::nullopt;
    return q;
}

/// The two default primes. Two independent embeddings make modular
/// coincidences detectable.
inline const PrimeContext& default_prime1() { static PrimeContext c(97); return c; }
inline const PrimeContext& default_prime2() { static PrimeContext c(193); return c; }

} // namespace hopf16
