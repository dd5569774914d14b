#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hopf16/modlin.hpp"

using namespace hopf16;

namespace {

IVec apply(const IMat& A, const IVec& x, std::int64_t N) {
    IVec b(A.size(), 0);
    for (size_t i = 0; i < A.size(); ++i) {
        std::int64_t acc = 0;
        for (size_t j = 0; j < x.size(); ++j) acc = mod_pos(acc + A[i][j] * x[j], N);
        b[i] = acc;
    }
    return b;
}

} // namespace

TEST_CASE("prime power factorization") {
    auto f = factor_prime_powers(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::make_pair<std::int64_t, int>(2, 3));
    CHECK(f[1] == std::make_pair<std::int64_t, int>(3, 2));
    CHECK(f[2] == std::make_pair<std::int64_t, int>(5, 1));
}

TEST_CASE("solve over Z/8: 2x = 4 solvable, 2x = 1 not") {
    IMat A{{2}};
    auto s = solve_mod(A, {4}, 8);
    REQUIRE(s.has_value());
    CHECK(mod_pos(2 * (*s)[0], 8) == 4);
    CHECK_FALSE(solve_mod(A, {1}, 8).has_value());
    CHECK_FALSE(solve_mod(A, {2}, 4).has_value() == false); // 2x=2 mod 4 solvable
}

TEST_CASE("random consistency: solve returns an actual solution") {
    std::mt19937 rng(3);
    for (std::int64_t N : {8, 12, 64, 512, 360}) {
        std::uniform_int_distribution<int> d(-10, 10);
        for (int trial = 0; trial < 40; ++trial) {
            int r = 1 + rng() % 6, c = 1 + rng() % 6;
            IMat A(r, IVec(c));
            for (auto& row : A)
                for (auto& x : row) x = d(rng);
            // build b from a known solution so it is solvable
            IVec x0(c);
            for (auto& x : x0) x = mod_pos(d(rng), N);
            IVec b = apply(A, x0, N);
            auto s = solve_mod(A, b, N);
            REQUIRE(s.has_value());
            CHECK(apply(A, *s, N) == b);
        }
    }
}

TEST_CASE("kernel generators annihilate the matrix") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> d(-6, 6);
    for (std::int64_t N : {8, 64, 12}) {
        for (int trial = 0; trial < 30; ++trial) {
            int r = 1 + rng() % 5, c = 1 + rng() % 5;
            IMat A(r, IVec(c));
            for (auto& row : A)
                for (auto& x : row) x = d(rng);
            for (auto& g : kernel_mod(A, N)) {
                IVec zero(r, 0);
                CHECK(apply(A, g, N) == zero);
            }
        }
    }
}

TEST_CASE("kernel of zero map is everything, of identity is torsion-free zero") {
    IMat Z{{0, 0}, {0, 0}};
    auto k = kernel_mod(Z, 8);
    CHECK(k.size() == 2);
    IMat I{{1, 0}, {0, 1}};
    CHECK(kernel_mod(I, 8).empty());
}

TEST_CASE("batch solving matches single solving") {
    IMat A{{2, 4}, {0, 2}};
    IMat rhs{{4, 2}, {2, 1}, {6, 0}};
    auto batch = solve_mod_batch(A, rhs, 8);
    for (size_t j = 0; j < rhs.size(); ++j) {
        auto single = solve_mod(A, rhs[j], 8);
        CHECK(batch[j].has_value() == single.has_value());
        if (batch[j]) CHECK(apply(A, *batch[j], 8) == rhs[j]);
    }
}
