#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hopf16 {

// Linear algebra over Z/N for composite N, by CRT reduction to the chain
// rings Z/p^e and minimal-valuation pivoting there. Complete for solvability,
// kernels and cokernel invariants (the p-local Smith form).

using IMat = std::vector<std::vector<std::int64_t>>;
using IVec = std::vector<std::int64_t>;

inline std::vector<std::pair<std::int64_t, int>> factor_prime_powers(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::int64_t mod_pos(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline std::int64_t mod_inv(std::int64_t a, std::int64_t m) {
    std::int64_t t = 0, nt = 1, r = m, nr = mod_pos(a, m);
    while (nr) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::domain_error("mod_inv: not invertible");
    return mod_pos(t, m);
}

namespace modlin {

/// Diagonalization of A over Z/p^e with row ops mirrored onto B and column
/// ops collected in V (and optionally the inverse row transform Uinv).
/// After run(): A is diagonal with p-power entries of nondecreasing
/// valuation; original-A * x = b  iff  diag * y = (transformed b), x = V y.
struct PrimePowerElim {
    std::int64_t p, pe;
    int e;
    IMat A, B, V, Uinv;
    std::vector<int> diag_val; // valuation of each pivot
    int rank = 0;
    bool track_uinv = false;

    PrimePowerElim(IMat a, IMat b, std::int64_t prime, int exp, bool with_uinv = false)
        : p(prime), e(exp), A(std::move(a)), B(std::move(b)), track_uinv(with_uinv) {
        pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        const int r = static_cast<int>(A.size());
        const int c = r ? static_cast<int>(A[0].size()) : 0;
        for (auto& row : A)
            for (auto& x : row) x = mod_pos(x, pe);
        for (auto& row : B)
            for (auto& x : row) x = mod_pos(x, pe);
        V.assign(c, IVec(c, 0));
        for (int i = 0; i < c; ++i) V[i][i] = 1;
        if (track_uinv) {
            Uinv.assign(r, IVec(r, 0));
            for (int i = 0; i < r; ++i) Uinv[i][i] = 1;
        }
        run_(r, c);
    }

    int val_(std::int64_t x) const {
        int v = 0;
        while (v < e && x % p == 0) { x /= p; ++v; }
        return v;
    }

private:
    void run_(int r, int c) {
        const int k = B.empty() ? 0 : static_cast<int>(B[0].size());
        int pos = 0;
        while (pos < r && pos < c) {
            int bi = -1, bj = -1, bv = e;
            for (int i = pos; i < r; ++i)
                for (int j = pos; j < c; ++j) {
                    if (A[i][j] == 0) continue;
                    int v = val_(A[i][j]);
                    if (v < bv) { bv = v; bi = i; bj = j; }
                }
            if (bi < 0) break;
            if (bi != pos) {
                std::swap(A[bi], A[pos]);
                if (k) std::swap(B[bi], B[pos]);
                if (track_uinv)
                    for (auto& row : Uinv) std::swap(row[bi], row[pos]);
            }
            if (bj != pos)
                for (int i = 0; i < r; ++i) std::swap(A[i][bj], A[i][pos]);
            if (bj != pos) std::swap(V[bj], V[pos]);
            std::int64_t pv = 1;
            for (int i = 0; i < bv; ++i) pv *= p;
            std::int64_t unit = A[pos][pos] / pv;
            std::int64_t ui = mod_inv(unit, pe);
            for (int j = pos; j < c; ++j) A[pos][j] = mod_pos(A[pos][j] * ui, pe);
            for (int j = 0; j < k; ++j) B[pos][j] = mod_pos(B[pos][j] * ui, pe);
            if (track_uinv) {
                std::int64_t uu = mod_pos(unit, pe);
                for (auto& row : Uinv) row[pos] = mod_pos(row[pos] * uu, pe);
            }
            for (int i = 0; i < r; ++i) {
                if (i == pos || A[i][pos] == 0) continue;
                std::int64_t f = A[i][pos] / pv;
                for (int j = pos; j < c; ++j) A[i][j] = mod_pos(A[i][j] - f * A[pos][j], pe);
                for (int j = 0; j < k; ++j) B[i][j] = mod_pos(B[i][j] - f * B[pos][j], pe);
                if (track_uinv)
                    for (auto& row : Uinv) row[pos] = mod_pos(row[pos] + f * row[i], pe);
            }
            for (int j = 0; j < c; ++j) {
                if (j == pos || A[pos][j] == 0) continue;
                std::int64_t f = A[pos][j] / pv;
                for (int i = 0; i < r; ++i) A[i][j] = mod_pos(A[i][j] - f * A[i][pos], pe);
                for (int i = 0; i < c; ++i) V[i][j] = mod_pos(V[i][j] - f * V[i][pos], pe);
            }
            diag_val.push_back(bv);
            ++pos;
        }
        rank = pos;
    }

public:
    /// Solvability of the j-th transformed right side, and a particular y.
    std::optional<IVec> solve_col(int j) const {
        const int r = static_cast<int>(A.size());
        const int c = r ? static_cast<int>(A[0].size()) : 0;
        IVec y(c, 0);
        for (int i = 0; i < r; ++i) {
            std::int64_t b = B[i][j];
            if (i < rank) {
                std::int64_t pv = 1;
                for (int v = 0; v < diag_val[i]; ++v) pv *= p;
                if (b % pv) return std::nullopt;
                y[i] = mod_pos(b / pv, pe);
            } else if (mod_pos(b, pe) != 0) {
                return std::nullopt;
            }
        }
        IVec x(c, 0);
        for (int i = 0; i < c; ++i) {
            std::int64_t acc = 0;
            for (int jj = 0; jj < c; ++jj) acc = mod_pos(acc + V[i][jj] * y[jj], pe);
            x[i] = acc;
        }
        return x;
    }

    /// Kernel generators of (original A) x = 0 over Z/p^e.
    IMat kernel() const {
        const int r = static_cast<int>(A.size());
        const int c = r ? static_cast<int>(A[0].size()) : 0;
        IMat gens;
        for (int i = 0; i < rank; ++i) {
            if (diag_val[i] == 0) continue;
            std::int64_t scale = pe;
            for (int v = 0; v < diag_val[i]; ++v) scale /= p;
            IVec g(c, 0);
            for (int row = 0; row < c; ++row) g[row] = mod_pos(V[row][i] * scale, pe);
            gens.push_back(std::move(g));
        }
        for (int j = rank; j < c; ++j) {
            IVec g(c, 0);
            for (int row = 0; row < c; ++row) g[row] = V[row][j];
            gens.push_back(std::move(g));
        }
        return gens;
    }
};

} // namespace modlin

/// Solve A x = b (mod N) for each column b of B; nullopt where unsolvable.
inline std::vector<std::optional<IVec>> solve_mod_batch(const IMat& A, const IMat& Bcols,
                                                        std::int64_t N) {
    const int r = static_cast<int>(A.size());
    const int c = r ? static_cast<int>(A[0].size()) : 0;
    const int k = static_cast<int>(Bcols.size());
    IMat B(r, IVec(k, 0));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < r; ++i) B[i][j] = Bcols[j][i];
    auto pps = factor_prime_powers(N);
    std::vector<std::optional<IVec>> out(k, IVec(c, 0));
    for (auto [p, e] : pps) {
        modlin::PrimePowerElim el(A, B, p, e);
        std::int64_t pe = el.pe;
        std::int64_t rest = N / pe;
        // CRT idempotent: 1 mod p^e, 0 mod N/p^e
        std::int64_t coeff = rest == 1 ? 1 : mod_pos(mod_inv(rest % pe, pe) * rest, N);
        for (int j = 0; j < k; ++j) {
            if (!out[j]) continue;
            auto y = el.solve_col(j);
            if (!y) { out[j] = std::nullopt; continue; }
            for (int i = 0; i < c; ++i)
                (*out[j])[i] = mod_pos((*out[j])[i] + coeff * (*y)[i], N);
        }
    }
    return out;
}

inline std::optional<IVec> solve_mod(const IMat& A, const IVec& b, std::int64_t N) {
    auto r = solve_mod_batch(A, {b}, N);
    return r[0];
}

/// Kernel generators of A x = 0 (mod N); generators of the p-parts are
/// embedded via the CRT idempotents, so every kernel element is an integer
/// combination of the output.
inline IMat kernel_mod(const IMat& A, std::int64_t N) {
    auto pps = factor_prime_powers(N);
    IMat out;
    const int r = static_cast<int>(A.size());
    for (auto [p, e] : pps) {
        modlin::PrimePowerElim el(A, IMat(r, IVec{}), p, e);
        std::int64_t pe = el.pe;
        std::int64_t rest = N / pe;
        std::int64_t coeff = rest == 1 ? 1 : mod_pos(mod_inv(rest % pe, pe) * rest, N);
        for (auto& g : el.kernel()) {
            IVec lifted(g.size());
            for (size_t i = 0; i < g.size(); ++i) lifted[i] = mod_pos(coeff * g[i], N);
            out.push_back(std::move(lifted));
        }
    }
    return out;
}

} // namespace hopf16
