#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hopf16 {

using Rational = mpq_class;

/// Exact element of Q(zeta_16), written in the power basis 1, z, ..., z^7
/// with z^8 = -1. Equality of coordinate vectors is equality of values,
/// since the basis is reduced modulo the minimal polynomial.
class Cyclotomic {
public:
    static constexpr int degree = 8;

    Cyclotomic() { coeff_.fill(Rational(0)); }

    Cyclotomic(const Rational& r) : Cyclotomic() { coeff_[0] = r; canon_(); }
    Cyclotomic(long n) : Cyclotomic(Rational(n)) {}
    Cyclotomic(int n) : Cyclotomic(Rational(n)) {}

    static Cyclotomic zero() { return Cyclotomic(); }
    static Cyclotomic one() { return Cyclotomic(1); }

    /// zeta_16^k for any integer k (reduced via z^8 = -1).
    static Cyclotomic zeta_pow(long k) {
        Cyclotomic v;
        long e = ((k % 16) + 16) % 16;
        if (e < 8)
            v.coeff_[e] = 1;
        else
            v.coeff_[e - 8] = -1;
        return v;
    }

    /// zeta_n^k for n dividing 16, i.e. zeta_16^(16k/n). Primitive when gcd(k,n)=1.
    static Cyclotomic root_of_unity(long k, long n) {
        if (n <= 0 || 16 % n != 0)
            throw std::invalid_argument("root_of_unity: order must divide 16");
        return zeta_pow(k * (16 / n));
    }

    const Rational& operator[](int i) const { return coeff_[i]; }
    Rational& operator[](int i) { return coeff_[i]; }

    bool is_zero() const {
        for (const auto& c : coeff_)
            if (c != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (int i = 1; i < degree; ++i)
            if (coeff_[i] != 0) return false;
        return true;
    }
    const Rational& rational_part() const { return coeff_[0]; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    Cyclotomic operator-() const {
        Cyclotomic r;
        for (int i = 0; i < degree; ++i) r.coeff_[i] = -coeff_[i];
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        for (int i = 0; i < degree; ++i) { coeff_[i] += o.coeff_[i]; coeff_[i].canonicalize(); }
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        for (int i = 0; i < degree; ++i) { coeff_[i] -= o.coeff_[i]; coeff_[i].canonicalize(); }
        return *this;
    }
    Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }
    Cyclotomic& operator/=(const Cyclotomic& o) { *this = *this / o; return *this; }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        // convolution with the wrap z^(i+8) = -z^i
        Cyclotomic r;
        for (int i = 0; i < degree; ++i) {
            if (a.coeff_[i] == 0) continue;
            for (int j = 0; j < degree; ++j) {
                if (b.coeff_[j] == 0) continue;
                Rational t = a.coeff_[i] * b.coeff_[j];
                int k = i + j;
                if (k >= degree) { k -= degree; t = -t; }
                r.coeff_[k] += t;
            }
        }
        r.canon_();
        return r;
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.inverse();
    }

    /// Multiplicative inverse, from the multiplication-by-*this matrix in the
    /// power basis (8x8 exact linear solve).
    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("Cyclotomic: division by zero");
        // M[i][j] = coefficient of z^i in (*this) * z^j
        std::array<std::array<Rational, degree>, degree> M;
        for (int j = 0; j < degree; ++j) {
            for (int i = 0; i < degree; ++i) {
                int k = i - j;
                Rational sign(1);
                if (k < 0) { k += degree; sign = -1; }
                M[i][j] = sign * coeff_[k];
            }
        }
        // solve M x = e_0 by Gaussian elimination
        std::array<Rational, degree> rhs;
        rhs.fill(Rational(0));
        rhs[0] = 1;
        for (int col = 0; col < degree; ++col) {
            int piv = -1;
            for (int r = col; r < degree; ++r)
                if (M[r][col] != 0) { piv = r; break; }
            if (piv < 0) throw std::domain_error("Cyclotomic: singular multiplication matrix");
            std::swap(M[piv], M[col]);
            std::swap(rhs[piv], rhs[col]);
            Rational d = M[col][col];
            for (int c = col; c < degree; ++c) { M[col][c] /= d; M[col][c].canonicalize(); }
            rhs[col] /= d;
            rhs[col].canonicalize();
            for (int r = 0; r < degree; ++r) {
                if (r == col || M[r][col] == 0) continue;
                Rational f = M[r][col];
                for (int c = col; c < degree; ++c) { M[r][c] -= f * M[col][c]; M[r][c].canonicalize(); }
                rhs[r] -= f * rhs[col];
                rhs[r].canonicalize();
            }
        }
        Cyclotomic out;
        out.coeff_ = rhs;
        return out;
    }

    /// Canonical coefficient string "c0,c1,...,c7".
    std::string str() const {
        std::ostringstream os;
        for (int i = 0; i < degree; ++i) {
            if (i) os << ',';
            os << coeff_[i];
        }
        return os.str();
    }

    /// Short human-readable form ("0", "3/2", or the coefficient string).
    std::string pretty() const {
        if (is_rational()) {
            std::ostringstream os;
            os << coeff_[0];
            return os.str();
        }
        return str();
    }

private:
    void canon_() {
        for (auto& c : coeff_) c.canonicalize();
    }
    std::array<Rational, degree> coeff_;
};

inline Cyclotomic operator*(const Rational& r, const Cyclotomic& a) { return Cyclotomic(r) * a; }

} // namespace hopf16
