#pragma once

#include <sstream>

#include "hopf16/group.hpp"

namespace hopf16 {

// The comparison groups of order 16, in the numbering used throughout the
// catalog: G1 modular, G2 semidihedral, G3 dihedral, G5 = Z4 x| Z4,
// G6, G7 central-type products, G8 = D8 x Z2.

/// G1: <a,b | a^8 = b^2 = 1, bab^-1 = a^5>. Index (i,j) -> a^i b^j.
inline FiniteGroup group_G1() {
    int n = 16;
    auto idx = [](int i, int j) { return (((i % 8) + 8) % 8) * 2 + (j & 1); };
    std::vector<int> t(n * n);
    std::vector<std::string> lab(n);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 2; ++j) {
            std::ostringstream os;
            if (!i && !j) os << "1";
            if (i) os << "a" << (i > 1 ? "^" + std::to_string(i) : "");
            if (j) os << "b";
            lab[idx(i, j)] = os.str();
            for (int k = 0; k < 8; ++k)
                for (int l = 0; l < 2; ++l)
                    t[idx(i, j) * n + idx(k, l)] = idx(i + (j ? 5 * k : k), j + l);
        }
    return FiniteGroup(n, std::move(t), std::move(lab));
}

/// G5: <a,b | a^4 = b^4 = 1, aba^-1 = b^-1>. Index (i,j) -> a^i b^j.
inline FiniteGroup group_G5() {
    int n = 16;
    auto idx = [](int i, int j) { return (((i % 4) + 4) % 4) * 4 + (((j % 4) + 4) % 4); };
    std::vector<int> t(n * n);
    std::vector<std::string> lab(n);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::ostringstream os;
            if (!i && !j) os << "1";
            if (i) os << "a" << (i > 1 ? "^" + std::to_string(i) : "");
            if (j) os << "b" << (j > 1 ? "^" + std::to_string(j) : "");
            lab[idx(i, j)] = os.str();
            // (a^i b^j)(a^k b^l) = a^(i+k) b^((-1)^k j + l)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                    t[idx(i, j) * n + idx(k, l)] = idx(i + k, (k % 2 ? -j : j) + l);
        }
    return FiniteGroup(n, std::move(t), std::move(lab));
}

/// G6: <a,b,c | a^4 = b^2 = c^2 = 1, bab = ac, c central>. Index a^i b^j c^k.
inline FiniteGroup group_G6() {
    int n = 16;
    auto idx = [](int i, int j, int k) { return ((((i % 4) + 4) % 4) * 2 + (j & 1)) * 2 + (k & 1); };
    std::vector<int> t(n * n);
    std::vector<std::string> lab(n);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                std::ostringstream os;
                if (!i && !j && !k) os << "1";
                if (i) os << "a" << (i > 1 ? "^" + std::to_string(i) : "");
                if (j) os << "b";
                if (k) os << "c";
                lab[idx(i, j, k)] = os.str();
                // b a^m = a^m c^m b
                for (int m = 0; m < 4; ++m)
                    for (int nn = 0; nn < 2; ++nn)
                        for (int l = 0; l < 2; ++l)
                            t[idx(i, j, k) * n + idx(m, nn, l)] = idx(i + m, j + nn, k + l + j * m);
            }
    return FiniteGroup(n, std::move(t), std::move(lab));
}

/// G7: <a,b,c | a^4 = b^2 = c^2 = 1, a central, cbc = a^2 b>. Index a^i b^j c^k.
inline FiniteGroup group_G7() {
    int n = 16;
    auto idx = [](int i, int j, int k) { return ((((i % 4) + 4) % 4) * 2 + (j & 1)) * 2 + (k & 1); };
    std::vector<int> t(n * n);
    std::vector<std::string> lab(n);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                std::ostringstream os;
                if (!i && !j && !k) os << "1";
                if (i) os << "a" << (i > 1 ? "^" + std::to_string(i) : "");
                if (j) os << "b";
                if (k) os << "c";
                lab[idx(i, j, k)] = os.str();
                // c^k b^n = a^(2kn) b^n c^k
                for (int m = 0; m < 4; ++m)
                    for (int nn = 0; nn < 2; ++nn)
                        for (int l = 0; l < 2; ++l)
                            t[idx(i, j, k) * n + idx(m, nn, l)] = idx(i + m + 2 * k * nn, j + nn, k + l);
            }
    return FiniteGroup(n, std::move(t), std::move(lab));
}

inline FiniteGroup group_G2() { return semidihedral_group(16); }
inline FiniteGroup group_G3() { return dihedral_group(16); }
inline FiniteGroup group_G8() { return direct_product(dihedral_group(8), cyclic_group(2)); }

/// Parse a small group spec: "Z8", "Z4xZ2", "Z2^3", "D8", "D16", "Q8",
/// "Q16", "SD16", "G1".."G8", and x-products of these.
inline FiniteGroup parse_group_spec(const std::string& spec) {
    // split on 'x' but keep "x" inside no token (all tokens start with a letter)
    std::vector<std::string> parts;
    std::string cur;
    for (size_t i = 0; i < spec.size(); ++i) {
        char c = spec[i];
        if (c == ' ') continue;
        if ((c == 'x' || c == 'X') && !cur.empty() && std::isdigit(static_cast<unsigned char>(cur.back()))) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    if (parts.empty()) throw std::invalid_argument("parse_group_spec: empty spec");

    auto atom = [](const std::string& s) -> FiniteGroup {
        auto starts = [&](const char* p) { return s.rfind(p, 0) == 0; };
        if (starts("Z") || starts("C")) {
            std::string rest = s.substr(1);
            auto caret = rest.find('^');
            if (caret != std::string::npos) {
                int base = std::stoi(rest.substr(0, caret));
                int exp = std::stoi(rest.substr(caret + 1));
                FiniteGroup g = cyclic_group(base);
                for (int i = 1; i < exp; ++i) g = direct_product(g, cyclic_group(base));
                return g;
            }
            return cyclic_group(std::stoi(rest));
        }
        if (starts("SD")) return semidihedral_group(std::stoi(s.substr(2)));
        if (starts("D")) return dihedral_group(std::stoi(s.substr(1)));
        if (starts("Q")) return quaternion_group(std::stoi(s.substr(1)));
        if (starts("G")) {
            switch (std::stoi(s.substr(1))) {
                case 1: return group_G1();
                case 2: return group_G2();
                case 3: return group_G3();
                case 5: return group_G5();
                case 6: return group_G6();
                case 7: return group_G7();
                case 8: return group_G8();
                default: break;
            }
        }
        throw std::invalid_argument("parse_group_spec: unknown atom '" + s + "'");
    };

    FiniteGroup g = atom(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) g = direct_product(g, atom(parts[i]));
    return g;
}

} // namespace hopf16
