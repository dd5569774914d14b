#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopf16 {

/// Finite group of order <= 16 given by its Cayley table over element
/// indices. Presentations are constructors only; the table is the value.
class FiniteGroup {
public:
    static constexpr int max_order = 16;

    FiniteGroup() = default;

    FiniteGroup(int n, std::vector<int> table, std::vector<std::string> labels = {})
        : n_(n), table_(std::move(table)), labels_(std::move(labels)) {
        if (labels_.empty()) {
            labels_.resize(n_);
            for (int i = 0; i < n_; ++i) labels_[i] = "g" + std::to_string(i);
        }
        validate_();
    }

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[a * n_ + b]; }
    int identity() const { return id_; }
    int inverse(int a) const { return inv_[a]; }
    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& table() const { return table_; }

    int conjugate(int g, int a) const { return mul(mul(g, a), inverse(g)); }

    int power(int a, long e) const {
        long m = ((e % element_order(a)) + element_order(a)) % element_order(a);
        int r = id_;
        for (long i = 0; i < m; ++i) r = mul(r, a);
        return r;
    }

    int element_order(int a) const {
        int r = a, k = 1;
        while (r != id_) { r = mul(r, a); ++k; }
        return k;
    }

    int exponent() const {
        long e = 1;
        for (int a = 0; a < n_; ++a) e = std::lcm(e, static_cast<long>(element_order(a)));
        return static_cast<int>(e);
    }

    bool is_abelian() const {
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    std::vector<int> center() const {
        std::vector<int> z;
        for (int a = 0; a < n_; ++a) {
            bool central = true;
            for (int b = 0; b < n_ && central; ++b)
                if (mul(a, b) != mul(b, a)) central = false;
            if (central) z.push_back(a);
        }
        return z;
    }

    std::vector<int> order_spectrum() const {
        std::vector<int> s(n_);
        for (int a = 0; a < n_; ++a) s[a] = element_order(a);
        std::sort(s.begin(), s.end());
        return s;
    }

    /// Subgroup generated by the given elements, as a sorted element list.
    std::vector<int> generated_subgroup(const std::vector<int>& gens) const {
        std::vector<bool> in(n_, false);
        in[id_] = true;
        std::vector<int> work{id_};
        for (int g : gens)
            if (!in[g]) { in[g] = true; work.push_back(g); }
        bool grew = true;
        while (grew) {
            grew = false;
            for (size_t i = 0; i < work.size(); ++i)
                for (size_t j = 0; j < work.size(); ++j) {
                    int p = mul(work[i], work[j]);
                    if (!in[p]) { in[p] = true; work.push_back(p); grew = true; }
                }
        }
        std::vector<int> out;
        for (int a = 0; a < n_; ++a)
            if (in[a]) out.push_back(a);
        return out;
    }

    std::vector<int> commutator_subgroup() const {
        std::vector<int> comms;
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                comms.push_back(mul(mul(a, b), inverse(mul(b, a))));
        std::sort(comms.begin(), comms.end());
        comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
        return generated_subgroup(comms);
    }

    void relabel(std::vector<std::string> labels) { labels_ = std::move(labels); }

private:
    void validate_() {
        if (n_ <= 0 || n_ > max_order) throw std::invalid_argument("FiniteGroup: order out of range");
        if (static_cast<int>(table_.size()) != n_ * n_)
            throw std::invalid_argument("FiniteGroup: table size mismatch");
        for (int v : table_)
            if (v < 0 || v >= n_) throw std::invalid_argument("FiniteGroup: table entry out of range");
        // Latin square
        for (int a = 0; a < n_; ++a) {
            std::vector<bool> row(n_, false), col(n_, false);
            for (int b = 0; b < n_; ++b) {
                if (row[mul(a, b)]) throw std::invalid_argument("FiniteGroup: row not a permutation");
                row[mul(a, b)] = true;
                if (col[mul(b, a)]) throw std::invalid_argument("FiniteGroup: column not a permutation");
                col[mul(b, a)] = true;
            }
        }
        // identity
        id_ = -1;
        for (int e = 0; e < n_; ++e) {
            bool ok = true;
            for (int a = 0; a < n_ && ok; ++a)
                if (mul(e, a) != a || mul(a, e) != a) ok = false;
            if (ok) { id_ = e; break; }
        }
        if (id_ < 0) throw std::invalid_argument("FiniteGroup: no identity");
        // associativity, all n^3 triples
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw std::invalid_argument("FiniteGroup: not associative");
        // inverses
        inv_.assign(n_, -1);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (mul(a, b) == id_) { inv_[a] = b; break; }
        for (int a = 0; a < n_; ++a)
            if (inv_[a] < 0 || mul(inv_[a], a) != id_)
                throw std::invalid_argument("FiniteGroup: inverses inconsistent");
    }

    int n_ = 0;
    std::vector<int> table_;
    std::vector<std::string> labels_;
    std::vector<int> inv_;
    int id_ = 0;
};

/// Subgroup as a sorted element-index set within a parent group.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> elements; // sorted

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(int g) const {
        return std::binary_search(elements.begin(), elements.end(), g);
    }
    bool operator<(const Subgroup& o) const { return elements < o.elements; }
    bool operator==(const Subgroup& o) const { return elements == o.elements; }
};

inline Subgroup make_subgroup(const FiniteGroup& G, std::vector<int> gens) {
    return Subgroup{&G, G.generated_subgroup(gens)};
}

inline bool is_subgroup_set(const FiniteGroup& G, const std::vector<int>& sorted_elems) {
    auto has = [&](int g) { return std::binary_search(sorted_elems.begin(), sorted_elems.end(), g); };
    if (!has(G.identity())) return false;
    for (int a : sorted_elems) {
        if (!has(G.inverse(a))) return false;
        for (int b : sorted_elems)
            if (!has(G.mul(a, b))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// constructors

inline FiniteGroup cyclic_group(int n) {
    std::vector<int> t(n * n);
    std::vector<std::string> lab(n);
    for (int i = 0; i < n; ++i) {
        lab[i] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
        for (int j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
    }
    return FiniteGroup(n, std::move(t), std::move(lab));
}

inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
    int n = A.order() * B.order();
    std::vector<int> t(n * n);
    std::vector<std::string> lab(n);
    auto idx = [&](int a, int b) { return a * B.order() + b; };
    for (int a1 = 0; a1 < A.order(); ++a1)
        for (int b1 = 0; b1 < B.order(); ++b1) {
            lab[idx(a1, b1)] = "(" + A.label(a1) + "," + B.label(b1) + ")";
            for (int a2 = 0; a2 < A.order(); ++a2)
                for (int b2 = 0; b2 < B.order(); ++b2)
                    t[idx(a1, b1) * n + idx(a2, b2)] = idx(A.mul(a1, a2), B.mul(b1, b2));
        }
    return FiniteGroup(n, std::move(t), std::move(lab));
}

/// Dihedral group of the given order 2m (m >= 1): r^m = s^2 = 1, srs = r^-1.
/// Element index j*m + i stands for r^i s^j.
inline FiniteGroup dihedral_group(int order) {
    if (order < 2 || order % 2) throw std::invalid_argument("dihedral_group: order must be even");
    int m = order / 2, n = order;
    auto idx = [&](int i, int j) { return j * m + ((i % m) + m) % m; };
    std::vector<int> t(n * n);
    std::vector<std::string> lab(n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < 2; ++j) {
            lab[idx(i, j)] = std::string(i || j ? "" : "1");
            if (i) lab[idx(i, j)] += (i == 1 ? "r" : "r^" + std::to_string(i));
            if (j) lab[idx(i, j)] += "s";
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < 2; ++l)
                    t[idx(i, j) * n + idx(k, l)] = idx(j ? i - k : i + k, (j + l) % 2);
        }
    return FiniteGroup(n, std::move(t), std::move(lab));
}

/// Generalized quaternion (dicyclic) group of order 4m, m in {2,4}:
/// a^, b with a^(2m) = 1, b^2 = a^m, bab^-1 = a^-1. Index j*(2m)+i is a^i b^j.
inline FiniteGroup quaternion_group(int order) {
    if (order != 8 && order != 16) throw std::invalid_argument("quaternion_group: order must be 8 or 16");
    int m = order / 4, two_m = 2 * m, n = order;
    auto idx = [&](int i, int j) { return j * two_m + ((i % two_m) + two_m) % two_m; };
    std::vector<int> t(n * n);
    std::vector<std::string> lab(n);
    for (int i = 0; i < two_m; ++i)
        for (int j = 0; j < 2; ++j) {
            lab[idx(i, j)] = std::string(i || j ? "" : "1");
            if (i) lab[idx(i, j)] += (i == 1 ? "a" : "a^" + std::to_string(i));
            if (j) lab[idx(i, j)] += "b";
            for (int k = 0; k < two_m; ++k)
                for (int l = 0; l < 2; ++l) {
                    // (a^i b^j)(a^k b^l): b a^k = a^-k b; b^2 = a^m
                    int ii = j ? i - k : i + k;
                    int jj = j + l;
                    if (jj == 2) { ii += m; jj = 0; }
                    t[idx(i, j) * n + idx(k, l)] = idx(ii, jj);
                }
        }
    return FiniteGroup(n, std::move(t), std::move(lab));
}

/// Semidihedral group of order 16: r^8 = s^2 = 1, srs = r^3.
inline FiniteGroup semidihedral_group(int order = 16) {
    if (order != 16) throw std::invalid_argument("semidihedral_group: only order 16 supported");
    int m = 8, n = 16;
    auto idx = [&](int i, int j) { return j * m + ((i % m) + m) % m; };
    std::vector<int> t(n * n);
    std::vector<std::string> lab(n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < 2; ++j) {
            lab[idx(i, j)] = std::string(i || j ? "" : "1");
            if (i) lab[idx(i, j)] += (i == 1 ? "r" : "r^" + std::to_string(i));
            if (j) lab[idx(i, j)] += "s";
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < 2; ++l)
                    t[idx(i, j) * n + idx(k, l)] = idx(j ? i + 3 * k : i + k, (j + l) % 2);
        }
    return FiniteGroup(n, std::move(t), std::move(lab));
}

/// Semidirect product N x| H, where phi maps each h in H to a permutation of
/// N's elements that is an automorphism ("h acts on n"). Element (n, h).
inline FiniteGroup semidirect_product(const FiniteGroup& N, const FiniteGroup& H,
                                      const std::vector<std::vector<int>>& phi) {
    int n = N.order() * H.order();
    for (int h = 0; h < H.order(); ++h)
        for (int a = 0; a < N.order(); ++a)
            for (int b = 0; b < N.order(); ++b)
                if (phi[h][N.mul(a, b)] != N.mul(phi[h][a], phi[h][b]))
                    throw std::invalid_argument("semidirect_product: phi[h] is not an automorphism");
    auto idx = [&](int a, int h) { return a * H.order() + h; };
    std::vector<int> t(n * n);
    std::vector<std::string> lab(n);
    for (int a = 0; a < N.order(); ++a)
        for (int h = 0; h < H.order(); ++h) {
            lab[idx(a, h)] = "(" + N.label(a) + "," + H.label(h) + ")";
            for (int b = 0; b < N.order(); ++b)
                for (int k = 0; k < H.order(); ++k)
                    t[idx(a, h) * n + idx(b, k)] = idx(N.mul(a, phi[h][b]), H.mul(h, k));
        }
    return FiniteGroup(n, std::move(t), std::move(lab));
}

/// Automorphism of G (as a permutation) from images of a generating set.
/// Throws if the assignment does not extend.
inline std::vector<int> automorphism_from_generators(const FiniteGroup& G,
                                                     const std::vector<int>& gens,
                                                     const std::vector<int>& images) {
    std::vector<int> map(G.order(), -1);
    map[G.identity()] = G.identity();
    std::vector<int> known{G.identity()};
    for (size_t i = 0; i < gens.size(); ++i) {
        if (map[gens[i]] >= 0 && map[gens[i]] != images[i])
            throw std::invalid_argument("automorphism_from_generators: inconsistent images");
        map[gens[i]] = images[i];
        known.push_back(gens[i]);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        size_t sz = known.size();
        for (size_t i = 0; i < sz; ++i)
            for (size_t j = 0; j < sz; ++j) {
                int p = G.mul(known[i], known[j]);
                int im = G.mul(map[known[i]], map[known[j]]);
                if (map[p] < 0) {
                    map[p] = im;
                    known.push_back(p);
                    grew = true;
                } else if (map[p] != im) {
                    throw std::invalid_argument("automorphism_from_generators: not a homomorphism");
                }
            }
    }
    for (int a = 0; a < G.order(); ++a)
        if (map[a] < 0) throw std::invalid_argument("automorphism_from_generators: generators do not generate");
    std::vector<bool> seen(G.order(), false);
    for (int a = 0; a < G.order(); ++a) {
        if (seen[map[a]]) throw std::invalid_argument("automorphism_from_generators: not bijective");
        seen[map[a]] = true;
    }
    return map;
}

// ---------------------------------------------------------------------------
// subgroup enumeration

/// All subgroups, each as a sorted element list; deterministic order
/// (lexicographic on element sets).
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
    std::set<std::vector<int>> found;
    found.insert({G.identity()});
    std::vector<std::vector<int>> work{{G.identity()}};
    while (!work.empty()) {
        auto S = work.back();
        work.pop_back();
        for (int g = 0; g < G.order(); ++g) {
            if (std::binary_search(S.begin(), S.end(), g)) continue;
            auto gens = S;
            gens.push_back(g);
            auto T = G.generated_subgroup(gens);
            if (found.insert(T).second) work.push_back(T);
        }
    }
    std::vector<Subgroup> out;
    for (const auto& s : found) out.push_back(Subgroup{&G, s});
    return out;
}

inline std::vector<Subgroup> subgroups_of_order(const FiniteGroup& G, int k) {
    if (k <= 0 || G.order() % k != 0)
        throw std::invalid_argument("subgroups_of_order: k must divide |G|");
    std::vector<Subgroup> out;
    for (auto& s : all_subgroups(G))
        if (s.order() == k) out.push_back(s);
    return out;
}

struct ConjugacyInfo {
    std::vector<Subgroup> orbit;
    Subgroup normalizer;
    bool is_normal = false;
};

inline ConjugacyInfo conjugacy_and_normality(const FiniteGroup& G, const Subgroup& L) {
    std::set<std::vector<int>> orbit;
    std::vector<int> normalizer;
    for (int g = 0; g < G.order(); ++g) {
        std::vector<int> conj;
        conj.reserve(L.elements.size());
        for (int a : L.elements) conj.push_back(G.conjugate(g, a));
        std::sort(conj.begin(), conj.end());
        if (conj == L.elements) normalizer.push_back(g);
        orbit.insert(std::move(conj));
    }
    ConjugacyInfo info;
    for (const auto& s : orbit) info.orbit.push_back(Subgroup{&G, s});
    info.normalizer = Subgroup{&G, normalizer};
    info.is_normal = info.orbit.size() == 1;
    return info;
}

// ---------------------------------------------------------------------------
// isomorphism testing

namespace detail {

inline std::vector<int> greedy_generators(const FiniteGroup& G) {
    std::vector<int> gens;
    std::vector<int> span{G.identity()};
    while (static_cast<int>(span.size()) < G.order()) {
        // pick the highest-order element outside the current span
        int best = -1, best_ord = 0;
        for (int a = 0; a < G.order(); ++a) {
            if (std::binary_search(span.begin(), span.end(), a)) continue;
            int o = G.element_order(a);
            if (o > best_ord) { best = a; best_ord = o; }
        }
        gens.push_back(best);
        span = G.generated_subgroup(gens);
    }
    return gens;
}

inline bool extend_iso(const FiniteGroup& G, const FiniteGroup& H, std::vector<int>& map) {
    // close the partial map under products; false on conflict
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = 0; a < G.order(); ++a) {
            if (map[a] < 0) continue;
            for (int b = 0; b < G.order(); ++b) {
                if (map[b] < 0) continue;
                int p = G.mul(a, b);
                int im = H.mul(map[a], map[b]);
                if (map[p] < 0) { map[p] = im; grew = true; }
                else if (map[p] != im) return false;
            }
        }
    }
    return true;
}

inline bool iso_backtrack(const FiniteGroup& G, const FiniteGroup& H,
                          const std::vector<int>& gens, size_t pos, std::vector<int>& map) {
    if (pos == gens.size()) {
        std::vector<bool> seen(H.order(), false);
        for (int a = 0; a < G.order(); ++a) {
            if (map[a] < 0) return false;
            if (seen[map[a]]) return false;
            seen[map[a]] = true;
        }
        return true;
    }
    int g = gens[pos];
    int og = G.element_order(g);
    for (int h = 0; h < H.order(); ++h) {
        if (H.element_order(h) != og) continue;
        auto saved = map;
        map[g] = h;
        if (extend_iso(G, H, map) && iso_backtrack(G, H, gens, pos + 1, map)) return true;
        map = saved;
    }
    return false;
}

} // namespace detail

/// Explicit isomorphism G -> H (element map) or nullopt. Invariant pruning
/// first, then generator-image backtracking with closure propagation.
inline std::optional<std::vector<int>> are_isomorphic(const FiniteGroup& G, const FiniteGroup& H) {
    if (G.order() != H.order()) return std::nullopt;
    if (G.order_spectrum() != H.order_spectrum()) return std::nullopt;
    if (G.center().size() != H.center().size()) return std::nullopt;
    if (G.is_abelian() != H.is_abelian()) return std::nullopt;

    auto gens = detail::greedy_generators(G);
    std::vector<int> map(G.order(), -1);
    map[G.identity()] = H.identity();
    if (!detail::iso_backtrack(G, H, gens, 0, map)) return std::nullopt;
    // verify elementwise against both tables
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            if (map[G.mul(a, b)] != H.mul(map[a], map[b]))
                throw std::logic_error("are_isomorphic: verification failed");
    return map;
}

/// The subgroup as a group of its own, plus the index maps in both directions.
struct SubgroupGroup {
    FiniteGroup group;
    std::vector<int> to_parent;       // sub index -> parent index
    std::vector<int> from_parent;     // parent index -> sub index or -1
};

inline SubgroupGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& L) {
    int m = L.order();
    std::vector<int> from(G.order(), -1);
    for (int i = 0; i < m; ++i) from[L.elements[i]] = i;
    std::vector<int> t(m * m);
    std::vector<std::string> lab(m);
    for (int i = 0; i < m; ++i) {
        lab[i] = G.label(L.elements[i]);
        for (int j = 0; j < m; ++j) {
            int p = G.mul(L.elements[i], L.elements[j]);
            if (from[p] < 0) throw std::invalid_argument("subgroup_as_group: set not closed");
            t[i * m + j] = from[p];
        }
    }
    return SubgroupGroup{FiniteGroup(m, std::move(t), std::move(lab)), L.elements, std::move(from)};
}

} // namespace hopf16
