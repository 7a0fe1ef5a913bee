#pragma once

// The constructor grammar: recursive recipes that compile to element tables.
// Ring specs and module recipes are the external JSON interface; the
// provenance of every built object is its spec.

#include <array>
#include <cstdlib>
#include <string>
#include <vector>

#include "baerlab/module.hpp"
#include "baerlab/ring.hpp"

namespace baerlab {

namespace detail {

inline void check_cap(long long order, int cap, const char* what) {
    if (order > cap) throw CapExceeded(std::string(what) + ": order " + std::to_string(order) +
                                       " exceeds cap " + std::to_string(cap));
}

struct MixedRadix {
    std::vector<int> radix;
    long long total = 1;
    explicit MixedRadix(std::vector<int> r) : radix(std::move(r)) {
        for (int x : radix) total *= x;
    }
    std::vector<int> digits(long long idx) const {
        std::vector<int> d(radix.size());
        for (int i = (int)radix.size() - 1; i >= 0; --i) {
            d[i] = (int)(idx % radix[i]);
            idx /= radix[i];
        }
        return d;
    }
    long long index(const std::vector<int>& d) const {
        long long idx = 0;
        for (size_t i = 0; i < radix.size(); ++i) idx = idx * radix[i] + d[i];
        return idx;
    }
};

}  // namespace detail

inline FiniteRing zmod(int n) {
    if (n <= 0) throw InvalidSpec("zmod requires n >= 1");
    FiniteRing R;
    R.order = n;
    R.add_tab.resize(n * n);
    R.mul_tab.resize(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            R.add_tab[a * n + b] = (a + b) % n;
            R.mul_tab[a * n + b] = (a * b) % n;
        }
    R.zero = 0;
    R.one = n == 1 ? 0 : 1;
    R.provenance = json{{"kind", "zmod"}, {"n", n}};
    R.derive_neg();
    return R;
}

inline FiniteRing prime_field(int p) {
    if (p < 2) throw InvalidSpec("prime_field requires a prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw InvalidSpec("prime_field: " + std::to_string(p) + " is not prime");
    FiniteRing R = zmod(p);
    R.provenance = json{{"kind", "prime_field"}, {"p", p}};
    return R;
}

inline FiniteRing product_ring(const std::vector<FiniteRing>& factors, int cap = kDefaultOrderCap) {
    if (factors.empty()) throw InvalidSpec("product of no factors");
    std::vector<int> radix;
    for (const auto& f : factors) radix.push_back(f.order);
    detail::MixedRadix mr(radix);
    detail::check_cap(mr.total, cap, "product");
    const int n = (int)mr.total;
    FiniteRing R;
    R.order = n;
    R.add_tab.resize((size_t)n * n);
    R.mul_tab.resize((size_t)n * n);
    for (int a = 0; a < n; ++a) {
        auto da = mr.digits(a);
        for (int b = 0; b < n; ++b) {
            auto db = mr.digits(b);
            std::vector<int> ds(factors.size()), dp(factors.size());
            for (size_t i = 0; i < factors.size(); ++i) {
                ds[i] = factors[i].add(da[i], db[i]);
                dp[i] = factors[i].mul(da[i], db[i]);
            }
            R.add_tab[(size_t)a * n + b] = (int)mr.index(ds);
            R.mul_tab[(size_t)a * n + b] = (int)mr.index(dp);
        }
    }
    std::vector<int> dz(factors.size()), du(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) {
        dz[i] = factors[i].zero;
        du[i] = factors[i].one;
    }
    R.zero = (int)mr.index(dz);
    R.one = (int)mr.index(du);
    json prov = json::array();
    for (const auto& f : factors) prov.push_back(f.provenance);
    R.provenance = json{{"kind", "product"}, {"factors", prov}};
    R.derive_neg();
    return R;
}

namespace detail {

/// Generic matrix-shaped ring over `base`: positions lists the (row,col)
/// slots that may be nonzero (full square or upper triangle).
inline FiniteRing matrix_shape_ring(int k, const FiniteRing& base,
                                    const std::vector<std::pair<int, int>>& positions, json provenance,
                                    int cap) {
    const int m = (int)positions.size();
    MixedRadix mr(std::vector<int>(m, base.order));
    check_cap(mr.total, cap, "matrix ring");
    const int n = (int)mr.total;
    std::vector<std::vector<int>> slot(k, std::vector<int>(k, -1));
    for (int i = 0; i < m; ++i) slot[positions[i].first][positions[i].second] = i;
    FiniteRing R;
    R.order = n;
    R.add_tab.resize((size_t)n * n);
    R.mul_tab.resize((size_t)n * n);
    auto entry = [&](const std::vector<int>& d, int i, int j) {
        int s = slot[i][j];
        return s < 0 ? base.zero : d[s];
    };
    for (int a = 0; a < n; ++a) {
        auto da = mr.digits(a);
        for (int b = 0; b < n; ++b) {
            auto db = mr.digits(b);
            std::vector<int> ds(m), dp(m);
            for (int s = 0; s < m; ++s) ds[s] = base.add(da[s], db[s]);
            for (int s = 0; s < m; ++s) {
                auto [i, j] = positions[s];
                int acc = base.zero;
                for (int t = 0; t < k; ++t) acc = base.add(acc, base.mul(entry(da, i, t), entry(db, t, j)));
                dp[s] = acc;
            }
            R.add_tab[(size_t)a * n + b] = (int)mr.index(ds);
            R.mul_tab[(size_t)a * n + b] = (int)mr.index(dp);
        }
    }
    std::vector<int> dz(m, base.zero), du(m, base.zero);
    for (int s = 0; s < m; ++s)
        if (positions[s].first == positions[s].second) du[s] = base.one;
    R.zero = (int)mr.index(dz);
    R.one = (int)mr.index(du);
    R.provenance = std::move(provenance);
    R.derive_neg();
    return R;
}

}  // namespace detail

inline FiniteRing matrix_ring(int k, const FiniteRing& base, int cap = kDefaultOrderCap) {
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) pos.emplace_back(i, j);
    return detail::matrix_shape_ring(k, base, pos, json{{"kind", "matrix"}, {"k", k}, {"base", base.provenance}},
                                     cap);
}

inline FiniteRing upper_triangular_ring(int k, const FiniteRing& base, int cap = kDefaultOrderCap) {
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) pos.emplace_back(i, j);
    return detail::matrix_shape_ring(
        k, base, pos, json{{"kind", "upper_triangular"}, {"k", k}, {"base", base.provenance}}, cap);
}

/// a = k·1 decomposition: multiplicity of 1 giving each ring element, if the
/// additive group is generated by 1. Used for the canonical left action of a
/// Zmod-like ring on any abelian group.
inline std::optional<std::vector<int>> unit_multiplicities(const FiniteRing& A) {
    std::vector<int> mult(A.order, -1);
    int x = A.zero;
    for (int k = 0; k < A.order; ++k) {
        if (mult[x] < 0) mult[x] = k;
        x = A.add(x, A.one);
    }
    for (int m : mult)
        if (m < 0) return std::nullopt;
    return mult;
}

/// Left action table of A on the elements of a module M, a·m = (k copies of m)
/// where a = k·1 in A. Fails when A is not additively generated by 1.
inline std::vector<int> canonical_left_action(const FiniteRing& A, const FiniteModule& M) {
    auto mult = unit_multiplicities(A);
    if (!mult) throw InvalidSpec("no canonical left action: ring is not additively generated by 1");
    std::vector<int> tab((size_t)A.order * M.order);
    for (int a = 0; a < A.order; ++a)
        for (int m = 0; m < M.order; ++m) {
            int acc = M.zero;
            for (int i = 0; i < (*mult)[a]; ++i) acc = M.add(acc, m);
            tab[(size_t)a * M.order + m] = acc;
        }
    return tab;
}

/// Generalized triangular matrix ring with A in the corner, C in the other
/// corner and bimodule B between them: elements (a, m, c), lexicographic.
/// `left_act` is |A| x |B| and must commute with the right C-action.
inline FiniteRing gen_triangular_ring(const FiniteRing& A, const FiniteRing& C, const FiniteModule& B,
                                      const std::vector<int>& left_act, int cap = kDefaultOrderCap) {
    if (B.ring->order != C.order || B.ring->mul_tab != C.mul_tab || B.ring->add_tab != C.add_tab)
        throw InvalidSpec("gen_triangular: bimodule is not a module over C");
    if ((int)left_act.size() != A.order * B.order) throw InvalidSpec("gen_triangular: left action shape");
    auto la = [&](int a, int m) { return left_act[(size_t)a * B.order + m]; };
    // bimodule axioms for the left action
    for (int m = 0; m < B.order; ++m)
        if (la(A.one, m) != m) throw InvalidSpec("gen_triangular: left action not unital");
    for (int a = 0; a < A.order; ++a)
        for (int b = 0; b < A.order; ++b)
            for (int m = 0; m < B.order; ++m) {
                if (la(A.mul(a, b), m) != la(a, la(b, m)))
                    throw InvalidSpec("gen_triangular: left action not associative");
                if (la(A.add(a, b), m) != B.add(la(a, m), la(b, m)))
                    throw InvalidSpec("gen_triangular: left action not additive");
            }
    for (int a = 0; a < A.order; ++a)
        for (int m = 0; m < B.order; ++m) {
            for (int n = 0; n < B.order; ++n)
                if (la(a, B.add(m, n)) != B.add(la(a, m), la(a, n)))
                    throw InvalidSpec("gen_triangular: left action not additive in the module");
            for (int c = 0; c < C.order; ++c)
                if (la(a, B.act(m, c)) != B.act(la(a, m), c))
                    throw InvalidSpec("gen_triangular: left action does not commute with the right C-action");
        }
    detail::MixedRadix mr({A.order, B.order, C.order});
    detail::check_cap(mr.total, cap, "gen_triangular");
    const int n = (int)mr.total;
    FiniteRing R;
    R.order = n;
    R.add_tab.resize((size_t)n * n);
    R.mul_tab.resize((size_t)n * n);
    for (int x = 0; x < n; ++x) {
        auto dx = mr.digits(x);
        for (int y = 0; y < n; ++y) {
            auto dy = mr.digits(y);
            R.add_tab[(size_t)x * n + y] =
                (int)mr.index({A.add(dx[0], dy[0]), B.add(dx[1], dy[1]), C.add(dx[2], dy[2])});
            R.mul_tab[(size_t)x * n + y] =
                (int)mr.index({A.mul(dx[0], dy[0]), B.add(la(dx[0], dy[1]), B.act(dx[1], dy[2])),
                               C.mul(dx[2], dy[2])});
        }
    }
    R.zero = (int)mr.index({A.zero, B.zero, C.zero});
    R.one = (int)mr.index({A.one, B.zero, C.one});
    R.provenance = json{{"kind", "gen_triangular"},
                        {"a", A.provenance},
                        {"c", C.provenance},
                        {"bimodule", B.provenance}};
    R.derive_neg();
    return R;
}

/// A generalized triangular ring together with its block data, for the
/// case-analysis operations that need to read elements as (a, m, c).
struct GenTriangular {
    FiniteRing A, C;
    FiniteModule B;
    std::vector<int> left_act;
    FiniteRing ring;

    int left(int a, int m) const { return left_act[(size_t)a * B.order + m]; }
    std::array<int, 3> parts(int x) const {
        int c = x % C.order;
        x /= C.order;
        return {x / B.order, x % B.order, c};
    }
    int compose(int a, int m, int c) const { return (a * B.order + m) * C.order + c; }
};

inline GenTriangular make_gen_triangular(FiniteRing A, FiniteRing C, FiniteModule B,
                                         std::vector<int> left_act, int cap = kDefaultOrderCap) {
    GenTriangular G;
    G.ring = gen_triangular_ring(A, C, B, left_act, cap);
    G.A = std::move(A);
    G.C = std::move(C);
    G.B = std::move(B);
    G.left_act = std::move(left_act);
    return G;
}

inline FiniteRing quotient_ring(const FiniteRing& R, const IndexSet& generators) {
    IndexSet I = two_sided_ideal_closure(R, generators);
    std::vector<int> rep(R.order, -1);
    for (int a = 0; a < R.order; ++a) {
        if (rep[a] >= 0) continue;
        int least = a;
        std::vector<int> coset;
        for (int i : I) coset.push_back(R.add(a, i));
        for (int x : coset) least = std::min(least, x);
        for (int x : coset) rep[x] = least;
    }
    IndexSet reps;
    for (int a = 0; a < R.order; ++a)
        if (rep[a] == a) reps.push_back(a);
    const int n = (int)reps.size();
    std::vector<int> pos(R.order, -1);
    for (int i = 0; i < n; ++i) pos[reps[i]] = i;
    FiniteRing Q;
    Q.order = n;
    Q.add_tab.resize(n * n);
    Q.mul_tab.resize(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Q.add_tab[i * n + j] = pos[rep[R.add(reps[i], reps[j])]];
            Q.mul_tab[i * n + j] = pos[rep[R.mul(reps[i], reps[j])]];
        }
    Q.zero = pos[rep[R.zero]];
    Q.one = pos[rep[R.one]];
    Q.provenance = json{{"kind", "quotient"}, {"base", R.provenance}, {"generators", generators}};
    Q.derive_neg();
    return Q;
}

inline FiniteRing subring_generated(const FiniteRing& R, const IndexSet& generators) {
    IndexSet seed = generators;
    seed.push_back(R.zero);
    seed.push_back(R.one);
    IndexSet members = close_under(make_set(std::move(seed)),
                                   {[&R](int a, int b) { return R.add(a, b); },
                                    [&R](int a, int b) { return R.mul(a, b); }},
                                   {});
    const int n = (int)members.size();
    std::vector<int> pos(R.order, -1);
    for (int i = 0; i < n; ++i) pos[members[i]] = i;
    FiniteRing S;
    S.order = n;
    S.add_tab.resize(n * n);
    S.mul_tab.resize(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            S.add_tab[i * n + j] = pos[R.add(members[i], members[j])];
            S.mul_tab[i * n + j] = pos[R.mul(members[i], members[j])];
        }
    S.zero = pos[R.zero];
    S.one = pos[R.one];
    S.provenance = json{{"kind", "subring_generated"}, {"base", R.provenance}, {"generators", generators}};
    S.derive_neg();
    return S;
}

/// Trivial extension R ⋉ M: pairs (r, m) with (r,m)(r',m') = (rr', rm' + mr').
inline FiniteRing trivial_extension(const FiniteRing& R, const FiniteModule& M,
                                    const std::vector<int>& left_act, int cap = kDefaultOrderCap) {
    if (M.ring->order != R.order || M.ring->mul_tab != R.mul_tab)
        throw InvalidSpec("trivial_extension: module is not over the base ring");
    auto la = [&](int r, int m) { return left_act[(size_t)r * M.order + m]; };
    detail::MixedRadix mr({R.order, M.order});
    detail::check_cap(mr.total, cap, "trivial_extension");
    const int n = (int)mr.total;
    FiniteRing T;
    T.order = n;
    T.add_tab.resize((size_t)n * n);
    T.mul_tab.resize((size_t)n * n);
    for (int x = 0; x < n; ++x) {
        auto dx = mr.digits(x);
        for (int y = 0; y < n; ++y) {
            auto dy = mr.digits(y);
            T.add_tab[(size_t)x * n + y] = (int)mr.index({R.add(dx[0], dy[0]), M.add(dx[1], dy[1])});
            T.mul_tab[(size_t)x * n + y] =
                (int)mr.index({R.mul(dx[0], dy[0]), M.add(la(dx[0], dy[1]), M.act(dx[1], dy[0]))});
        }
    }
    T.zero = (int)mr.index({R.zero, M.zero});
    T.one = (int)mr.index({R.one, M.zero});
    T.provenance = json{{"kind", "trivial_extension"}, {"base", R.provenance}, {"module", M.provenance}};
    T.derive_neg();
    T.audit();  // catches non-commuting left/right actions
    return T;
}

// ---------------------------------------------------------------------------
// JSON front end
// ---------------------------------------------------------------------------

FiniteRing build_ring(const json& spec, int cap);
FiniteModule build_module(RingPtr R, const json& recipe, int cap);

inline FiniteModule build_bimodule_over(const FiniteRing& C, const json& spec, int cap,
                                        std::vector<int>& left_act_out, const FiniteRing& A) {
    auto Cptr = std::make_shared<FiniteRing>(C);
    std::string kind = spec.value("kind", "");
    if (kind == "zero") {
        FiniteModule M = zero_module(Cptr);
        left_act_out.assign((size_t)A.order * M.order, M.zero);
        return M;
    }
    if (kind == "column") {
        // C^k with A = C acting entrywise on the left
        if (A.order != C.order || A.mul_tab != C.mul_tab || A.add_tab != C.add_tab)
            throw InvalidSpec("column bimodule requires A = C");
        int copies = spec.value("copies", 1);
        std::vector<FiniteModule> parts(copies, regular_module(Cptr));
        FiniteModule M = copies == 1 ? parts[0] : direct_sum(parts, cap);
        detail::MixedRadix mr(std::vector<int>(copies, C.order));
        left_act_out.resize((size_t)A.order * M.order);
        for (int a = 0; a < A.order; ++a)
            for (int m = 0; m < M.order; ++m) {
                auto d = mr.digits(m);
                for (auto& x : d) x = C.mul(a, x);
                left_act_out[(size_t)a * M.order + m] = (int)mr.index(d);
            }
        return M;
    }
    if (kind == "module") {
        FiniteModule M = build_module(Cptr, spec.at("spec"), cap);
        if (spec.contains("left_action")) {
            left_act_out.clear();
            for (const auto& row : spec.at("left_action"))
                for (const auto& x : row) left_act_out.push_back(x.get<int>());
        } else {
            left_act_out = canonical_left_action(A, M);
        }
        return M;
    }
    throw InvalidSpec("unknown bimodule kind: " + kind);
}

inline FiniteRing build_ring(const json& spec, int cap = kDefaultOrderCap) {
    if (!spec.is_object() || !spec.contains("kind")) throw InvalidSpec("ring spec must be an object with a kind");
    std::string kind = spec.at("kind").get<std::string>();
    if (kind == "zmod") {
        int n = spec.at("n").get<int>();
        detail::check_cap(n, cap, "zmod");
        return zmod(n);
    }
    if (kind == "prime_field") {
        int p = spec.at("p").get<int>();
        detail::check_cap(p, cap, "prime_field");
        return prime_field(p);
    }
    if (kind == "product") {
        std::vector<FiniteRing> factors;
        for (const auto& f : spec.at("factors")) factors.push_back(build_ring(f, cap));
        return product_ring(factors, cap);
    }
    if (kind == "matrix") return matrix_ring(spec.at("k").get<int>(), build_ring(spec.at("base"), cap), cap);
    if (kind == "upper_triangular")
        return upper_triangular_ring(spec.at("k").get<int>(), build_ring(spec.at("base"), cap), cap);
    if (kind == "gen_triangular") {
        FiniteRing A = build_ring(spec.at("a"), cap);
        FiniteRing C = build_ring(spec.at("c"), cap);
        std::vector<int> left_act;
        FiniteModule B = build_bimodule_over(C, spec.at("bimodule"), cap, left_act, A);
        return gen_triangular_ring(A, C, B, left_act, cap);
    }
    if (kind == "quotient")
        return quotient_ring(build_ring(spec.at("base"), cap), spec.at("generators").get<IndexSet>());
    if (kind == "subring_generated")
        return subring_generated(build_ring(spec.at("base"), cap), spec.at("generators").get<IndexSet>());
    if (kind == "trivial_extension") {
        FiniteRing R = build_ring(spec.at("base"), cap);
        auto Rptr = std::make_shared<FiniteRing>(R);
        FiniteModule M = build_module(Rptr, spec.at("module"), cap);
        std::vector<int> left_act;
        if (spec.contains("left_action")) {
            for (const auto& row : spec.at("left_action"))
                for (const auto& x : row) left_act.push_back(x.get<int>());
        } else {
            left_act = canonical_left_action(R, M);
        }
        return trivial_extension(R, M, left_act, cap);
    }
    if (kind == "table") {
        std::vector<int> add_tab, mul_tab;
        for (const auto& row : spec.at("add"))
            for (const auto& x : row) add_tab.push_back(x.get<int>());
        for (const auto& row : spec.at("mul"))
            for (const auto& x : row) mul_tab.push_back(x.get<int>());
        detail::check_cap((long long)spec.at("add").size(), cap, "table");
        FiniteRing R = FiniteRing::from_tables(std::move(add_tab), std::move(mul_tab), spec);
        return R;
    }
    if (kind == "opposite") return opposite(build_ring(spec.at("base"), cap));
    throw InvalidSpec("unknown ring kind: " + kind);
}

inline FiniteModule build_module(RingPtr R, const json& recipe, int cap = kDefaultOrderCap) {
    if (!recipe.is_object() || !recipe.contains("kind"))
        throw InvalidSpec("module recipe must be an object with a kind");
    std::string kind = recipe.at("kind").get<std::string>();
    if (kind == "regular") return regular_module(R);
    if (kind == "zero") return zero_module(R);
    if (kind == "idempotent_piece") return idempotent_piece(R, recipe.at("e").get<int>());
    if (kind == "quotient") {
        FiniteModule base = recipe.contains("of") ? build_module(R, recipe.at("of"), cap) : regular_module(R);
        IndexSet sub = submodule_closure(base, recipe.at("sub").get<IndexSet>());
        return quotient_module(base, sub);
    }
    if (kind == "cyclic") {
        FiniteModule base = recipe.contains("of") ? build_module(R, recipe.at("of"), cap) : regular_module(R);
        return cyclic_module(base, recipe.at("m").get<int>());
    }
    if (kind == "submodule_generated") {
        FiniteModule base = recipe.contains("of") ? build_module(R, recipe.at("of"), cap) : regular_module(R);
        return submodule_generated(base, recipe.at("gens").get<IndexSet>());
    }
    if (kind == "direct_sum") {
        std::vector<FiniteModule> parts;
        for (const auto& p : recipe.at("parts")) parts.push_back(build_module(R, p, cap));
        return direct_sum(parts, cap);
    }
    if (kind == "table") {
        std::vector<int> add_tab, act_tab;
        for (const auto& row : recipe.at("add"))
            for (const auto& x : row) add_tab.push_back(x.get<int>());
        for (const auto& row : recipe.at("act"))
            for (const auto& x : row) act_tab.push_back(x.get<int>());
        detail::check_cap((long long)recipe.at("add").size(), cap, "module table");
        return module_from_tables(R, std::move(add_tab), std::move(act_tab), recipe);
    }
    throw InvalidSpec("unknown module kind: " + kind);
}

inline GenTriangular build_gen_triangular(const json& spec, int cap = kDefaultOrderCap) {
    if (spec.value("kind", "") == "upper_triangular" && spec.value("k", 0) == 2) {
        // T_2(base) as the gen-triangular bundle (A = C = base, B = base)
        FiniteRing base = build_ring(spec.at("base"), cap);
        json gt{{"kind", "gen_triangular"},
                {"a", base.provenance},
                {"c", base.provenance},
                {"bimodule", json{{"kind", "column"}, {"copies", 1}}}};
        return build_gen_triangular(gt, cap);
    }
    if (spec.value("kind", "") != "gen_triangular") throw InvalidSpec("not a gen_triangular spec");
    FiniteRing A = build_ring(spec.at("a"), cap);
    FiniteRing C = build_ring(spec.at("c"), cap);
    std::vector<int> la;
    FiniteModule B = build_bimodule_over(C, spec.at("bimodule"), cap, la, A);
    return make_gen_triangular(std::move(A), std::move(C), std::move(B), std::move(la), cap);
}

}  // namespace baerlab
