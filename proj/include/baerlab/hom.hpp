#pragma once

// Hom-set enumeration by generator images, endomorphism rings, and the
// endomorphism-side Baer/Rickart predicates.

#include <map>
#include <vector>

#include "baerlab/module.hpp"
#include "baerlab/verdict.hpp"

namespace baerlab {

inline constexpr long long kDefaultHomCap = 1 << 21;

/// Greedy minimal generating set (largest span first, least index on ties),
/// then exhaustive confirmation that no smaller set generates, within a
/// combination budget.
inline IndexSet minimal_generating_set(const FiniteModule& M, long long confirm_budget = 1 << 18) {
    if (M.order == 1) return {};
    IndexSet gens;
    IndexSet span{M.zero};
    while ((int)span.size() < M.order) {
        int best = -1;
        size_t best_size = span.size();
        for (int x = 0; x < M.order; ++x) {
            if (set_contains(span, x)) continue;
            size_t sz = submodule_closure(M, set_union(span, IndexSet{x})).size();
            if (sz > best_size) {
                best_size = sz;
                best = x;
            }
        }
        gens.push_back(best);
        span = submodule_closure(M, set_union(span, IndexSet{best}));
    }
    // exhaustive confirmation for one size down; smaller sizes follow a fortiori
    const int g = (int)gens.size();
    for (int k = g - 1; k >= 1; --k) {
        long long combos = 1;
        for (int i = 0; i < k; ++i) combos *= M.order;
        if (combos > confirm_budget) break;
        bool found = false;
        std::vector<int> idx(k, 0);
        while (true) {
            IndexSet cand(idx.begin(), idx.end());
            if (submodule_closure(M, std::move(cand)).size() == (size_t)M.order) {
                found = true;
                break;
            }
            int i = k - 1;
            while (i >= 0 && ++idx[i] == M.order) idx[i--] = 0;
            if (i < 0) break;
        }
        if (!found) break;
        // a smaller generating set exists: redo greedy restricted to size k
        // (take the found candidate directly)
        gens.assign(idx.begin(), idx.end());
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

/// One expression m = sum_i g_i * r_i per element, found by breadth-first
/// search from zero. Column i of the result holds r_i.
inline std::vector<std::vector<int>> expression_table(const FiniteModule& M, const IndexSet& gens) {
    const FiniteRing& R = *M.ring;
    std::vector<std::vector<int>> expr(M.order);
    std::vector<char> seen(M.order, 0);
    expr[M.zero].assign(gens.size(), R.zero);
    seen[M.zero] = 1;
    std::vector<int> frontier{M.zero};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int m : frontier) {
            for (size_t i = 0; i < gens.size(); ++i) {
                for (int r = 0; r < R.order; ++r) {
                    int m2 = M.add(m, M.act(gens[i], r));
                    if (seen[m2]) continue;
                    seen[m2] = 1;
                    expr[m2] = expr[m];
                    expr[m2][i] = R.add(expr[m2][i], r);
                    next.push_back(m2);
                }
            }
        }
        frontier = std::move(next);
    }
    for (int m = 0; m < M.order; ++m)
        if (!seen[m]) throw InvalidSpec("expression_table: generators do not generate");
    return expr;
}

using HomGraph = std::vector<int>;  // index vector of length |source|

inline bool verify_hom(const FiniteModule& M, const FiniteModule& N, const HomGraph& h) {
    for (int a = 0; a < M.order; ++a)
        for (int b = 0; b < M.order; ++b)
            if (h[M.add(a, b)] != N.add(h[a], h[b])) return false;
    for (int a = 0; a < M.order; ++a)
        for (int r = 0; r < M.ring->order; ++r)
            if (h[M.act(a, r)] != N.act(h[a], r)) return false;
    return true;
}

struct HomSet {
    const FiniteModule* source = nullptr;
    const FiniteModule* target = nullptr;
    std::vector<HomGraph> maps;  // sorted lexicographically; zero map always present
};

/// All R-homomorphisms M -> N. Candidates are generator-image tuples; each
/// candidate extends through the expression table and is then verified in
/// full. `fiber` optionally restricts the allowed images of each generator.
inline HomSet enumerate_homs(const FiniteModule& M, const FiniteModule& N,
                             const std::vector<IndexSet>* fiber = nullptr,
                             long long cap = kDefaultHomCap, const IndexSet* gens_opt = nullptr) {
    HomSet out;
    out.source = &M;
    out.target = &N;
    IndexSet gens = gens_opt ? *gens_opt : minimal_generating_set(M);
    if (gens.empty()) {  // zero module source
        out.maps.push_back(HomGraph(1, N.zero));
        return out;
    }
    auto expr = expression_table(M, gens);
    long long candidates = 1;
    for (size_t i = 0; i < gens.size(); ++i) {
        candidates *= fiber ? (long long)(*fiber)[i].size() : (long long)N.order;
        if (candidates > cap) throw CapExceeded("hom enumeration exceeds cap");
    }
    std::vector<int> choice(gens.size(), 0);
    while (true) {
        HomGraph h(M.order);
        std::vector<int> images(gens.size());
        for (size_t i = 0; i < gens.size(); ++i)
            images[i] = fiber ? (*fiber)[i][choice[i]] : choice[i];
        for (int m = 0; m < M.order; ++m) {
            int acc = N.zero;
            for (size_t i = 0; i < gens.size(); ++i) acc = N.add(acc, N.act(images[i], expr[m][i]));
            h[m] = acc;
        }
        if (verify_hom(M, N, h)) out.maps.push_back(std::move(h));
        int i = (int)gens.size() - 1;
        while (i >= 0) {
            int limit = fiber ? (int)(*fiber)[i].size() : N.order;
            if (++choice[i] < limit) break;
            choice[i--] = 0;
        }
        if (i < 0) break;
    }
    std::sort(out.maps.begin(), out.maps.end());
    out.maps.erase(std::unique(out.maps.begin(), out.maps.end()), out.maps.end());
    return out;
}

/// End_R(M) as a FiniteRing. Maps act on the left; the ring product f*g is
/// the composite "first g, then f".
struct EndoRing {
    FiniteRing ring;
    std::vector<HomGraph> maps;  // maps[i] is ring element i

    int index_of(const HomGraph& h) const {
        auto it = std::lower_bound(maps.begin(), maps.end(), h);
        return it != maps.end() && *it == h ? (int)(it - maps.begin()) : -1;
    }
};

inline EndoRing endomorphism_ring(const FiniteModule& M, long long cap = kDefaultHomCap) {
    EndoRing E;
    E.maps = enumerate_homs(M, M, nullptr, cap).maps;
    const int n = (int)E.maps.size();
    std::map<HomGraph, int> pos;
    for (int i = 0; i < n; ++i) pos[E.maps[i]] = i;
    E.ring.order = n;
    E.ring.add_tab.resize((size_t)n * n);
    E.ring.mul_tab.resize((size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            HomGraph s(M.order), c(M.order);
            for (int m = 0; m < M.order; ++m) {
                s[m] = M.add(E.maps[i][m], E.maps[j][m]);
                c[m] = E.maps[i][E.maps[j][m]];  // i after j
            }
            E.ring.add_tab[(size_t)i * n + j] = pos.at(s);
            E.ring.mul_tab[(size_t)i * n + j] = pos.at(c);
        }
    HomGraph zero(M.order, M.zero), id(M.order);
    for (int m = 0; m < M.order; ++m) id[m] = m;
    E.ring.zero = pos.at(zero);
    E.ring.one = pos.at(id);
    E.ring.provenance = json{{"kind", "endomorphism_ring"}, {"module", M.provenance},
                             {"convention", "maps act on the left; f*g applies g first"}};
    E.ring.derive_neg();
    return E;
}

/// e.Rickart: ker(phi) = eM for an idempotent endomorphism e.
inline Verdict is_e_rickart(const FiniteModule& M, const EndoRing& E) {
    Verdict v;
    v.predicate = "e_rickart";
    v.holds = true;
    v.recheck = {{"module", M.provenance}};
    for (int p = 0; p < E.ring.order; ++p) {
        IndexSet ker;
        for (int m = 0; m < M.order; ++m)
            if (E.maps[p][m] == M.zero) ker.push_back(m);
        bool found = false;
        for (int e = 0; e < E.ring.order && !found; ++e) {
            if (!E.ring.is_idempotent(e)) continue;
            IndexSet image = make_set(HomGraph(E.maps[e]));
            if (image == ker) found = true;
        }
        if (!found) {
            v.holds = false;
            v.witness = {{"endomorphism", E.maps[p]}, {"kernel", ker}};
            return v;
        }
    }
    return v;
}

/// e.Baer: l_S(N) = Se for an idempotent e in S = End(M), for every
/// submodule N.
inline Verdict is_e_baer(const FiniteModule& M, const EndoRing& E,
                         const std::vector<IndexSet>& submodules) {
    Verdict v;
    v.predicate = "e_baer";
    v.holds = true;
    v.recheck = {{"module", M.provenance}};
    for (const auto& N : submodules) {
        IndexSet annihilating;
        for (int p = 0; p < E.ring.order; ++p) {
            bool kills = true;
            for (int n : N)
                if (E.maps[p][n] != M.zero) { kills = false; break; }
            if (kills) annihilating.push_back(p);
        }
        bool found = false;
        for (int e = 0; e < E.ring.order && !found; ++e)
            if (E.ring.is_idempotent(e) && E.ring.principal_left(e) == annihilating) found = true;
        if (!found) {
            v.holds = false;
            v.witness = {{"submodule", N}, {"left_annihilator", annihilating}};
            return v;
        }
    }
    return v;
}

/// Hom_R(M, N) upgraded to a module over a commutative R via (h*r)(m) = h(m)r.
/// For a noncommutative ring the plain HomSet is all that exists.
inline FiniteModule hom_module(const FiniteModule& M, const FiniteModule& N, long long cap = kDefaultHomCap) {
    const FiniteRing& R = *M.ring;
    if (!R.is_commutative())
        throw NoModuleStructure("hom module requires a commutative ring or a declared bimodule side");
    HomSet H = enumerate_homs(M, N, nullptr, cap);
    const int n = (int)H.maps.size();
    std::map<HomGraph, int> pos;
    for (int i = 0; i < n; ++i) pos[H.maps[i]] = i;
    FiniteModule Hm;
    Hm.ring = M.ring;
    Hm.order = n;
    Hm.add_tab.resize((size_t)n * n);
    Hm.act_tab.resize((size_t)n * R.order);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            HomGraph s(M.order);
            for (int m = 0; m < M.order; ++m) s[m] = N.add(H.maps[i][m], H.maps[j][m]);
            Hm.add_tab[(size_t)i * n + j] = pos.at(s);
        }
        for (int r = 0; r < R.order; ++r) {
            HomGraph s(M.order);
            for (int m = 0; m < M.order; ++m) s[m] = N.act(H.maps[i][m], r);
            auto it = pos.find(s);
            if (it == pos.end()) throw InvalidSpec("hom set not closed under the scalar action");
            Hm.act_tab[(size_t)i * R.order + r] = it->second;
        }
    }
    Hm.zero = pos.at(HomGraph(M.order, N.zero));
    Hm.provenance = json{{"kind", "hom"}, {"source", M.provenance}, {"target", N.provenance}};
    Hm.derive_neg();
    return Hm;
}

}  // namespace baerlab
