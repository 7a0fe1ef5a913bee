#pragma once

// Module-level decision procedures: the scalar Baer/Rickart predicates with
// witnesses, singularity, structural predicates, projectivity/injectivity,
// and the triangular-ring case analysis.

#include <vector>

#include "baerlab/construct.hpp"
#include "baerlab/hom.hpp"
#include "baerlab/ideals.hpp"
#include "baerlab/module.hpp"

namespace baerlab {

/// The distinct cyclic annihilators of `members`, closed under pairwise
/// intersection. witness[i] is a subset S of members with r(S) = ideals[i];
/// the closure trace keeps witnesses as unions.
struct AnnihilatorFamily {
    std::vector<IndexSet> ideals;
    std::vector<IndexSet> witnesses;
};

inline AnnihilatorFamily annihilator_closure(const FiniteModule& M, const IndexSet& members,
                                             bool close = true) {
    AnnihilatorFamily fam;
    std::map<IndexSet, IndexSet> seen;  // ideal -> witness
    for (int m : members) {
        IndexSet ann = right_annihilator(M, IndexSet{m}).members;
        seen.emplace(std::move(ann), IndexSet{m});
    }
    if (close) {
        std::vector<std::pair<IndexSet, IndexSet>> frontier(seen.begin(), seen.end());
        while (!frontier.empty()) {
            std::vector<std::pair<IndexSet, IndexSet>> next;
            for (const auto& [ia, wa] : frontier) {
                for (const auto& [ib, wb] : std::vector<std::pair<IndexSet, IndexSet>>(seen.begin(), seen.end())) {
                    IndexSet ic = set_intersect(ia, ib);
                    IndexSet wc = set_union(wa, wb);
                    auto [it, fresh] = seen.emplace(std::move(ic), wc);
                    if (fresh) next.push_back(*it);
                }
            }
            frontier = std::move(next);
        }
    }
    for (auto& [ideal, wit] : seen) {
        fam.ideals.push_back(ideal);
        fam.witnesses.push_back(wit);
    }
    return fam;
}

inline Verdict is_s_rickart_set(const FiniteModule& M, const IndexSet& members) {
    const FiniteRing& R = *M.ring;
    Verdict v;
    v.predicate = "s_rickart";
    v.holds = true;
    v.recheck = {{"module", M.provenance}};
    for (int m : members) {
        IndexSet ann = right_annihilator(M, IndexSet{m}).members;
        if (!idempotent_generator(R, ann)) {
            v.holds = false;
            v.witness = {{"m", m}, {"annihilator", ann}};
            return v;
        }
    }
    return v;
}

inline Verdict is_s_rickart(const FiniteModule& M) { return is_s_rickart_set(M, M.universe()); }

inline Verdict is_s_baer_set(const FiniteModule& M, const IndexSet& members) {
    const FiniteRing& R = *M.ring;
    Verdict v;
    v.predicate = "s_baer";
    v.holds = true;
    v.recheck = {{"module", M.provenance}};
    AnnihilatorFamily fam = annihilator_closure(M, members);
    for (size_t i = 0; i < fam.ideals.size(); ++i) {
        if (!idempotent_generator(R, fam.ideals[i])) {
            v.holds = false;
            v.witness = {{"subset", fam.witnesses[i]}, {"annihilator", fam.ideals[i]}};
            return v;
        }
    }
    return v;
}

inline Verdict is_s_baer(const FiniteModule& M) { return is_s_baer_set(M, M.universe()); }

struct SingularReport {
    IndexSet Z;
    IndexSet Z2;
};

inline SingularReport singular_submodules(const FiniteModule& M) {
    const FiniteRing& R = *M.ring;
    SingularReport rep;
    for (int m = 0; m < M.order; ++m) {
        IndexSet ann = right_annihilator(M, IndexSet{m}).members;
        if (essential_right_ideal(R, ann)) rep.Z.push_back(m);
    }
    if (!is_submodule_set(M, rep.Z)) throw InvalidSpec("singular subset failed submodule audit");
    // Z2: preimage of Z(M/Z) under the quotient map
    FiniteModule Q = quotient_module(M, rep.Z);
    // rebuild the representative map the same way quotient_module does
    std::vector<int> rep_of(M.order, -1);
    for (int m = 0; m < M.order; ++m) {
        if (rep_of[m] >= 0) continue;
        int least = m;
        std::vector<int> coset;
        for (int k : rep.Z) coset.push_back(M.add(m, k));
        for (int x : coset) least = std::min(least, x);
        for (int x : coset) rep_of[x] = least;
    }
    IndexSet reps;
    for (int m = 0; m < M.order; ++m)
        if (rep_of[m] == m) reps.push_back(m);
    std::vector<int> pos(M.order, -1);
    for (size_t i = 0; i < reps.size(); ++i) pos[reps[i]] = (int)i;
    IndexSet Zq;
    for (int q = 0; q < Q.order; ++q) {
        IndexSet ann = right_annihilator(Q, IndexSet{q}).members;
        if (essential_right_ideal(R, ann)) Zq.push_back(q);
    }
    for (int m = 0; m < M.order; ++m)
        if (set_contains(Zq, pos[rep_of[m]])) rep.Z2.push_back(m);
    if (!is_submodule_set(M, rep.Z2)) throw InvalidSpec("second singular subset failed submodule audit");
    return rep;
}

inline IndexSet module_annihilator(const FiniteModule& M) {
    return right_annihilator(M, M.universe()).members;
}

/// Direct summands of M among a precomputed submodule list.
inline std::vector<IndexSet> direct_summands(const FiniteModule& M, const std::vector<IndexSet>& subs) {
    const IndexSet zero_only{M.zero};
    const IndexSet whole = M.universe();
    std::vector<IndexSet> out;
    for (const auto& D : subs) {
        for (const auto& Dp : subs) {
            if (set_intersect(D, Dp) != zero_only) continue;
            if (submodule_closure(M, set_union(D, Dp)) == whole) {
                out.push_back(D);
                break;
            }
        }
    }
    return out;
}

struct StructureReport {
    bool is_semisimple = false;
    IndexSet socle;
    std::vector<IndexSet> homogeneous_components;
    bool is_extending = false;
    bool is_G_extending = false;
    bool is_FI_extending = false;
    bool is_finitely_idempotent_faithful = false;
    bool is_faithful = false;
    json witness;
};

/// Minimal (simple) submodules: nonzero cyclics all of whose nonzero
/// elements generate the whole cyclic.
inline std::vector<IndexSet> minimal_submodules(const FiniteModule& M) {
    std::set<IndexSet> out;
    for (int m = 0; m < M.order; ++m) {
        if (m == M.zero) continue;
        IndexSet C = M.cyclic(m);
        if (C == IndexSet{M.zero}) continue;
        bool minimal = true;
        for (int x : C) {
            if (x == M.zero) continue;
            if (M.cyclic(x) != C) { minimal = false; break; }
        }
        if (minimal) out.insert(std::move(C));
    }
    return {out.begin(), out.end()};
}

inline bool simple_isomorphic(const FiniteModule& M, const IndexSet& S1, const IndexSet& S2) {
    if (S1.size() != S2.size()) return false;
    FiniteModule A = submodule_module(M, S1, json{{"kind", "simple"}});
    FiniteModule B = submodule_module(M, S2, json{{"kind", "simple"}});
    for (const auto& h : enumerate_homs(A, B).maps) {
        IndexSet image = make_set(HomGraph(h));
        if ((int)image.size() == B.order) return true;  // surjective between equal orders
    }
    return false;
}

inline StructureReport structure_predicates(const FiniteModule& M, int sub_cap = kDefaultSubmoduleCap) {
    const FiniteRing& R = *M.ring;
    StructureReport rep;
    auto minimals = minimal_submodules(M);
    IndexSet socle{M.zero};
    for (const auto& S : minimals) socle = submodule_closure(M, set_union(socle, S));
    rep.socle = socle;
    rep.is_semisimple = (int)socle.size() == M.order;
    // homogeneous components: sum of the minimals in each isomorphism class
    std::vector<int> cls(minimals.size(), -1);
    int nclass = 0;
    for (size_t i = 0; i < minimals.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = nclass++;
        for (size_t j = i + 1; j < minimals.size(); ++j)
            if (cls[j] < 0 && simple_isomorphic(M, minimals[i], minimals[j])) cls[j] = cls[i];
    }
    rep.homogeneous_components.assign(nclass, IndexSet{M.zero});
    for (size_t i = 0; i < minimals.size(); ++i)
        rep.homogeneous_components[cls[i]] =
            submodule_closure(M, set_union(rep.homogeneous_components[cls[i]], minimals[i]));

    auto subs = all_submodules(M, sub_cap);
    auto summands = direct_summands(M, subs);
    rep.is_extending = true;
    rep.is_G_extending = true;
    for (const auto& X : subs) {
        bool ext = false, gext = false;
        for (const auto& D : summands) {
            if (set_subset(X, D) && essential_in(M, X, D)) ext = true;
            IndexSet XD = set_intersect(X, D);
            if (essential_in(M, XD, D) && essential_in(M, XD, X)) gext = true;
            if (ext && gext) break;
        }
        if (!ext && rep.is_extending) {
            rep.is_extending = false;
            rep.witness["extending"] = X;
        }
        if (!gext && rep.is_G_extending) {
            rep.is_G_extending = false;
            rep.witness["g_extending"] = X;
        }
    }
    // FI-extending: fully invariant submodules essential in a summand
    rep.is_FI_extending = true;
    {
        EndoRing E = endomorphism_ring(M);
        for (const auto& X : subs) {
            bool invariant = true;
            for (const auto& h : E.maps) {
                for (int x : X)
                    if (!set_contains(X, h[x])) { invariant = false; break; }
                if (!invariant) break;
            }
            if (!invariant) continue;
            bool ok = false;
            for (const auto& D : summands)
                if (set_subset(X, D) && essential_in(M, X, D)) { ok = true; break; }
            if (!ok) {
                rep.is_FI_extending = false;
                rep.witness["fi_extending"] = X;
                break;
            }
        }
    }
    IndexSet ann = module_annihilator(M);
    rep.is_faithful = ann == IndexSet{R.zero};
    // finitely idempotent faithful: M itself is a finite subset, so the
    // smallest reachable r_R(S) is r_R(M)
    rep.is_finitely_idempotent_faithful = true;
    for (int e = 0; e < R.order; ++e) {
        if (e == R.zero || e == R.one || !R.is_idempotent(e)) continue;
        if (set_intersect(ann, R.principal_right(e)) != IndexSet{R.zero}) {
            rep.is_finitely_idempotent_faithful = false;
            rep.witness["finitely_idempotent_faithful"] = e;
            break;
        }
    }
    return rep;
}

/// Projectivity by splitting search: minimal generators g_1..g_k, canonical
/// epimorphism R^k -> M, then a section among the generator-image candidates
/// whose images sit in the right fibers.
inline Verdict is_projective(const FiniteModule& M, int cap = kDefaultOrderCap,
                             long long hom_cap = kDefaultHomCap) {
    const FiniteRing& R = *M.ring;
    Verdict v;
    v.predicate = "projective";
    v.recheck = {{"module", M.provenance}};
    if (M.order == 1) {
        v.holds = true;
        v.witness = {{"splitting", json::array()}};
        return v;
    }
    IndexSet gens = minimal_generating_set(M);
    const int k = (int)gens.size();
    long long free_order = 1;
    for (int i = 0; i < k; ++i) {
        free_order *= R.order;
        if (free_order > cap) throw CapExceeded("free cover exceeds order cap");
    }
    std::vector<FiniteModule> copies((size_t)k, regular_module(M.ring));
    FiniteModule F = k == 1 ? copies[0] : direct_sum(copies, cap);
    detail::MixedRadix mr(std::vector<int>(k, R.order));
    // canonical epimorphism
    std::vector<int> pi(F.order);
    for (int f = 0; f < F.order; ++f) {
        auto d = mr.digits(f);
        int acc = M.zero;
        for (int i = 0; i < k; ++i) acc = M.add(acc, M.act(gens[i], d[i]));
        pi[f] = acc;
    }
    std::vector<IndexSet> fibers(k);
    for (int f = 0; f < F.order; ++f)
        for (int i = 0; i < k; ++i)
            if (pi[f] == gens[i]) fibers[i].push_back(f);
    HomSet sections = enumerate_homs(M, F, &fibers, hom_cap, &gens);
    for (const auto& s : sections.maps) {
        bool splits = true;
        for (int m = 0; m < M.order && splits; ++m) splits = pi[s[m]] == m;
        if (splits) {
            v.holds = true;
            v.witness = {{"generators", gens}, {"splitting", s}};
            return v;
        }
    }
    v.holds = false;
    v.witness = {{"generators", gens}, {"sections_tried", sections.maps.size()}};
    return v;
}

/// Injectivity by the classical criterion over right ideals: every hom
/// I -> M extends to left multiplication by some module element.
inline Verdict is_injective(const FiniteModule& M, long long hom_cap = kDefaultHomCap) {
    const FiniteRing& R = *M.ring;
    Verdict v;
    v.predicate = "injective";
    v.holds = true;
    v.recheck = {{"module", M.provenance}};
    FiniteModule reg = regular_module(M.ring);
    for (const auto& I : all_right_ideals(R)) {
        FiniteModule Imod = submodule_module(reg, I, json{{"kind", "right_ideal"}, {"members", I}});
        for (const auto& f : enumerate_homs(Imod, M, nullptr, hom_cap).maps) {
            bool extendable = false;
            for (int m = 0; m < M.order && !extendable; ++m) {
                bool ok = true;
                for (size_t i = 0; i < I.size() && ok; ++i) ok = f[i] == M.act(m, I[i]);
                extendable = ok;
            }
            if (!extendable) {
                v.holds = false;
                v.witness = {{"ideal", I}, {"hom", f}};
                return v;
            }
        }
    }
    return v;
}

struct MaximalSRickartReport {
    std::vector<IndexSet> maximal;
    bool unique_maximum = false;
};

inline MaximalSRickartReport maximal_s_rickart_submodule(const FiniteModule& M,
                                                         int sub_cap = kDefaultSubmoduleCap) {
    MaximalSRickartReport rep;
    auto subs = all_submodules(M, sub_cap);
    std::vector<IndexSet> good;
    for (const auto& X : subs)
        if (is_s_rickart_set(M, X).holds) good.push_back(X);
    for (const auto& X : good) {
        bool maximal = true;
        for (const auto& Y : good)
            if (Y != X && set_subset(X, Y)) { maximal = false; break; }
        if (maximal) rep.maximal.push_back(X);
    }
    rep.unique_maximum = rep.maximal.size() == 1;
    return rep;
}

struct EssentialProjectiveWitness {
    IndexSet P;
    std::vector<int> cyclic_generators;
    std::vector<int> idempotents;  // e with r(m_i) = e_i R, so m_i R ≅ (1-e_i)R
    bool verified = false;
    json certificate;
};

/// Greedy maximal direct sum of cyclic submodules, in canonical element
/// order. Maximality forces essentiality; s.Rickart makes each cyclic
/// projective.
inline EssentialProjectiveWitness essential_projective_witness(const FiniteModule& M) {
    const FiniteRing& R = *M.ring;
    if (!is_s_rickart(M).holds) throw PreconditionFailed("essential_projective_witness needs a s.Rickart module");
    EssentialProjectiveWitness w;
    w.P = IndexSet{M.zero};
    const IndexSet zero_only{M.zero};
    for (int x = 0; x < M.order; ++x) {
        if (x == M.zero || set_contains(w.P, x)) continue;
        IndexSet xR = M.cyclic(x);
        if (set_intersect(w.P, xR) != zero_only) continue;
        auto e = idempotent_generator(R, right_annihilator(M, IndexSet{x}).members);
        if (!e) throw PreconditionFailed("cyclic annihilator not idempotent-generated");
        w.cyclic_generators.push_back(x);
        w.idempotents.push_back(*e);
        w.P = submodule_closure(M, set_union(w.P, xR));
    }
    // re-verify: direct sum, and essential
    bool direct = true;
    for (size_t i = 0; i < w.cyclic_generators.size() && direct; ++i) {
        IndexSet others{M.zero};
        for (size_t j = 0; j < w.cyclic_generators.size(); ++j)
            if (j != i) others = submodule_closure(M, set_union(others, M.cyclic(w.cyclic_generators[j])));
        direct = set_intersect(others, M.cyclic(w.cyclic_generators[i])) == zero_only;
    }
    w.verified = direct && essential_in(M, w.P);
    w.certificate = {{"cyclic_generators", w.cyclic_generators},
                     {"annihilator_idempotents", w.idempotents},
                     {"direct", direct},
                     {"essential", essential_in(M, w.P)},
                     {"P", w.P}};
    return w;
}

// ---------------------------------------------------------------------------
// Triangular annihilator case analysis
// ---------------------------------------------------------------------------

enum class CaseTag {
    Zero,             // x = 0, r = R
    DiagBothUnits,    // m = 0 or not, a != 0, c != 0: r = 0
    TopLeftOnly,      // m = 0, a != 0, c = 0: r = e22 R
    BottomRightOnly,  // m = 0, a = 0, c != 0: r = e11 R
    CornerOnly,       // a = 0, c = 0, m != 0: r = e11 R
    CornerAndUnit,    // a = 0, c != 0, m != 0: r = e11 R
    MixedContained,   // a != 0, c = 0, m != 0, m in aB: r = (0,-k,1) R
    MixedObstructed,  // a != 0, c = 0, m != 0, m not in aB: r not idempotent-generated
};

inline const char* case_tag_name(CaseTag t) {
    switch (t) {
        case CaseTag::Zero: return "zero";
        case CaseTag::DiagBothUnits: return "diag_both_nonzero";
        case CaseTag::TopLeftOnly: return "top_left_only";
        case CaseTag::BottomRightOnly: return "bottom_right_only";
        case CaseTag::CornerOnly: return "corner_only";
        case CaseTag::CornerAndUnit: return "corner_and_bottom";
        case CaseTag::MixedContained: return "mixed_contained";
        case CaseTag::MixedObstructed: return "mixed_obstructed";
    }
    return "?";
}

struct TriangularCaseReport {
    CaseTag tag;
    IndexSet predicted;
    IndexSet brute_force;
    bool match = false;
    bool predicted_idempotent_generated = true;
};

inline bool ring_is_domain(const FiniteRing& R) {
    if (R.order == 1) return false;
    for (int a = 0; a < R.order; ++a)
        for (int b = 0; b < R.order; ++b)
            if (a != R.zero && b != R.zero && R.mul(a, b) == R.zero) return false;
    return true;
}

inline TriangularCaseReport triangular_annihilator_case(const GenTriangular& G, int x) {
    const FiniteRing& R = G.ring;
    if (!ring_is_domain(G.A) || !ring_is_domain(G.C))
        throw HypothesisFailed("triangular case analysis needs A and C domains");
    for (int m = 0; m < G.B.order; ++m) {
        if (m == G.B.zero) continue;
        for (int a = 0; a < G.A.order; ++a)
            if (a != G.A.zero && G.left(a, m) == G.B.zero)
                throw HypothesisFailed("left annihilator of a bimodule element is nonzero");
        for (int c = 0; c < G.C.order; ++c)
            if (c != G.C.zero && G.B.act(m, c) == G.B.zero)
                throw HypothesisFailed("right annihilator of a bimodule element is nonzero");
    }
    auto [a, m, c] = G.parts(x);
    TriangularCaseReport rep;
    rep.brute_force = right_annihilator_ring(R, IndexSet{x}).members;
    const int e11 = G.compose(G.A.one, G.B.zero, G.C.zero);
    const int e22 = G.compose(G.A.zero, G.B.zero, G.C.one);
    const bool a0 = a == G.A.zero, m0 = m == G.B.zero, c0 = c == G.C.zero;
    if (a0 && m0 && c0) {
        rep.tag = CaseTag::Zero;
        rep.predicted = R.universe();
    } else if (!a0 && !c0) {
        rep.tag = CaseTag::DiagBothUnits;
        rep.predicted = IndexSet{R.zero};
    } else if (m0 && !a0) {  // c = 0
        rep.tag = CaseTag::TopLeftOnly;
        rep.predicted = R.principal_right(e22);
    } else if (m0) {  // a = 0, c != 0
        rep.tag = CaseTag::BottomRightOnly;
        rep.predicted = R.principal_right(e11);
    } else if (a0) {  // m != 0
        rep.tag = c0 ? CaseTag::CornerOnly : CaseTag::CornerAndUnit;
        rep.predicted = R.principal_right(e11);
    } else {  // a != 0, c = 0, m != 0
        int k = -1;
        for (int t = 0; t < G.B.order; ++t)
            if (G.left(a, t) == m) { k = t; break; }
        if (k >= 0) {
            rep.tag = CaseTag::MixedContained;
            rep.predicted = R.principal_right(G.compose(G.A.zero, G.B.neg[k], G.C.one));
        } else {
            rep.tag = CaseTag::MixedObstructed;
            rep.predicted = rep.brute_force;
            rep.predicted_idempotent_generated = false;
        }
    }
    rep.match = rep.predicted == rep.brute_force &&
                rep.predicted_idempotent_generated == idempotent_generator(R, rep.brute_force).has_value();
    return rep;
}

}  // namespace baerlab
