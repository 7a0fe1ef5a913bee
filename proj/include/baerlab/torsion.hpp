#pragma once

// The torsion theory attached to the scalar Baer predicate: the radical
// beta, torsion/torsion-free classification, the core, and the structure
// theorems run as clause-by-clause reports.

#include <string>
#include <vector>

#include "baerlab/construct.hpp"
#include "baerlab/hom.hpp"
#include "baerlab/module_predicates.hpp"
#include "baerlab/ring_predicates.hpp"

namespace baerlab {

struct RadicalResult {
    IndexSet beta;
    std::vector<IndexSet> contributing_quotients;  // K with M/K in the torsion-free class
    std::string classification;                    // torsion, torsion_free, mixed
};

/// beta(M) = intersection of all submodules K with M/K s.Baer.
inline RadicalResult beta_radical(const FiniteModule& M, int sub_cap = kDefaultSubmoduleCap) {
    RadicalResult out;
    out.beta = M.universe();
    for (const auto& K : all_submodules(M, sub_cap)) {
        FiniteModule Q = quotient_module(M, K);
        if (is_s_baer(Q).holds) {
            out.contributing_quotients.push_back(K);
            out.beta = set_intersect(out.beta, K);
        }
    }
    if ((int)out.beta.size() == M.order)
        out.classification = "torsion";
    else if (out.beta == IndexSet{M.zero})
        out.classification = "torsion_free";
    else
        out.classification = "mixed";
    return out;
}

// Membership goes through beta directly; the zero module is both torsion and
// torsion free, which the single classification string cannot express.
inline bool is_torsion(const FiniteModule& M, int sub_cap = kDefaultSubmoduleCap) {
    return (int)beta_radical(M, sub_cap).beta.size() == M.order;
}

inline bool is_torsion_free(const FiniteModule& M, int sub_cap = kDefaultSubmoduleCap) {
    return beta_radical(M, sub_cap).beta == IndexSet{M.zero};
}

/// Sufficient test for mR torsion: r_R(m) nonzero yet inside no proper
/// nontrivial idempotent-generated right ideal. When the condition holds the
/// conclusion is re-verified by brute force and recorded in the witness.
inline Verdict cyclic_torsion_test(const FiniteModule& M, int m, int sub_cap = kDefaultSubmoduleCap) {
    if (m == M.zero) throw ZeroElement("cyclic torsion test needs a nonzero element");
    const FiniteRing& R = *M.ring;
    Verdict v;
    v.predicate = "cyclic_torsion";
    v.recheck = {{"module", M.provenance}, {"m", m}};
    IndexSet ann = right_annihilator(M, IndexSet{m}).members;
    v.witness = {{"annihilator", ann}};
    if (ann == IndexSet{R.zero}) {
        v.holds = false;
        v.witness["reason"] = "zero annihilator sits inside every right ideal";
        return v;
    }
    for (int e = 0; e < R.order; ++e) {
        if (e == R.zero || e == R.one || !R.is_idempotent(e)) continue;
        if (set_subset(ann, R.principal_right(e))) {
            v.holds = false;
            v.witness["containing_idempotent"] = e;
            return v;
        }
    }
    v.holds = true;
    FiniteModule C = cyclic_module(M, m);
    v.witness["torsion_confirmed"] = is_torsion(C, sub_cap);
    return v;
}

struct CoreResult {
    IndexSet core;         // elements whose cyclic submodule is s.Baer
    IndexSet annihilator;  // r_R(core)
};

inline CoreResult s_baer_core(const FiniteModule& M) {
    CoreResult out;
    for (int s = 0; s < M.order; ++s)
        if (is_s_baer_set(M, M.cyclic(s)).holds) out.core.push_back(s);
    out.annihilator = right_annihilator(M, out.core).members;
    return out;
}

// ---------------------------------------------------------------------------
// Clause reports
// ---------------------------------------------------------------------------

struct Clause {
    std::string name;
    bool applicable = true;
    bool holds = true;
    json witness;
};

struct Report {
    std::string check;
    json subject;
    std::vector<Clause> clauses;

    bool all_hold() const {
        for (const auto& c : clauses)
            if (c.applicable && !c.holds) return false;
        return true;
    }
    json to_json() const {
        json cl = json::array();
        for (const auto& c : clauses)
            cl.push_back({{"name", c.name},
                          {"applicable", c.applicable},
                          {"holds", c.holds},
                          {"witness", c.witness}});
        return {{"check", check}, {"subject", subject}, {"clauses", cl}, {"all_hold", all_hold()}};
    }
};

/// M R0, the submodule generated by all products m*r with r in an ideal.
inline IndexSet module_times_ideal(const FiniteModule& M, const IndexSet& I) {
    std::vector<int> prods{M.zero};
    for (int m = 0; m < M.order; ++m)
        for (int r : I) prods.push_back(M.act(m, r));
    return submodule_closure(M, make_set(std::move(prods)));
}

/// Structure of a module with proper radical: the left-semicentral c tying
/// together the cores of M and of the ring, the preradical comparisons, and
/// the splitting corollaries.
inline Report radical_structure_check(const FiniteModule& M, int sub_cap = kDefaultSubmoduleCap) {
    const FiniteRing& R = *M.ring;
    RadicalResult radM = beta_radical(M, sub_cap);
    if ((int)radM.beta.size() == M.order)
        throw PreconditionFailed("radical structure analysis needs beta(M) != M");

    Report rep;
    rep.check = "radical_structure";
    rep.subject = {{"module", M.provenance}, {"beta", radM.beta}};

    FiniteModule reg = regular_module(M.ring);
    RadicalResult radR = beta_radical(reg, sub_cap);
    CoreResult coreM = s_baer_core(M);
    CoreResult coreR = s_baer_core(reg);
    IndexSet inter = set_intersect(coreM.annihilator, coreR.annihilator);

    auto idem = idempotent_report(R);
    int c = -1;
    for (int e : idem.left_semicentral)
        if (R.principal_right(e) == inter) { c = e; break; }

    Clause c_exists{"core_annihilators_meet_in_cR"};
    c_exists.holds = c >= 0 && (int)inter.size() < R.order;
    c_exists.witness = {{"c", c}, {"intersection", inter}};
    rep.clauses.push_back(c_exists);
    if (c < 0) return rep;

    IndexSet cR = R.principal_right(c);
    const int one_minus_c = R.sub(R.one, c);

    Clause beta_in{"beta_R_inside_cR"};
    beta_in.holds = set_subset(radR.beta, cR);
    beta_in.witness = {{"beta_R", radR.beta}, {"cR", cR}};
    rep.clauses.push_back(beta_in);

    Clause comp_free{"complement_piece_torsion_free"};
    comp_free.holds = is_s_baer_set(reg, R.principal_right(one_minus_c)).holds;
    comp_free.witness = {{"one_minus_c", one_minus_c}};
    rep.clauses.push_back(comp_free);

    IndexSet MbR = module_times_ideal(M, radR.beta);
    Clause prerad{"preradical_inequality"};
    prerad.holds = set_subset(MbR, radM.beta);
    prerad.witness = {{"M_beta_R", MbR}, {"beta_M", radM.beta}};
    rep.clauses.push_back(prerad);

    Verdict proj = is_projective(M);
    Clause prerad_eq{"preradical_equality_when_projective"};
    prerad_eq.applicable = proj.holds;
    prerad_eq.holds = !proj.holds || MbR == radM.beta;
    rep.clauses.push_back(prerad_eq);

    Clause bound{"beta_M_inside_McR"};
    bound.applicable = MbR == radM.beta;
    if (bound.applicable) {
        IndexSet McR = module_times_ideal(M, cR);
        bound.holds = set_subset(radM.beta, McR);
        bound.witness = {{"McR", McR}};
    }
    rep.clauses.push_back(bound);

    bool ess = essential_in(reg, radR.beta, cR);
    Clause ess_eq{"essential_forces_equality"};
    ess_eq.applicable = ess;
    ess_eq.holds = !ess || radR.beta == cR;
    rep.clauses.push_back(ess_eq);

    Clause complement{"complement_carries_projective_essential_part"};
    complement.applicable = !ess;
    if (!ess) {
        IndexSet K = relative_complement(reg, radR.beta, cR);
        // cR(1-c) as an index set
        std::vector<int> prods{R.zero};
        for (int x : cR) prods.push_back(R.mul(x, one_minus_c));
        IndexSet cR1mc = submodule_closure(reg, make_set(std::move(prods)));
        bool k_in = set_subset(K, cR1mc);
        bool found = false;
        json cert;
        FiniteModule Kmod = submodule_module(reg, K, json{{"kind", "complement"}, {"members", K}});
        if (is_s_rickart(Kmod).holds) {
            auto w = essential_projective_witness(Kmod);
            IndexSet P;
            for (int i : w.P) P.push_back(K[i]);
            P = make_set(std::move(P));
            bool direct = set_intersect(P, radR.beta) == IndexSet{R.zero};
            IndexSet sum = submodule_closure(reg, set_union(P, radR.beta));
            found = w.verified && direct && essential_in(reg, sum, cR);
            cert = {{"P", P}, {"witness", w.certificate}};
        }
        complement.holds = k_in && found;
        complement.witness = {{"K", K}, {"K_inside_cR_one_minus_c", k_in}, {"projective_part", cert}};
    }
    rep.clauses.push_back(complement);

    Clause dichotomy{"semicentral_reduced_projective_dichotomy"};
    dichotomy.applicable = idem.semicentral_reduced && proj.holds;
    dichotomy.holds = !dichotomy.applicable || radM.beta == IndexSet{M.zero};
    rep.clauses.push_back(dichotomy);

    StructureReport st = structure_predicates(M, sub_cap);
    Clause fi{"fi_extending_radical_splits"};
    fi.applicable = st.is_FI_extending;
    if (fi.applicable) {
        auto subs = all_submodules(M, sub_cap);
        auto summands = direct_summands(M, subs);
        fi.holds = std::find(summands.begin(), summands.end(), radM.beta) != summands.end();
    }
    rep.clauses.push_back(fi);
    return rep;
}

struct EssentialPair {
    const FiniteModule* M = nullptr;
    IndexSet T;
};

/// Torsion is preserved along essential extensions: for each verified pair
/// T <=ess M, T torsion must force M torsion.
inline Report stability_check(const std::vector<EssentialPair>& pairs,
                              int sub_cap = kDefaultSubmoduleCap) {
    Report rep;
    rep.check = "stability";
    rep.subject = {{"pairs", pairs.size()}};
    for (size_t i = 0; i < pairs.size(); ++i) {
        const FiniteModule& M = *pairs[i].M;
        const IndexSet& T = pairs[i].T;
        if (!is_submodule_set(M, T)) throw NotSubmodule("stability pair: T is not a submodule");
        if (!essential_in(M, T)) throw NotEssential("stability pair: T is not essential in M");
        FiniteModule Tmod = submodule_module(M, T, json{{"kind", "essential_sub"}, {"members", T}});
        Clause cl{"pair_" + std::to_string(i)};
        bool t_torsion = is_torsion(Tmod, sub_cap);
        cl.applicable = t_torsion;
        cl.holds = !t_torsion || is_torsion(M, sub_cap);
        cl.witness = {{"module", M.provenance}, {"T", T}, {"T_torsion", t_torsion}};
        rep.clauses.push_back(cl);
    }
    return rep;
}

/// The three-clause description of beta for a generalized triangular ring
/// with semicentral-reduced bottom corner, checked against brute force.
inline Report triangular_radical_check(const GenTriangular& G, int sub_cap = kDefaultSubmoduleCap) {
    const FiniteRing& A = G.A;
    const FiniteRing& C = G.C;
    const FiniteRing& R = G.ring;
    if (!idempotent_report(C).semicentral_reduced)
        throw HypothesisFailed("bottom corner ring must be semicentral reduced");
    auto SlA = idempotent_report(A).left_semicentral;
    for (int a : SlA) {
        if (a == A.one) continue;
        bool moves = false;
        for (int m = 0; m < G.B.order && !moves; ++m) moves = G.left(a, m) != m;
        if (!moves) throw HypothesisFailed("a proper left-semicentral idempotent of A fixes the bimodule");
    }

    auto Rp = std::make_shared<const FiniteRing>(R);
    FiniteModule reg = regular_module(Rp);
    RadicalResult rad = beta_radical(reg, sub_cap);
    const bool proper = (int)rad.beta.size() < R.order;

    Report rep;
    rep.check = "triangular_radical";
    rep.subject = {{"ring", R.provenance}, {"beta", rad.beta}, {"proper", proper}};

    // block subsets
    auto block_eAeM = [&](int e) {  // (eA, eM; 0, 0)
        IndexSet out;
        for (int a = 0; a < A.order; ++a)
            for (int m = 0; m < G.B.order; ++m)
                out.push_back(G.compose(A.mul(e, a), G.left(e, m), C.zero));
        return make_set(std::move(out));
    };
    IndexSet lower;  // (0, M; 0, C)
    for (int m = 0; m < G.B.order; ++m)
        for (int cc = 0; cc < C.order; ++cc) lower.push_back(G.compose(A.zero, m, cc));
    lower = make_set(std::move(lower));

    bool exists_e_block = false;
    int block_e = -1;
    for (int e : SlA) {
        if (set_subset(rad.beta, block_eAeM(e))) { exists_e_block = true; block_e = e; break; }
    }
    bool C_baer = is_baer_ring(C).holds;

    Clause c1{"proper_iff_block_iff_C_baer"};
    c1.holds = (proper == exists_e_block) && (proper == C_baer);
    c1.witness = {{"proper", proper}, {"block_idempotent", block_e}, {"C_baer", C_baer}};
    rep.clauses.push_back(c1);

    // clause (ii): beta inside (eA, 0; 0, 0) iff beta meets the lower block trivially
    bool in_diag = false;
    for (int e : SlA) {
        IndexSet diag;
        for (int a = 0; a < A.order; ++a) diag.push_back(G.compose(A.mul(e, a), G.B.zero, C.zero));
        if (set_subset(rad.beta, make_set(std::move(diag)))) { in_diag = true; break; }
    }
    bool meets_lower_trivially = set_intersect(rad.beta, lower) == IndexSet{R.zero};
    Clause c2{"diagonal_confinement_iff_trivial_lower_meet"};
    c2.holds = in_diag == meets_lower_trivially;
    c2.witness = {{"in_diagonal_block", in_diag}, {"lower_meet_trivial", meets_lower_trivially}};
    rep.clauses.push_back(c2);

    // clause (iii), per left-semicentral e whose eA acts faithfully on the bimodule
    for (int e : SlA) {
        bool faithful = true;
        for (int a = 0; a < A.order && faithful; ++a) {
            int ea = A.mul(e, a);
            if (ea == A.zero) continue;
            bool hits = false;
            for (int k = 0; k < G.B.order && !hits; ++k) hits = G.left(ea, k) != G.B.zero;
            faithful = hits;
        }
        Clause c3{"block_equality_vs_corner_e" + std::to_string(e)};
        IndexSet block = block_eAeM(e);
        c3.applicable = faithful && set_subset(rad.beta, block);
        if (!c3.applicable) {
            rep.clauses.push_back(c3);
            continue;
        }
        IndexSet eM;  // {e*m}
        for (int m = 0; m < G.B.order; ++m) eM.push_back(G.left(e, m));
        eM = make_set(std::move(eM));
        IndexSet X;  // corner part of beta inside (0, M; 0, 0)
        for (int x : rad.beta) {
            auto [a, m, cc] = G.parts(x);
            if (a == A.zero && cc == C.zero) X.push_back(m);
        }
        X = make_set(std::move(X));
        bool fwd = true;
        if (rad.beta == block && block != IndexSet{R.zero}) fwd = X != IndexSet{G.B.zero};
        // X essential in eM as a right C-module
        bool x_ess = true;
        for (int y : eM) {
            if (y == G.B.zero) continue;
            bool meets = false;
            for (int cc = 0; cc < C.order && !meets; ++cc) {
                int yc = G.B.act(y, cc);
                meets = yc != G.B.zero && set_contains(X, yc);
            }
            if (!meets) { x_ess = false; break; }
        }
        bool bwd = !x_ess || rad.beta == block;
        c3.holds = fwd && bwd;
        c3.witness = {{"e", e}, {"X", X}, {"X_essential_in_eM", x_ess}, {"beta_equals_block", rad.beta == block}};
        rep.clauses.push_back(c3);
    }
    return rep;
}

}  // namespace baerlab
