#pragma once

// Ring-level predicates: Baer, right Rickart, the summand intersection
// properties, and assorted structural flags, all with witnesses.

#include <vector>

#include "baerlab/ideals.hpp"
#include "baerlab/ring.hpp"
#include "baerlab/verdict.hpp"

namespace baerlab {

inline Verdict is_baer_ring(const FiniteRing& R) {
    Verdict v;
    v.predicate = "baer_ring";
    v.holds = true;
    v.recheck = {{"ring", R.provenance}};
    // r_R(S) over all subsets S equals the pairwise-intersection closure of
    // the single-element annihilators, plus r_R(R) itself.
    std::vector<IndexSet> anns;
    for (int s = 0; s < R.order; ++s) anns.push_back(right_annihilator_ring(R, {s}).members);
    auto family = close_family(std::move(anns), [](const IndexSet& a, const IndexSet& b) {
        return set_intersect(a, b);
    });
    for (const auto& I : family) {
        if (!idempotent_generator(R, I)) {
            v.holds = false;
            v.witness = {{"annihilator", I}};
            return v;
        }
    }
    return v;
}

inline Verdict is_right_rickart_ring(const FiniteRing& R) {
    Verdict v;
    v.predicate = "right_rickart_ring";
    v.holds = true;
    v.recheck = {{"ring", R.provenance}};
    for (int a = 0; a < R.order; ++a) {
        IndexSet ann = right_annihilator_ring(R, {a}).members;
        if (!idempotent_generator(R, ann)) {
            v.holds = false;
            v.witness = {{"a", a}, {"annihilator", ann}};
            return v;
        }
    }
    return v;
}

/// SSIP for R_R: the idempotent-generated right ideals are closed under
/// arbitrary intersections. Over a finite ring pairwise closure suffices,
/// so SIP and SSIP coincide and one verdict covers both.
inline Verdict has_summand_intersection(const FiniteRing& R) {
    Verdict v;
    v.predicate = "summand_intersection";
    v.holds = true;
    v.recheck = {{"ring", R.provenance}};
    std::vector<IndexSet> summands;
    for (int e = 0; e < R.order; ++e)
        if (R.is_idempotent(e)) summands.push_back(R.principal_right(e));
    std::sort(summands.begin(), summands.end());
    summands.erase(std::unique(summands.begin(), summands.end()), summands.end());
    for (size_t i = 0; i < summands.size(); ++i)
        for (size_t j = i + 1; j < summands.size(); ++j) {
            IndexSet meet = set_intersect(summands[i], summands[j]);
            if (!idempotent_generator(R, meet)) {
                v.holds = false;
                v.witness = {{"first", summands[i]}, {"second", summands[j]}, {"intersection", meet}};
                return v;
            }
        }
    return v;
}

inline bool is_semiprime_ring(const FiniteRing& R) {
    // no nonzero nilpotent two-sided ideal; for finite rings it is enough to
    // check the principal ones aRa
    for (int a = 0; a < R.order; ++a) {
        if (a == R.zero) continue;
        bool nil = true;
        for (int r = 0; r < R.order && nil; ++r)
            if (R.mul(R.mul(a, r), a) != R.zero) nil = false;
        if (nil) return false;  // aRa = 0 with a != 0
    }
    return true;
}

inline bool is_right_duo_ring(const FiniteRing& R) {
    for (int a = 0; a < R.order; ++a)
        if (!is_two_sided_set(R, R.principal_right(a))) return false;
    return true;
}

struct RingPredicates {
    Verdict baer;
    Verdict rickart;
    Verdict ssip;
    bool semisimple = false;
    bool semiprime = false;
    bool right_duo = false;
    bool semicentral_reduced = false;
    bool indecomposable = false;  // no nontrivial idempotent at all
};

inline RingPredicates ring_predicates(const FiniteRing& R) {
    RingPredicates out;
    out.baer = is_baer_ring(R);
    out.rickart = is_right_rickart_ring(R);
    out.ssip = has_summand_intersection(R);
    auto st = structural_ideals(R);
    out.semisimple = st.socle.members == R.universe();
    out.semiprime = is_semiprime_ring(R);
    out.right_duo = is_right_duo_ring(R);
    out.semicentral_reduced = idempotent_report(R).semicentral_reduced;
    out.indecomposable = !R.has_nontrivial_idempotent();
    return out;
}

}  // namespace baerlab
