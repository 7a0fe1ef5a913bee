#pragma once

// Right ideals, annihilators, and the structural ideals of a finite ring.

#include <optional>
#include <vector>

#include "baerlab/ring.hpp"
#include "baerlab/verdict.hpp"

namespace baerlab {

struct RightIdeal {
    const FiniteRing* parent = nullptr;
    IndexSet members;

    bool operator==(const RightIdeal& o) const { return members == o.members; }
};

inline bool is_right_ideal_set(const FiniteRing& R, const IndexSet& s) {
    if (!set_contains(s, R.zero)) return false;
    for (int a : s) {
        for (int b : s)
            if (!set_contains(s, R.add(a, b))) return false;
        for (int r = 0; r < R.order; ++r)
            if (!set_contains(s, R.mul(a, r))) return false;
    }
    return true;
}

inline RightIdeal verified_right_ideal(const FiniteRing& R, IndexSet s) {
    if (!is_right_ideal_set(R, s)) throw InvalidSpec("set is not a right ideal");
    return RightIdeal{&R, std::move(s)};
}

/// Smallest right ideal containing `seed`.
inline IndexSet right_ideal_closure(const FiniteRing& R, IndexSet seed) {
    seed.push_back(R.zero);
    return close_under(
        make_set(std::move(seed)), {[&R](int a, int b) { return R.add(a, b); }},
        {[&R](int a) {
            std::vector<int> out(R.order);
            for (int r = 0; r < R.order; ++r) out[r] = R.mul(a, r);
            return out;
        }});
}

/// Smallest two-sided ideal containing `seed`.
inline IndexSet two_sided_ideal_closure(const FiniteRing& R, IndexSet seed) {
    seed.push_back(R.zero);
    return close_under(
        make_set(std::move(seed)), {[&R](int a, int b) { return R.add(a, b); }},
        {[&R](int a) {
            std::vector<int> out;
            out.reserve(2 * R.order);
            for (int r = 0; r < R.order; ++r) {
                out.push_back(R.mul(a, r));
                out.push_back(R.mul(r, a));
            }
            return out;
        }});
}

/// r_R(S) = {a : sa = 0 for all s in S} for a subset S of the ring itself.
inline RightIdeal right_annihilator_ring(const FiniteRing& R, const IndexSet& S) {
    if (S.empty()) throw EmptySubset("right annihilator of an empty subset");
    IndexSet out;
    for (int a = 0; a < R.order; ++a) {
        bool kills = true;
        for (int s : S)
            if (R.mul(s, a) != R.zero) { kills = false; break; }
        if (kills) out.push_back(a);
    }
    return RightIdeal{&R, std::move(out)};
}

/// l_R(S) = {a : as = 0 for all s in S}, the symmetric dual.
inline IndexSet left_annihilator_ring(const FiniteRing& R, const IndexSet& S) {
    if (S.empty()) throw EmptySubset("left annihilator of an empty subset");
    IndexSet out;
    for (int a = 0; a < R.order; ++a) {
        bool kills = true;
        for (int s : S)
            if (R.mul(a, s) != R.zero) { kills = false; break; }
        if (kills) out.push_back(a);
    }
    return out;
}

/// Least idempotent e with eR = I, if one exists. Any such e lies in I.
inline std::optional<int> idempotent_generator(const FiniteRing& R, const IndexSet& I) {
    for (int e : I)
        if (R.is_idempotent(e) && R.principal_right(e) == I) return e;
    return std::nullopt;
}

inline Verdict is_generated_by_idempotent(const RightIdeal& I) {
    const FiniteRing& R = *I.parent;
    Verdict v;
    v.predicate = "generated_by_idempotent";
    v.recheck = {{"ideal", I.members}};
    if (auto e = idempotent_generator(R, I.members)) {
        v.holds = true;
        v.witness = {{"e", *e}};
    } else {
        v.holds = false;
        IndexSet inside;
        for (int e : I.members)
            if (R.is_idempotent(e)) inside.push_back(e);
        v.witness = {{"e", nullptr}, {"idempotents_inside", inside}};
    }
    return v;
}

/// All right ideals: sum-closure of the cyclic right ideals aR.
inline std::vector<IndexSet> all_right_ideals(const FiniteRing& R) {
    std::vector<IndexSet> seeds;
    for (int a = 0; a < R.order; ++a) seeds.push_back(R.principal_right(a));
    return close_family(std::move(seeds), [&R](const IndexSet& a, const IndexSet& b) {
        return right_ideal_closure(R, set_union(a, b));
    });
}

inline std::vector<IndexSet> all_left_ideals(const FiniteRing& R) {
    std::vector<IndexSet> seeds;
    for (int a = 0; a < R.order; ++a) seeds.push_back(R.principal_left(a));
    auto left_closure = [&R](IndexSet s) {
        return close_under(make_set(std::move(s)), {[&R](int a, int b) { return R.add(a, b); }},
                           {[&R](int a) {
                               std::vector<int> out(R.order);
                               for (int r = 0; r < R.order; ++r) out[r] = R.mul(r, a);
                               return out;
                           }});
    };
    return close_family(std::move(seeds), [&](const IndexSet& a, const IndexSet& b) {
        return left_closure(set_union(a, b));
    });
}

inline std::vector<IndexSet> all_two_sided_ideals(const FiniteRing& R) {
    std::vector<IndexSet> seeds;
    for (int a = 0; a < R.order; ++a) seeds.push_back(two_sided_ideal_closure(R, {a}));
    return close_family(std::move(seeds), [&R](const IndexSet& a, const IndexSet& b) {
        return two_sided_ideal_closure(R, set_union(a, b));
    });
}

inline bool is_two_sided_set(const FiniteRing& R, const IndexSet& s) {
    for (int a : s)
        for (int r = 0; r < R.order; ++r)
            if (!set_contains(s, R.mul(r, a)) || !set_contains(s, R.mul(a, r))) return false;
    return true;
}

/// I essential in R_R: I meets aR nontrivially for every a != 0.
inline bool essential_right_ideal(const FiniteRing& R, const IndexSet& I) {
    std::vector<char> in(R.order, 0);
    for (int x : I) in[x] = 1;
    for (int a = 0; a < R.order; ++a) {
        if (a == R.zero) continue;
        bool meets = false;
        for (int r = 0; r < R.order && !meets; ++r) {
            int ar = R.mul(a, r);
            if (ar != R.zero && in[ar]) meets = true;
        }
        if (!meets) return false;
    }
    return true;
}

/// I^k = 0 for some k <= order, with I given as an index set.
/// Returns the nilpotency degree, or nullopt.
inline std::optional<int> nilpotency_degree(const FiniteRing& R, const IndexSet& I) {
    IndexSet zero_only{R.zero};
    IndexSet power = I;
    for (int k = 1; k <= R.order + 1; ++k) {
        if (power == zero_only) return k;
        if (k > R.order) break;
        // next power: additive closure of products power * I
        std::vector<int> prods;
        for (int a : power)
            for (int b : I) prods.push_back(R.mul(a, b));
        power = close_under(make_set(std::move(prods)), {[&R](int a, int b) { return R.add(a, b); }}, {});
    }
    return std::nullopt;
}

struct StructuralIdeals {
    RightIdeal socle;
    RightIdeal jacobson_radical;
    std::vector<IndexSet> two_sided_ideals;
    std::vector<IndexSet> minimal_right_ideals;
    std::vector<IndexSet> right_ideals;
};

inline StructuralIdeals structural_ideals(const FiniteRing& R) {
    StructuralIdeals out;
    out.right_ideals = all_right_ideals(R);
    out.two_sided_ideals = all_two_sided_ideals(R);
    const IndexSet zero_only{R.zero};
    const IndexSet whole = R.universe();
    // minimal right ideals: minimal among the nonzero ones
    for (const auto& I : out.right_ideals) {
        if (I == zero_only) continue;
        bool minimal = true;
        for (const auto& J : out.right_ideals) {
            if (J == zero_only || J == I) continue;
            if (set_subset(J, I)) { minimal = false; break; }
        }
        if (minimal) out.minimal_right_ideals.push_back(I);
    }
    IndexSet socle = zero_only;
    for (const auto& I : out.minimal_right_ideals) socle = right_ideal_closure(R, set_union(socle, I));
    out.socle = RightIdeal{&R, std::move(socle)};
    // Jacobson radical: intersection of maximal (proper) right ideals
    IndexSet rad = whole;
    bool any_maximal = false;
    for (const auto& I : out.right_ideals) {
        if (I == whole) continue;
        bool maximal = true;
        for (const auto& J : out.right_ideals) {
            if (J == whole || J == I) continue;
            if (set_subset(I, J)) { maximal = false; break; }
        }
        if (maximal) {
            any_maximal = true;
            rad = set_intersect(rad, I);
        }
    }
    if (!any_maximal) rad = zero_only;  // zero ring
    out.jacobson_radical = RightIdeal{&R, std::move(rad)};
    return out;
}

/// Looks for a nonzero two-sided ideal that is nilpotent and essential in R_R.
inline Verdict essential_nilpotent_ideal_search(const FiniteRing& R) {
    Verdict v;
    v.predicate = "essential_nilpotent_ideal";
    v.holds = false;
    for (const auto& I : all_two_sided_ideals(R)) {
        if (I == IndexSet{R.zero}) continue;
        auto n = nilpotency_degree(R, I);
        if (!n) continue;
        if (essential_right_ideal(R, I)) {
            v.holds = true;
            v.witness = {{"ideal", I}, {"nilpotency", *n}};
            return v;
        }
    }
    v.witness = {{"ideal", nullptr}};
    return v;
}

}  // namespace baerlab
