#pragma once

// Finite associative unital rings as dense element tables. Canonical element
// indices 0..order-1; all arithmetic goes through the tables.

#include <memory>
#include <optional>
#include <vector>

#include <json.hpp>

#include "baerlab/errors.hpp"
#include "baerlab/sets.hpp"

namespace baerlab {

using json = nlohmann::json;

class FiniteRing {
public:
    int order = 0;
    std::vector<int> add_tab;  // order*order
    std::vector<int> mul_tab;  // order*order
    int zero = 0;
    int one = 0;
    std::vector<int> neg;  // additive inverse, derived
    json provenance;

    int add(int a, int b) const { return add_tab[a * order + b]; }
    int mul(int a, int b) const { return mul_tab[a * order + b]; }
    int sub(int a, int b) const { return add(a, neg[b]); }

    bool is_idempotent(int e) const { return mul(e, e) == e; }

    std::vector<int> idempotents() const {
        std::vector<int> out;
        for (int e = 0; e < order; ++e)
            if (is_idempotent(e)) out.push_back(e);
        return out;
    }

    bool has_nontrivial_idempotent() const {
        for (int e = 0; e < order; ++e)
            if (e != zero && e != one && is_idempotent(e)) return true;
        return false;
    }

    bool is_commutative() const {
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    /// eR as a sorted index set.
    IndexSet principal_right(int e) const {
        std::vector<int> v(order);
        for (int r = 0; r < order; ++r) v[r] = mul(e, r);
        return make_set(std::move(v));
    }

    /// Re as a sorted index set.
    IndexSet principal_left(int e) const {
        std::vector<int> v(order);
        for (int r = 0; r < order; ++r) v[r] = mul(r, e);
        return make_set(std::move(v));
    }

    IndexSet universe() const {
        IndexSet v(order);
        for (int i = 0; i < order; ++i) v[i] = i;
        return v;
    }

    /// Full axiom audit on all triples. Throws InvalidSpec on any violation.
    void audit() const {
        if (order <= 0 || (int)add_tab.size() != order * order || (int)mul_tab.size() != order * order)
            throw InvalidSpec("ring tables have wrong shape");
        for (int x : add_tab)
            if (x < 0 || x >= order) throw InvalidSpec("add table entry out of range");
        for (int x : mul_tab)
            if (x < 0 || x >= order) throw InvalidSpec("mul table entry out of range");
        for (int a = 0; a < order; ++a) {
            if (add(a, zero) != a || add(zero, a) != a) throw InvalidSpec("zero is not an additive identity");
            if (mul(a, one) != a || mul(one, a) != a) throw InvalidSpec("one is not a multiplicative identity");
        }
        // abelian group under addition
        std::vector<char> has_inverse(order, 0);
        for (int a = 0; a < order; ++a) {
            for (int b = 0; b < order; ++b) {
                if (add(a, b) != add(b, a)) throw InvalidSpec("addition is not commutative");
                if (add(a, b) == zero) has_inverse[a] = 1;
            }
        }
        for (int a = 0; a < order; ++a)
            if (!has_inverse[a]) throw InvalidSpec("missing additive inverse");
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c) {
                    if (add(add(a, b), c) != add(a, add(b, c))) throw InvalidSpec("addition is not associative");
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InvalidSpec("multiplication is not associative");
                    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) throw InvalidSpec("left distributivity fails");
                    if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) throw InvalidSpec("right distributivity fails");
                }
    }

    void derive_neg() {
        neg.assign(order, -1);
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                if (add(a, b) == zero) neg[a] = b;
    }

    static FiniteRing from_tables(std::vector<int> add_tab, std::vector<int> mul_tab, json provenance) {
        FiniteRing R;
        int n = 0;
        while (n * n < (int)add_tab.size()) ++n;
        if (n * n != (int)add_tab.size()) throw InvalidSpec("add table is not square");
        R.order = n;
        R.add_tab = std::move(add_tab);
        R.mul_tab = std::move(mul_tab);
        R.provenance = std::move(provenance);
        // locate zero and one
        R.zero = -1;
        R.one = -1;
        for (int z = 0; z < n; ++z) {
            bool ok = true;
            for (int a = 0; a < n && ok; ++a) ok = R.add(a, z) == a && R.add(z, a) == a;
            if (ok) { R.zero = z; break; }
        }
        for (int u = 0; u < n; ++u) {
            bool ok = true;
            for (int a = 0; a < n && ok; ++a) ok = R.mul(a, u) == a && R.mul(u, a) == a;
            if (ok) { R.one = u; break; }
        }
        if (R.zero < 0) throw InvalidSpec("no additive identity found");
        if (R.one < 0) throw InvalidSpec("no multiplicative identity found");
        R.audit();
        R.derive_neg();
        return R;
    }
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Multiplication reversed; used for the left-right duality checks.
inline FiniteRing opposite(const FiniteRing& R) {
    FiniteRing S = R;
    for (int a = 0; a < R.order; ++a)
        for (int b = 0; b < R.order; ++b)
            S.mul_tab[a * R.order + b] = R.mul(b, a);
    S.provenance = json{{"kind", "opposite"}, {"base", R.provenance}};
    return S;
}

struct IdempotentReport {
    IndexSet all;
    IndexSet left_semicentral;   // S_l(R): xe = exe for all x
    IndexSet right_semicentral;  // S_r(R): ex = exe for all x
    IndexSet central;            // B(R) = S_l ∩ S_r
    bool semicentral_reduced = false;  // S_l = {0, 1}
};

inline IdempotentReport idempotent_report(const FiniteRing& R) {
    IdempotentReport rep;
    for (int e = 0; e < R.order; ++e) {
        if (!R.is_idempotent(e)) continue;
        rep.all.push_back(e);
        bool left = true, right = true;
        for (int x = 0; x < R.order; ++x) {
            int exe = R.mul(R.mul(e, x), e);
            if (R.mul(x, e) != exe) left = false;
            if (R.mul(e, x) != exe) right = false;
            if (!left && !right) break;
        }
        if (left) rep.left_semicentral.push_back(e);
        if (right) rep.right_semicentral.push_back(e);
        if (left && right) rep.central.push_back(e);
    }
    IndexSet trivial;
    trivial.push_back(R.zero);
    if (R.one != R.zero) trivial.push_back(R.one);
    std::sort(trivial.begin(), trivial.end());
    rep.semicentral_reduced = rep.left_semicentral == trivial;
    return rep;
}

}  // namespace baerlab
