#pragma once

// Sorted-unique index sets and generic closure helpers. Every subset of a
// ring or module is an IndexSet over canonical element indices.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace baerlab {

using IndexSet = std::vector<int>;

inline IndexSet make_set(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline bool set_contains(const IndexSet& s, int x) {
    return std::binary_search(s.begin(), s.end(), x);
}

inline IndexSet set_intersect(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool set_subset(const IndexSet& a, const IndexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Closes `seed` under a list of binary operations and a list of unary
/// element expansions. `binary(a,b)` and `expand(a)` return element indices.
inline IndexSet close_under(IndexSet seed,
                            const std::vector<std::function<int(int, int)>>& binary,
                            const std::vector<std::function<std::vector<int>(int)>>& expand) {
    std::set<int> have(seed.begin(), seed.end());
    std::vector<int> frontier(seed.begin(), seed.end());
    while (!frontier.empty()) {
        std::vector<int> next;
        auto push = [&](int x) {
            if (have.insert(x).second) next.push_back(x);
        };
        for (int a : frontier) {
            for (const auto& f : expand)
                for (int x : f(a)) push(x);
            for (const auto& op : binary) {
                for (int b : have) {
                    push(op(a, b));
                    push(op(b, a));
                }
            }
        }
        frontier = std::move(next);
    }
    return IndexSet(have.begin(), have.end());
}

/// Closes a family of sets under a binary set operation (e.g. pairwise
/// intersection or pairwise sum). Returns the closed family, deduplicated.
inline std::vector<IndexSet> close_family(std::vector<IndexSet> seeds,
                                          const std::function<IndexSet(const IndexSet&, const IndexSet&)>& op) {
    std::set<IndexSet> have(seeds.begin(), seeds.end());
    std::vector<IndexSet> frontier(have.begin(), have.end());
    while (!frontier.empty()) {
        std::vector<IndexSet> next;
        for (const auto& a : frontier) {
            for (const auto& b : have) {
                IndexSet c = op(a, b);
                if (have.insert(c).second) next.push_back(std::move(c));
            }
        }
        frontier = std::move(next);
    }
    return {have.begin(), have.end()};
}

}  // namespace baerlab
