#pragma once

// Deterministic corpus generation: a fixed fixture list plus seeded random
// samples of the constructor grammar, with cheap fingerprint deduplication.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "baerlab/construct.hpp"
#include "baerlab/ideals.hpp"

namespace baerlab {

struct CorpusConfig {
    int max_ring_order = 16;
    int max_module_order = 16;
    std::uint64_t seed = 42;
    int grammar_depth = 3;
    int count = 16;  // random rings appended after the fixtures
    int fixture_cap = 4096;  // fixtures may exceed max_ring_order up to this
};

inline CorpusConfig corpus_config_from_json(const json& j) {
    CorpusConfig cfg;
    cfg.max_ring_order = j.value("max_ring_order", cfg.max_ring_order);
    cfg.max_module_order = j.value("max_module_order", cfg.max_module_order);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.grammar_depth = j.value("grammar_depth", cfg.grammar_depth);
    cfg.count = j.value("count", cfg.count);
    cfg.fixture_cap = j.value("fixture_cap", cfg.fixture_cap);
    return cfg;
}

struct CorpusRing {
    std::string name;
    json spec;
    RingPtr ring;
};

struct CorpusModule {
    json recipe;  // replayable alongside the ring spec
    FiniteModule module;
};

/// Cheap isomorphism fingerprint: order, idempotent count, right ideal count.
inline std::tuple<int, int, int> ring_fingerprint(const FiniteRing& R) {
    return {R.order, (int)R.idempotents().size(), (int)all_right_ideals(R).size()};
}

/// The generalized triangular fixtures used by the triangular lemmas. All
/// have indecomposable corner rings; both outcomes of the bimodule
/// annihilator condition are represented.
inline std::vector<json> gen_triangular_fixture_specs() {
    auto zn = [](int n) { return json{{"kind", "zmod"}, {"n", n}}; };
    auto fp = [](int p) { return json{{"kind", "prime_field"}, {"p", p}}; };
    auto col = [](int k) { return json{{"kind", "column"}, {"copies", k}}; };
    auto quot = [](IndexSet sub) {
        return json{{"kind", "module"}, {"spec", json{{"kind", "quotient"}, {"sub", sub}}}};
    };
    auto gt = [](json a, json c, json b) {
        return json{{"kind", "gen_triangular"}, {"a", std::move(a)}, {"c", std::move(c)},
                    {"bimodule", std::move(b)}};
    };
    return {
        gt(fp(2), fp(2), col(1)),                                    // T2(F2)
        gt(fp(3), fp(3), col(1)),                                    // T2(F3)
        gt(fp(5), fp(5), col(1)),                                    // T2(F5)
        gt(fp(2), fp(2), col(2)),
        gt(fp(3), fp(3), col(2)),
        gt(zn(4), zn(4), col(1)),                                    // T2(Z4)
        gt(zn(4), zn(4), quot({0, 2})),
        gt(zn(8), zn(8), quot({0, 2, 4, 6})),
        gt(fp(3), zn(9), quot({0, 3, 6})),
        gt(fp(2), zn(4), quot({0, 2})),
        gt(zn(4), fp(2), json{{"kind", "module"}, {"spec", json{{"kind", "regular"}}}}),
        gt(fp(2), fp(2), json{{"kind", "zero"}}),
    };
}

inline std::vector<GenTriangular> gen_triangular_fixtures(int cap = kDefaultOrderCap) {
    std::vector<GenTriangular> out;
    for (const auto& s : gen_triangular_fixture_specs()) out.push_back(build_gen_triangular(s, cap));
    return out;
}

namespace detail {

inline json random_ring_spec(std::mt19937_64& rng, int depth, int max_order) {
    auto zn = [](int n) { return json{{"kind", "zmod"}, {"n", n}}; };
    int pick = (int)(rng() % 6);
    if (depth <= 1 || max_order < 4) pick = 0;
    switch (pick) {
        case 1: {  // product of two residue rings
            int a = 2 + (int)(rng() % (std::uint64_t)(max_order / 2 - 1));
            int bmax = std::max(2, max_order / a);
            int b = 2 + (int)(rng() % (std::uint64_t)std::max<std::uint64_t>(1, bmax - 1));
            return json{{"kind", "product"}, {"factors", json::array({zn(a), zn(b)})}};
        }
        case 2:  // T2 over a small base
            if (max_order >= 8) return json{{"kind", "upper_triangular"}, {"k", 2}, {"base", zn(2)}};
            break;
        case 3: {  // trivial extension of a residue ring by itself
            int a = 2 + (int)(rng() % 3);
            if (a * a <= max_order)
                return json{{"kind", "trivial_extension"}, {"base", zn(a)},
                            {"module", json{{"kind", "regular"}}}};
            break;
        }
        case 4: {  // quotient of a residue ring
            int n = 4 + (int)(rng() % (std::uint64_t)std::max(1, max_order - 3));
            int g = 2 + (int)(rng() % 3);
            return json{{"kind", "quotient"}, {"base", zn(n)}, {"generators", IndexSet{g % n}}};
        }
        case 5:  // opposite of a nested sample
            return json{{"kind", "opposite"},
                        {"base", random_ring_spec(rng, depth - 1, max_order)}};
        default:
            break;
    }
    int n = 2 + (int)(rng() % (std::uint64_t)(std::max(2, max_order) - 1));
    return zn(n);
}

}  // namespace detail

inline std::vector<CorpusRing> generate_rings(const CorpusConfig& cfg) {
    std::vector<std::pair<std::string, json>> specs;
    auto zn = [](int n) { return json{{"kind", "zmod"}, {"n", n}}; };
    auto fp = [](int p) { return json{{"kind", "prime_field"}, {"p", p}}; };
    for (int n = 1; n <= std::min(16, cfg.max_ring_order); ++n)
        specs.emplace_back("Z" + std::to_string(n), zn(n));
    for (int p : {2, 3, 5, 7, 11, 13})
        if (p <= cfg.max_ring_order) specs.emplace_back("F" + std::to_string(p), fp(p));
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {2, 8}, {3, 3}, {4, 4}, {2, 6}})
        if (a * b <= cfg.max_ring_order)
            specs.emplace_back("Z" + std::to_string(a) + "xZ" + std::to_string(b),
                               json{{"kind", "product"}, {"factors", json::array({zn(a), zn(b)})}});
    specs.emplace_back("M2F2", json{{"kind", "matrix"}, {"k", 2}, {"base", fp(2)}});
    specs.emplace_back("T2F2", json{{"kind", "upper_triangular"}, {"k", 2}, {"base", fp(2)}});
    specs.emplace_back("T2F3", json{{"kind", "upper_triangular"}, {"k", 2}, {"base", fp(3)}});
    specs.emplace_back("T2Z4", json{{"kind", "upper_triangular"}, {"k", 2}, {"base", zn(4)}});
    {
        auto gts = gen_triangular_fixture_specs();
        for (size_t i = 0; i < gts.size(); ++i)
            specs.emplace_back("GT" + std::to_string(i), gts[i]);
    }
    specs.emplace_back("TE_Z2", json{{"kind", "trivial_extension"}, {"base", zn(2)},
                                     {"module", json{{"kind", "regular"}}}});
    specs.emplace_back("TE_Z3", json{{"kind", "trivial_extension"}, {"base", zn(3)},
                                     {"module", json{{"kind", "regular"}}}});
    specs.emplace_back("TE_Z4_mod2", json{{"kind", "trivial_extension"}, {"base", zn(4)},
                                          {"module", json{{"kind", "quotient"}, {"sub", IndexSet{0, 2}}}}});

    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < cfg.count; ++i)
        specs.emplace_back("rand" + std::to_string(i),
                           detail::random_ring_spec(rng, cfg.grammar_depth, cfg.max_ring_order));

    std::vector<CorpusRing> out;
    std::set<std::tuple<int, int, int>> seen;
    for (auto& [name, spec] : specs) {
        FiniteRing R = build_ring(spec, cfg.fixture_cap);
        auto fp_key = ring_fingerprint(R);
        if (!seen.insert(fp_key).second) continue;
        CorpusRing cr;
        cr.name = name;
        cr.spec = spec;
        cr.ring = std::make_shared<const FiniteRing>(std::move(R));
        out.push_back(std::move(cr));
    }
    return out;
}

/// Modules over one corpus ring: regular, idempotent pieces, cyclic
/// quotients, a few direct sums, and seeded random submodules/quotients.
inline std::vector<CorpusModule> generate_modules(const CorpusRing& cr, const CorpusConfig& cfg) {
    const FiniteRing& R = *cr.ring;
    std::vector<CorpusModule> out;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    auto add = [&](FiniteModule M, json recipe) {
        if (M.order > cfg.max_module_order) return;
        if (!seen.insert({M.add_tab, M.act_tab}).second) return;
        out.push_back(CorpusModule{std::move(recipe), std::move(M)});
    };
    if (R.order <= cfg.max_module_order) add(regular_module(cr.ring), json{{"kind", "regular"}});
    for (int e : R.idempotents())
        add(idempotent_piece(cr.ring, e), json{{"kind", "idempotent_piece"}, {"e", e}});
    FiniteModule reg = regular_module(cr.ring);
    for (const auto& I : all_right_ideals(R)) {
        if (R.order / (int)I.size() > cfg.max_module_order) continue;
        add(quotient_module(reg, I), json{{"kind", "quotient"}, {"sub", I}});
    }
    const size_t base_count = out.size();
    for (size_t i = 0; i < base_count && i < 6; ++i)
        for (size_t j = i; j < base_count && j < 6; ++j) {
            long long ord = (long long)out[i].module.order * out[j].module.order;
            if (ord > cfg.max_module_order || ord <= 1) continue;
            add(direct_sum({out[i].module, out[j].module}, cfg.max_module_order),
                json{{"kind", "direct_sum"}, {"parts", json::array({out[i].recipe, out[j].recipe})}});
        }
    std::mt19937_64 rng(cfg.seed ^ (std::uint64_t)R.order * 0x9e3779b97f4a7c15ull);
    for (int t = 0; t < 4 && !out.empty(); ++t) {
        size_t i = rng() % out.size();
        const FiniteModule& M = out[i].module;
        if (M.order <= 1) continue;
        int x = (int)(rng() % (std::uint64_t)M.order);
        if (rng() % 2) {
            add(submodule_generated(M, {x}),
                json{{"kind", "submodule_generated"}, {"gens", IndexSet{x}}, {"of", out[i].recipe}});
        } else {
            add(quotient_module(M, M.cyclic(x)),
                json{{"kind", "quotient"}, {"sub", M.cyclic(x)}, {"of", out[i].recipe}});
        }
    }
    return out;
}

}  // namespace baerlab
