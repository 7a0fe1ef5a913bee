#include <doctest.h>

#include "baerlab/corpus.hpp"
#include "baerlab/module_predicates.hpp"
#include "baerlab/ring_predicates.hpp"
#include "baerlab/torsion.hpp"

using namespace baerlab;

static RingPtr ring_ptr(FiniteRing R) { return std::make_shared<const FiniteRing>(std::move(R)); }

TEST_CASE("triangular bundle layout") {
    auto specs = gen_triangular_fixture_specs();
    GenTriangular G = build_gen_triangular(specs[0], 4096);  // 2x2 triangle over F2
    CHECK(G.ring.order == 8);
    CHECK(G.A.order == 2);
    CHECK(G.C.order == 2);
    for (int x = 0; x < G.ring.order; ++x) {
        auto [a, m, c] = G.parts(x);
        CHECK(G.compose(a, m, c) == x);
    }
    // block multiplication: (a m; 0 c)(a' m'; 0 c') = (aa', am' + mc'; 0 cc')
    for (int x = 0; x < G.ring.order; ++x)
        for (int y = 0; y < G.ring.order; ++y) {
            auto [a1, m1, c1] = G.parts(x);
            auto [a2, m2, c2] = G.parts(y);
            int prod = G.compose(G.A.mul(a1, a2), G.B.add(G.left(a1, m2), G.B.act(m1, c2)),
                                 G.C.mul(c1, c2));
            CHECK(G.ring.mul(x, y) == prod);
        }
}

TEST_CASE("radical of the triangle over a field is confined to the top block") {
    GenTriangular G = build_gen_triangular(gen_triangular_fixture_specs()[0], 4096);
    Report rep = triangular_radical_check(G);
    CHECK(rep.all_hold());
    CHECK(rep.subject.at("proper").get<bool>());
    auto Rp = ring_ptr(G.ring);
    CHECK(beta_radical(regular_module(Rp)).beta == IndexSet{G.ring.zero});
}

TEST_CASE("radical of the triangle over Z4 is everything") {
    FiniteRing T = upper_triangular_ring(2, zmod(4));
    CHECK(T.order == 64);
    auto Tp = ring_ptr(T);
    FiniteModule reg = regular_module(Tp);
    auto rad = beta_radical(reg);
    CHECK(rad.classification == "torsion");
    CHECK((int)rad.beta.size() == 64);
    // the singular tower also climbs to the whole ring here
    auto sing = singular_submodules(reg);
    CHECK((int)sing.Z.size() == 8);
    CHECK((int)sing.Z2.size() == 64);
    CHECK(essential_nilpotent_ideal_search(T).holds);
}

TEST_CASE("triangular radical hypotheses are enforced") {
    // bottom corner Z4 is semicentral reduced but the zero bimodule makes a
    // proper idempotent of A act trivially
    GenTriangular G = build_gen_triangular(gen_triangular_fixture_specs()[11], 4096);
    CHECK_THROWS_AS((void)triangular_radical_check(G), HypothesisFailed);
}

TEST_CASE("triangular radical clauses across the fixture list") {
    int checked = 0;
    for (const auto& spec : gen_triangular_fixture_specs()) {
        GenTriangular G = build_gen_triangular(spec, 4096);
        try {
            Report rep = triangular_radical_check(G);
            CHECK(rep.all_hold());
            ++checked;
        } catch (const HypothesisFailed&) {
        }
    }
    CHECK(checked >= 10);
}

TEST_CASE("bimodule annihilator condition decides the summand intersection property") {
    int with = 0, without = 0;
    for (const auto& spec : gen_triangular_fixture_specs()) {
        GenTriangular G = build_gen_triangular(spec, 4096);
        if (!ring_predicates(G.A).indecomposable || !ring_predicates(G.C).indecomposable) continue;
        bool faithful = true;
        for (int m = 0; m < G.B.order && faithful; ++m) {
            if (m == G.B.zero) continue;
            faithful = right_annihilator(G.B, IndexSet{m}).members == IndexSet{G.C.zero};
        }
        bool ssip = has_summand_intersection(G.ring).holds;
        CHECK(ssip == faithful);
        (faithful ? with : without) += 1;
    }
    CHECK(with >= 3);
    CHECK(without >= 2);
}
