#include <doctest.h>

#include "baerlab/construct.hpp"
#include "baerlab/hom.hpp"
#include "baerlab/module.hpp"

using namespace baerlab;

static RingPtr ring_ptr(FiniteRing R) { return std::make_shared<const FiniteRing>(std::move(R)); }

TEST_CASE("submodule lattice of small residue modules") {
    auto R4 = ring_ptr(zmod(4));
    FiniteModule M = regular_module(R4);
    CHECK(M.order == 4);
    auto subs = all_submodules(M);
    CHECK(subs.size() == 3);
    CHECK(M.cyclic(2) == IndexSet{0, 2});
    CHECK(is_submodule_set(M, {0, 2}));
    CHECK(!is_submodule_set(M, {0, 1}));

    auto R6 = ring_ptr(zmod(6));
    FiniteModule N = regular_module(R6);
    CHECK(all_submodules(N).size() == 4);
}

TEST_CASE("annihilators over a module") {
    auto R4 = ring_ptr(zmod(4));
    FiniteModule M = regular_module(R4);
    CHECK(right_annihilator(M, {2}).members == IndexSet{0, 2});
    CHECK((int)right_annihilator(M, {0}).members.size() == 4);

    auto R6 = ring_ptr(zmod(6));
    FiniteModule N = regular_module(R6);
    CHECK(right_annihilator(N, {2, 3}).members == IndexSet{0});
}

TEST_CASE("essentiality and relative complements") {
    auto R4 = ring_ptr(zmod(4));
    FiniteModule M = regular_module(R4);
    CHECK(essential_in(M, {0, 2}));
    CHECK(essential_in(M, M.universe()));
    CHECK(!essential_in(M, {0}));

    auto R6 = ring_ptr(zmod(6));
    FiniteModule N = regular_module(R6);
    CHECK(!essential_in(N, {0, 3}));
    CHECK(relative_complement(N, {0, 3}, N.universe()) == IndexSet{0, 2, 4});
    CHECK_THROWS_AS((void)relative_complement(N, {0, 1}, N.universe()), NotSubmodule);
}

TEST_CASE("quotients, pieces, and direct sums") {
    auto R4 = ring_ptr(zmod(4));
    FiniteModule M = regular_module(R4);
    FiniteModule Q = quotient_module(M, {0, 2});
    CHECK(Q.order == 2);
    CHECK(right_annihilator(Q, Q.universe()).members == IndexSet{0, 2});

    FiniteModule S = direct_sum({M, Q});
    CHECK(S.order == 8);
    CHECK_THROWS_AS((void)direct_sum({M, M, M, M, M, M, M}, 4096), CapExceeded);

    FiniteRing T2 = upper_triangular_ring(2, prime_field(2));
    auto T2p = ring_ptr(T2);
    // e = diag(1,0): its right piece has order 4 (top row of the triangle)
    int e = -1;
    for (int x : T2.idempotents()) {
        if (x == T2.zero || x == T2.one) continue;
        if ((int)T2.principal_right(x).size() == 4 &&
            set_contains(idempotent_report(T2).left_semicentral, x)) {
            e = x;
            break;
        }
    }
    REQUIRE(e >= 0);
    CHECK(idempotent_piece(T2p, e).order == 4);
    CHECK_THROWS_AS((void)quotient_module(M, IndexSet{0, 1}), NotSubmodule);
}

TEST_CASE("hom sets against a counting oracle") {
    auto R4 = ring_ptr(zmod(4));
    FiniteModule M = regular_module(R4);
    FiniteModule Z2 = quotient_module(M, {0, 2});
    // a hom Z2 -> Z4 sends the generator into the elements killed by ann(Z2)
    CHECK(enumerate_homs(Z2, M).maps.size() == 2);
    auto Rz = ring_ptr(zmod(6));
    FiniteModule N = regular_module(Rz);
    CHECK(enumerate_homs(N, N).maps.size() == 6);
    CHECK(enumerate_homs(M, zero_module(R4)).maps.size() == 1);
}

TEST_CASE("endomorphism rings") {
    auto R4 = ring_ptr(zmod(4));
    EndoRing E = endomorphism_ring(regular_module(R4));
    CHECK(E.ring.order == 4);
    CHECK(E.ring.is_commutative());

    auto M2 = ring_ptr(matrix_ring(2, prime_field(2)));
    EndoRing EM = endomorphism_ring(regular_module(M2));
    CHECK(EM.ring.order == 16);
}

TEST_CASE("module builder errors") {
    auto R4 = ring_ptr(zmod(4));
    CHECK_THROWS_AS((void)idempotent_piece(R4, 2), NotIdempotent);
    CHECK_THROWS_AS((void)build_module(R4, json{{"kind", "nonsense"}}, 64), InvalidSpec);
    FiniteModule M = regular_module(R4);
    std::vector<int> bad_act(4 * 4, 0);
    CHECK_THROWS_AS((void)module_from_tables(R4, M.add_tab, bad_act, json{}), InvalidSpec);
}
