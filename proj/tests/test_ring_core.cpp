#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "baerlab/construct.hpp"
#include "baerlab/ideals.hpp"
#include "baerlab/ring_predicates.hpp"

using namespace baerlab;

// Independent residue-arithmetic oracle for annihilators in Z/n.
static IndexSet zmod_annihilator(int n, const IndexSet& S) {
    IndexSet out;
    for (int a = 0; a < n; ++a) {
        bool kills = true;
        for (int s : S) kills = kills && (s * a) % n == 0;
        if (kills) out.push_back(a);
    }
    return out;
}

TEST_CASE("residue ring tables") {
    FiniteRing R = zmod(6);
    CHECK(R.order == 6);
    CHECK(R.zero == 0);
    CHECK(R.one == 1);
    CHECK(R.mul(2, 5) == 4);
    CHECK(R.add(4, 5) == 3);
    CHECK(R.is_commutative());
    CHECK(R.idempotents() == IndexSet{0, 1, 3, 4});
    CHECK(zmod(4).idempotents() == IndexSet{0, 1});
    CHECK(zmod(1).order == 1);
}

TEST_CASE("right annihilators in residue rings") {
    FiniteRing R6 = zmod(6);
    CHECK(right_annihilator_ring(R6, {2}).members == zmod_annihilator(6, {2}));
    CHECK(right_annihilator_ring(R6, {2}).members == IndexSet{0, 3});
    CHECK(right_annihilator_ring(R6, {0}).members == IndexSet{0, 1, 2, 3, 4, 5});
    CHECK(right_annihilator_ring(R6, {1}).members == IndexSet{0});
    CHECK(right_annihilator_ring(zmod(4), {2}).members == IndexSet{0, 2});
}

TEST_CASE("idempotent generators of right ideals") {
    FiniteRing R6 = zmod(6);
    auto e = idempotent_generator(R6, IndexSet{0, 3});
    REQUIRE(e.has_value());
    CHECK(*e == 3);
    CHECK(idempotent_generator(R6, IndexSet{0}).has_value());
    CHECK(!idempotent_generator(zmod(4), IndexSet{0, 2}).has_value());
}

TEST_CASE("ideal lattices and structural ideals") {
    FiniteRing R4 = zmod(4);
    CHECK(all_right_ideals(R4).size() == 3);
    auto st4 = structural_ideals(R4);
    CHECK(st4.jacobson_radical.members == IndexSet{0, 2});
    CHECK(st4.socle.members == IndexSet{0, 2});

    auto st6 = structural_ideals(zmod(6));
    CHECK(st6.jacobson_radical.members == IndexSet{0});
    CHECK((int)st6.socle.members.size() == 6);

    // right ideals of a 2x2 matrix ring over F2 match the subspace count
    FiniteRing M2 = matrix_ring(2, prime_field(2));
    CHECK(M2.order == 16);
    CHECK(all_right_ideals(M2).size() == 5);
    CHECK(M2.idempotents().size() == 8);
}

TEST_CASE("essential and nilpotent ideals") {
    FiniteRing R4 = zmod(4);
    CHECK(essential_right_ideal(R4, {0, 2}));
    CHECK(!essential_right_ideal(zmod(6), {0, 3}));
    CHECK(nilpotency_degree(R4, {0, 2}) == 2);
    Verdict v4 = essential_nilpotent_ideal_search(R4);
    CHECK(v4.holds);
    CHECK(!essential_nilpotent_ideal_search(zmod(6)).holds);
}

TEST_CASE("ring predicate fixtures") {
    auto p6 = ring_predicates(zmod(6));
    CHECK(p6.baer.holds);
    CHECK(p6.rickart.holds);
    CHECK(p6.semisimple);

    auto p4 = ring_predicates(zmod(4));
    CHECK(!p4.rickart.holds);
    CHECK(p4.rickart.witness.at("a").get<int>() == 2);
    CHECK(!p4.baer.holds);
    CHECK(!p4.semisimple);
    CHECK(!p4.semiprime);

    FiniteRing T2 = upper_triangular_ring(2, prime_field(2));
    CHECK(T2.order == 8);
    CHECK(ring_predicates(T2).baer.holds);
    CHECK(ring_predicates(upper_triangular_ring(2, prime_field(3))).baer.holds);

    auto pm = ring_predicates(matrix_ring(2, prime_field(2)));
    CHECK(pm.baer.holds);
    CHECK(pm.ssip.holds);
    CHECK(pm.semisimple);
    CHECK(pm.semiprime);
    CHECK(pm.semicentral_reduced);
}

TEST_CASE("semicentral idempotents in a triangular ring") {
    FiniteRing T2 = upper_triangular_ring(2, prime_field(2));
    auto rep = idempotent_report(T2);
    CHECK(rep.all.size() == 6);
    CHECK(!rep.semicentral_reduced);
    for (int e : rep.left_semicentral) {
        for (int x = 0; x < T2.order; ++x) CHECK(T2.mul(x, e) == T2.mul(e, T2.mul(x, e)));
    }
}

TEST_CASE("constructor audit rejects bad tables") {
    CHECK_THROWS_AS((void)zmod(0), InvalidSpec);
    CHECK_THROWS_AS((void)prime_field(6), InvalidSpec);
    CHECK_THROWS_AS((void)build_ring(json{{"kind", "nonsense"}}, 64), InvalidSpec);
    CHECK_THROWS_AS((void)build_ring(json{{"kind", "zmod"}, {"n", 100}}, 64), CapExceeded);
}

TEST_CASE("opposite and quotient constructions") {
    FiniteRing T2 = upper_triangular_ring(2, prime_field(2));
    FiniteRing Op = build_ring(json{{"kind", "opposite"},
                                    {"base", json{{"kind", "upper_triangular"}, {"k", 2},
                                                  {"base", json{{"kind", "prime_field"}, {"p", 2}}}}}},
                               64);
    CHECK(Op.order == 8);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) CHECK(Op.mul(a, b) == T2.mul(b, a));

    FiniteRing Q = quotient_ring(zmod(8), {2});
    CHECK(Q.order == 2);
}
