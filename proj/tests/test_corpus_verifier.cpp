#include <doctest.h>

#include "baerlab/verifier.hpp"

using namespace baerlab;

TEST_CASE("ring corpus is deterministic and well populated") {
    CorpusConfig cfg;
    auto a = generate_rings(cfg);
    auto b = generate_rings(cfg);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].spec == b[i].spec);
        CHECK(a[i].ring->mul_tab == b[i].ring->mul_tab);
    }
    CHECK(a.size() >= 30);

    bool has_t2z4 = false;
    for (const auto& r : a) has_t2z4 = has_t2z4 || r.ring->order == 64;
    CHECK(has_t2z4);  // fixtures may exceed the random-ring order cap
}

TEST_CASE("different seeds change only the random tail") {
    CorpusConfig cfg;
    CorpusConfig other = cfg;
    other.seed = 7;
    auto a = generate_rings(cfg);
    auto b = generate_rings(other);
    // the fixture prefix is identical
    size_t probe = std::min<size_t>(10, std::min(a.size(), b.size()));
    for (size_t i = 0; i < probe; ++i) CHECK(a[i].spec == b[i].spec);
}

TEST_CASE("module streams per ring") {
    CorpusConfig cfg;
    auto rings = generate_rings(cfg);
    size_t total = 0;
    for (const auto& cr : rings) {
        auto mods = generate_modules(cr, cfg);
        for (const auto& m : mods) {
            CHECK(m.module.order <= cfg.max_module_order);
            CHECK(m.module.ring->order == cr.ring->order);
        }
        total += mods.size();
        if (cr.ring->order == 4 && cr.spec.value("kind", "") == "zmod") {
            // Z4 stream carries the regular module, its simple quotient, and a sum
            bool has4 = false, has2 = false, has8 = false;
            for (const auto& m : mods) {
                has4 = has4 || m.module.order == 4;
                has2 = has2 || m.module.order == 2;
                has8 = has8 || m.module.order == 8;
            }
            CHECK(has4);
            CHECK(has2);
            CHECK(has8);
        }
    }
    CHECK(total >= 200);
}

TEST_CASE("check registry") {
    auto names = check_names();
    CHECK(names.size() >= 20);
    CorpusConfig cfg;
    CHECK_THROWS_AS((void)run_check("no_such_check", cfg), UnknownCheck);
}

TEST_CASE("fast checks pass on the default corpus") {
    CorpusConfig cfg;
    for (const char* name : {"annihilator_lemma", "rightsummand_lemma", "simple_artinian"}) {
        CheckReport rep = run_check(name, cfg, 4);
        CHECK(rep.ok());
        CHECK(rep.failures.empty());
        CHECK(rep.instances_tested > 0);
    }
}

TEST_CASE("junit mirror shape") {
    CorpusConfig cfg;
    CheckReport rep = run_check("simple_artinian", cfg);
    std::string xml = junit_xml({rep});
    CHECK(xml.find("<testsuite") != std::string::npos);
    CHECK(xml.find("simple_artinian") != std::string::npos);
    CHECK(xml.find("<failure") == std::string::npos);
}

TEST_CASE("counterexample search goals") {
    auto goals = search_goals();
    CHECK(goals.size() == 5);
    CorpusConfig cfg;
    Verdict v = find_counterexample("SIP_without_SSIP_ring", cfg);
    CHECK(!v.holds);
    CHECK(v.witness.at("exhausted").get<bool>());
    CHECK_THROWS_AS((void)find_counterexample("no_such_goal", cfg), UnknownCheck);
}
