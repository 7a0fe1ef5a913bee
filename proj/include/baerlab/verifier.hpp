#pragma once

// Named executable checks over the corpus, counterexample search goals, and
// report serialization (JSON and JUnit).

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "baerlab/corpus.hpp"
#include "baerlab/module_predicates.hpp"
#include "baerlab/ring_predicates.hpp"
#include "baerlab/torsion.hpp"

namespace baerlab {

struct CheckReport {
    std::string check_name;
    std::string statement;  // the property asserted, in plain mathematical terms
    long long instances_tested = 0;
    long long passes = 0;
    long long inapplicable = 0;
    std::vector<json> failures;
    long long elapsed_ms = 0;
    std::uint64_t seed = 0;

    bool ok() const { return failures.empty(); }
    json to_json() const {
        return {{"check", check_name},      {"statement", statement},
                {"instances_tested", instances_tested}, {"passes", passes},
                {"inapplicable", inapplicable},         {"failures", failures},
                {"elapsed_ms", elapsed_ms}, {"seed", seed}};
    }
};

struct Corpus {
    std::vector<CorpusRing> rings;
    std::vector<std::vector<CorpusModule>> modules;  // parallel to rings
};

inline Corpus build_corpus(const CorpusConfig& cfg) {
    Corpus c;
    c.rings = generate_rings(cfg);
    for (const auto& r : c.rings) c.modules.push_back(generate_modules(r, cfg));
    return c;
}

/// Process-wide cache keyed by the serialized config.
inline const Corpus& corpus_for(const CorpusConfig& cfg) {
    static std::map<std::string, Corpus> cache;
    static std::mutex mu;
    json key = {{"r", cfg.max_ring_order}, {"m", cfg.max_module_order}, {"s", cfg.seed},
                {"d", cfg.grammar_depth},  {"c", cfg.count},            {"f", cfg.fixture_cap}};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key.dump());
    if (it == cache.end()) it = cache.emplace(key.dump(), build_corpus(cfg)).first;
    return it->second;
}

namespace detail_verify {

struct Task {
    json id;
    std::function<json()> fn;  // returns {"status": "pass"|"fail"|"na", ...}
};

inline json run_guarded(const Task& t) {
    try {
        return t.fn();
    } catch (const CapExceeded& e) {
        return {{"status", "na"}, {"reason", std::string("cap: ") + e.what()}};
    }
}

inline std::vector<json> run_tasks(const std::vector<Task>& tasks, int jobs) {
    std::vector<json> results(tasks.size());
    if (jobs <= 1 || tasks.size() <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) results[i] = run_guarded(tasks[i]);
        return results;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
            results[i] = run_guarded(tasks[i]);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return results;
}

inline void fold(CheckReport& rep, const std::vector<Task>& tasks, int jobs) {
    auto results = run_tasks(tasks, jobs);
    for (size_t i = 0; i < results.size(); ++i) {
        std::string st = results[i].value("status", "fail");
        if (st == "na") {
            ++rep.inapplicable;
            continue;
        }
        ++rep.instances_tested;
        if (st == "pass") {
            ++rep.passes;
        } else {
            json f = results[i];
            f["instance"] = tasks[i].id;
            rep.failures.push_back(std::move(f));
        }
    }
}

inline json pass() { return {{"status", "pass"}}; }
inline json na(const std::string& why = "") { return {{"status", "na"}, {"reason", why}}; }
inline json fail(json cert) {
    cert["status"] = "fail";
    return cert;
}

inline json instance_id(const CorpusRing& r, const CorpusModule& m) {
    return {{"ring", r.spec}, {"module", m.recipe}};
}

inline std::optional<bool> try_projective(const FiniteModule& M) {
    try {
        return is_projective(M).holds;
    } catch (const CapExceeded&) {
        return std::nullopt;
    }
}

}  // namespace detail_verify

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

inline CheckReport check_srickart_eq_sbaer(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "srickart_eq_sbaer";
    rep.statement = "over a finite ring the s.Rickart and s.Baer module predicates agree";
    const Corpus& c = corpus_for(cfg);
    std::vector<Task> tasks;
    for (size_t i = 0; i < c.rings.size(); ++i)
        for (const auto& cm : c.modules[i])
            tasks.push_back({instance_id(c.rings[i], cm), [&cm] {
                                 Verdict a = is_s_rickart(cm.module);
                                 Verdict b = is_s_baer(cm.module);
                                 if (a.holds == b.holds) return pass();
                                 return fail({{"s_rickart", json(a)}, {"s_baer", json(b)}});
                             }});
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_annihilator_lemma(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "annihilator_lemma";
    rep.statement = "aR intersect r_R(X) equals a * r_R(Xa) for a in R and nonempty X in M";
    rep.seed = cfg.seed;
    const Corpus& c = corpus_for(cfg);
    std::vector<Task> tasks;
    std::mt19937_64 rng(cfg.seed + 1);
    for (size_t i = 0; i < c.rings.size(); ++i) {
        const FiniteRing& R = *c.rings[i].ring;
        for (const auto& cm : c.modules[i]) {
            const FiniteModule& M = cm.module;
            for (int t = 0; t < 3; ++t) {
                int a = (int)(rng() % (std::uint64_t)R.order);
                IndexSet X;
                int k = 1 + (int)(rng() % 3);
                for (int q = 0; q < k; ++q) X.push_back((int)(rng() % (std::uint64_t)M.order));
                X = make_set(std::move(X));
                json id = instance_id(c.rings[i], cm);
                id["a"] = a;
                id["X"] = X;
                tasks.push_back({id, [&R, &M, a, X] {
                                     IndexSet lhs = set_intersect(R.principal_right(a),
                                                                  right_annihilator(M, X).members);
                                     IndexSet Xa;
                                     for (int x : X) Xa.push_back(M.act(x, a));
                                     Xa = make_set(std::move(Xa));
                                     IndexSet rXa = right_annihilator(M, Xa).members;
                                     IndexSet rhs;
                                     for (int r : rXa) rhs.push_back(R.mul(a, r));
                                     rhs = make_set(std::move(rhs));
                                     if (lhs == rhs) return pass();
                                     return fail({{"lhs", lhs}, {"rhs", rhs}});
                                 }});
            }
        }
    }
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_rightsummand_lemma(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "rightsummand_lemma";
    rep.statement = "for a s.Baer module, eR intersect r_R(X) is idempotent-generated for every idempotent e";
    const Corpus& c = corpus_for(cfg);
    std::vector<Task> tasks;
    std::mt19937_64 rng(cfg.seed + 2);
    for (size_t i = 0; i < c.rings.size(); ++i) {
        const FiniteRing& R = *c.rings[i].ring;
        for (const auto& cm : c.modules[i]) {
            const FiniteModule& M = cm.module;
            IndexSet X;
            int k = 1 + (int)(rng() % 3);
            for (int q = 0; q < k; ++q) X.push_back((int)(rng() % (std::uint64_t)M.order));
            X = make_set(std::move(X));
            json id = instance_id(c.rings[i], cm);
            id["X"] = X;
            tasks.push_back({id, [&R, &M, X] {
                                 if (!is_s_baer(M).holds) return na("module not s.Baer");
                                 IndexSet rX = right_annihilator(M, X).members;
                                 for (int e : R.idempotents()) {
                                     IndexSet meet = set_intersect(R.principal_right(e), rX);
                                     if (!idempotent_generator(R, meet))
                                         return fail({{"e", e}, {"intersection", meet}});
                                 }
                                 return pass();
                             }});
        }
    }
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_heredity(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "heredity";
    rep.statement = "every submodule of a s.Baer (s.Rickart) module is s.Baer (s.Rickart)";
    const Corpus& c = corpus_for(cfg);
    std::vector<Task> tasks;
    for (size_t i = 0; i < c.rings.size(); ++i)
        for (const auto& cm : c.modules[i])
            tasks.push_back({instance_id(c.rings[i], cm), [&cm] {
                                 const FiniteModule& M = cm.module;
                                 bool baer = is_s_baer(M).holds;
                                 bool rick = is_s_rickart(M).holds;
                                 if (!baer && !rick) return na("neither predicate holds");
                                 for (const auto& N : all_submodules(M)) {
                                     if (baer && !is_s_baer_set(M, N).holds)
                                         return fail({{"submodule", N}, {"predicate", "s_baer"}});
                                     if (rick && !is_s_rickart_set(M, N).holds)
                                         return fail({{"submodule", N}, {"predicate", "s_rickart"}});
                                 }
                                 return pass();
                             }});
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_extension_closure(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "extension_closure";
    rep.statement = "if K and M/K are s.Baer (s.Rickart) then so is M";
    const Corpus& c = corpus_for(cfg);
    std::vector<Task> tasks;
    for (size_t i = 0; i < c.rings.size(); ++i)
        for (const auto& cm : c.modules[i])
            tasks.push_back({instance_id(c.rings[i], cm), [&cm] {
                                 const FiniteModule& M = cm.module;
                                 for (const auto& K : all_submodules(M)) {
                                     FiniteModule Q = quotient_module(M, K);
                                     if (is_s_baer_set(M, K).holds && is_s_baer(Q).holds &&
                                         !is_s_baer(M).holds)
                                         return fail({{"K", K}, {"predicate", "s_baer"}});
                                     if (is_s_rickart_set(M, K).holds && is_s_rickart(Q).holds &&
                                         !is_s_rickart(M).holds)
                                         return fail({{"K", K}, {"predicate", "s_rickart"}});
                                 }
                                 return pass();
                             }});
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_finite_direct_sums(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "finite_direct_sums";
    rep.statement = "a finite direct sum is s.Baer exactly when every part is s.Baer";
    const Corpus& c = corpus_for(cfg);
    std::vector<Task> tasks;
    for (size_t i = 0; i < c.rings.size(); ++i) {
        const auto& mods = c.modules[i];
        for (size_t a = 0; a < mods.size() && a < 6; ++a)
            for (size_t b = a; b < mods.size() && b < 6; ++b) {
                json id = {{"ring", c.rings[i].spec},
                           {"parts", json::array({mods[a].recipe, mods[b].recipe})}};
                const CorpusModule *pa = &mods[a], *pb = &mods[b];
                tasks.push_back({id, [pa, pb] {
                                     FiniteModule S = direct_sum({pa->module, pb->module});
                                     bool parts = is_s_baer(pa->module).holds && is_s_baer(pb->module).holds;
                                     bool whole = is_s_baer(S).holds;
                                     if (parts == whole) return pass();
                                     return fail({{"parts_s_baer", parts}, {"sum_s_baer", whole}});
                                 }});
            }
    }
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_beta_radical_axioms(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "beta_radical_axioms";
    rep.statement =
        "beta is an idempotent radical: beta(beta(M)) = beta(M), beta(M/beta(M)) = 0, homs map "
        "beta into beta, and M beta(R) sits inside beta(M) with equality for projective M";
    const Corpus& c = corpus_for(cfg);
    // per-ring radical of the regular module, computed once
    std::vector<IndexSet> ring_beta(c.rings.size());
    for (size_t i = 0; i < c.rings.size(); ++i)
        ring_beta[i] = beta_radical(regular_module(c.rings[i].ring)).beta;
    std::vector<Task> tasks;
    for (size_t i = 0; i < c.rings.size(); ++i) {
        const auto& mods = c.modules[i];
        for (size_t a = 0; a < mods.size(); ++a) {
            const CorpusModule* cm = &mods[a];
            const CorpusModule* partner = mods.empty() ? nullptr : &mods[(a + 1) % mods.size()];
            const IndexSet* rbeta = &ring_beta[i];
            tasks.push_back({instance_id(c.rings[i], *cm), [cm, partner, rbeta] {
                                 const FiniteModule& M = cm->module;
                                 RadicalResult r = beta_radical(M);
                                 FiniteModule B = submodule_module(M, r.beta, json{{"kind", "beta"}});
                                 if ((int)beta_radical(B).beta.size() != B.order)
                                     return fail({{"axiom", "idempotent"}, {"beta", r.beta}});
                                 FiniteModule Q = quotient_module(M, r.beta);
                                 if (beta_radical(Q).beta != IndexSet{Q.zero})
                                     return fail({{"axiom", "radical"}, {"beta", r.beta}});
                                 if (partner) {
                                     const FiniteModule& N = partner->module;
                                     RadicalResult rn = beta_radical(N);
                                     for (const auto& h : enumerate_homs(M, N).maps)
                                         for (int x : r.beta)
                                             if (!set_contains(rn.beta, h[x]))
                                                 return fail({{"axiom", "preserved_by_homs"},
                                                              {"hom", h},
                                                              {"x", x}});
                                 }
                                 IndexSet MbR = module_times_ideal(M, *rbeta);
                                 if (!set_subset(MbR, r.beta))
                                     return fail({{"axiom", "preradical_inclusion"},
                                                  {"M_beta_R", MbR},
                                                  {"beta_M", r.beta}});
                                 auto proj = try_projective(M);
                                 if (proj && *proj && MbR != r.beta)
                                     return fail({{"axiom", "preradical_equality_projective"},
                                                  {"M_beta_R", MbR},
                                                  {"beta_M", r.beta}});
                                 return pass();
                             }});
        }
    }
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_torsion_free_iff_sbaer(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "torsion_free_iff_sbaer";
    rep.statement = "beta(M) = 0 exactly when M is s.Baer";
    const Corpus& c = corpus_for(cfg);
    std::vector<Task> tasks;
    for (size_t i = 0; i < c.rings.size(); ++i)
        for (const auto& cm : c.modules[i])
            tasks.push_back({instance_id(c.rings[i], cm), [&cm] {
                                 RadicalResult r = beta_radical(cm.module);
                                 bool tf = r.beta == IndexSet{cm.module.zero};
                                 bool sb = is_s_baer(cm.module).holds;
                                 if (tf == sb) return pass();
                                 return fail({{"beta", r.beta}, {"s_baer", sb}});
                             }});
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_semisimple_iff_all_cyclics_sbaer(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "semisimple_iff_all_cyclics_sbaer";
    rep.statement =
        "a ring is semisimple exactly when every cyclic right module R/I is s.Baer; each "
        "non-semisimple ring exhibits a failing cyclic";
    const Corpus& c = corpus_for(cfg);
    std::vector<Task> tasks;
    for (const auto& cr : c.rings)
        tasks.push_back({json{{"ring", cr.spec}}, [&cr] {
                             const FiniteRing& R = *cr.ring;
                             bool ss = structural_ideals(R).socle.members == R.universe();
                             FiniteModule reg = regular_module(cr.ring);
                             json bad = nullptr;
                             for (const auto& I : all_right_ideals(R)) {
                                 FiniteModule Q = quotient_module(reg, I);
                                 Verdict v = is_s_baer(Q);
                                 if (!v.holds) {
                                     bad = {{"ideal", I}, {"witness", v.witness}};
                                     break;
                                 }
                             }
                             bool all_cyclic = bad.is_null();
                             if (ss != all_cyclic)
                                 return fail({{"semisimple", ss}, {"failing_cyclic", bad}});
                             if (!ss && bad.is_null())
                                 return fail({{"semisimple", false},
                                              {"failing_cyclic", nullptr},
                                              {"note", "no failing cyclic exhibited"}});
                             return pass();
                         }});
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_annihilator_ssip(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "annihilator_ssip";
    rep.statement =
        "for a nonzero s.Baer module, r_R(M) is generated by a left-semicentral idempotent and "
        "R/r_R(M) has the summand intersection property";
    const Corpus& c = corpus_for(cfg);
    std::vector<Task> tasks;
    for (size_t i = 0; i < c.rings.size(); ++i)
        for (const auto& cm : c.modules[i]) {
            const CorpusRing* cr = &c.rings[i];
            tasks.push_back({instance_id(*cr, cm), [&cm, cr] {
                                 const FiniteModule& M = cm.module;
                                 if (M.order == 1) return na("zero module");
                                 if (!is_s_baer(M).holds) return na("module not s.Baer");
                                 const FiniteRing& R = *cr->ring;
                                 IndexSet ann = module_annihilator(M);
                                 auto idem = idempotent_report(R);
                                 bool gen = false;
                                 int witness_e = -1;
                                 for (int e : idem.left_semicentral)
                                     if (R.principal_right(e) == ann) { gen = true; witness_e = e; break; }
                                 if (!gen) return fail({{"annihilator", ann}});
                                 FiniteRing T = quotient_ring(R, ann);
                                 Verdict s = has_summand_intersection(T);
                                 if (!s.holds) return fail({{"e", witness_e}, {"quotient_ssip", json(s)}});
                                 return pass();
                             }});
        }
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_triangular_ssip(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "triangular_ssip";
    rep.statement =
        "for a generalized triangular ring with indecomposable corners, SSIP holds exactly when "
        "no nonzero bimodule element has a nonzero right annihilator in C";
    (void)cfg;
    static std::vector<GenTriangular> fixtures = gen_triangular_fixtures();
    std::vector<Task> tasks;
    for (size_t i = 0; i < fixtures.size(); ++i) {
        const GenTriangular* G = &fixtures[i];
        tasks.push_back({json{{"fixture", gen_triangular_fixture_specs()[i]}}, [G] {
                             if (G->A.has_nontrivial_idempotent() || G->C.has_nontrivial_idempotent())
                                 return na("corner ring decomposable");
                             bool cond = true;
                             json bad = nullptr;
                             for (int m = 0; m < G->B.order && cond; ++m) {
                                 if (m == G->B.zero) continue;
                                 for (int cc = 0; cc < G->C.order; ++cc)
                                     if (cc != G->C.zero && G->B.act(m, cc) == G->B.zero) {
                                         cond = false;
                                         bad = {{"m", m}, {"c", cc}};
                                         break;
                                     }
                             }
                             Verdict s = has_summand_intersection(G->ring);
                             if (s.holds == cond) return pass();
                             return fail({{"ssip", json(s)}, {"annihilator_condition", cond},
                                          {"violation", bad}});
                         }});
    }
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_essential_projective(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "essential_projective";
    rep.statement =
        "every s.Rickart module has an essential submodule that is a finite direct sum of "
        "projective cyclics; the emitted certificate re-verifies";
    const Corpus& c = corpus_for(cfg);
    std::vector<Task> tasks;
    for (size_t i = 0; i < c.rings.size(); ++i)
        for (const auto& cm : c.modules[i])
            tasks.push_back({instance_id(c.rings[i], cm), [&cm] {
                                 const FiniteModule& M = cm.module;
                                 if (!is_s_rickart(M).holds) return na("module not s.Rickart");
                                 auto w = essential_projective_witness(M);
                                 if (!w.verified) return fail({{"certificate", w.certificate}});
                                 FiniteModule P = submodule_module(M, w.P, json{{"kind", "witness"}});
                                 auto proj = try_projective(P);
                                 if (!proj) return na("projectivity recheck capped");
                                 if (!*proj || !essential_in(M, w.P))
                                     return fail({{"certificate", w.certificate},
                                                  {"projective", proj ? json(*proj) : json(nullptr)}});
                                 return pass();
                             }});
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_simple_artinian(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "simple_artinian";
    rep.statement =
        "2x2 matrix rings over F2 and F3 have the summand intersection property and their "
        "faithful simple row-space module is s.Baer";
    (void)cfg;
    std::vector<Task> tasks;
    for (int p : {2, 3}) {
        json spec = {{"kind", "matrix"}, {"k", 2}, {"base", json{{"kind", "prime_field"}, {"p", p}}}};
        tasks.push_back({json{{"ring", spec}}, [spec] {
                             auto R = std::make_shared<const FiniteRing>(build_ring(spec));
                             Verdict s = has_summand_intersection(*R);
                             if (!s.holds) return fail({{"ssip", json(s)}});
                             // e11 = diag(1, 0); its piece of the regular module is the row space
                             int e11 = -1;
                             FiniteModule reg = regular_module(R);
                             for (int e : R->idempotents()) {
                                 if (e == R->zero || e == R->one) continue;
                                 IndexSet piece = R->principal_right(e);
                                 if ((int)piece.size() * (int)piece.size() == R->order &&
                                     minimal_submodules(reg).end() !=
                                         std::find(minimal_submodules(reg).begin(),
                                                   minimal_submodules(reg).end(), piece)) {
                                     e11 = e;
                                     break;
                                 }
                             }
                             if (e11 < 0) return fail({{"note", "no simple idempotent piece found"}});
                             FiniteModule row = idempotent_piece(R, e11);
                             bool faithful = module_annihilator(row) == IndexSet{R->zero};
                             bool simple = all_submodules(row).size() == 2;
                             Verdict sb = is_s_baer(row);
                             if (faithful && simple && sb.holds) return pass();
                             return fail({{"e", e11}, {"faithful", faithful}, {"simple", simple},
                                          {"s_baer", json(sb)}});
                         }});
    }
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_essential_nilpotent_obstruction(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "essential_nilpotent_obstruction";
    rep.statement =
        "a ring with a nonzero essential nilpotent ideal admits no nonzero s.Baer module";
    const Corpus& c = corpus_for(cfg);
    std::vector<char> obstructed(c.rings.size(), 0);
    for (size_t i = 0; i < c.rings.size(); ++i)
        obstructed[i] = essential_nilpotent_ideal_search(*c.rings[i].ring).holds;
    std::vector<Task> tasks;
    for (size_t i = 0; i < c.rings.size(); ++i)
        for (const auto& cm : c.modules[i]) {
            bool gate = obstructed[i];
            tasks.push_back({instance_id(c.rings[i], cm), [&cm, gate] {
                                 if (!gate) return na("ring has no essential nilpotent ideal");
                                 if (cm.module.order == 1) return na("zero module");
                                 Verdict v = is_s_baer(cm.module);
                                 if (!v.holds) return pass();
                                 return fail({{"s_baer", json(v)}});
                             }});
        }
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_g_extending_nonsingular(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "g_extending_nonsingular";
    rep.statement =
        "when the regular module is G-extending, a module is s.Rickart exactly when its singular "
        "submodule vanishes";
    const Corpus& c = corpus_for(cfg);
    std::vector<char> gate(c.rings.size(), 0);
    for (size_t i = 0; i < c.rings.size(); ++i) {
        try {
            gate[i] = structure_predicates(regular_module(c.rings[i].ring)).is_G_extending;
        } catch (const CapExceeded&) {
            gate[i] = 0;
        }
    }
    std::vector<Task> tasks;
    for (size_t i = 0; i < c.rings.size(); ++i)
        for (const auto& cm : c.modules[i]) {
            bool g = gate[i];
            tasks.push_back({instance_id(c.rings[i], cm), [&cm, g] {
                                 if (!g) return na("regular module not G-extending");
                                 bool rick = is_s_rickart(cm.module).holds;
                                 bool nonsing = singular_submodules(cm.module).Z ==
                                                IndexSet{cm.module.zero};
                                 if (rick == nonsing) return pass();
                                 return fail({{"s_rickart", rick}, {"Z_zero", nonsing}});
                             }});
        }
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_srickart_nonsingular(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "srickart_nonsingular";
    rep.statement = "every s.Rickart module is nonsingular";
    const Corpus& c = corpus_for(cfg);
    std::vector<Task> tasks;
    for (size_t i = 0; i < c.rings.size(); ++i)
        for (const auto& cm : c.modules[i])
            tasks.push_back({instance_id(c.rings[i], cm), [&cm] {
                                 if (!is_s_rickart(cm.module).holds) return na("not s.Rickart");
                                 auto Z = singular_submodules(cm.module).Z;
                                 if (Z == IndexSet{cm.module.zero}) return pass();
                                 return fail({{"Z", Z}});
                             }});
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_goldie_comparison(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "goldie_comparison";
    rep.statement = "the second singular submodule sits inside beta(M)";
    const Corpus& c = corpus_for(cfg);
    std::vector<Task> tasks;
    for (size_t i = 0; i < c.rings.size(); ++i)
        for (const auto& cm : c.modules[i])
            tasks.push_back({instance_id(c.rings[i], cm), [&cm] {
                                 auto Z2 = singular_submodules(cm.module).Z2;
                                 auto beta = beta_radical(cm.module).beta;
                                 if (set_subset(Z2, beta)) return pass();
                                 return fail({{"Z2", Z2}, {"beta", beta}});
                             }});
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_torsion_free_closure(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "torsion_free_closure";
    rep.statement = "torsion-freeness passes to submodules and to finite direct sums";
    const Corpus& c = corpus_for(cfg);
    std::vector<Task> tasks;
    for (size_t i = 0; i < c.rings.size(); ++i) {
        const auto& mods = c.modules[i];
        for (size_t a = 0; a < mods.size(); ++a) {
            const CorpusModule* cm = &mods[a];
            const CorpusModule* other = &mods[(a + 1) % mods.size()];
            int mod_cap = cfg.max_module_order;
            tasks.push_back({instance_id(c.rings[i], *cm), [cm, other, mod_cap] {
                                 const FiniteModule& M = cm->module;
                                 if (beta_radical(M).beta != IndexSet{M.zero})
                                     return na("module not torsion-free");
                                 for (const auto& N : all_submodules(M)) {
                                     FiniteModule Nm = submodule_module(M, N, json{{"kind", "sub"}});
                                     if (beta_radical(Nm).beta != IndexSet{Nm.zero})
                                         return fail({{"submodule", N}});
                                 }
                                 const FiniteModule& O = other->module;
                                 if ((long long)M.order * O.order <= mod_cap &&
                                     beta_radical(O).beta == IndexSet{O.zero}) {
                                     FiniteModule S = direct_sum({M, O});
                                     if (beta_radical(S).beta != IndexSet{S.zero})
                                         return fail({{"partner", other->recipe}});
                                 }
                                 return pass();
                             }});
        }
    }
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_stability(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "stability";
    rep.statement = "a module with a torsion essential submodule is itself torsion";
    const Corpus& c = corpus_for(cfg);
    std::vector<Task> tasks;
    for (size_t i = 0; i < c.rings.size(); ++i)
        for (const auto& cm : c.modules[i]) {
            const FiniteModule& M = cm.module;
            int added = 0;
            for (const auto& T : all_submodules(M)) {
                if (!essential_in(M, T)) continue;
                if (++added > 8) break;
                json id = instance_id(c.rings[i], cm);
                id["T"] = T;
                tasks.push_back({id, [&cm, T] {
                                     const FiniteModule& M2 = cm.module;
                                     FiniteModule Tm =
                                         submodule_module(M2, T, json{{"kind", "essential_sub"}});
                                     if ((int)beta_radical(Tm).beta.size() != Tm.order)
                                         return na("essential submodule not torsion");
                                     if ((int)beta_radical(M2).beta.size() == M2.order) return pass();
                                     return fail({{"T", T}});
                                 }});
            }
        }
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_radical_structure(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "radical_structure";
    rep.statement =
        "for modules with proper radical, all clauses of the radical structure analysis hold";
    const Corpus& c = corpus_for(cfg);
    std::vector<Task> tasks;
    for (size_t i = 0; i < c.rings.size(); ++i)
        for (const auto& cm : c.modules[i])
            tasks.push_back({instance_id(c.rings[i], cm), [&cm] {
                                 try {
                                     Report r = radical_structure_check(cm.module);
                                     if (r.all_hold()) return pass();
                                     return fail({{"report", r.to_json()}});
                                 } catch (const PreconditionFailed&) {
                                     return na("beta(M) = M");
                                 }
                             }});
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_triangular_radical(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "triangular_radical";
    rep.statement =
        "the block description of beta for generalized triangular rings matches brute force";
    (void)cfg;
    static std::vector<GenTriangular> fixtures = gen_triangular_fixtures();
    std::vector<Task> tasks;
    for (size_t i = 0; i < fixtures.size(); ++i) {
        const GenTriangular* G = &fixtures[i];
        tasks.push_back({json{{"fixture", gen_triangular_fixture_specs()[i]}}, [G] {
                             try {
                                 Report r = triangular_radical_check(*G);
                                 if (r.all_hold()) return pass();
                                 return fail({{"report", r.to_json()}});
                             } catch (const HypothesisFailed& e) {
                                 return na(e.what());
                             }
                         }});
    }
    fold(rep, tasks, jobs);
    return rep;
}

inline CheckReport check_triangular_cases(const CorpusConfig& cfg, int jobs) {
    using namespace detail_verify;
    CheckReport rep;
    rep.check_name = "triangular_cases";
    rep.statement =
        "the annihilator case table for triangular rings over domains matches brute force on "
        "every element";
    (void)cfg;
    static std::vector<GenTriangular> fixtures = gen_triangular_fixtures();
    std::vector<Task> tasks;
    for (size_t i = 0; i < fixtures.size(); ++i) {
        const GenTriangular* G = &fixtures[i];
        tasks.push_back({json{{"fixture", gen_triangular_fixture_specs()[i]}}, [G] {
                             for (int x = 0; x < G->ring.order; ++x) {
                                 try {
                                     auto r = triangular_annihilator_case(*G, x);
                                     if (!r.match)
                                         return fail({{"x", x},
                                                      {"case", case_tag_name(r.tag)},
                                                      {"predicted", r.predicted},
                                                      {"actual", r.brute_force}});
                                 } catch (const HypothesisFailed& e) {
                                     return na(e.what());
                                 }
                             }
                             return pass();
                         }});
    }
    fold(rep, tasks, jobs);
    return rep;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

using CheckFn = CheckReport (*)(const CorpusConfig&, int);

inline const std::map<std::string, CheckFn>& check_registry() {
    static const std::map<std::string, CheckFn> reg = {
        {"srickart_eq_sbaer", check_srickart_eq_sbaer},
        {"annihilator_lemma", check_annihilator_lemma},
        {"rightsummand_lemma", check_rightsummand_lemma},
        {"heredity", check_heredity},
        {"extension_closure", check_extension_closure},
        {"finite_direct_sums", check_finite_direct_sums},
        {"beta_radical_axioms", check_beta_radical_axioms},
        {"torsion_free_iff_sbaer", check_torsion_free_iff_sbaer},
        {"semisimple_iff_all_cyclics_sbaer", check_semisimple_iff_all_cyclics_sbaer},
        {"annihilator_ssip", check_annihilator_ssip},
        {"triangular_ssip", check_triangular_ssip},
        {"essential_projective", check_essential_projective},
        {"simple_artinian", check_simple_artinian},
        {"essential_nilpotent_obstruction", check_essential_nilpotent_obstruction},
        {"g_extending_nonsingular", check_g_extending_nonsingular},
        {"srickart_nonsingular", check_srickart_nonsingular},
        {"goldie_comparison", check_goldie_comparison},
        {"torsion_free_closure", check_torsion_free_closure},
        {"stability", check_stability},
        {"radical_structure", check_radical_structure},
        {"triangular_radical", check_triangular_radical},
        {"triangular_cases", check_triangular_cases},
    };
    return reg;
}

inline std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : check_registry()) out.push_back(k);
    return out;
}

inline CheckReport run_check(const std::string& name, const CorpusConfig& cfg, int jobs = 1) {
    auto it = check_registry().find(name);
    if (it == check_registry().end()) throw UnknownCheck("no check named " + name);
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep = it->second(cfg, jobs);
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    if (rep.seed == 0) rep.seed = cfg.seed;
    return rep;
}

// ---------------------------------------------------------------------------
// Counterexample search
// ---------------------------------------------------------------------------

inline std::vector<std::string> search_goals() {
    return {"sBaer_not_projective_module", "eBaer_not_sBaer_module", "sBaer_not_eBaer_module",
            "torsion_hereditary_failure", "SIP_without_SSIP_ring"};
}

inline Verdict find_counterexample(const std::string& goal, const CorpusConfig& cfg,
                                   long long budget = 100000) {
    Verdict v;
    v.predicate = goal;
    v.holds = false;
    if (goal == "SIP_without_SSIP_ring") {
        v.witness = {{"exhausted", true},
                     {"reason",
                      "over a finite ring every idempotent-generated family is finite, so arbitrary "
                      "intersections of summands reduce to pairwise ones and SIP coincides with "
                      "SSIP; no finite witness can exist"}};
        return v;
    }
    const Corpus& c = corpus_for(cfg);
    long long examined = 0;
    auto exhausted = [&](bool out_of_budget) {
        v.witness = {{"exhausted", true}, {"examined", examined},
                     {"budget_hit", out_of_budget}};
        return v;
    };
    for (size_t i = 0; i < c.rings.size(); ++i) {
        for (const auto& cm : c.modules[i]) {
            if (examined >= budget) return exhausted(true);
            ++examined;
            const FiniteModule& M = cm.module;
            json id = {{"ring", c.rings[i].spec}, {"module", cm.recipe}};
            try {
                if (goal == "sBaer_not_projective_module") {
                    if (M.order > 1 && is_s_baer(M).holds && !is_projective(M).holds) {
                        v.holds = true;
                        v.witness = {{"instance", id}};
                        return v;
                    }
                } else if (goal == "eBaer_not_sBaer_module" || goal == "sBaer_not_eBaer_module") {
                    bool sb = is_s_baer(M).holds;
                    bool want_sb = goal == "sBaer_not_eBaer_module";
                    if (sb != want_sb) continue;
                    EndoRing E = endomorphism_ring(M);
                    bool eb = is_e_baer(M, E, all_submodules(M)).holds;
                    if (eb != want_sb) {
                        v.holds = true;
                        v.witness = {{"instance", id}, {"s_baer", sb}, {"e_baer", eb}};
                        return v;
                    }
                } else if (goal == "torsion_hereditary_failure") {
                    if ((int)beta_radical(M).beta.size() != M.order) continue;
                    for (const auto& N : all_submodules(M)) {
                        FiniteModule Nm = submodule_module(M, N, json{{"kind", "sub"}});
                        if (Nm.order > 1 && (int)beta_radical(Nm).beta.size() != Nm.order) {
                            v.holds = true;
                            v.witness = {{"instance", id}, {"submodule", N}};
                            return v;
                        }
                    }
                } else {
                    throw UnknownCheck("no search goal named " + goal);
                }
            } catch (const CapExceeded&) {
                continue;
            }
        }
    }
    return exhausted(false);
}

// ---------------------------------------------------------------------------
// JUnit mirror
// ---------------------------------------------------------------------------

inline std::string junit_xml(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    long long total = 0, failed = 0;
    for (const auto& r : reports) {
        ++total;
        if (!r.ok()) ++failed;
    }
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<testsuite name=\"baerlab\" tests=\"" << total << "\" failures=\"" << failed << "\">\n";
    for (const auto& r : reports) {
        os << "  <testcase name=\"" << r.check_name << "\" time=\"" << (double)r.elapsed_ms / 1000.0
           << "\"";
        if (r.ok()) {
            os << "/>\n";
        } else {
            os << ">\n    <failure message=\"" << r.failures.size() << " failing instances\">";
            os << r.failures.front().dump();
            os << "</failure>\n  </testcase>\n";
        }
    }
    os << "</testsuite>\n";
    return os.str();
}

}  // namespace baerlab
