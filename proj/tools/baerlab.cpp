// Command-line front end: predicate queries, radical computation, the check
// suite, counterexample search, and corpus dumps, all speaking JSON.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "baerlab/verifier.hpp"

using namespace baerlab;

namespace {

int env_cap() {
    if (const char* s = std::getenv("BAERLAB_CAP")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return kDefaultOrderCap;
}

json parse_input(const std::string& arg) {
    if (arg == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return json::parse(ss.str());
    }
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return json::parse(arg);
    std::ifstream f(arg);
    if (!f) throw InvalidSpec("cannot open input: " + arg);
    return json::parse(f);
}

void emit(const json& j, const std::string& output, const std::string& format) {
    std::string text = format == "text" ? j.dump(2) : j.dump(2);
    if (output.empty() || output == "-") {
        std::cout << text << "\n";
    } else {
        std::ofstream f(output);
        f << text << "\n";
    }
}

using ModulePredicate = Verdict (*)(const FiniteModule&);

Verdict pred_nonsingular(const FiniteModule& M) {
    Verdict v;
    v.predicate = "nonsingular";
    auto Z = singular_submodules(M).Z;
    v.holds = Z == IndexSet{M.zero};
    v.witness = {{"Z", Z}};
    return v;
}

Verdict pred_torsion(const FiniteModule& M) {
    Verdict v;
    v.predicate = "torsion";
    auto r = beta_radical(M);
    v.holds = r.classification == "torsion";
    v.witness = {{"beta", r.beta}, {"classification", r.classification}};
    return v;
}

Verdict pred_torsion_free(const FiniteModule& M) {
    Verdict v;
    v.predicate = "torsion_free";
    auto r = beta_radical(M);
    v.holds = r.classification == "torsion_free";
    v.witness = {{"beta", r.beta}, {"classification", r.classification}};
    return v;
}

Verdict pred_e_rickart(const FiniteModule& M) { return is_e_rickart(M, endomorphism_ring(M)); }

Verdict pred_e_baer(const FiniteModule& M) {
    return is_e_baer(M, endomorphism_ring(M), all_submodules(M));
}

Verdict pred_injective(const FiniteModule& M) { return is_injective(M); }
Verdict pred_projective(const FiniteModule& M) { return is_projective(M); }
Verdict pred_s_baer(const FiniteModule& M) { return is_s_baer(M); }
Verdict pred_s_rickart(const FiniteModule& M) { return is_s_rickart(M); }

Verdict structure_flag(const FiniteModule& M, const char* name, bool StructureReport::*field) {
    Verdict v;
    v.predicate = name;
    auto rep = structure_predicates(M);
    v.holds = rep.*field;
    v.witness = rep.witness;
    return v;
}

Verdict pred_extending(const FiniteModule& M) {
    return structure_flag(M, "extending", &StructureReport::is_extending);
}
Verdict pred_g_extending(const FiniteModule& M) {
    return structure_flag(M, "g_extending", &StructureReport::is_G_extending);
}
Verdict pred_fi_extending(const FiniteModule& M) {
    return structure_flag(M, "fi_extending", &StructureReport::is_FI_extending);
}
Verdict pred_semisimple(const FiniteModule& M) {
    return structure_flag(M, "semisimple", &StructureReport::is_semisimple);
}

const std::map<std::string, ModulePredicate>& predicate_registry() {
    static const std::map<std::string, ModulePredicate> reg = {
        {"s_baer", pred_s_baer},           {"s_rickart", pred_s_rickart},
        {"e_baer", pred_e_baer},           {"e_rickart", pred_e_rickart},
        {"projective", pred_projective},   {"injective", pred_injective},
        {"nonsingular", pred_nonsingular}, {"torsion", pred_torsion},
        {"torsion_free", pred_torsion_free}, {"extending", pred_extending},
        {"g_extending", pred_g_extending}, {"fi_extending", pred_fi_extending},
        {"semisimple", pred_semisimple},
    };
    return reg;
}

struct BuiltModule {
    RingPtr ring;
    FiniteModule module;
};

BuiltModule build_pair(const json& spec, int cap) {
    if (!spec.contains("ring")) throw InvalidSpec("input needs a ring spec under \"ring\"");
    BuiltModule out{std::make_shared<const FiniteRing>(build_ring(spec.at("ring"), cap)), {}};
    json recipe = spec.value("module", json{{"kind", "regular"}});
    out.module = build_module(out.ring, recipe, cap);
    return out;
}

int cmd_ring_info(const json& spec, const std::string& output, const std::string& format, int cap) {
    FiniteRing R = build_ring(spec, cap);
    auto idem = idempotent_report(R);
    auto preds = ring_predicates(R);
    auto st = structural_ideals(R);
    json out = {
        {"spec", spec},
        {"order", R.order},
        {"commutative", R.is_commutative()},
        {"idempotents",
         {{"all", idem.all},
          {"left_semicentral", idem.left_semicentral},
          {"right_semicentral", idem.right_semicentral},
          {"central", idem.central},
          {"semicentral_reduced", idem.semicentral_reduced}}},
        {"is_baer", json(preds.baer)},
        {"is_right_rickart", json(preds.rickart)},
        {"has_ssip", json(preds.ssip)},
        {"is_semisimple", preds.semisimple},
        {"is_semiprime", preds.semiprime},
        {"is_right_duo", preds.right_duo},
        {"indecomposable", preds.indecomposable},
        {"socle", st.socle.members},
        {"jacobson_radical", st.jacobson_radical.members},
        {"right_ideal_count", st.right_ideals.size()},
        {"two_sided_ideal_count", st.two_sided_ideals.size()},
        {"essential_nilpotent_ideal", json(essential_nilpotent_ideal_search(R))},
    };
    emit(out, output, format);
    return preds.baer.holds && preds.rickart.holds ? 0 : 0;
}

int cmd_module_check(const json& input, const std::string& predicate, bool recheck,
                     const std::string& output, const std::string& format, int cap) {
    if (recheck) {
        // input is a previously emitted certificate
        std::string pred = input.at("predicate").get<std::string>();
        auto it = predicate_registry().find(pred);
        if (it == predicate_registry().end()) throw UnknownCheck("no predicate named " + pred);
        BuiltModule bm = build_pair(input, cap);
        Verdict fresh = it->second(bm.module);
        bool ok = fresh.holds == input.at("verdict").at("holds").get<bool>();
        emit(json{{"recheck", ok ? "ok" : "mismatch"}, {"fresh", json(fresh)}}, output, format);
        return ok ? 0 : 1;
    }
    auto it = predicate_registry().find(predicate);
    if (it == predicate_registry().end()) throw UnknownCheck("no predicate named " + predicate);
    BuiltModule bm = build_pair(input, cap);
    Verdict v = it->second(bm.module);
    json out = {{"ring", input.at("ring")},
                {"module", input.value("module", json{{"kind", "regular"}})},
                {"predicate", predicate},
                {"verdict", json(v)}};
    emit(out, output, format);
    return v.holds ? 0 : 1;
}

int cmd_radical(const json& input, bool recheck, const std::string& output,
                const std::string& format, int cap) {
    BuiltModule bm = build_pair(input, cap);
    RadicalResult r = beta_radical(bm.module);
    if (recheck) {
        bool ok = input.at("beta").get<IndexSet>() == r.beta;
        emit(json{{"recheck", ok ? "ok" : "mismatch"}, {"fresh_beta", r.beta}}, output, format);
        return ok ? 0 : 1;
    }
    json quotients = json::array();
    for (const auto& K : r.contributing_quotients) quotients.push_back(K);
    json out = {{"ring", input.at("ring")},
                {"module", input.value("module", json{{"kind", "regular"}})},
                {"beta", r.beta},
                {"classification", r.classification},
                {"contributing_quotients", quotients}};
    emit(out, output, format);
    return 0;
}

int cmd_verify(const std::vector<std::string>& names, const CorpusConfig& cfg, int jobs,
               bool junit, const std::string& output, const std::string& format) {
    std::vector<std::string> run = names.empty() ? check_names() : names;
    std::vector<CheckReport> reports;
    bool all_ok = true;
    for (const auto& n : run) {
        reports.push_back(run_check(n, cfg, jobs));
        all_ok = all_ok && reports.back().ok();
    }
    if (junit) {
        std::string xml = junit_xml(reports);
        if (output.empty() || output == "-") {
            std::cout << xml;
        } else {
            std::ofstream f(output);
            f << xml;
        }
    } else {
        json out = json::array();
        for (const auto& r : reports) out.push_back(r.to_json());
        emit(out, output, format);
    }
    return all_ok ? 0 : 1;
}

int cmd_search(const std::string& goal, const CorpusConfig& cfg, long long budget,
               const std::string& output, const std::string& format) {
    Verdict v = find_counterexample(goal, cfg, budget);
    emit(json(v), output, format);
    return v.holds ? 1 : 0;
}

int cmd_corpus_dump(const CorpusConfig& cfg, bool with_modules, const std::string& output) {
    std::ostringstream os;
    const Corpus& c = corpus_for(cfg);
    for (size_t i = 0; i < c.rings.size(); ++i) {
        if (with_modules) {
            for (const auto& m : c.modules[i])
                os << json{{"ring", c.rings[i].spec}, {"module", m.recipe}}.dump() << "\n";
        } else {
            os << c.rings[i].spec.dump() << "\n";
        }
    }
    if (output.empty() || output == "-") {
        std::cout << os.str();
    } else {
        std::ofstream f(output);
        f << os.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite ring and module laboratory"};
    app.require_subcommand(1);
    std::string output, format = "json", input_arg, predicate, goal;
    std::vector<std::string> checks;
    bool recheck = false, junit = false, with_modules = false;
    int jobs = 1;
    long long budget = 100000;
    CorpusConfig cfg;
    int cap = env_cap();

    auto add_common = [&](CLI::App* c) {
        c->add_option("--output,-o", output, "write result to this path instead of stdout");
        c->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
        c->add_option("--cap", cap, "order cap for constructions");
    };
    auto add_corpus = [&](CLI::App* c) {
        c->add_option("--seed", cfg.seed, "corpus seed");
        c->add_option("--max-ring-order", cfg.max_ring_order, "corpus ring order cap");
        c->add_option("--max-module-order", cfg.max_module_order, "corpus module order cap");
        c->add_option("--count", cfg.count, "random rings appended to the fixtures");
        c->add_option("--jobs", jobs, "worker threads across corpus instances");
    };

    auto* ring_info = app.add_subcommand("ring-info", "predicates and structure of one ring");
    ring_info->add_option("spec", input_arg, "ring spec JSON, a path, or - for stdin")->required();
    add_common(ring_info);

    auto* module_check = app.add_subcommand("module-check", "run one predicate on one module");
    module_check->add_option("spec", input_arg, "{\"ring\":...,\"module\":...} or certificate")
        ->required();
    module_check->add_option("--predicate,-p", predicate, "predicate name");
    module_check->add_flag("--recheck", recheck, "replay a previously emitted certificate");
    add_common(module_check);

    auto* radical = app.add_subcommand("radical", "torsion radical of one module");
    radical->add_option("spec", input_arg, "{\"ring\":...,\"module\":...}")->required();
    radical->add_flag("--recheck", recheck, "replay a previously emitted result");
    add_common(radical);

    auto* verify = app.add_subcommand("verify", "run registered checks over the corpus");
    verify->add_option("--check,-c", checks, "check names (default: all)");
    verify->add_flag("--junit", junit, "emit a JUnit XML mirror");
    add_common(verify);
    add_corpus(verify);

    auto* search = app.add_subcommand("search", "counterexample search over the corpus");
    search->add_option("--goal,-g", goal, "search goal")->required();
    search->add_option("--budget", budget, "instance budget");
    add_common(search);
    add_corpus(search);

    auto* dump = app.add_subcommand("corpus-dump", "dump the corpus as JSON lines");
    dump->add_flag("--modules", with_modules, "dump module recipes instead of ring specs");
    add_common(dump);
    add_corpus(dump);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (ring_info->parsed()) return cmd_ring_info(parse_input(input_arg), output, format, cap);
        if (module_check->parsed()) {
            json in = parse_input(input_arg);
            if (!recheck && predicate.empty())
                throw InvalidSpec("module-check needs --predicate or --recheck");
            return cmd_module_check(in, predicate, recheck, output, format, cap);
        }
        if (radical->parsed()) return cmd_radical(parse_input(input_arg), recheck, output, format, cap);
        if (verify->parsed()) return cmd_verify(checks, cfg, jobs, junit, output, format);
        if (search->parsed()) return cmd_search(goal, cfg, budget, output, format);
        if (dump->parsed()) return cmd_corpus_dump(cfg, with_modules, output);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << e.code << ": " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
