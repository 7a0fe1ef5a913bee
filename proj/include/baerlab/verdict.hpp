#pragma once

// Decision records. Every predicate returns a Verdict whose witness is
// sufficient to re-check the claim from the serialized data alone.

#include <string>

#include <json.hpp>

namespace baerlab {

struct Verdict {
    std::string predicate;
    bool holds = false;
    nlohmann::json witness;   // e.g. the idempotent e, or the failing element/subset
    nlohmann::json recheck;   // replay instructions
};

inline void to_json(nlohmann::json& j, const Verdict& v) {
    j = nlohmann::json{{"predicate", v.predicate},
                       {"holds", v.holds},
                       {"witness", v.witness},
                       {"recheck", v.recheck}};
}

inline void from_json(const nlohmann::json& j, Verdict& v) {
    j.at("predicate").get_to(v.predicate);
    j.at("holds").get_to(v.holds);
    v.witness = j.value("witness", nlohmann::json());
    v.recheck = j.value("recheck", nlohmann::json());
}

}  // namespace baerlab
