#pragma once

#include "pieri.hpp"

#include <json.hpp>

namespace flagk {

/**
 * JSON views of the core values. Key order is fixed so serialized output is
 * byte-deterministic; weights sort lexicographically (the map order), words
 * are 1-based on the wire, rationals travel as canonical "p/q" strings.
 */
using Json = nlohmann::ordered_json;

Json laurent_to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j);

Json lspath_to_json(const PathModel& pm, const LSPath& p);
LSPath lspath_from_json(const PathModel& pm, const Json& j);

Json expansion_to_json(const PathModel& pm, int w, const Expansion& e);
// Parses back to (lambda, word, path count, coeffs keyed by 0-based canonical
// v-word); validates words against the group.
struct ExpansionRecord {
    char type;
    int rank;
    IVec lambda;
    std::vector<int> word;
    int paths;
    std::map<std::vector<int>, int> coeffs;
};
ExpansionRecord expansion_from_json(const WeylGroup& wg, const Json& j);

// Command payloads.
Json roots_json(const RootSystem& rs);
Json weyl_group_json(const WeylGroup& wg);
Json weyl_element_json(const WeylGroup& wg, const std::vector<int>& word);
Json character_json(const PathModel& pm);
Json paths_json(const PathModel& pm);
Json expand_json(const PathModel& pm, const std::vector<int>& word);

// Crystal graph in DOT form, lowering edges labeled by the 1-based simple
// index.
std::string crystal_dot(const PathModel& pm);

}  // namespace flagk
