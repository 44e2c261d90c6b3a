#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

#include "charkit/character.hpp"
#include "charkit/group.hpp"
#include "charkit/orbits.hpp"
#include "charkit/product_lab.hpp"

namespace charkit {

using Json = nlohmann::json;

// {"name", "degree", "generators": [[images...], ...]}; throws InputError.
GroupPtr group_from_json(const Json& j, std::size_t order_cap = 0);
GroupPtr load_group_file(const std::string& path, std::size_t order_cap = 0);
// A path to an existing group file, otherwise a family spec.
GroupPtr load_group(const std::string& arg);

// {"q", "dim", "generators": [[[row...], ...], ...]}
VectorAction action_from_json(const Json& j);
VectorAction load_action_file(const std::string& path);

Json table_to_json(const CharacterTable& t);
Json decomposition_to_json(const Decomposition& d, const CharacterTable& t);
Json chain_to_json(Lab& lab, const Chain& chain);
Json orbits_to_json(const OrbitSummary& s);
Json record_to_json(const VerificationRecord& r);

// Tab-separated record line; predicate outcomes as name=outcome joined by ','.
std::string record_tsv_header();
std::string record_to_tsv(const VerificationRecord& r);

}  // namespace charkit
