// Canonical JSON certificates: sorted keys, sorted index arrays, integers
// only, compact output. A plane is rebuilt from its field descriptor.
#pragma once

#include <string>

#include "json.hpp"
#include "pgres/construct.hpp"
#include "pgres/redei.hpp"
#include "pgres/search.hpp"

namespace pgres {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Order q as p^h; NonPrime when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q);

Json field_json(const Field& f);
FieldPtr field_from_json(const Json& j);

Json report_json(const VerifyReport& r);
Json profile_json(const SecantProfile& p);
Json semioval_json(const SemiovalReport& r);
Json search_json(const SearchResult& r, const Plane& plane);
Json redei_json(const RedeiProfile& p);

/// Certificate skeleton for a set in `plane`.
Json set_certificate(const std::string& kind, const MixedSet& s, const Plane& plane);

/// Compact dump with a trailing newline.
std::string canonical(const Json& j);

}  // namespace pgres
