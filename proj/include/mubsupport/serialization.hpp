#pragma once

#include <string>

#include <json.hpp>

#include "mubsupport/analyses.hpp"
#include "mubsupport/cyclotomic.hpp"
#include "mubsupport/monomial.hpp"
#include "mubsupport/mub.hpp"
#include "mubsupport/saturation.hpp"
#include "mubsupport/support.hpp"

namespace mubsupport {

using Json = nlohmann::ordered_json;

/// Power-basis coefficients of Q(w_order) as "num/den" strings.
Json to_json(const Cyclotomic& value, int order);
/// Throws ParseError on a wrong length or a malformed rational.
Cyclotomic cyclotomic_from_json(const Json& j, int order);

/// {dim, label, entries}; the field order follows from dim.
Json to_json(const StateVector& psi);
StateVector state_from_json(const Json& j);

/// Root exponents per entry of each Hadamard basis.
Json to_json(const MubSet& mubs);
/// Accepts only the standard set; throws ParseError otherwise.
MubSet mub_set_from_json(const Json& j);

/// Sizes, total, bound status and every pair's slack.
Json to_json(const SupportProfile& profile);
std::string profile_csv(const SupportProfile& profile);

Json to_json(const MonomialDecomposition& m);
Json to_json(const SearchReport& report, bool timings);
Json to_json(const BoundReport& report, bool include_witnesses);
Json to_json(const Support5Report& report, bool timings);
Json to_json(const MinorsReport& report);
Json to_json(const CheckResult& check);

}  // namespace mubsupport
