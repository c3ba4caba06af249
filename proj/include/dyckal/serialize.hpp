#pragma once

#include <string>
#include <string_view>

#include "dyckal/birkhoff.hpp"
#include "dyckal/dyck.hpp"
#include "dyckal/heyting.hpp"
#include "dyckal/verify.hpp"

// JSON forms of the value types.  Every to_json below round-trips through
// the matching from_json.
namespace dyckal {

std::string to_json(const DyckPath& p);          // {"n":..,"word":".."}
DyckPath path_from_json(std::string_view text);

std::string to_json(int n, const Composition& c);  // {"n":..,"parts":[..]}
Composition composition_from_json(std::string_view text);

std::string to_json(const CrossingSet& c);       // {"abscissas":[..]}
CrossingSet crossing_from_json(std::string_view text);

std::string to_json(const IntervalAntichain& f); // {"n":..,"intervals":[[a,b],..]}
IntervalAntichain antichain_from_json(std::string_view text);

std::string to_json(const VerifyReport& r);

}  // namespace dyckal
