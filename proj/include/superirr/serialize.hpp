#pragma once

// JSON views of the public record types. Field order is fixed so identical
// inputs produce byte-identical output.

#include <json.hpp>

#include "superirr/certificates.hpp"
#include "superirr/search.hpp"
#include "superirr/weakcheck.hpp"
#include "superirr/zfactor.hpp"

namespace superirr {

using ordered_json = nlohmann::ordered_json;

ordered_json json_of(const IntPoly& f);
ordered_json json_of(const RatPoly& f);
ordered_json json_of(const SubstitutionWitness& w);
ordered_json json_of(const Factorization& f);
ordered_json json_of(const Certificate& c);
ordered_json json_of(const SearchReport& r);
ordered_json json_of(const CongruenceReport& r);
ordered_json json_of(const WeakCheckReport& r);

RatPoly rat_poly_from_json(const ordered_json& j);
SubstitutionWitness witness_from_json(const ordered_json& j);

}  // namespace superirr
