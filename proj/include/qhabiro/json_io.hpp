#pragma once

#include <json.hpp>

#include "qhabiro/cyclo.hpp"
#include "qhabiro/habiro.hpp"
#include "qhabiro/laurent.hpp"
#include "qhabiro/reptheory.hpp"

namespace qh {

using Json = nlohmann::ordered_json;

// {"unit":"q^(1/4)","terms":[[e,"c"],...]}, terms ascending by e.
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

// {"basis":"Pprime","coeffs":{"k":<LaurentPoly>,...}}
Json pprime_to_json(const PPrimeVector& v);
PPrimeVector pprime_from_json(const Json& j);

// {"level":n,"offset":g,"rep":<LaurentPoly>}
Json habiro_to_json(const HabiroTrunc& x);
HabiroTrunc habiro_from_json(const Json& j);

// {"order":N,"coords":["c0",...]}
Json cyclo_to_json(const CyclotomicNumber& c);
CyclotomicNumber cyclo_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace qh
