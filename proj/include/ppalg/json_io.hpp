#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

#include "ppalg/cyclotomic.hpp"
#include "ppalg/pathalg.hpp"
#include "ppalg/quiver.hpp"
#include "ppalg/rational.hpp"
#include "ppalg/truncation.hpp"

// JSON forms used by the CLI and the cache.  Rationals are strings "p/q"
// ("p" when the denominator is 1); cyclotomics {"m": m, "coeffs": [...]};
// quivers {"vertices": [...], "arrows": [{"id","src","tgt"}]}; weights are
// maps from vertex id to rational; elements are arrays of terms
// {"path": [arrow ids in application order], "coeff": ...} with
// {"e": vertex id, "coeff": ...} for trivial paths.  Key order is fixed by
// construction so serialized documents are reproducible byte for byte.
namespace ppalg {

using json = nlohmann::ordered_json;

json json_of(const Rational& r);
Rational rational_from_json(const json& j);

json json_of(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const json& j);

json json_of(const Quiver& q);
Quiver quiver_from_json(const json& j);

json json_of(const Quiver& q, const Weight& w);
Weight weight_from_json(const Quiver& q, const json& j);

json json_of(const Quiver& q, const Element& x);
Element element_from_json(const Quiver& q, const json& j);

// {"max_degree": N, "layers": {src: {tgt: [layer dims 0..N]}}}
json json_of(const Quiver& q, const DimensionTable& table);

// Self-contained snapshot of a truncated quotient: quiver, options, weight
// (null for general builds) and the full rewrite-rule table.
json quotient_to_json(const TruncatedQuotient& t);
TruncatedQuotient quotient_from_json(const json& j);

// FNV-1a, the checksum used for cache keys and payload integrity.
std::uint64_t fnv1a(std::string_view text);
std::string hex64(std::uint64_t value);

} // namespace ppalg
