#pragma once

#include "howe/enumerator.hpp"
#include "howe/exact_arith.hpp"
#include "howe/howe_model.hpp"
#include "howe/identities.hpp"
#include "howe/singularities.hpp"

#include <json.hpp>

namespace howe {

using Json = nlohmann::ordered_json;

// {"p": 31, "quintuple": [...], "coefficients": {"c60": ..., ...}, "normalized": bool}.
// Over Q, "p" is 0 and numbers are strings "a/b".
Json to_json(const SexticModel<Fp>& m);
Json to_json(const SexticModel<Rational>& m);

// Rebuilds from the quintuple and rejects documents whose coefficients
// disagree with it. Throws std::invalid_argument (NotHoweType for bad
// quintuples).
SexticModel<Fp> model_from_json_fp(const Json& j);
SexticModel<Rational> model_from_json_rational(const Json& j);

// {"kind", "points": [{"coords": [...], "field": "Fp|Fp2|symbolic"}], "witnesses": {...}, "nonresidue"}.
// Fp2 coordinates are [a, b] meaning a + b·t with t² = nonresidue.
Json to_json(const SingularityReport& r);

Json to_json(const IdentityReport& r);
Json to_json(const EnumerationRow& row);

}  // namespace howe
