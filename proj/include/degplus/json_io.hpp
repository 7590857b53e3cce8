#pragma once

#include <json.hpp>

#include "degplus/bounds.hpp"
#include "degplus/cone.hpp"
#include "degplus/search.hpp"
#include "degplus/star.hpp"

namespace degplus {

using Json = nlohmann::json;

/// Rationals travel as "num/den" strings, polynomials as ascending arrays.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const DegPlusResult& r);
DegPlusResult deg_plus_from_json(const Json& j);

Json to_json(const BoundsReport& r);
BoundsReport bounds_from_json(const Json& j);

/// Integer-coefficient vectors, ascending.
Json to_json(const ConeGenerators& g);

Json to_json(const StarReport& r);
Json to_json(const TruncationCheck& t);
Json scan_summary(const ScanResult& r, bool star);

}  // namespace degplus
