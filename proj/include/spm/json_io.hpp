#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "spm/compatibility.hpp"

namespace spm {

using Json = nlohmann::json;

/// Parses text, reporting syntax errors as parse_error.
Json parse_json(const std::string& text);

Json tower_json(const FieldTower& tower);
FieldTower tower_from_json(const Json& j);

/// {n, d[], rows[][]}
Json matrix_json(const ExchangeMatrix& b);
ExchangeMatrix matrix_from_json(const Json& j);

/// {weights[], arrows:[{id, from, to}]}, vertices 1-based.
Json quiver_json(const WeightedQuiver& q);
WeightedQuiver quiver_from_json(const Json& j);

/// {truncation, terms:[{coeff, head, omegas[], arrows:[id...]}]}
Json element_json(const AlgebraElement& x);
AlgebraElement element_from_json(const SpeciesPtr& species, const Json& j);

/// {truncation, terms:[{coeff, omegas[], arrows:[id...]}]}
Json potential_json(const Potential& s);
Potential potential_from_json(const SpeciesPtr& species, const Json& j);

/// {tower, quiver, potential}
Json sp_json(const SpeciesWithPotential& sp);
SpeciesWithPotential sp_from_json(const Json& j);

Json report_json(const ReductionReport& report);
Json trace_json(const NondegeneracyTrace& trace);
Json search_json(const SearchResult& result);
Json compatibility_json(const CompatibilityReport& report);

enum class DocumentKind { matrix, quiver, species };
/// Matrix documents carry "rows", species documents "tower".
DocumentKind document_kind(const Json& j);

}  // namespace spm
