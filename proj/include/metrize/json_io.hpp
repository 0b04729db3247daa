#pragma once

#include <json.hpp>

#include "metrize/distance_space.hpp"
#include "metrize/entropy.hpp"
#include "metrize/functor_metric.hpp"
#include "metrize/group_norms.hpp"
#include "metrize/hyperspace.hpp"
#include "metrize/tight_span.hpp"

namespace metrize {

using Json = nlohmann::json;

// Infinity is serialized as the string "inf" in every document.
Json ext_to_json(ExtReal v);
ExtReal ext_from_json(const Json& j);

// {"labels": [...], "matrix": [[...]]}
Json space_to_json(const DistanceSpace& x);
DistanceSpace space_from_json(const Json& j);

// {"dim": k, "points": [[...]], "labels": [...]?} -> Euclidean space
DistanceSpace points_from_json(const Json& j);

// Either document kind, dispatched on the present keys.
DistanceSpace any_space_from_json(const Json& j);

// {"functor": name?, "kind": "set"|"tuple"|"empty", "indices": [...]}
Json element_to_json(const Element& e, const std::string& functor_name = "");
Element element_from_json(const Json& j);

Json chain_to_json(const std::vector<ChainStep>& chain);

// {"modulus": m, "values": {label: residue}}; omitted labels are 0.
Json group_function_to_json(const DistanceSpace& x, const FinSupportFunction& phi);
FinSupportFunction group_function_from_json(const DistanceSpace& x, const Json& j);

// Value tables aligned with the label order, "inf" entries allowed.
Json value_table_to_json(const AdmissibleFunction& f);
AdmissibleFunction value_table_from_json(const Json& j);

Json graph_to_json(const DistanceSpace& x, const SpanningGraph& g);
Json cover_to_json(const DistanceSpace& x, const CoverCertificate& cert);

}  // namespace metrize
