#pragma once

// JSON and DOT serialization.

#include <string>

#include <json.hpp>

#include "bricklab/fan.hpp"
#include "bricklab/generic.hpp"

namespace bricklab {

using Json = nlohmann::ordered_json;

/// Terms {"coeff", "path"} with paths in traversal order.
RelationElement relation_from_json(const Quiver& Q, const Json& r);
/// {"vertices": [names of killed idempotents], "elements": [relations]}.
TwoSidedIdeal ideal_from_json(const Algebra& A, const Json& j);

/// Throws ParseError on malformed input, plus the algebra construction errors.
AlgebraPtr algebra_from_json(const Json& j, std::size_t max_path_len = Algebra::kDefaultMaxPathLen);
Json algebra_to_json(const Algebra& A);
AlgebraPtr load_algebra(const std::string& path, std::size_t max_path_len = Algebra::kDefaultMaxPathLen);

Representation representation_from_json(const AlgebraPtr& A, const Json& j);
Json representation_to_json(const Representation& M);
Representation load_representation(const AlgebraPtr& A, const std::string& path);

Json read_json_file(const std::string& path);

Json gvector_to_json(const GVector& g);
GVector gvector_from_json(const Json& j, std::size_t n);
Json rationals_to_json(const std::vector<Rational>& v);
Json int_matrix_to_json(const IntMatrix& m);

Json fan_to_json(const FanSnapshot& snap);
/// Exchange graph with brick dimension vectors on the edges.
std::string exchange_graph_dot(const FanSnapshot& snap);

Json report_to_json(const GenericSampleReport& r);
Json candidate_to_json(const CandidateRay& c);

}  // namespace bricklab
