#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "arith/classify.hpp"
#include "arith/frontier.hpp"
#include "arith/graphs.hpp"
#include "arith/matrix.hpp"
#include "arith/matrix_enum.hpp"
#include "arith/poly.hpp"
#include "arith/poly_enum.hpp"
#include "arith/solutions.hpp"

namespace arith {

using Json = nlohmann::json;

/// Integers serialize as JSON numbers while they fit in 64 bits and as
/// decimal strings beyond that; both forms are accepted on input.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json vec_to_json(const IntVec& v);
IntVec vec_from_json(const Json& j);

/// {"n": <int>, "rows": [[...], ...]}
Json matrix_to_json(const IntMatrix& M);
IntMatrix matrix_from_json(const Json& j);

/// {"vars": ["x","y"], "terms": [{"m": [0,1], "c": "<decimal>"}]}
Json poly_to_json(const SqFreePoly& f, const std::vector<std::string>& vars);
ParsedPoly poly_from_json(const Json& j);

Json frontier_to_json(const Frontier& f);
Frontier frontier_from_json(const Json& j, int dim);

Json zclass_to_json(const ZClassification& z);
Json enum_report_to_json(const EnumReport& r);
Json poly_report_to_json(const PolyEnumReport& r, const std::vector<std::string>& vars);
Json solutions_to_json(const SolutionSet& s);
Json matrix_box_to_json(const MatrixBoxResult& r);
Json conjecture_to_json(const ConjectureReport& r);

/// CSV: one vector per row under a header of variable names.
std::string vectors_to_csv(const std::vector<IntVec>& rows, const std::vector<std::string>& header);

} // namespace arith
