#ifndef ZONOTOPAL_IO_HPP
#define ZONOTOPAL_IO_HPP

#include "zonotopal/forward_exchange.hpp"
#include "zonotopal/polynomial.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace zonotopal {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; ParseError on I/O or syntax problems.
Json read_json_file(const std::string& path);

/// String "p/q" or integer; `where` names the location for diagnostics.
Rational rational_from_json(const Json& j, const std::string& where);

/// {"r": 2, "vectors": [["1","0"], ["0","1"], ["1","1"]]}
VectorList vector_list_from_json(const Json& j);
Json to_json(const VectorList& X);

/// [[1,2],[1,3]] or {"bases": [...]}; 1-based index tuples.
std::vector<BasisId> bases_from_json(const Json& j);
Json to_json(const BasisId& b);
Json to_json(const std::vector<BasisId>& bases);

/// A single point [..] or a list of points [[..], ..].
std::vector<Vector> points_from_json(const Json& j, std::size_t dim);

Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const HilbertVector& h);
Json indices_to_json(const IndexSet& s);  // 1-based

/// {"appended": [[..]], "J": [[..]], "I0": [..], "kappa": [{"flat": [..], "value": k}]}, 1-based.
FamilyArgs family_args_from_json(const Json& j, std::size_t dim);

/// {"side": "T", "nvars": 2, "labels": [[1,2]], "polynomials": ["1", "t2"], "hilbert": [1, 2]}
Json to_json(const SpaceBasis& basis);
SpaceBasis space_basis_from_json(const Json& j);

}  // namespace zonotopal

#endif
