#pragma once

// JSON conventions shared by every module:
//   - matrices: array of equal-length rows of integers (row-major);
//   - polynomials: ascending coefficient array;
//   - unbounded integers: JSON number when |v| < 2^53, decimal string beyond;
//   - exact rationals: {"num": <int>, "den": <int>} with den > 0.
// Inputs accept numbers and decimal strings interchangeably.

#include <json.hpp>

#include "hmp/bigint.hpp"
#include "hmp/matrix.hpp"
#include "hmp/polynomial.hpp"

namespace hmp {

using Json = nlohmann::ordered_json;

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);  // throws schema_error on malformed input

Json rat_to_json(const Rat& r);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);  // throws schema_error

Json poly_to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const Json& j);  // throws schema_error

}  // namespace hmp
