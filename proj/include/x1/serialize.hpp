#ifndef X1_SERIALIZE_HPP
#define X1_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "x1/diffop.hpp"
#include "x1/polynomial.hpp"
#include "x1/subspace.hpp"

namespace x1 {

using Json = nlohmann::json;

/// Canonical text form "c0 + c1*x + c2*x^2" with rationals as "p/q"; zero
/// coefficients are skipped, the zero polynomial prints as "0".
std::string poly_text(const Polynomial& p);

/// Parse the text form (signs, optional '*', '^' powers, rational "p/q"
/// coefficients). Throws std::invalid_argument on malformed input.
Polynomial parse_poly_text(const std::string& s);

/// Machine form: array of coefficient strings, index = power.
Json poly_json(const Polynomial& p);

/// Accepts either the array-of-strings machine form or a text-form string.
Polynomial poly_from_json(const Json& j);

Json ratfunc_json(const RationalFunction& f);
RationalFunction ratfunc_from_json(const Json& j);

/// {p: ratfunc, q: ratfunc, r: ratfunc}
Json diffop_json(const DiffOp2& T);
DiffOp2 diffop_from_json(const Json& j);

/// {"n": ambient degree, "basis": [poly, ...]}
Json subspace_json(const Subspace& M);
Subspace subspace_from_json(const Json& j);

Subspace read_subspace_file(const std::string& path);
void write_subspace_file(const std::string& path, const Subspace& M);

}  // namespace x1

#endif
