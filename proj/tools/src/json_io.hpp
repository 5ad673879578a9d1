#pragma once

#include <json.hpp>

#include "wwgm/diff_op.hpp"
#include "wwgm/op_poly.hpp"
#include "wwgm/ordering.hpp"
#include "wwgm/phase_poly.hpp"
#include "wwgm/scalar.hpp"

namespace wwgm::cli {

using Json = nlohmann::ordered_json;

// Every coefficient term is an object with exact rational strings "re" and
// "im", "hbar_pow", and "s_pow" / "r_pow" when nonzero. Polynomials list
// their terms in descending index order.

Json to_json(const Scalar& c);  // array of terms
Json to_json(const OpPoly& a);  // {"terms": [{"n", "m", ...}]}, "algebra" when not qp
Json to_json(const PhasePoly& f);  // {"var_pair", "terms": [{"a", "b", ...}]}
Json to_json(const DiffOp& d);  // {"var_pair", "terms": [{"a", "b", "c", "d", ...}]}
Json to_json(const OrderExpansion& e);

// Inverses of the above; throw DomainError on malformed input.
Scalar scalar_from_json(const Json& j);
OpPoly op_poly_from_json(const Json& j, const Algebra& fallback = Algebra::qp());
PhasePoly phase_poly_from_json(const Json& j);
DiffOp diff_op_from_json(const Json& j);

}  // namespace wwgm::cli
