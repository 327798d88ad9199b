#pragma once

#include <json.hpp>

#include "meixner/meixner_poly.hpp"
#include "meixner/multi_index.hpp"
#include "meixner/operators.hpp"
#include "meixner/parameter_space.hpp"
#include "meixner/polynomial.hpp"
#include "meixner/rational.hpp"

namespace meixner {

// Wire formats:
//   Rational          "p/q" (or "p" when q = 1)
//   MultiIndex        [k_1, ..., k_d]
//   SparsePolynomial  [{"exp": [...], "coef": "p/q"}, ...], sorted
//                     lexicographically by exponent
//   MeixnerPoint      {"d": int, "c0": "p/q", "c": [...], "c_tilde": [...],
//                      "U": [[...], ...]}
//   MeixnerSpec       {"point": {...}, "beta": "p/q"}

nlohmann::json rational_to_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& value);

nlohmann::json multi_index_to_json(const MultiIndex& index);
MultiIndex multi_index_from_json(const nlohmann::json& value);

nlohmann::json polynomial_to_json(const SparsePolynomial& p);
SparsePolynomial polynomial_from_json(const nlohmann::json& value, int dimension);

nlohmann::json point_to_json(const MeixnerPoint& point);
// validate = false skips the membership checks (negative controls)
MeixnerPoint point_from_json(const nlohmann::json& value, bool validate = true);

nlohmann::json spec_to_json(const MeixnerSpec& spec);
MeixnerSpec spec_from_json(const nlohmann::json& value, bool validate = true);

nlohmann::json operator_to_json(const DifferenceOperator& op);
DifferenceOperator operator_from_json(const nlohmann::json& value);

}  // namespace meixner
