#pragma once

#include <nlohmann/json.hpp>

#include "tlq/idempotent.hpp"
#include "tlq/rootlimit.hpp"
#include "tlq/uq_pairing.hpp"

namespace tlq {

using json = nlohmann::ordered_json;

/// Integer for whole values, x.5 otherwise.
json half_json(int x2);

// Numerators and denominators are JSON integers when they fit in 64 bits, decimal strings otherwise.
void to_json(json& j, const Rational& x);
/// [[exponent, numerator, denominator], ...] by increasing exponent.
void to_json(json& j, const LaurentPoly& f);
/// {num, den}
void to_json(json& j, const RatFunc& f);
/// {order, coeffs}: coefficients of powers of a primitive order-th root of unity.
void to_json(json& j, const CycloNumber& c);
void to_json(json& j, const RootSpec& r);
/// {name: {ok, detail}} in insertion order of the list.
void to_json(json& j, const CheckList& c);

/// {rows, cols, dim, entries: [[r, c, scalar], ...]}
template <class T>
json operator_json(const Operator<T>& op) {
  json entries = json::array();
  for (std::size_t r = 0; r < op.rows(); ++r)
    for (const auto& [c, x] : op.mat.row(r)) entries.push_back(json::array({r, c, json(x)}));
  return json{{"rows", op.rows()}, {"cols", op.cols()}, {"dim", op.rows()}, {"entries", std::move(entries)}};
}

void to_json(json& j, const IdempotentCoeffs& c);
void to_json(json& j, const FamilyReport& r);
void to_json(json& j, const DecompositionReport& r);
void to_json(json& j, const UqDecompositionReport& r);
void to_json(json& j, const CycleDiagram& d);
/// Members with their projectors and nilpotents as sparse operators.
void to_json(json& j, const ProjectorFamily& f);

}  // namespace tlq
