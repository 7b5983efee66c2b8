#pragma once

#include <json.hpp>

#include "solvspin/clifford/clifford.hpp"
#include "solvspin/exact/float_scalar.hpp"
#include "solvspin/halfspace/halfspace.hpp"
#include "solvspin/killing/killing.hpp"

namespace solvspin::cli {

using nlohmann::json;

json to_json(const exact::Rational& q);
json to_json(const exact::TowerScalar& x);
json to_json(const exact::FloatScalar& x);

template <class S>
json to_json(const exact::Matrix<S>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class S>
json to_json(const std::vector<S>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

/// One object per spinor component mapping monomial keys to coefficients.
json field_to_json(const halfspace::CoordSpinorField& psi);

json to_json(const killing::KillingReport& r);
json to_json(const killing::ObstructionReport& r);

}  // namespace solvspin::cli
