#include "solvspin/cli/json_io.hpp"

namespace solvspin::cli {

json to_json(const exact::Rational& q) { return q.to_string(); }

json to_json(const exact::TowerScalar& x) {
  return json{{"a", x.a().to_string()},
              {"b", x.b().to_string()},
              {"c", x.c().to_string()},
              {"d", x.d().to_string()},
              {"radicand", x.radicand().to_string()}};
}

json to_json(const exact::FloatScalar& x) { return x.value(); }

json field_to_json(const halfspace::CoordSpinorField& psi) {
  json arr = json::array();
  for (const auto& f : psi) {
    json comp = json::object();
    for (const auto& [mono, c] : f.terms()) comp[mono.key()] = to_json(c);
    arr.push_back(std::move(comp));
  }
  return arr;
}

namespace {

json candidate_json(const killing::LambdaCandidate& c) {
  return json{{"lambda", to_json(c.lambda)}, {"lambda_squared", to_json(c.lambda_squared)}, {"branch", c.branch}};
}

}  // namespace

json to_json(const killing::KillingReport& r) {
  json cands = json::array();
  for (const auto& c : r.candidates) {
    json basis = json::array();
    for (const auto& psi : c.basis) basis.push_back(to_json(psi));
    json item = candidate_json(c.candidate);
    item["invariant_solutions"] = std::move(basis);
    item["dimension"] = c.basis.size();
    item["ricci_filter_dim"] = c.ricci_filter_dim;
    cands.push_back(std::move(item));
  }
  return json{{"scope", "invariant spinors only"},
              {"scalar_curvature", to_json(r.scalar_curvature)},
              {"candidates", std::move(cands)}};
}

json to_json(const killing::ObstructionReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json item{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  json out{{"scope", "necessary conditions for arbitrary Killing spinors"},
           {"verdict", killing::to_string(r.verdict)},
           {"checks", std::move(checks)}};
  if (!r.reason.empty()) out["reason"] = r.reason;
  if (r.scalar_curvature) out["scalar_curvature"] = to_json(*r.scalar_curvature);
  if (r.lambda_squared) out["lambda_squared"] = to_json(*r.lambda_squared);
  if (!r.candidates.empty()) {
    json cands = json::array();
    for (const auto& c : r.candidates) cands.push_back(candidate_json(c));
    out["candidates"] = std::move(cands);
  }
  if (r.verdict == killing::Verdict::HyperbolicHalfSpace) {
    out["radius"] = r.radius->is_rational() ? json(r.radius->as_rational().to_string()) : to_json(*r.radius);
    out["eps0"] = r.eps0;
    out["nil_signs"] = r.nil_signs;
    out["e0_reversed"] = r.e0_reversed;
  }
  return out;
}

}  // namespace solvspin::cli
