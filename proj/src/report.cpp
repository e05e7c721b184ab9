#include "matgerm/report.hpp"

#include <iomanip>
#include <sstream>

namespace matgerm::report {

std::string fnv1a_hex(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) h = (h ^ uint64_t(c)) * 1099511628211ull;
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Json run_header(const std::string& command, const std::string& input_text) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["input_digest"] = fnv1a_hex(input_text);
  return j;
}

Json poly_json(const Polynomial& p, const VarNames& names) {
  return to_string(p, names);
}

Json matrix_json(const PolyMatrix& m, const VarNames& names) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(poly_json(m.at(i, j), names));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json combination_json(const TangentCombination& c, const VarNames& names) {
  Json j;
  j["target"] = matrix_json(c.target, names);
  auto coeffs = [&](const std::vector<Polynomial>& v) {
    Json out = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      Json e;
      e["index"] = i;
      e["coefficient"] = poly_json(v[i], names);
      out.push_back(std::move(e));
    }
    return out;
  };
  j["jacobian_coefficients"] = coeffs(c.jcoeffs);
  j["column_coefficients"] = coeffs(c.ccoeffs);
  j["row_coefficients"] = coeffs(c.rcoeffs);
  return j;
}

Json determinacy_json(const DeterminacyReport& r) {
  Json j;
  j["criterion"] = r.criterion;
  j["k"] = r.k;
  j["verdict"] = to_cstring(r.verdict);
  j["truncation_degree"] = r.truncation_degree;
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.note.empty()) j["note"] = r.note;
  j["rank_q"] = r.rank_q;
  if (r.fp_used) {
    j["rank_fp"] = r.rank_fp;
    j["fp_agreed"] = r.fp_agreed;
    j["fp_escalated"] = r.fp_escalated;
  }
  return j;
}

Json tjurina_json(const TjurinaReport& r) {
  Json j;
  Json dims = Json::array();
  for (auto [d, dim] : r.dims) {
    Json e;
    e["truncation_degree"] = d;
    e["quotient_dimension"] = dim;
    dims.push_back(std::move(e));
  }
  j["dimensions"] = dims;
  if (r.value)
    j["tjurina_number"] = *r.value;
  else
    j["tjurina_number"] = nullptr;
  j["certificate_degree"] = r.certificate_degree;
  j["diverged"] = r.diverged;
  j["resource_limited"] = r.resource_limited;
  return j;
}

Json homogeneity_json(const HomogeneityResult& r) {
  Json j;
  j["accepted"] = r.ok;
  if (!r.ok) {
    j["error"] = r.error;
    return j;
  }
  j["weights"] = r.type.a.weights();
  j["entry_degrees"] = r.type.D;
  j["minor_degrees"] = r.type.D_u;
  j["d_max"] = r.type.d_max;
  j["euler_relation"] = "verified exactly for every minor";
  j["threshold_trivial"] = r.type.d_max + 1;
  j["threshold_small_t"] = r.type.d_max;
  return j;
}

Json control_spec_json(const ControlFunctionSpec& s) {
  Json j;
  j["k1"] = s.k1;
  j["beta"] = s.beta;
  Json deltas = Json::array();
  for (std::size_t i = 0; i < s.delta_degrees.size(); ++i) {
    const auto& d = s.delta_degrees[i];
    Json e;
    e["q"] = d.q + 1;
    e["s"] = d.s + 1;
    e["gamma"] = d.gamma + 1;
    e["nu"] = d.nu + 1;
    e["degree"] = d.degree;
    if (i < s.alpha.size()) e["alpha"] = s.alpha[i];
    deltas.push_back(std::move(e));
  }
  j["delta_degrees"] = deltas;
  j["degenerate"] = s.degenerate;
  if (s.degenerate) {
    j["degenerate_reason"] = s.degenerate_reason;
    return j;
  }
  j["k2"] = s.k2;
  j["K"] = s.K;
  j["c1"] = s.c1;
  j["c2"] = s.c2;
  return j;
}

Json triviality_json(const TrivialityVerdict& v) {
  Json j;
  j["d_max"] = v.type.d_max;
  j["threshold_trivial"] = v.type.d_max + 1;
  j["threshold_small_t"] = v.type.d_max;
  Json fils = Json::array();
  for (const auto& [i, jj, fil] : v.entry_filtrations) {
    Json e;
    e["row"] = i + 1;
    e["col"] = jj + 1;
    if (fil)
      e["filtration"] = *fil;
    else
      e["filtration"] = "infinity";
    fils.push_back(std::move(e));
  }
  j["entry_filtrations"] = fils;
  if (v.min_filtration)
    j["min_filtration"] = *v.min_filtration;
  else
    j["min_filtration"] = "infinity";
  j["verdict"] = to_cstring(v.verdict);
  j["precondition"] = determinacy_json(v.precondition);
  return j;
}

Json certificate_json(const FiltrationCertificate& c, const VarNames& names) {
  Json j;
  j["identities_ok"] = c.identities_ok;
  j["control_spec"] = control_spec_json(c.spec);
  Json h = Json::array();
  for (const auto& comb : c.h_route) h.push_back(combination_json(comb, names));
  j["h_route"] = h;
  Json r = Json::array();
  for (const auto& comb : c.r_route) r.push_back(combination_json(comb, names));
  j["r_route"] = r;
  Json bounds = Json::array();
  for (const auto& b : c.bounds) {
    Json e;
    e["label"] = b.label;
    e["formal_degree"] = b.formal_degree;
    e["coefficient_filtration"] = b.coefficient_filtration;
    e["total"] = b.total;
    e["threshold"] = b.threshold;
    e["meets"] = b.meets;
    bounds.push_back(std::move(e));
  }
  j["bounds"] = bounds;
  j["bounds_asserted"] = c.bounds_asserted;
  j["all_bounds_met"] = c.all_bounds_met;
  return j;
}

Json identity_suite_json(const IdentitySuiteReport& r) {
  Json j;
  j["seed"] = r.seed;
  j["cases_per_identity"] = r.cases_per_identity;
  Json results = Json::array();
  for (const auto& res : r.results) {
    Json e;
    e["name"] = res.name;
    e["cases"] = res.cases;
    e["failures"] = res.failures;
    if (!res.first_failure.empty()) e["first_failure"] = res.first_failure;
    results.push_back(std::move(e));
  }
  j["results"] = results;
  j["all_passed"] = r.all_passed;
  return j;
}

}  // namespace matgerm::report
