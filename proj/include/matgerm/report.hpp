#pragma once

#include <string>

#include <json.hpp>

#include "matgerm/determinacy.hpp"
#include "matgerm/homogeneity.hpp"
#include "matgerm/identities.hpp"
#include "matgerm/tangent.hpp"

namespace matgerm::report {

/// ordered_json keeps insertion order, making reports byte-deterministic.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "0.1.0";

std::string fnv1a_hex(const std::string& data);

/// Common envelope: tool/schema versions, command name, input digest.
Json run_header(const std::string& command, const std::string& input_text);

using VarNames = std::vector<std::string>;

Json poly_json(const Polynomial& p, const VarNames& names);
Json matrix_json(const PolyMatrix& m, const VarNames& names);
Json combination_json(const TangentCombination& c, const VarNames& names);
Json determinacy_json(const DeterminacyReport& r);
Json tjurina_json(const TjurinaReport& r);
Json homogeneity_json(const HomogeneityResult& r);
Json control_spec_json(const ControlFunctionSpec& s);
Json triviality_json(const TrivialityVerdict& v);
Json certificate_json(const FiltrationCertificate& c, const VarNames& names);
Json identity_suite_json(const IdentitySuiteReport& r);

}  // namespace matgerm::report
