#pragma once

#include <json.hpp>

#include "arrfree/recursion.hpp"

namespace arrfree {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::ordered_json;

// --- scalars -----------------------------------------------------------
json scalar_to_json(const FieldElement& e);
FieldElement scalar_from_json(const FieldPtr& f, const json& j);

// --- fields ------------------------------------------------------------
json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const json& j);

// --- arrangements ------------------------------------------------------
/// Canonical emission: canonicalized normals, original order, fixed
/// pretty-printing. Loading the emitted text reproduces it bit-exactly.
std::string emit_arrangement(const Arrangement& a);
Arrangement load_arrangement(const std::string& text);
Arrangement load_arrangement_file(const std::string& path);

/// FNV-1a over the canonical emission: ties reports and certificates to
/// exact inputs.
std::string canonical_hash(const Arrangement& a);

// --- certificates ------------------------------------------------------
json if_certificate_to_json(const IFCertificate& c);
IFCertificate if_certificate_from_json(const FieldPtr& f, const json& j);

json rf_certificate_to_json(const RFCertificate& c);
RFCertificate rf_certificate_from_json(const json& j);

// --- derivations (Saito bases) ------------------------------------------
/// {"field": ..., "derivations": [[ [ {"coeff": scalar, "exp": [a,b,c]} ... ] x3 ] x3]}
std::array<Derivation3, 3> derivations_from_json(const FieldPtr& f, const json& j);

// --- hyperplane lists (hints) --------------------------------------------
std::vector<Covector> covectors_from_json(const FieldPtr& f, const json& j);

// --- report fragments ----------------------------------------------------
json info_report(const Arrangement& a);
json freeness_to_json(const FreenessReport& r);
json if_verdict_to_json(const IFVerdict& v);
json obstruction_to_json(const ObstructionReport& r);
json step_report_to_json(const StepReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace arrfree
