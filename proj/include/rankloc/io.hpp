#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rankloc/code.hpp"

namespace rankloc {

/// Text forms.
///
/// Polynomials over F_q use the variable T: "T^9+4T^6+T^3+4". For e > 1
/// the coefficients are written in the F_q generator 'a' ("alpha" and a
/// literal alpha are accepted too), parenthesized when they are sums:
/// "T^6+(a+1)T^3+a".
///
/// F_{q^m} elements are written in the extension generator: 'a' over a
/// prime field ("3a^8+2a^7+a^5"), 'x' with 'a'-coefficients otherwise.
Fq parse_fq_text(const SmallField& F, std::string_view s);
UniPoly parse_poly_text(const SmallField& F, std::string_view s);
FqmElem parse_fqm_text(const FieldTower& tw, std::string_view s);
std::string poly_to_text(const SmallField& F, const UniPoly& f);

/// JSON element forms (the file formats build on these):
///   F_p element:     integer 0..p-1
///   F_q element:     ascending array of e integers   (bare integer accepted on input when e = 1)
///   F_{q^m} element: ascending array of m F_q elements
///   polynomial:      ascending array of its coefficients
nlohmann::json fq_to_json(const SmallField& F, Fq a);
Fq fq_from_json(const SmallField& F, const nlohmann::json& j, const std::string& where);
nlohmann::json fqm_to_json(const FieldTower& tw, const FqmElem& a);
FqmElem fqm_from_json(const FieldTower& tw, const nlohmann::json& j, const std::string& where);
nlohmann::json poly_to_json(const SmallField& F, const UniPoly& f);
UniPoly poly_from_json(const SmallField& F, const nlohmann::json& j, const std::string& where);

/// Params/Code file payload: the field, the parameters, and any explicit
/// tower data. Code files produced by code_to_json parse back through the
/// same routine (they are a params file closure).
struct ParsedParams {
  SmallField F;
  CodeParams params;
  std::optional<ExplicitConstruction> explicit_data;
};

ParsedParams params_from_json(const nlohmann::json& j);
CodeInstance code_from_json(const nlohmann::json& j);
nlohmann::json code_to_json(const CodeInstance& code);

nlohmann::json word_to_json(const CodeInstance& code, const Codeword& word, std::string_view code_ref);
Codeword word_from_json(const CodeInstance& code, const nlohmann::json& j);

nlohmann::json message_to_json(const CodeInstance& code, const Message& msg);
Message message_from_json(const CodeInstance& code, const nlohmann::json& j);

}  // namespace rankloc
