/**
 * @file document.hpp
 * @brief JSON output documents for representations and their re-verification.
 *
 * Field elements are encoded as a bare integer when they lie in the prime
 * field and as a coefficient array (constant term first) otherwise.
 */
#pragma once

#include <string>

#include <json.hpp>

#include "fqrep/representation.hpp"

namespace fqrep::cli {

using Json = nlohmann::ordered_json;

Json element_to_json(const FieldElem& x);
FieldElem element_from_json(const FieldCtx& ctx, const Json& j);

Json field_to_json(const FieldCtx& ctx);
FieldCtx field_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldCtx& ctx, const Json& j);

Json poly_to_json(const Poly& p);

Json verify_to_json(const VerifyReport& report);

/// {"command", "group", "field", "mat_a", "mat_b", "verify", "choices"}.
Json representation_document(const std::string& command, const Representation& rep, const VerifyReport& report);

Representation representation_from_document(const Json& doc);

struct RoundTrip {
    bool matches = false;  ///< recomputed verdict, relations, subfield flag and char polys equal the echoed ones
    std::string detail;
};

/// Parses a document produced by representation_document, verifies the parsed
/// representation again and compares with the echoed report.
RoundTrip reverify_document(const Json& doc);

}  // namespace fqrep::cli
