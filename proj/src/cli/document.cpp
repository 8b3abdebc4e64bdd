#include "fqrep/cli/document.hpp"

#include "fqrep/errors.hpp"

namespace fqrep::cli {

Json element_to_json(const FieldElem& x) {
    if (x.in_prime_field()) return x.prime_value();
    Json arr = Json::array();
    for (u32 c : x.coeffs()) arr.push_back(c);
    return arr;
}

FieldElem element_from_json(const FieldCtx& ctx, const Json& j) {
    if (j.is_number_integer()) return FieldElem::from_int(ctx, j.get<i64>());
    if (!j.is_array()) throw InvalidArgument("field element must be an integer or an array");
    std::vector<i64> c;
    for (const auto& v : j) c.push_back(v.get<i64>());
    return FieldElem::from_coeffs(ctx, c);
}

Json field_to_json(const FieldCtx& ctx) {
    return Json{{"char", ctx.characteristic()},
                {"degree", ctx.degree()},
                {"modulus", ctx.modulus()},
                {"subfield_degree", ctx.subfield_degree()}};
}

FieldCtx field_from_json(const Json& j) {
    const u64 s = j.at("char").get<u64>();
    const int e = j.value("subfield_degree", 1);
    const auto modulus = j.at("modulus").get<zp::Coeffs>();
    const FieldCtx ctx = make_field_with_modulus(s, modulus, e);
    if (ctx.degree() != j.at("degree").get<int>()) throw InvalidArgument("degree does not match the modulus");
    return ctx;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(element_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const FieldCtx& ctx, const Json& j) {
    if (!j.is_array() || j.empty()) throw InvalidArgument("matrix must be a non-empty array of rows");
    Matrix m(ctx, j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i].size() != j.size()) throw InvalidArgument("matrix must be square");
        for (std::size_t c = 0; c < j.size(); ++c) m(i, c) = element_from_json(ctx, j[i][c]);
    }
    return m;
}

Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(element_to_json(c));
    return arr;
}

Json verify_to_json(const VerifyReport& report) {
    Json j{{"ok", report.ok()},
           {"relations",
            {{"a_order", report.relations.a_order},
             {"b_order", report.relations.b_order},
             {"conjugation", report.relations.conjugation}}},
           {"entries_in_subfield", report.entries_in_subfield}};
    if (report.char_poly_a) j["char_poly_a"] = poly_to_json(*report.char_poly_a);
    if (report.char_poly_b) j["char_poly_b"] = poly_to_json(*report.char_poly_b);
    switch (report.character) {
        case CharacterVerdict::NotChecked: break;
        case CharacterVerdict::Equal: j["character"] = "equivalent (character)"; break;
        case CharacterVerdict::Different: j["character"] = "different"; break;
    }
    if (report.certified) j["certified"] = *report.certified ? "equivalent (certified)" : "no intertwiner found";
    return j;
}

Json representation_document(const std::string& command, const Representation& rep, const VerifyReport& report) {
    Json choices = Json::object();
    for (const auto& [k, v] : rep.choices) choices[k] = v;
    return Json{{"command", command},
                {"group", {{"m", rep.group.m}, {"n", rep.group.n}, {"k", rep.group.k}}},
                {"field", field_to_json(rep.ctx)},
                {"mat_a", matrix_to_json(rep.mat_a)},
                {"mat_b", matrix_to_json(rep.mat_b)},
                {"verify", verify_to_json(report)},
                {"choices", choices}};
}

Representation representation_from_document(const Json& doc) {
    const auto& g = doc.at("group");
    const MetacyclicGroup group = make_group(g.at("m").get<u64>(), g.at("n").get<u64>(), g.at("k").get<u64>());
    const FieldCtx ctx = field_from_json(doc.at("field"));
    Representation rep{group, ctx, matrix_from_json(ctx, doc.at("mat_a")), matrix_from_json(ctx, doc.at("mat_b")), {}};
    if (doc.contains("choices"))
        for (const auto& [k, v] : doc["choices"].items()) rep.choices.emplace_back(k, v.get<std::string>());
    return rep;
}

RoundTrip reverify_document(const Json& doc) {
    RoundTrip out;
    try {
        const Representation rep = representation_from_document(doc);
        const Json& echoed = doc.at("verify");
        const VerifyReport fresh = verify(rep);
        Json recomputed = verify_to_json(fresh);
        for (const char* key : {"relations", "entries_in_subfield", "char_poly_a", "char_poly_b"}) {
            if (echoed.contains(key) && echoed[key] != recomputed[key]) {
                out.detail = std::string("mismatch in ") + key;
                return out;
            }
        }
        // Character and certification need the reference representation; the
        // echoed verdict can only be reproduced for the parts recomputed here.
        const bool echoed_ok = echoed.at("ok").get<bool>();
        const bool structural_ok = fresh.relations.ok() && fresh.entries_in_subfield;
        if (echoed_ok && !structural_ok) {
            out.detail = "echoed ok but re-verification fails";
            return out;
        }
        out.matches = true;
        out.detail = fresh.summary();
    } catch (const std::exception& e) {
        out.detail = e.what();
    }
    return out;
}

}  // namespace fqrep::cli
