#include "iwa/document.hpp"

#include <json.hpp>

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace iwa {

namespace {

using json = nlohmann::ordered_json;

void reject_unknown_fields(const json& obj, const std::set<std::string>& known,
                           const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (known.find(key) == known.end()) {
            throw format_error("unknown field \"" + key + "\" in " + where);
        }
    }
}

const json& require_field(const json& obj, const char* field, const std::string& where) {
    auto it = obj.find(field);
    if (it == obj.end()) {
        throw format_error("missing field \"" + std::string(field) + "\" in " + where);
    }
    return *it;
}

mpz_class parse_bigint(const json& value, const std::string& where) {
    if (value.is_string()) {
        const std::string s = value.get<std::string>();
        try {
            return mpz_class(s, 10);
        } catch (const std::invalid_argument&) {
            throw format_error("field " + where + ": \"" + s + "\" is not a decimal integer");
        }
    }
    if (value.is_number_integer()) {
        return mpz_class(std::to_string(value.get<long long>()), 10);
    }
    throw format_error("field " + where + ": expected an integer or a decimal string");
}

long parse_long(const json& value, const std::string& where) {
    mpz_class z = parse_bigint(value, where);
    if (!z.fits_slong_p()) throw format_error("field " + where + ": value out of range");
    return z.get_si();
}

std::vector<mpz_class> parse_coefficients(const json& value, const std::string& where) {
    if (!value.is_array()) {
        throw format_error("field " + where + ": expected a coefficient array");
    }
    std::vector<mpz_class> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(parse_bigint(value[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

Mat<IwasawaElement> parse_relations(const json& value, const std::string& where) {
    if (!value.is_array()) throw format_error("field " + where + ": expected an array of rows");
    std::vector<std::vector<IwasawaElement>> rows;
    rows.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        const json& row = value[i];
        const std::string row_where = where + "[" + std::to_string(i) + "]";
        if (!row.is_array()) throw format_error("field " + row_where + ": expected a row array");
        std::vector<IwasawaElement> entries;
        entries.reserve(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            entries.emplace_back(
                parse_coefficients(row[j], row_where + "[" + std::to_string(j) + "]"));
        }
        rows.push_back(std::move(entries));
    }
    return Mat<IwasawaElement>::from_rows(rows);
}

LambdaModule parse_lambda_payload(const json& obj, const std::string& where) {
    PrimeContext ctx(parse_bigint(require_field(obj, "p", where), where + ".p"));
    long generators = parse_long(require_field(obj, "generators", where), where + ".generators");
    Mat<IwasawaElement> relations =
        parse_relations(require_field(obj, "relations", where), where + ".relations");
    return LambdaModule::make(std::move(ctx), generators, std::move(relations));
}

json coefficients_to_json(const std::vector<mpz_class>& coeffs) {
    json arr = json::array();
    for (const auto& c : coeffs) arr.push_back(c.get_str());
    return arr;
}

json relations_to_json(const Mat<IwasawaElement>& rel) {
    json rows = json::array();
    for (std::size_t i = 0; i < rel.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < rel.cols(); ++j) {
            row.push_back(coefficients_to_json(rel.at(i, j).coefficients()));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json fp_relations_to_json(const Mat<FpPoly>& rel) {
    json rows = json::array();
    for (std::size_t i = 0; i < rel.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < rel.cols(); ++j) {
            row.push_back(coefficients_to_json(rel.at(i, j).c));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json lambda_payload_to_json(const LambdaModule& m) {
    json obj = json::object();
    obj["p"] = m.ctx().p().get_str();
    obj["generators"] = m.generators();
    obj["relations"] = relations_to_json(m.relations());
    return obj;
}

} // namespace

const char* kind_name(ModuleDocument::Kind kind) {
    switch (kind) {
        case ModuleDocument::Kind::lambda: return "lambda";
        case ModuleDocument::Kind::omega: return "omega";
        case ModuleDocument::Kind::eigen: return "eigen";
        case ModuleDocument::Kind::elementary: return "elementary";
        case ModuleDocument::Kind::isogeny: return "isogeny";
    }
    return "?";
}

ModuleDocument parse_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw format_error(std::string("document is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw format_error("document root must be a JSON object");

    ModuleDocument doc;
    if (auto it = root.find("schema_version"); it != root.end()) {
        doc.schema_version = parse_long(*it, "schema_version");
        if (doc.schema_version != 1) {
            throw format_error("unsupported schema_version " +
                               std::to_string(doc.schema_version));
        }
    }
    std::string kind = "lambda";
    if (auto it = root.find("kind"); it != root.end()) {
        if (!it->is_string()) throw format_error("field kind: expected a string");
        kind = it->get<std::string>();
    }

    if (kind == "lambda") {
        doc.kind = ModuleDocument::Kind::lambda;
        reject_unknown_fields(root, {"schema_version", "kind", "p", "generators", "relations"},
                              "lambda document");
        doc.payload = parse_lambda_payload(root, "document");
    } else if (kind == "omega") {
        doc.kind = ModuleDocument::Kind::omega;
        reject_unknown_fields(root, {"schema_version", "kind", "p", "generators", "relations"},
                              "omega document");
        LambdaModule lifted = parse_lambda_payload(root, "document");
        doc.payload = mod_p_reduction(lifted);
    } else if (kind == "eigen") {
        doc.kind = ModuleDocument::Kind::eigen;
        reject_unknown_fields(root,
                              {"schema_version", "kind", "p", "action_exponent", "components"},
                              "eigen document");
        PrimeContext ctx(parse_bigint(require_field(root, "p", "document"), "p"));
        long exponent =
            parse_long(require_field(root, "action_exponent", "document"), "action_exponent");
        GDescriptor g = GDescriptor::make(ctx, exponent);
        const json& comps = require_field(root, "components", "document");
        if (!comps.is_object()) throw format_error("field components: expected an object");
        std::map<long, LambdaModule> components;
        for (const auto& [key, value] : comps.items()) {
            long index;
            try {
                std::size_t pos = 0;
                index = std::stol(key, &pos);
                if (pos != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw format_error("components key \"" + key +
                                   "\" is not a character index");
            }
            if (!value.is_object()) {
                throw format_error("components[\"" + key + "\"]: expected an object");
            }
            reject_unknown_fields(value, {"generators", "relations"},
                                  "components[\"" + key + "\"]");
            const std::string where = "components[\"" + key + "\"]";
            long generators =
                parse_long(require_field(value, "generators", where), where + ".generators");
            Mat<IwasawaElement> relations =
                parse_relations(require_field(value, "relations", where), where + ".relations");
            if (!components.emplace(index, LambdaModule::make(ctx, generators,
                                                              std::move(relations)))
                     .second) {
                throw format_error("components key \"" + key + "\" repeated");
            }
        }
        doc.payload = EigenModule::make(std::move(g), std::move(components));
    } else if (kind == "elementary") {
        doc.kind = ModuleDocument::Kind::elementary;
        reject_unknown_fields(root,
                              {"schema_version", "kind", "p", "free_rank", "p_power_exponents",
                               "distinguished_parts"},
                              "elementary document");
        PrimeContext ctx(parse_bigint(require_field(root, "p", "document"), "p"));
        long free_rank = parse_long(require_field(root, "free_rank", "document"), "free_rank");
        const json& exps = require_field(root, "p_power_exponents", "document");
        if (!exps.is_array()) throw format_error("field p_power_exponents: expected an array");
        std::vector<long> p_exps;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            p_exps.push_back(
                parse_long(exps[i], "p_power_exponents[" + std::to_string(i) + "]"));
        }
        const json& parts = require_field(root, "distinguished_parts", "document");
        if (!parts.is_array()) throw format_error("field distinguished_parts: expected an array");
        std::vector<DistinguishedPart> dist;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const json& part = parts[i];
            const std::string where = "distinguished_parts[" + std::to_string(i) + "]";
            if (!part.is_object()) throw format_error(where + ": expected an object");
            reject_unknown_fields(part, {"coefficients", "multiplicity"}, where);
            IwasawaElement poly(parse_coefficients(require_field(part, "coefficients", where),
                                                   where + ".coefficients"));
            long multiplicity =
                parse_long(require_field(part, "multiplicity", where), where + ".multiplicity");
            dist.push_back(DistinguishedPart{std::move(poly), multiplicity});
        }
        doc.payload =
            ElementaryModule::make(std::move(ctx), free_rank, std::move(p_exps), std::move(dist));
    } else if (kind == "isogeny") {
        doc.kind = ModuleDocument::Kind::isogeny;
        reject_unknown_fields(root,
                              {"schema_version", "kind", "p", "global_degree", "kernel_exponent",
                               "arch_places", "p_places", "assumption_l"},
                              "isogeny document");
        PrimeContext ctx(parse_bigint(require_field(root, "p", "document"), "p"));
        long degree =
            parse_long(require_field(root, "global_degree", "document"), "global_degree");
        long kernel =
            parse_long(require_field(root, "kernel_exponent", "document"), "kernel_exponent");
        const json& arch = require_field(root, "arch_places", "document");
        if (!arch.is_array()) throw format_error("field arch_places: expected an array");
        std::vector<ArchPlaceDatum> arch_places;
        for (std::size_t i = 0; i < arch.size(); ++i) {
            const json& place = arch[i];
            const std::string where = "arch_places[" + std::to_string(i) + "]";
            if (!place.is_object()) throw format_error(where + ": expected an object");
            reject_unknown_fields(place, {"kind", "local_points_exponent"}, where);
            const json& kind_field = require_field(place, "kind", where);
            if (!kind_field.is_string()) throw format_error(where + ".kind: expected a string");
            std::string kind_str = kind_field.get<std::string>();
            ArchKind place_kind;
            if (kind_str == "real") {
                place_kind = ArchKind::real;
            } else if (kind_str == "complex") {
                place_kind = ArchKind::complex_place;
            } else {
                throw format_error(where + ".kind: expected \"real\" or \"complex\"");
            }
            long exponent = parse_long(require_field(place, "local_points_exponent", where),
                                       where + ".local_points_exponent");
            arch_places.push_back(ArchPlaceDatum{place_kind, exponent});
        }
        const json& padic = require_field(root, "p_places", "document");
        if (!padic.is_array()) throw format_error("field p_places: expected an array");
        std::vector<PAdicPlaceDatum> p_places;
        for (std::size_t i = 0; i < padic.size(); ++i) {
            const json& place = padic[i];
            const std::string where = "p_places[" + std::to_string(i) + "]";
            if (!place.is_object()) throw format_error(where + ": expected an object");
            reject_unknown_fields(place, {"local_degree", "reduced_kernel_exponent"}, where);
            long local_degree = parse_long(require_field(place, "local_degree", where),
                                           where + ".local_degree");
            long reduced = parse_long(require_field(place, "reduced_kernel_exponent", where),
                                      where + ".reduced_kernel_exponent");
            p_places.push_back(PAdicPlaceDatum{local_degree, reduced});
        }
        bool assumption = true;
        if (auto it = root.find("assumption_l"); it != root.end()) {
            if (!it->is_boolean()) throw format_error("field assumption_l: expected a boolean");
            assumption = it->get<bool>();
        }
        doc.payload = IsogenyData::make(std::move(ctx), degree, kernel, std::move(arch_places),
                                        std::move(p_places), assumption);
    } else {
        throw format_error("unknown document kind \"" + kind + "\"");
    }
    return doc;
}

std::string serialize_document(const ModuleDocument& doc) {
    json root = json::object();
    root["schema_version"] = doc.schema_version;
    root["kind"] = kind_name(doc.kind);
    switch (doc.kind) {
        case ModuleDocument::Kind::lambda: {
            const LambdaModule& m = doc.as_lambda();
            json payload = lambda_payload_to_json(m);
            root.update(payload);
            break;
        }
        case ModuleDocument::Kind::omega: {
            const OmegaModule& n = doc.as_omega();
            root["p"] = n.ctx().p().get_str();
            root["generators"] = n.generators();
            root["relations"] = fp_relations_to_json(n.relations());
            break;
        }
        case ModuleDocument::Kind::eigen: {
            const EigenModule& m = doc.as_eigen();
            root["p"] = m.descriptor().ctx.p().get_str();
            root["action_exponent"] = m.descriptor().action_exponent;
            json comps = json::object();
            for (const auto& [index, module] : m.components()) {
                json payload = json::object();
                payload["generators"] = module.generators();
                payload["relations"] = relations_to_json(module.relations());
                comps[std::to_string(index)] = std::move(payload);
            }
            root["components"] = std::move(comps);
            break;
        }
        case ModuleDocument::Kind::elementary: {
            const ElementaryModule& e = doc.as_elementary();
            root["p"] = e.ctx().p().get_str();
            root["free_rank"] = e.free_rank();
            root["p_power_exponents"] = e.p_power_exponents();
            json parts = json::array();
            for (const auto& part : e.distinguished_parts()) {
                json obj = json::object();
                obj["coefficients"] = coefficients_to_json(part.poly.coefficients());
                obj["multiplicity"] = part.multiplicity;
                parts.push_back(std::move(obj));
            }
            root["distinguished_parts"] = std::move(parts);
            break;
        }
        case ModuleDocument::Kind::isogeny: {
            const IsogenyData& d = doc.as_isogeny();
            root["p"] = d.ctx().p().get_str();
            root["global_degree"] = d.global_degree();
            root["kernel_exponent"] = d.kernel_exponent();
            json arch = json::array();
            for (const auto& place : d.arch_places()) {
                json obj = json::object();
                obj["kind"] = place.kind == ArchKind::real ? "real" : "complex";
                obj["local_points_exponent"] = place.local_points_exponent;
                arch.push_back(std::move(obj));
            }
            root["arch_places"] = std::move(arch);
            json padic = json::array();
            for (const auto& place : d.p_places()) {
                json obj = json::object();
                obj["local_degree"] = place.local_degree;
                obj["reduced_kernel_exponent"] = place.reduced_kernel_exponent;
                padic.push_back(std::move(obj));
            }
            root["p_places"] = std::move(padic);
            root["assumption_l"] = d.localization_surjective_asserted();
            break;
        }
    }
    return root.dump(2) + "\n";
}

ModuleDocument document_from(LambdaModule m) {
    return ModuleDocument{1, ModuleDocument::Kind::lambda, std::move(m)};
}
ModuleDocument document_from(OmegaModule m) {
    return ModuleDocument{1, ModuleDocument::Kind::omega, std::move(m)};
}
ModuleDocument document_from(EigenModule m) {
    return ModuleDocument{1, ModuleDocument::Kind::eigen, std::move(m)};
}
ModuleDocument document_from(ElementaryModule m) {
    return ModuleDocument{1, ModuleDocument::Kind::elementary, std::move(m)};
}
ModuleDocument document_from(IsogenyData d) {
    return ModuleDocument{1, ModuleDocument::Kind::isogeny, std::move(d)};
}

} // namespace iwa
