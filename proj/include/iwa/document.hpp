#ifndef IWA_DOCUMENT_HPP
#define IWA_DOCUMENT_HPP

#include <string>
#include <variant>

#include "iwa/eigen_module.hpp"
#include "iwa/elementary.hpp"
#include "iwa/isogeny.hpp"
#include "iwa/lambda_module.hpp"
#include "iwa/omega_module.hpp"

namespace iwa {

/*
 * On-disk document wrapping one of the module kinds.  JSON syntax; integers
 * may be written as plain numbers or as decimal strings, the canonical form
 * emits strings for p and polynomial coefficients so no consumer ever rounds
 * them.  Unknown fields are rejected.  A document with no "kind" field is
 * read as a lambda document.
 */
struct ModuleDocument {
    enum class Kind { lambda, omega, eigen, elementary, isogeny };

    long schema_version = 1;
    Kind kind = Kind::lambda;
    std::variant<std::monostate, LambdaModule, OmegaModule, EigenModule, ElementaryModule,
                 IsogenyData>
        payload;

    const LambdaModule& as_lambda() const { return std::get<LambdaModule>(payload); }
    const OmegaModule& as_omega() const { return std::get<OmegaModule>(payload); }
    const EigenModule& as_eigen() const { return std::get<EigenModule>(payload); }
    const ElementaryModule& as_elementary() const { return std::get<ElementaryModule>(payload); }
    const IsogenyData& as_isogeny() const { return std::get<IsogenyData>(payload); }
};

const char* kind_name(ModuleDocument::Kind kind);

// Parse and validate; throws format_error with a field diagnostic on schema
// violations, and the payload constructors' errors on invariant violations.
ModuleDocument parse_document(const std::string& text);

// Canonical serialization: fixed field order, two-space indent, decimal
// strings for unbounded integers.  parse followed by serialize is the
// canonicalization map and is idempotent.
std::string serialize_document(const ModuleDocument& doc);

ModuleDocument document_from(LambdaModule m);
ModuleDocument document_from(OmegaModule m);
ModuleDocument document_from(EigenModule m);
ModuleDocument document_from(ElementaryModule m);
ModuleDocument document_from(IsogenyData d);

} // namespace iwa

#endif // IWA_DOCUMENT_HPP
