#ifndef IWA_REPORT_HPP
#define IWA_REPORT_HPP

#include <optional>
#include <string>

#include "iwa/document.hpp"

namespace iwa {

// Text report of every invariant the document supports.  Quantities the
// presentation cannot carry (homology of a non-injective presentation,
// mu/lambda of a non-square one) are replaced by a remediation note instead
// of failing the whole report.
std::string invariants_report(const ModuleDocument& doc);

// The same report as a JSON object; unavailable quantities appear under
// "notes" instead of as fields.
std::string invariants_report_json(const ModuleDocument& doc);

// Named example inputs shipped with the tool.
struct BuiltinExample {
    std::string name;
    std::optional<ModuleDocument> doc;  // absent for pure formula evaluations
    std::string note;                   // headline values, one per line
};

// Known names: remark2, conductor11, theorem-k.
BuiltinExample builtin_example(const std::string& name);

} // namespace iwa

#endif // IWA_REPORT_HPP
