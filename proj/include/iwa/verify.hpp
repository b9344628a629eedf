#ifndef IWA_VERIFY_HPP
#define IWA_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace iwa {

// Outcome of one identity suite.  A failing suite always carries the first
// counterexample, serialized as a compact JSON document.
struct VerificationReport {
    std::string identity;
    long instances = 0;
    bool pass = true;
    std::string counterexample;
};

struct SuiteInfo {
    std::string name;
    std::string description;
    bool hidden = false;  // excluded from the "all" selector (harness self-tests)
};

const std::vector<SuiteInfo>& list_suites();
bool is_known_suite(const std::string& selector);

// Run one suite, or every non-hidden suite for selector "all".  Deterministic
// in (selector, seed, count); each suite derives its stream from the seed and
// its own name, so "all" agrees with the individual runs.
std::vector<VerificationReport> run_verify(const std::string& selector, std::uint64_t seed,
                                           long count);

bool all_passed(const std::vector<VerificationReport>& reports);

// One line per suite; byte-stable for fixed inputs.
std::string render_reports(const std::vector<VerificationReport>& reports);
std::string render_reports_json(const std::vector<VerificationReport>& reports);

} // namespace iwa

#endif // IWA_VERIFY_HPP
