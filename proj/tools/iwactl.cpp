// Command-line front end: invariant reports, identity verification suites,
// shipped examples, and random document generation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "iwa/corpus.hpp"
#include "iwa/document.hpp"
#include "iwa/report.hpp"
#include "iwa/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw iwa::format_error("cannot open file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of finitely presented Iwasawa modules"};
    app.require_subcommand(1);

    std::string invariants_file;
    bool invariants_json = false;
    auto* invariants_cmd =
        app.add_subcommand("invariants", "compute every invariant a document supports");
    invariants_cmd->add_option("file", invariants_file, "module document (JSON)")->required();
    invariants_cmd->add_flag("--json", invariants_json, "structured report");

    std::string suite = "all";
    std::uint64_t seed = 1;
    long count = 100;
    bool verify_json = false;
    bool list = false;
    auto* verify_cmd = app.add_subcommand("verify", "run identity verification suites");
    verify_cmd->add_option("--suite", suite, "suite name or \"all\"");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--count", count, "instances per suite");
    verify_cmd->add_flag("--json", verify_json, "structured report");
    verify_cmd->add_flag("--list", list, "list suite names and exit");

    std::string example_name;
    auto* examples_cmd = app.add_subcommand("examples", "print a shipped example");
    examples_cmd->add_option("--name", example_name, "remark2 | conductor11 | theorem-k")
        ->required();

    std::string gen_kind = "lambda";
    std::uint64_t gen_seed = 1;
    auto* gen_cmd = app.add_subcommand("gen", "emit a random module document");
    gen_cmd->add_option("--kind", gen_kind, "lambda | eigen");
    gen_cmd->add_option("--seed", gen_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (invariants_cmd->parsed()) {
            iwa::ModuleDocument doc = iwa::parse_document(read_file(invariants_file));
            std::cout << (invariants_json ? iwa::invariants_report_json(doc)
                                          : iwa::invariants_report(doc));
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            if (list) {
                for (const auto& info : iwa::list_suites()) {
                    std::cout << info.name << (info.hidden ? " (hidden)" : "") << ": "
                              << info.description << "\n";
                }
                return kExitOk;
            }
            if (count < 1) throw iwa::domain_error("--count must be >= 1");
            auto reports = iwa::run_verify(suite, seed, count);
            std::cout << (verify_json ? iwa::render_reports_json(reports)
                                      : iwa::render_reports(reports));
            return iwa::all_passed(reports) ? kExitOk : kExitVerifyFailed;
        }
        if (examples_cmd->parsed()) {
            iwa::BuiltinExample example = iwa::builtin_example(example_name);
            if (example.doc) {
                // document on stdout so it pipes into `invariants`; values on stderr
                std::cout << iwa::serialize_document(*example.doc);
                std::cerr << example.note;
            } else {
                std::cout << example.note;
            }
            return kExitOk;
        }
        if (gen_cmd->parsed()) {
            iwa::Rng rng(gen_seed);
            iwa::PrimeContext ctx(5);
            iwa::ModuleDocument doc;
            if (gen_kind == "lambda") {
                doc = iwa::document_from(iwa::random_injective_module(rng, ctx));
            } else if (gen_kind == "eigen") {
                iwa::GDescriptor g = iwa::GDescriptor::make(ctx, rng.range(0, 3));
                doc = iwa::document_from(
                    iwa::random_eigen_module(rng, g, iwa::CorpusOptions{3, 5, 2, 2, 3}));
            } else {
                throw iwa::domain_error("gen: unknown kind \"" + gen_kind +
                                        "\" (expected lambda or eigen)");
            }
            std::cout << iwa::serialize_document(doc);
            return kExitOk;
        }
    } catch (const iwa::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
