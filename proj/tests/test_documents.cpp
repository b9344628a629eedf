#include <doctest.h>

#include "iwa/corpus.hpp"
#include "iwa/document.hpp"
#include "iwa/report.hpp"

using namespace iwa;

TEST_CASE("minimal lambda document parses with defaults") {
    ModuleDocument doc = parse_document(R"({"p":5,"generators":1,"relations":[[[0,1]]]})");
    CHECK(doc.kind == ModuleDocument::Kind::lambda);
    CHECK(doc.schema_version == 1);
    const LambdaModule& m = doc.as_lambda();
    CHECK(m.generators() == 1);
    CHECK(m.relations().at(0, 0) == IwasawaElement::variable());
    CHECK(lambda_rank(m) == 0);
}

TEST_CASE("decimal strings preserve arbitrary precision") {
    ModuleDocument doc = parse_document(
        R"({"kind":"lambda","p":"5","generators":1,
            "relations":[[["123456789012345678901234567890"]]]})");
    CHECK(doc.as_lambda().relations().at(0, 0).constant_term() ==
          mpz_class("123456789012345678901234567890"));
    std::string canonical = serialize_document(doc);
    CHECK(canonical.find("123456789012345678901234567890") != std::string::npos);
    CHECK(serialize_document(parse_document(canonical)) == canonical);
}

TEST_CASE("serialization canonicalizes and is idempotent") {
    std::string messy = R"({"relations":[[[0,"1"]]],"generators":1,"p":5})";
    std::string canonical = serialize_document(parse_document(messy));
    CHECK(serialize_document(parse_document(canonical)) == canonical);
    CHECK(canonical.find("\"kind\": \"lambda\"") != std::string::npos);
    CHECK(canonical.find("\"schema_version\": 1") != std::string::npos);
}

TEST_CASE("unknown fields are rejected") {
    CHECK_THROWS_WITH_AS(
        parse_document(R"({"p":5,"generators":1,"relations":[],"color":"red"})"),
        doctest::Contains("color"), format_error);
}

TEST_CASE("schema violations carry diagnostics") {
    CHECK_THROWS_AS(parse_document("not json"), format_error);
    CHECK_THROWS_AS(parse_document(R"([1,2,3])"), format_error);
    CHECK_THROWS_AS(parse_document(R"({"kind":"widget","p":5})"), format_error);
    CHECK_THROWS_AS(parse_document(R"({"p":5,"generators":1})"), format_error);
    CHECK_THROWS_AS(
        parse_document(R"({"kind":"lambda","p":5,"generators":1,"relations":[[["x"]]]})"),
        format_error);
    CHECK_THROWS_AS(
        parse_document(
            R"({"kind":"lambda","p":5,"generators":1,"relations":[[[1]],[[1],[2]]]})"),
        format_error);
    CHECK_THROWS_AS(
        parse_document(R"({"schema_version":2,"p":5,"generators":1,"relations":[]})"),
        format_error);
    // generator count must match the row count
    CHECK_THROWS_AS(
        parse_document(R"({"kind":"lambda","p":5,"generators":2,"relations":[[[1]]]})"),
        format_error);
}

TEST_CASE("invariant violations surface from the payload constructors") {
    CHECK_THROWS_AS(parse_document(R"({"kind":"lambda","p":4,"generators":1,"relations":[[]]})"),
                    domain_error);
    // isogeny degree sums must match
    CHECK_THROWS_AS(parse_document(R"({
        "kind":"isogeny","p":5,"global_degree":4,"kernel_exponent":1,
        "arch_places":[{"kind":"complex","local_points_exponent":1}],
        "p_places":[{"local_degree":4,"reduced_kernel_exponent":1}]})"),
                    domain_error);
}

TEST_CASE("omega documents reduce entries mod p") {
    ModuleDocument doc =
        parse_document(R"({"kind":"omega","p":5,"generators":1,"relations":[[[7,10]]]})");
    CHECK(doc.as_omega().relations().at(0, 0) == FpPoly{{mpz_class(2)}});
}

TEST_CASE("eigen documents round trip through the component map") {
    ModuleDocument doc = parse_document(R"({
        "kind":"eigen","p":5,"action_exponent":1,
        "components":{"1":{"generators":1,"relations":[[[0,1]]]}}})");
    CHECK(hmrank(doc.as_eigen()) == -1);
    std::string canonical = serialize_document(doc);
    CHECK(serialize_document(parse_document(canonical)) == canonical);

    CHECK_THROWS_AS(parse_document(R"({
        "kind":"eigen","p":5,"action_exponent":1,
        "components":{"9":{"generators":1,"relations":[[[0,1]]]}}})"),
                    domain_error);
}

TEST_CASE("documents for every kind survive the round trip") {
    Rng rng(79);
    for (int i = 0; i < 40; ++i) {
        PrimeContext ctx(5);
        ModuleDocument doc;
        switch (i % 5) {
            case 0: doc = document_from(random_injective_module(rng, ctx)); break;
            case 1:
                doc = document_from(mod_p_reduction(random_injective_module(rng, ctx)));
                break;
            case 2: {
                GDescriptor g = GDescriptor::make(ctx, rng.range(0, 3));
                doc = document_from(random_eigen_module(rng, g, CorpusOptions{3, 5, 2, 2, 3}));
                break;
            }
            case 3: doc = document_from(random_elementary_module(rng, ctx, false)); break;
            default: doc = document_from(random_isogeny_data(rng, ctx)); break;
        }
        std::string canonical = serialize_document(doc);
        CHECK(serialize_document(parse_document(canonical)) == canonical);
    }
}

TEST_CASE("invariants report prints the headline values") {
    ModuleDocument doc =
        parse_document(R"({"kind":"lambda","p":5,"generators":1,"relations":[[[5]]]})");
    std::string report = invariants_report(doc);
    CHECK(report.find("lambda_rank: 0") != std::string::npos);
    CHECK(report.find("euler_rank: 0") != std::string::npos);
    CHECK(report.find("chi_order_exponent: 1") != std::string::npos);
    CHECK(report.find("mu: 1") != std::string::npos);

    // a non-injective presentation gets a remediation note, not a failure
    ModuleDocument dependent = parse_document(
        R"({"kind":"lambda","p":5,"generators":1,"relations":[[[0,1],[0,1]]]})");
    std::string note = invariants_report(dependent);
    CHECK(note.find("short_resolution: no") != std::string::npos);
    CHECK(note.find("re-present") != std::string::npos);

    std::string structured = invariants_report_json(doc);
    CHECK(structured.find("\"mu\": 1") != std::string::npos);
    CHECK(structured.find("\"chi_order_exponent\": 1") != std::string::npos);
    std::string structured_dependent = invariants_report_json(dependent);
    CHECK(structured_dependent.find("\"notes\"") != std::string::npos);
}

TEST_CASE("builtin examples evaluate to the published values") {
    BuiltinExample remark2 = builtin_example("remark2");
    REQUIRE(remark2.doc.has_value());
    CHECK(hmrank(remark2.doc->as_eigen()) == -1);
    CHECK(remark2.note.find("hmrank: -1") != std::string::npos);

    BuiltinExample conductor = builtin_example("conductor11");
    REQUIRE(conductor.doc.has_value());
    CHECK(isogeny_mu_delta(conductor.doc->as_isogeny()) == 2);

    BuiltinExample growth = builtin_example("theorem-k");
    CHECK(!growth.doc.has_value());
    CHECK(growth.note.find("hmrank: 4") != std::string::npos);

    CHECK_THROWS_AS(builtin_example("nope"), domain_error);
}
