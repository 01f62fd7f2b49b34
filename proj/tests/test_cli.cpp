#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "hsmf/commands.hpp"
#include "hsmf/errors.hpp"

using namespace hsmf;
using nlohmann::json;

namespace {

const char* kQdsText = R"(
# quartic double solid
vars    = x1 x2 x3 x4 x5
weights = 1 1 1 1 2
degree  = 4
omega   = x1^4 + x2^4 + x3^4 + x4^4 + x5^2
)";

const char* kCubicText = R"(
vars    = x1, x2, x3, x4, x5
weights = 1, 1, 1, 1, 1
degree  = 3
omega   = x1^3 + x2^3 + x3^3 + x4^3 + x5^3
)";

InputSpec qds_spec() { return parse_input_text(kQdsText); }

json result_of(const Report& report) { return json::parse(report.json).at("result"); }

}  // namespace

TEST_CASE("input files parse with comments and either separator") {
    InputSpec spec = qds_spec();
    CHECK(spec.vars.names == std::vector<std::string>{"x1", "x2", "x3", "x4", "x5"});
    CHECK(spec.vars.weights == std::vector<int>{1, 1, 1, 1, 2});
    CHECK(spec.vars.degree == 4);
    CHECK(spec.omega_text == "x1^4 + x2^4 + x3^4 + x4^4 + x5^2");

    InputSpec cubic = parse_input_text(kCubicText);
    CHECK(cubic.vars.weights == std::vector<int>{1, 1, 1, 1, 1});
}

TEST_CASE("input validation failures") {
    CHECK_THROWS_AS(parse_input_text("vars = x\nweights = 1\ndegree = 2\n"), Error);
    CHECK_THROWS_AS(parse_input_text("vars = x y\nweights = 1\ndegree = 2\nomega = x^2\n"),
                    Error);
    CHECK_THROWS_AS(
        parse_input_text("vars = x y\nweights = 2 2\ndegree = 4\nomega = x^2\n"), Error);
    CHECK_THROWS_AS(
        parse_input_text("vars = x\nweights = 1\ndegree = 1\nomega = x\n"), Error);
    CHECK_THROWS_AS(
        parse_input_text("vars = x\nweights = 1\ndegree = 2\nomega = x^2\nbogus = 1\n"),
        Error);
    CHECK_THROWS_AS(parse_input_text("vars = x\nweights = 1\ndegree = 2\nomega = x^2\n"
                                     "options = frobnicate\n"),
                    Error);
}

TEST_CASE("options parse from the file") {
    InputSpec spec = parse_input_text(
        "vars = x\nweights = 1\ndegree = 2\nomega = x^2\n"
        "options = json no-oracle modulus=97\n");
    CHECK(spec.options.json);
    CHECK(spec.options.no_oracle);
    REQUIRE(spec.options.modulus.has_value());
    CHECK(*spec.options.modulus == 97);
}

TEST_CASE("omega validation against the declared degree") {
    InputSpec spec = qds_spec();
    CHECK_NOTHROW(parse_omega(spec));
    spec.omega_text = "x1 + x5";
    CHECK_THROWS_AS(parse_omega(spec), NotQuasiHomogeneous);
    spec.omega_text = "x1^2";
    CHECK_THROWS_AS(parse_omega(spec), Error);
    spec.omega_text = "x1 - x1";
    CHECK_THROWS_AS(parse_omega(spec), Error);
}

TEST_CASE("analyze reports the invariants") {
    json r = result_of(run_analyze(qds_spec()));
    CHECK(r.at("milnor") == 81);
    CHECK(r.at("socle") == 8);
    CHECK(r.at("degree") == 4);
    CHECK(r.at("fano_index") == 2);
    CHECK(r.at("hilbert").at("dims") == json::array({1, 4, 10, 16, 19, 16, 10, 4, 1}));
    CHECK(r.at("hilbert").at("match") == true);
    CHECK(r.at("serre").at("twist") == -6);
    CHECK(r.at("serre").at("shift") == 5);
    REQUIRE(r.at("sectors").size() == 4);
    CHECK(r.at("sectors")[1].at("rank_moved") == 5);
    CHECK(r.at("sectors")[1].at("character") == -6);
    CHECK(r.at("sectors")[2].at("fixed") == json::array({"x5"}));
    CHECK(r.at("sectors")[2].at("jacobian_dims") == json::array({1}));
}

TEST_CASE("analyze honors no-oracle") {
    InputSpec spec = qds_spec();
    spec.options.no_oracle = true;
    json r = result_of(run_analyze(spec));
    CHECK_FALSE(r.at("hilbert").contains("oracle"));
}

TEST_CASE("hh tabulates both columns and allows empty ranges") {
    json r = result_of(run_hh(qds_spec(), -1, 2));
    REQUIRE(r.at("rows").size() == 4);
    CHECK(r.at("rows")[0].at("k") == -1);
    CHECK(r.at("rows")[0].at("homology").at("dim") == 10);
    CHECK(r.at("rows")[1].at("homology").at("dim") == 2);
    CHECK(r.at("rows")[3].at("cohomology").at("dim") == 20);
    CHECK(r.at("rows")[1].at("cohomology").at("dim") == 1);  // the identity endomorphism

    json empty = result_of(run_hh(qds_spec(), 3, 1));
    CHECK(empty.at("rows").empty());
}

TEST_CASE("hom is a thin wrapper over one bigraded piece") {
    json r = result_of(run_hom(qds_spec(), -6, 5));
    CHECK(r.at("dim") == 2);
    CHECK(r.at("m") == -6);
    CHECK(r.at("t") == 5);
    REQUIRE(r.at("summands").size() == 2);
    CHECK(r.at("summands")[0].at("sector") == 1);
    CHECK(r.at("summands")[1].at("sector") == 3);
}

TEST_CASE("gamma reports rank, kernel and audit") {
    json r = result_of(run_gamma(qds_spec()));
    CHECK(r.at("dims").at("hh2") == 20);
    CHECK(r.at("dims").at("hh_minus1") == 10);
    CHECK(r.at("dims").at("hh_plus1") == 10);
    CHECK(r.at("rank") == 19);
    CHECK(r.at("kernel_dim") == 1);
    REQUIRE(r.at("kernel_basis").size() == 1);
    json kernel = r.at("kernel_basis")[0];
    CHECK(kernel.at("summands")[1].at("sector") == 2);
    CHECK(kernel.at("summands")[1].at("coords") == json::array({"1"}));
    bool saw_vanishing = false;
    for (const auto& t : r.at("resolved"))
        saw_vanishing |= t.at("rule") == "zero_target";
    CHECK(saw_vanishing);
}

TEST_CASE("gamma with a modular pre-pass reports the verification") {
    InputSpec spec = qds_spec();
    spec.options.modulus = 2305843009213693951ull;  // 2^61 - 1
    json r = result_of(run_gamma(spec));
    CHECK(r.at("rank") == 19);
    REQUIRE(r.contains("modular"));
    CHECK(r.at("modular").at("prediction") == 19);
    CHECK(r.at("modular").at("agrees") == true);
}

TEST_CASE("pairing reports dimensions, rank and optionally the matrix") {
    json r = result_of(run_pairing(qds_spec(), 4, 2, false));
    CHECK(r.at("dim_e1") == 19);
    CHECK(r.at("dim_e2") == 10);
    CHECK(r.at("dim_target") == 10);
    CHECK(r.at("rank") == 19);
    CHECK_FALSE(r.contains("matrix"));

    json with_matrix = result_of(run_pairing(qds_spec(), 8, 0, true));
    CHECK(with_matrix.at("rank") == 1);
    CHECK(with_matrix.at("matrix").size() == 1);
}

TEST_CASE("identical input and version give byte-identical JSON") {
    for (int round = 0; round < 2; ++round) {
        Report a = run_gamma(qds_spec());
        Report b = run_gamma(qds_spec());
        CHECK(a.json == b.json);
    }
    CHECK(run_analyze(qds_spec()).json == run_analyze(qds_spec()).json);
    CHECK(run_hh(qds_spec(), -1, 2).json == run_hh(qds_spec(), -1, 2).json);
}

TEST_CASE("reports carry the tool version and echo the input") {
    json doc = json::parse(run_analyze(qds_spec()).json);
    CHECK(doc.at("tool") == kToolName);
    CHECK(doc.at("version") == kToolVersion);
    CHECK(doc.at("schema") == kSchemaVersion);
    CHECK(doc.at("command") == "analyze");
    CHECK(doc.at("input").at("degree") == 4);
    CHECK(doc.at("input").at("omega") == "x1^4 + x2^4 + x3^4 + x4^4 + x5^2");
}

TEST_CASE("exit codes follow the contract") {
    CHECK(exit_code_for(ParseError("boom", 3)) == 2);
    CHECK(exit_code_for(NotQuasiHomogeneous("a", 1, "b", 2)) == 2);
    CHECK(exit_code_for(ZeroPolynomial()) == 2);
    CHECK(exit_code_for(NonPolynomialSeries("boom")) == 2);
    CHECK(exit_code_for(Error("boom")) == 2);
    CHECK(exit_code_for(NonIsolatedSingularity("boom", 9)) == 3);
    CHECK(exit_code_for(IndeterminateComposition("boom", {})) == 4);
    CHECK(exit_code_for(std::runtime_error("boom")) == 1);
}

TEST_CASE("error paths surface with the right types") {
    InputSpec singular = parse_input_text(
        "vars = x1 x2 x3 x4 x5\nweights = 1 1 1 1 2\ndegree = 4\n"
        "omega = x1^4 + x2^4 + x5^2\n");
    CHECK_THROWS_AS(run_analyze(singular), NonIsolatedSingularity);
    CHECK_THROWS_AS(run_gamma(singular), NonIsolatedSingularity);
    CHECK_THROWS_AS(run_pairing(singular, 4, 2, false), NonIsolatedSingularity);
}
