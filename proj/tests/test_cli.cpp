#include <doctest.h>

#include <sstream>

#include "oredet/cli.hpp"
#include "oredet/errors.hpp"
#include "oredet/expr.hpp"
#include "oredet/generator.hpp"
#include "oredet/harness.hpp"
#include "oredet/matrix_io.hpp"
#include "random_support.hpp"

using namespace oredet;
using oredet::testing::Rng;

namespace {

const OreOp D = OreOp::d();
const OreOp X = OreOp::x();
const std::string fixtures = OREDET_FIXTURES;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "oredet");
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

int parse_error_column(std::string_view s) {
    try {
        parse_operator_expr(s);
    } catch (const ParseError& e) {
        return static_cast<int>(e.column());
    }
    return 0;
}

}  // namespace

TEST_CASE("expression parsing") {
    CHECK(parse_operator_expr("d*x") == X * D + 1);
    CHECK(parse_operator_expr("x*d^2 + 1/x*d - 3") == X * D * D + OreOp(RatFunc(Poly(1), Poly::x())) * D - 3);
    CHECK(parse_operator_expr("(x+1)^2") == OreOp(Poly::x() * Poly::x() + Rational(2) * Poly::x() + 1));
    CHECK(parse_operator_expr("-d + 2") == OreOp(2) - D);
    CHECK(parse_operator_expr(" d ^ 0 ") == OreOp(1));
    CHECK(parse_operator_expr("0") == OreOp());
    CHECK(parse_operator_expr("d/(x+1)") == D * OreOp(RatFunc(Poly(1), Poly::x() + 1)));
}

TEST_CASE("expression errors carry columns") {
    CHECK(parse_error_column("d + ") == 5);
    CHECK(parse_error_column("x ** 2") == 4);
    CHECK(parse_error_column("d / d") == 5);
    CHECK(parse_error_column("1/(x-x)") == 3);
    CHECK(parse_error_column("(x + 1") == 7);
    CHECK(parse_error_column("y") == 1);
    CHECK(parse_error_column("d^1001") == 3);
    CHECK(parse_error_column("") == 1);
}

TEST_CASE("rendering examples") {
    CHECK(render_operator(X * D * D + OreOp(RatFunc(Poly(1), Poly::x())) * D - 3) == "x*d^2 + 1/x*d - 3");
    CHECK(render_operator(OreOp()) == "0");
    CHECK(render_operator(OreOp(Poly::x() + 1) * D) == "(x + 1)*d");
}

TEST_CASE("property: render and parse roundtrip") {
    Rng rng(41);
    for (int t = 0; t < 500; ++t) {
        OreOp a = testing::random_op(rng, 3, 3);
        CHECK(parse_operator_expr(render_operator(a)) == a);
    }
}

TEST_CASE("matrix documents") {
    MatrixDocument doc = read_matrix_file(fixtures + "/dd1.json");
    CHECK(doc.matrix == OreMatrix(std::vector<std::vector<OreOp>>{{D, D}, {D, D + 1}}));
    CHECK(doc.meta.at("description").get<std::string>().find("degeneracy degree 1") != std::string::npos);

    auto reparsed = parse_matrix_document(matrix_to_json(doc.matrix, doc.meta));
    CHECK(reparsed.matrix == doc.matrix);

    try {
        read_matrix_file(fixtures + "/bad_syntax.json");
        FAIL("expected an InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("entries[1][0]: column 5") != std::string::npos);
    }
    CHECK_THROWS_AS(read_matrix_file(fixtures + "/nonsquare.json"), InputError);
    CHECK_THROWS_AS(read_matrix_file(fixtures + "/does_not_exist.json"), InputError);
    CHECK_THROWS_AS(parse_matrix_document(nlohmann::json::parse(R"({"n": 3, "entries": [["d"]]})")), InputError);
    CHECK_THROWS_AS(parse_matrix_document(nlohmann::json::parse(R"({"entries": []})")), InputError);
    CHECK_THROWS_AS(parse_matrix_document(nlohmann::json::parse(R"({"entries": [[1]]})")), InputError);
}

TEST_CASE("majorant argument") {
    CHECK(parse_majorant_arg("2,1;0,1") == Majorant{{2, 1}, {0, 1}});
    CHECK_THROWS_AS(parse_majorant_arg("2,1"), InputError);
    CHECK_THROWS_AS(parse_majorant_arg("2,a;0,1"), InputError);
    CHECK_THROWS_AS(parse_majorant_arg("2;0,1"), InputError);
}

TEST_CASE("generator") {
    GeneratorConfig cfg;
    cfg.n = 3;
    cfg.seed = 7;
    CHECK(random_matrix(cfg).matrix == random_matrix(cfg).matrix);
    GeneratorConfig other = cfg;
    other.seed = 8;
    CHECK_FALSE(random_matrix(cfg).matrix == random_matrix(other).matrix);

    for (Target target : {Target::dd0, Target::dd1}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            GeneratorConfig c;
            c.n = 2 + seed % 2;
            c.seed = seed;
            c.target = target;
            GeneratedInstance g = random_matrix(c);
            CHECK(g.matrix.in_subring());
            CHECK(g.dd == std::optional<std::int64_t>(target == Target::dd0 ? 0 : 1));
            CHECK(degeneracy_degree(g.matrix) == OrderValue(*g.dd));
        }
    }

    GeneratorConfig bad;
    bad.n = 0;
    CHECK_THROWS_AS(bad.validate(), InputError);
    GeneratorConfig hopeless;
    hopeless.n = 1;
    hopeless.target = Target::dd1;
    hopeless.max_attempts = 5;
    CHECK_THROWS_AS(random_matrix(hopeless), GenerationFailure);
    CHECK(parse_target("dd1") == Target::dd1);
    CHECK_THROWS_AS(parse_target("dd2"), InputError);
}

TEST_CASE("certificate JSON roundtrip") {
    GeneratorConfig cfg;
    cfg.n = 3;
    cfg.seed = 3;
    cfg.target = Target::dd1;
    Dd1Certificate c = cdsk_reduce(random_matrix(cfg).matrix);
    nlohmann::json j = certificate_to_json(c);
    CHECK(j.at("D_in_R").get<bool>());
    Dd1Certificate back = certificate_from_json(nlohmann::json::parse(j.dump()));
    CHECK(verify_certificate(back).empty());
    CHECK(back.D == c.D);
    CHECK(back.m2 == c.m2);

    j["D"] = "x + 5";
    CHECK_FALSE(verify_certificate(certificate_from_json(j)).empty());
    CHECK_THROWS_AS(certificate_from_json(nlohmann::json::parse("{}")), InputError);
}

TEST_CASE("harness") {
    HarnessConfig cfg;
    cfg.count = 12;
    cfg.seed = 5;
    cfg.generator.n = 3;
    cfg.threads = 2;
    HarnessSummary s = run_harness(cfg);
    CHECK(s.ok());
    CHECK(s.instances.size() == 12);
    for (std::size_t i = 0; i < s.instances.size(); ++i) CHECK(s.instances[i].index == i);
    CHECK(s.certified >= 1);
    HarnessSummary again = run_harness(cfg);
    for (std::size_t i = 0; i < s.instances.size(); ++i) CHECK(s.instances[i].matrix == again.instances[i].matrix);
}

TEST_CASE("commands and exit codes") {
    Run det = run({"det", fixtures + "/dd1.json"});
    CHECK(det.code == exit_code::ok);
    CHECK(det.out == "det_1 = 1, d = 1\n");

    CHECK(run({"tord", fixtures + "/dd1.json"}).out == "tord = 2\n");
    CHECK(run({"dd", fixtures + "/dd1.json"}).out == "dd = 1\n");
    CHECK(run({"dd", fixtures + "/dd0.json"}).out == "dd = 0\n");
    CHECK(run({"majorant", fixtures + "/dd1.json"}).out == "N=(1,1), h=(0,0)\ntord = 2\n");

    Run json = run({"det", "--json", fixtures + "/dd1.json"});
    auto j = nlohmann::json::parse(json.out);
    CHECK(j.at("det1") == "1");
    CHECK(j.at("d") == 1);

    Run cdsk = run({"cdsk", "--json", fixtures + "/dd1.json"});
    CHECK(cdsk.code == exit_code::ok);
    CHECK(nlohmann::json::parse(cdsk.out).at("D") == "1");

    Run charmat = run({"charmat", "--majorant", "1,1;0,0", fixtures + "/dd0.json"});
    CHECK(charmat.code == exit_code::ok);
    CHECK(run({"charmat", "--majorant", "0,0;0,0", fixtures + "/dd0.json"}).code == exit_code::precondition);

    CHECK(run({"cdsk", fixtures + "/dd0.json"}).code == exit_code::precondition);
    CHECK(run({"dd", fixtures + "/singular.json"}).code == exit_code::precondition);
    CHECK(run({"cdsk", fixtures + "/singular.json"}).code == exit_code::precondition);
    Run bad = run({"det", fixtures + "/bad_syntax.json"});
    CHECK(bad.code == exit_code::input_error);
    CHECK(bad.err.find("column 5") != std::string::npos);
    CHECK(run({"det", fixtures + "/nonsquare.json"}).code == exit_code::input_error);
    CHECK(run({"det", fixtures + "/missing.json"}).code == exit_code::input_error);
    CHECK(run({"frobnicate"}).code == exit_code::input_error);

    Run gen1 = run({"gen", "--n", "2", "--seed", "4", "--target", "dd1"});
    Run gen2 = run({"gen", "--n", "2", "--seed", "4", "--target", "dd1"});
    CHECK(gen1.code == exit_code::ok);
    CHECK(gen1.out == gen2.out);
    auto doc = parse_matrix_document(nlohmann::json::parse(gen1.out));
    CHECK(degeneracy_degree(doc.matrix) == OrderValue(1));

    Run check = run({"check", "--count", "6", "--n", "2", "--seed", "1", "--threads", "1"});
    CHECK(check.code == exit_code::ok);
    CHECK(check.out.find("0 failures") != std::string::npos);
}
