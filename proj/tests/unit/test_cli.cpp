// In-process coverage of the command-line surface.
#include <doctest.h>

#include <json.hpp>

#include "symq/cli.hpp"

using namespace symq;

namespace {
const char* mult_script =
    "biadditive B; eq mult: B(x*y, x*y) = B(x,x)*B(y,y); degree mult 4;";

const char* add_script =
    "biadditive B; additive a;\n"
    "eq add: B(x*y, x*y) = B(x,x)*y^2 + x^2*B(y,y);\n"
    "degree add 4;\n"
    "fact b11: B(1, 1) = 0;\n"
    "fact bx1: B(u, 1) = a(u);\n"
    "specialize add at (q, r, 1, 1) with b11, bx1;\n"
    "specialize add at (1, 1, 1, 1) with b11;\n";

Expr parse_expr_with(const std::string& decls, const std::string& text) {
    Script s = parse(decls + " eq g: " + text + " = 0;");
    return s.find_equation("g")->lhs;
}
}  // namespace

TEST_CASE("cli symmetrize reproduces the six-term form") {
    CliResult r = run_cli({"symmetrize", "--expr", mult_script});
    CHECK(r.exit_code == 0);
    REQUIRE(r.out.substr(0, 6) == "mult: ");
    std::string expr_text = r.out.substr(6, r.out.size() - 7);  // strip name and newline

    Expr got = parse_expr_with("biadditive B;", expr_text);
    MultPipeline p = derive_mult_pipeline();
    CHECK(got == p.b4);
}

TEST_CASE("cli symmetrize handles a degree-3 mixed equation") {
    CliResult r = run_cli({"symmetrize", "--expr", "biadditive B; eq e: B(x,x)*x = 0; degree e 3;"});
    CHECK(r.exit_code == 0);
    REQUIRE(r.out.substr(0, 3) == "e: ");
    Expr got = parse_expr_with("biadditive B;", r.out.substr(3, r.out.size() - 4));
    FuncSymbol B = FuncSymbol::bi_additive("B");
    Expr expected = (Expr::variable("x1") * Expr::atom(App(B, {Monomial{{"x2", 1}}, Monomial{{"x3", 1}}})) +
                     Expr::variable("x2") * Expr::atom(App(B, {Monomial{{"x1", 1}}, Monomial{{"x3", 1}}})) +
                     Expr::variable("x3") * Expr::atom(App(B, {Monomial{{"x1", 1}}, Monomial{{"x2", 1}}})))
                        .scaled(Rational(1, 3));
    CHECK(got == expected);

    // --degree fallback when the script has no degree directive
    CliResult fb = run_cli({"symmetrize", "--expr", "biadditive B; eq e: B(x,x)*x = 0;", "--degree", "3"});
    CHECK(fb.exit_code == 0);
    CHECK(fb.out == r.out);
}

TEST_CASE("cli symmetrize rejects non-homogeneous input with exit 2") {
    CliResult r = run_cli({"symmetrize", "--expr", "additive a; eq e: a(x) + x*x = 0; degree e 2;"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("homogeneous") != std::string::npos);
}

TEST_CASE("cli exit codes: parse and usage errors are 1") {
    CHECK(run_cli({"symmetrize", "--expr", "eq broken: = ;"}).exit_code == 1);
    CHECK(run_cli({"symmetrize", "--expr", "additive a; eq e: a(x) = 0;"}).exit_code == 1);  // no degree
    CHECK(run_cli({"verify", "nonsense", "--model", "sq"}).exit_code == 1);
    CHECK(run_cli({"verify", "mult"}).exit_code == 1);  // missing --model
    CHECK(run_cli({"verify", "mult", "--model", "no-such"}).exit_code == 1);
    CHECK(run_cli({"wat"}).exit_code == 1);
    CHECK(run_cli({}).exit_code == 1);
}

TEST_CASE("cli specialize runs script directives") {
    CliResult r = run_cli({"specialize", "--expr", add_script});
    CHECK(r.exit_code == 0);

    // first directive: (1/3)(B(q,r) + a(qr) - 2q a(r) - 2r a(q))
    std::istringstream lines(r.out);
    std::string line1, line2;
    std::getline(lines, line1);
    std::getline(lines, line2);
    REQUIRE(line1.find("add at (q, r, 1, 1): ") == 0);
    Expr got = parse_expr_with("biadditive B; additive a;", line1.substr(std::string("add at (q, r, 1, 1): ").size()));
    FuncSymbol B = FuncSymbol::bi_additive("B");
    FuncSymbol a = FuncSymbol::additive("a");
    Expr expected = (Expr::atom(App(B, {Monomial{{"q", 1}}, Monomial{{"r", 1}}})) +
                     Expr::atom(App(a, {Monomial{{"q", 1}, {"r", 1}}})) -
                     (Expr::variable("q") * Expr::atom(App(a, {Monomial{{"r", 1}}}))).scaled(2) -
                     (Expr::variable("r") * Expr::atom(App(a, {Monomial{{"q", 1}}}))).scaled(2))
                        .scaled(Rational(1, 3));
    CHECK(got == expected);

    // second directive: all-ones tuple collapses to -B(1,1), then the b11 fact kills it
    REQUIRE(line2.find("add at (1, 1, 1, 1): ") == 0);
    CHECK(line2.substr(std::string("add at (1, 1, 1, 1): ").size()) == "0");
}

TEST_CASE("cli verify emits one JSON record per check") {
    CliResult pass = run_cli({"verify", "pi2", "--model", "deriv-square", "--samples", "5",
                              "--seed", "3", "--format", "json"});
    CHECK(pass.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(pass.out);
    CHECK(j["check"] == "pi2:deriv-square");
    CHECK(j["status"] == "pass");
    CHECK(j["samples"] == 5);
    CHECK(j["witness"].is_null());

    CliResult fail = run_cli({"verify", "mult", "--model", "deriv-square", "--samples", "5",
                              "--seed", "3", "--format", "json"});
    CHECK(fail.exit_code == 2);
    nlohmann::json jf = nlohmann::json::parse(fail.out);
    CHECK(jf["status"] == "fail");
    CHECK(jf["witness"].is_string());

    CliResult norm = run_cli({"verify", "mult", "--model", "norm-sqrt2", "--samples", "5", "--seed", "3"});
    CHECK(norm.exit_code == 0);
    CHECK(norm.out.find("PASS") == 0);
}

TEST_CASE("cli output is byte-identical for a fixed seed") {
    std::vector<std::vector<std::string>> invocations = {
        {"verify", "pi2", "--model", "second-order-dd", "--samples", "6", "--seed", "11", "--format", "json"},
        {"verify", "spadesuit", "--model", "d-id", "--samples", "4", "--seed", "7"},
        {"moments", "--rank", "1", "--bound", "2", "--model", "d", "--samples", "4", "--seed", "5",
         "--format", "json"},
        {"symmetrize", "--expr", mult_script},
    };
    for (const auto& args : invocations) {
        CliResult a = run_cli(args);
        CliResult b = run_cli(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}

TEST_CASE("cli moments prints Bell expansions and reports") {
    CliResult r = run_cli({"moments", "--rank", "1", "--bound", "2", "--samples", "4", "--seed", "2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("B[0] = 1\n") != std::string::npos);
    CHECK(r.out.find("B[1] = a1\n") != std::string::npos);
    CHECK(r.out.find("B[2] = a1^2 + a2\n") != std::string::npos);
    CHECK(r.out.find("PASS bell-coordinate-independence") != std::string::npos);
    CHECK(r.out.find("PASS bell-closure") != std::string::npos);

    CliResult bound0 = run_cli({"moments", "--rank", "1", "--bound", "0"});
    CHECK(bound0.exit_code == 0);
    CHECK(bound0.out.find("B[0] = 1\n") != std::string::npos);

    CliResult rank2 = run_cli({"moments", "--rank", "2", "--bound", "2", "--format", "json"});
    CHECK(rank2.exit_code == 0);
    CHECK(rank2.out.find("\"bell\":\"[1,1]\"") != std::string::npos);

    CliResult fam = run_cli({"moments", "--rank", "1", "--bound", "2", "--model", "dd", "--samples", "4"});
    CHECK(fam.exit_code == 0);
    CHECK(fam.out.find("PASS moment-q-recurrence") != std::string::npos);
}

TEST_CASE("cli parse prints the canonical script form") {
    CliResult r = run_cli({"parse", "--expr", "additive  a;   fact :a( 1)=0 ;"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "additive a;\nfact: a(1) = 0;\n");

    CliResult bad = run_cli({"parse", "--expr", "eq oops: B(x) = 0;"});
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.find("B") != std::string::npos);
}
