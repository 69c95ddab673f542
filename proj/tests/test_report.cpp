#include "mackeylab/checks.hpp"
#include "mackeylab/report.hpp"

#include <catch_amalgamated.hpp>

using namespace mackeylab;

TEST_CASE("a report passes exactly when every finding matches") {
    CheckReport r{"demo", {{"n", 1}}, {}};
    CHECK(r.passed());  // vacuously
    r.expect("alpha", "1", "1");
    CHECK(r.passed());
    r.expect("beta", "x", "y");
    CHECK_FALSE(r.passed());
}

TEST_CASE("json schema of a report") {
    CheckReport r{"verify-mackey", {{"corrupt", 0}}, {}};
    r.expect_true("ok", true);
    nlohmann::json j = to_json(r);
    CHECK(j["check"] == "verify-mackey");
    CHECK(j["status"] == "pass");
    CHECK(j["version"] == kReportVersion);
    CHECK(j["params"]["corrupt"] == 0);
    REQUIRE(j["details"].is_array());
    REQUIRE(j["details"].size() == 1);
    CHECK(j["details"][0]["item"] == "ok");
    CHECK(j["details"][0]["expected"] == "true");
    CHECK(j["details"][0]["got"] == "true");
    // No timestamps or timings anywhere.
    for (auto it = j.begin(); it != j.end(); ++it)
        CHECK((it.key() == "check" || it.key() == "params" || it.key() == "status" ||
               it.key() == "details" || it.key() == "version"));

    r.expect("bad", "1", "2");
    CHECK(to_json(r)["status"] == "fail");
}

TEST_CASE("matrix entries serialize as p/q strings") {
    Matrix m = Matrix::from_rows({{Rational(1, 2), -3}});
    nlohmann::json j = to_json(m);
    CHECK(j[0][0] == "1/2");
    CHECK(j[0][1] == "-3/1");
}

TEST_CASE("mackey functor json carries all five fields") {
    nlohmann::json j = to_json(std_burnside());
    CHECK(j["underlying_dim"] == 1);
    CHECK(j["fixed_dim"] == 2);
    CHECK(j["res"] == nlohmann::json::parse(R"([["1/1", "2/1"]])"));
    CHECK(j["tr"] == nlohmann::json::parse(R"([["0/1"], ["1/1"]])"));
    CHECK(j["tau"] == nlohmann::json::parse(R"([["1/1"]])"));
}

TEST_CASE("homology json lists degrees with dims and triples") {
    nlohmann::json j = homology_to_json(homology(rho_suspension_Z(2)));
    CHECK(j["4"]["underlying_dim"] == 1);
    CHECK(j["4"]["fixed_dim"] == 1);
    CHECK(j["4"]["triple"] == nlohmann::json({1, 0, 0}));
    CHECK(j["2"]["underlying_dim"] == 0);
}

TEST_CASE("serialization is deterministic") {
    std::string a = to_json(check_mackey()).dump();
    std::string b = to_json(check_mackey()).dump();
    CHECK(a == b);
    std::string c = to_json(check_main_theorem(1, 8)).dump();
    std::string d = to_json(check_main_theorem(1, 8)).dump();
    CHECK(c == d);
}

TEST_CASE("merge prefixes child findings and propagates failure") {
    CheckReport parent{"all", {}, {}};
    CheckReport child{"verify-mackey", {}, {}};
    child.expect("axiom", "true", "false");
    parent.merge(child);
    REQUIRE(parent.details.size() == 1);
    CHECK(parent.details[0].item == "verify-mackey.axiom");
    CHECK_FALSE(parent.passed());
}

TEST_CASE("table and triple formatting") {
    CHECK(table_to_string({{4, 1}, {7, 2}}) == "{4:1, 7:2}");
    CHECK(table_to_string({}) == "{}");
    CHECK(triple_to_string({1, 0, 2}) == "(1,0,2)");
}
