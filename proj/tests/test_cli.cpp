#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "obstrukt/cli.hpp"
#include "obstrukt/models.hpp"
#include "obstrukt/spec_io.hpp"
#include "obstrukt/version.hpp"
#include "schema_check.hpp"

using namespace obk;
using obk::testsupport::schema_violations;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = run_command(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

nlohmann::json run_json(const std::vector<std::string>& args, int expect_code) {
    RunResult r = run(args);
    REQUIRE(r.code == expect_code);
    return nlohmann::json::parse(r.out);
}

nlohmann::json load_schema(const std::string& name) {
    std::ifstream in(std::string(OBSTRUKT_SOURCE_DIR) + "/schemas/" + name);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

void require_valid(const nlohmann::json& schema, const nlohmann::json& v) {
    auto violations = schema_violations(schema, v);
    for (const std::string& s : violations) MESSAGE(s);
    REQUIRE(violations.empty());
}

/* set or clear OBSTRUKT_MAX_DEGREE for one scope */
struct EnvGuard {
    explicit EnvGuard(const char* value) {
        if (value)
            setenv("OBSTRUKT_MAX_DEGREE", value, 1);
        else
            unsetenv("OBSTRUKT_MAX_DEGREE");
    }
    ~EnvGuard() { unsetenv("OBSTRUKT_MAX_DEGREE"); }
};

} // namespace

TEST_CASE("schema validator self-test") {
    nlohmann::json report = load_schema("report.schema.json");
    nlohmann::json good = {{"command", "adem"},
                           {"version", "1.0.0"},
                           {"arguments", {"adem", "Sq[1,2]"}},
                           {"status", "ok"},
                           {"result", nlohmann::json::object()}};
    CHECK(schema_violations(report, good).empty());

    nlohmann::json missing = good;
    missing.erase("status");
    CHECK(!schema_violations(report, missing).empty());
    nlohmann::json bad_enum = good;
    bad_enum["status"] = "weird";
    CHECK(!schema_violations(report, bad_enum).empty());
    nlohmann::json extra = good;
    extra["surprise"] = 1;
    CHECK(!schema_violations(report, extra).empty());
    nlohmann::json bad_item = good;
    bad_item["arguments"].push_back(7);
    CHECK(!schema_violations(report, bad_item).empty());

    nlohmann::json algebra = load_schema("graded-algebra.schema.json");
    nlohmann::json spec = {{"truncation", 4},
                           {"generators",
                            {{{"name", "x"}, {"degree", 1}, {"sq", {{"1", "x^2"}}}}}}};
    CHECK(schema_violations(algebra, spec).empty());
    nlohmann::json bad_key = spec;
    bad_key["generators"][0]["sq"]["0"] = "x";
    CHECK(!schema_violations(algebra, bad_key).empty());
    nlohmann::json bad_trunc = spec;
    bad_trunc["truncation"] = 0;
    CHECK(!schema_violations(algebra, bad_trunc).empty());
}

TEST_CASE("exit codes") {
    CHECK(run({"adem", "Sq[1,2]"}).code == 0);
    // no subcommand: help on stdout, success
    RunResult help = run({});
    CHECK(help.code == 0);
    CHECK(help.out.find("adem") != std::string::npos);
    CHECK(run({"--version"}).out == std::string(OBSTRUKT_VERSION) + "\n");

    CHECK(run({"frobnicate"}).code == 3);
    CHECK(run({"adem"}).code == 3);                       // missing required word
    CHECK(run({"em", "--k", "2", "--bogus"}).code == 3);  // unknown flag
    CHECK(run({"em", "--k", "2", "--max-degree", "9999"}).code == 1); // beyond the cap
    CHECK(run({"mo-check", "--k", "1"}).code == 1);       // below the first excess-k class
    CHECK(run({"certify", "--k", "3", "--tail", "Sq[1]"}).code == 1); // inadmissible head
    CHECK(run({"certify", "--k", "4", "--tail", "Sq[3,1]"}).code == 2); // page check fails

    // error shapes: human errors go to stderr, --json errors to stdout
    RunResult rejected = run({"certify", "--k", "3", "--tail", "Sq[1]"});
    CHECK(rejected.out.empty());
    CHECK(rejected.err.find("rejected") != std::string::npos);
}

TEST_CASE("every command emits a schema-valid envelope") {
    nlohmann::json schema = load_schema("report.schema.json");
    const std::vector<std::vector<std::string>> ok_invocations = {
        {"adem", "Sq[1,2]", "--json"},
        {"serre-gens", "--k", "2", "--max-degree", "12", "--json"},
        {"em", "--k", "2", "--max-degree", "12", "--json"},
        {"bo", "--k", "3", "--max-degree", "10", "--json"},
        {"mo-check", "--k", "2", "--dim-bound", "20", "--json"},
        {"e2", "--k", "2", "--max-degree", "12", "--json"},
        {"e2", "--k", "4", "--max-degree", "17", "--json"},
        {"certify", "--k", "2", "--json"},
        {"growth", "--k", "2", "--max-degree", "40", "--json"},
        {"growth", "--k", "2", "--against", "degrees", "--degrees", "1,2", "--max-degree",
         "20", "--json"},
        {"oracle", "Sq[2]", "--on", "t1*t2", "--json"},
        {"oracle", "Sq[5]", "--against", "Sq[4,1]", "--json"},
    };
    for (const auto& args : ok_invocations) {
        CAPTURE(args[0]);
        nlohmann::json env = run_json(args, 0);
        require_valid(schema, env);
        CHECK(env.at("command") == args[0]);
        CHECK(env.at("version") == OBSTRUKT_VERSION);
        CHECK(env.at("status") == "ok");
        CHECK(env.contains("result"));
        CHECK(!env.contains("reasons"));
    }

    // rejected, failed and usage envelopes validate too
    nlohmann::json rej = run_json({"certify", "--k", "3", "--tail", "Sq[1]", "--json"}, 1);
    require_valid(schema, rej);
    CHECK(rej.at("status") == "rejected");
    REQUIRE(rej.at("reasons").size() == 1);
    CHECK(!rej.contains("result"));

    nlohmann::json failed = run_json({"certify", "--k", "4", "--tail", "Sq[3,1]", "--json"}, 2);
    require_valid(schema, failed);
    CHECK(failed.at("status") == "failed");

    nlohmann::json usage = run_json({"em", "--k", "2", "--bogus", "--json"}, 3);
    require_valid(schema, usage);
    CHECK(usage.at("status") == "usage");
}

TEST_CASE("adem command output") {
    RunResult human = run({"adem", "Sq1 Sq2"});
    CHECK(human.code == 0);
    CHECK(human.out.find("Sq[3]") != std::string::npos);

    nlohmann::json env = run_json({"adem", "Sq[2,2]", "--json"}, 0);
    const auto& r = env.at("result");
    CHECK(r.at("reduced") == "Sq[3,1]");
    CHECK(r.at("dimension") == 4);
    CHECK(r.at("admissible_input") == false);
    CHECK(r.at("terms") == nlohmann::json::parse("[[3,1]]"));
}

TEST_CASE("certify JSON carries the pinned certificate data") {
    nlohmann::json schema = load_schema("report.schema.json");
    nlohmann::json cert_schema = schema.at("definitions").at("certificate");

    nlohmann::json env2 = run_json({"certify", "--k", "2", "--json"}, 0);
    require_valid(cert_schema, env2.at("result"));
    const auto& r2 = env2.at("result");
    CHECK(r2.at("k") == 2);
    CHECK(r2.at("tail") == "Sq[]");
    CHECK(r2.at("head_word") == "Sq[2]");
    CHECK(r2.at("class_degree") == 4);
    CHECK(r2.at("obstruction_degree") == 5);
    CHECK(r2.at("ambient_bound") == 11);
    CHECK(!r2.at("verified").empty());
    CHECK(!r2.at("cited").empty());

    nlohmann::json env3 =
        run_json({"certify", "--k", "3", "--tail", "Sq[2,1]", "--json"}, 0);
    require_valid(cert_schema, env3.at("result"));
    const auto& r3 = env3.at("result");
    CHECK(r3.at("head_word") == "Sq[6,2,1]");
    CHECK(r3.at("class_degree") == 12);
    CHECK(r3.at("obstruction_degree") == 13);
    CHECK(r3.at("ambient_bound") == 27);
}

TEST_CASE("growth JSON carries the crossing data") {
    nlohmann::json schema = load_schema("report.schema.json");
    nlohmann::json growth_schema = schema.at("definitions").at("growth");

    nlohmann::json env = run_json({"growth", "--k", "2", "--max-degree", "60", "--json"}, 0);
    require_valid(growth_schema, env.at("result"));
    const auto& r = env.at("result");
    CHECK(r.at("crossing") == 0);
    CHECK(r.at("crossing_positive") == 14);
    CHECK(r.at("label_a") == "K(Z2,2)");
    CHECK(r.at("label_b") == "MO(2)");
    CHECK(r.at("series_a")[14] == "8");
    CHECK(r.at("series_b")[14] == "7");
    CHECK(r.at("series_a").size() == 61);

    // the five-generator bound is not crossed within degree 80
    nlohmann::json far = run_json({"growth", "--k", "2", "--against", "degrees", "--degrees",
                                   "1,2,3,4,5", "--max-degree", "80", "--json"},
                                  0);
    require_valid(growth_schema, far.at("result"));
    CHECK(far.at("result").at("crossing").is_null());
    CHECK(far.at("result").at("crossing_positive").is_null());
    CHECK(far.at("result").at("degrees") == nlohmann::json::parse("[1,2,3,4,5]"));
}

TEST_CASE("e2 JSON matches the locked page") {
    nlohmann::json env = run_json({"e2", "--k", "2", "--max-degree", "12", "--json"}, 0);
    const auto& r = env.at("result");
    CHECK(r.at("match") == true);
    REQUIRE(r.at("records").size() == 13);
    const std::vector<int> page = {1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1};
    for (unsigned n = 0; n <= 12; ++n) {
        CHECK(r.at("records")[n].at("degree") == n);
        CHECK(r.at("records")[n].at("e2") == page[n]);
    }
    // the divergence report for large k is honest, not an error
    nlohmann::json big = run_json({"e2", "--k", "4", "--max-degree", "17", "--json"}, 0);
    CHECK(big.at("result").at("match") == false);
}

TEST_CASE("export round-trips through the CLI") {
    auto tmp = std::filesystem::temp_directory_path() / "obstrukt-cli-export.json";
    RunResult r = run({"em", "--k", "3", "--max-degree", "14", "--export", tmp.string()});
    CHECK(r.code == 0);
    PresentedAlgebra loaded = load_algebra_spec(tmp.string());
    CHECK(same_presentation(loaded, em_algebra(3, 14).algebra));

    // the exported file validates against the shipped algebra schema
    nlohmann::json algebra_schema = load_schema("graded-algebra.schema.json");
    std::ifstream in(tmp);
    require_valid(algebra_schema, nlohmann::json::parse(in));
    std::filesystem::remove(tmp);

    auto tmp2 = std::filesystem::temp_directory_path() / "obstrukt-cli-export-bo.json";
    CHECK(run({"bo", "--k", "2", "--max-degree", "12", "--export", tmp2.string()}).code == 0);
    CHECK(same_presentation(load_algebra_spec(tmp2.string()), bo_algebra(2, 12)));
    std::filesystem::remove(tmp2);
}

TEST_CASE("OBSTRUKT_MAX_DEGREE controls default truncations") {
    {
        EnvGuard guard("10");
        nlohmann::json env = run_json({"em", "--k", "2", "--json"}, 0);
        CHECK(env.at("result").at("max_degree") == 10);
        CHECK(env.at("result").at("algebra").at("truncation") == 10);
        // an explicit flag still wins
        nlohmann::json expl = run_json({"em", "--k", "2", "--max-degree", "8", "--json"}, 0);
        CHECK(expl.at("result").at("max_degree") == 8);
    }
    {
        EnvGuard guard("abc");
        CHECK(run({"em", "--k", "2"}).code == 3);
        CHECK(run({"em", "--k", "2", "--max-degree", "8"}).code == 0);
    }
    {
        EnvGuard guard(nullptr);
        nlohmann::json env = run_json({"em", "--k", "2", "--json"}, 0);
        CHECK(env.at("result").at("max_degree") == 24);
    }
}

TEST_CASE("repeated runs are byte-identical") {
    const std::vector<std::vector<std::string>> invocations = {
        {"em", "--k", "2", "--max-degree", "12", "--json"},
        {"e2", "--k", "3", "--max-degree", "12", "--reps", "--json"},
        {"growth", "--k", "3", "--max-degree", "40", "--json"},
        {"mo-check", "--k", "3", "--dim-bound", "20"},
    };
    for (const auto& args : invocations) {
        RunResult a = run(args);
        RunResult b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("oracle command") {
    RunResult action = run({"oracle", "Sq[2]", "--on", "t1*t2"});
    CHECK(action.code == 0);
    CHECK(action.out.find("t1^2*t2^2") != std::string::npos);

    // Sq1 Sq2 = Sq3 is the first Adem relation; the referee must agree
    nlohmann::json agree = run_json({"oracle", "Sq1 Sq2", "--against", "Sq[3]", "--json"}, 0);
    CHECK(agree.at("result").at("equal") == true);
    nlohmann::json differ = run_json({"oracle", "Sq[5]", "--against", "Sq[4,1]", "--json"}, 0);
    CHECK(differ.at("result").at("equal") == false);

    // inputs referencing variables beyond --vars are rejected
    CHECK(run({"oracle", "Sq[2]", "--on", "t1*t2", "--vars", "1"}).code == 1);
}
