#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zetalab/cli.hpp"

using namespace zetalab;
using nlohmann::json;

namespace {

std::pair<int, std::string> run_job(const JobConfig& config) {
    std::ostringstream out;
    int code = run(config, out);
    return {code, out.str()};
}

JobConfig make(JobConfig::Command cmd, std::map<std::string, std::string> params = {},
               JobConfig::Format fmt = JobConfig::Format::json, int digits = 50) {
    JobConfig c;
    c.command = cmd;
    c.params = std::move(params);
    c.format = fmt;
    c.precision = digits;
    return c;
}

} // namespace

TEST_CASE("zeta command reports the fast odd value") {
    auto [code, text] = run_job(make(JobConfig::Command::zeta, {{"s", "3"}}));
    CHECK(code == 0);
    json doc = json::parse(text);
    CHECK(doc["schema"] == 1);
    CHECK(doc["s"] == 3);
    CHECK(doc["method"] == "ramanujan");
    CHECK(doc["pi_power_coefficient"] == "7/180");
    CHECK(doc["value"].get<std::string>().substr(0, 20) == "1.202056903159594285");
}

TEST_CASE("zeta command covers even, negative and oracle routes") {
    auto [c1, t1] = run_job(make(JobConfig::Command::zeta, {{"s", "4"}}));
    CHECK(c1 == 0);
    CHECK(json::parse(t1)["rational_part"] == "1/90");
    auto [c2, t2] = run_job(make(JobConfig::Command::zeta, {{"s", "-3"}}));
    CHECK(c2 == 0);
    CHECK(json::parse(t2)["value"] == "1/120");
    auto [c3, t3] = run_job(make(JobConfig::Command::zeta, {{"s", "5"}, {"method", "oracle"}}));
    CHECK(c3 == 0);
    CHECK(json::parse(t3)["method"] == "oracle");
    auto [c4, t4] = run_job(make(JobConfig::Command::zeta, {{"s", "1"}}));
    CHECK(c4 == 2); // the pole is a usage error
}

TEST_CASE("verify command emits reports and pass-dependent exit codes") {
    auto [code, text] =
        run_job(make(JobConfig::Command::verify, {{"id", "glaisher"}, {"n", "1"}}, JobConfig::Format::json, 40));
    CHECK(code == 0);
    json doc = json::parse(text);
    CHECK(doc["schema"] == 1);
    REQUIRE(doc["reports"].size() == 1);
    CHECK(doc["reports"][0]["passed"] == true);
    CHECK(doc["reports"][0]["id"] == "glaisher");

    auto [code2, text2] =
        run_job(make(JobConfig::Command::verify, {{"id", "lerch"}, {"n", "0..2"}}));
    CHECK(code2 == 0);
    CHECK(json::parse(text2)["reports"].size() == 3);
}

TEST_CASE("csv output carries the documented columns") {
    auto [code, text] = run_job(make(JobConfig::Command::verify,
                                     {{"id", "schlomilch_pi"}}, JobConfig::Format::csv, 40));
    CHECK(code == 0);
    CHECK(text.rfind("id,params,lhs,rhs,residual,passed\n", 0) == 0);
    CHECK(text.find("schlomilch_pi") != std::string::npos);
    CHECK(text.find(",true") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
    JobConfig job = make(JobConfig::Command::verify, {{"id", "ramanujan"}, {"n", "1..2"}});
    auto [c1, t1] = run_job(job);
    auto [c2, t2] = run_job(job);
    CHECK(c1 == 0);
    CHECK(t1 == t2);

    JobConfig roots = make(JobConfig::Command::roots, {{"family", "ramanujan"}, {"m", "1..3"}});
    auto [r1, o1] = run_job(roots);
    auto [r2, o2] = run_job(roots);
    CHECK(r1 == 0);
    CHECK(o1 == o2);
}

TEST_CASE("every listed identity is reachable through verify") {
    auto [code, text] = run_job(make(JobConfig::Command::list));
    CHECK(code == 0);
    json doc = json::parse(text);
    REQUIRE(doc["identities"].size() == 17);
    for (const auto& item : doc["identities"]) {
        CHECK(!item["formula"].get<std::string>().empty());
        auto [vcode, vtext] = run_job(
            make(JobConfig::Command::verify, {{"id", item["id"].get<std::string>()}},
                 JobConfig::Format::json, 40));
        INFO("id = ", item["id"].get<std::string>());
        CHECK(vcode == 0);
        CHECK(json::parse(vtext)["reports"][0]["passed"] == true);
    }
}

TEST_CASE("roots command reports certificates") {
    auto [code, text] =
        run_job(make(JobConfig::Command::roots, {{"family", "ramanujan"}, {"m", "2"}}));
    CHECK(code == 0);
    json doc = json::parse(text);
    REQUIRE(doc["reports"].size() == 1);
    const auto& rep = doc["reports"][0];
    CHECK(rep["degree"] == 6);
    CHECK(rep["num_real"] == 4);
    CHECK(rep["verdict"] == true);
    REQUIRE(rep["roots"].size() == 6);
    for (const auto& r : rep["roots"]) {
        CHECK(r.contains("re"));
        CHECK(r.contains("im"));
        CHECK(r.contains("residual"));
        CHECK(r.contains("on_circle"));
    }
}

TEST_CASE("conjecture scan runs a bounded grid") {
    auto [code, text] = run_job(make(JobConfig::Command::conjecture,
                                     {{"kmax", "4"}, {"max-modulus", "5"}},
                                     JobConfig::Format::json, 40));
    CHECK(code == 0);
    json doc = json::parse(text);
    CHECK(doc["flagged"] == false);
    CHECK(doc["checked"].get<long>() > 0);
}

TEST_CASE("conjecture single-pair mode loads characters from files") {
    {
        std::ofstream c1("zetalab_chi.json");
        c1 << "{\"modulus\": 4, \"values\": [0, 1, 0, -1]}\n";
        std::ofstream c2("zetalab_psi.json");
        c2 << "{\"modulus\": 3, \"values\": [0, 1, -1]}\n";
    }
    auto [code, text] = run_job(make(
        JobConfig::Command::conjecture,
        {{"chi-file", "zetalab_chi.json"}, {"psi-file", "zetalab_psi.json"}, {"k", "4"}},
        JobConfig::Format::json, 40));
    std::remove("zetalab_chi.json");
    std::remove("zetalab_psi.json");
    CHECK(code == 0);
    json doc = json::parse(text);
    CHECK(doc["checked"] == 1);
    CHECK(doc["reports"][0]["verdict"] == true);
}

TEST_CASE("usage errors exit with code 2") {
    auto [c1, t1] = run_job(make(JobConfig::Command::verify, {{"id", "no_such_identity"}}));
    CHECK(c1 == 2);
    CHECK(t1.find("error:") != std::string::npos);
    auto [c2, t2] = run_job(make(JobConfig::Command::verify, {}));
    CHECK(c2 == 2);
    auto [c3, t3] = run_job(make(JobConfig::Command::roots, {{"family", "bogus"}}));
    CHECK(c3 == 2);
    JobConfig bad = make(JobConfig::Command::zeta, {{"s", "3"}});
    bad.precision = 5;
    CHECK(run_job(bad).first == 2);
}

TEST_CASE("series cap from the environment produces a domain failure") {
    setenv("ZETALAB_MAX_TERMS", "2", 1);
    auto [code, text] = run_job(make(JobConfig::Command::zeta, {{"s", "3"}}));
    unsetenv("ZETALAB_MAX_TERMS");
    CHECK(code == 2);
    CHECK(text.find("error:") != std::string::npos);
    auto [again, _] = run_job(make(JobConfig::Command::zeta, {{"s", "3"}}));
    CHECK(again == 0);
}
