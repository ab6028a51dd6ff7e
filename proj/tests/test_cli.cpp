#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <unistd.h>

#include <json.hpp>

namespace {

const std::string kCli = INTDEG_CLI_PATH;
const std::string kData = INTDEG_DATA_DIR;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string temp_path(const char* tag) {
    std::string name = std::string("/tmp/intdeg-") + tag + "-XXXXXX";
    int fd = mkstemp(name.data());
    REQUIRE(fd >= 0);
    close(fd);
    return name;
}

RunResult run(const std::string& args) {
    std::string tmp = temp_path("cli");
    std::string cmd = kCli + " " + args + " > " + tmp + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream in(tmp);
    r.out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    std::remove(tmp.c_str());
    return r;
}

} // namespace

TEST_CASE("order degree on the bundled Dedekind pair") {
    RunResult r = run("order degree " + kData + "/dedekind-subring.json --json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "order degree");
    CHECK(j["results"]["d"] == 2);
    CHECK(j["results"]["index"] == 4);
    CHECK(j["provenance"]["integrally_closed"] == "asserted");
}

TEST_CASE("order qsearch threshold via the CLI") {
    std::string base = "order qsearch " + kData + "/dedekind-subring.json " + kData +
                       "/dedekind-poly.json --json --k ";
    auto at3 = nlohmann::json::parse(run(base + "3").out);
    CHECK(at3["results"]["found"] == false);
    auto at4 = nlohmann::json::parse(run(base + "4").out);
    CHECK(at4["results"]["found"] == true);
}

TEST_CASE("order tower reports the pipeline values") {
    RunResult r = run("order tower " + kData + "/dedekind-subring.json " + kData +
                      "/dedekind-poly.json --json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["id_alpha"] == 6);
    CHECK(j["results"]["d_AC_exact"] == 6);
    CHECK(j["results"]["mu_AB_exact"] == 3);
    CHECK(j["results"]["submultiplicative"] == false);
    CHECK(j["provenance"]["irreducibility"] == "computed");
}

TEST_CASE("sg subcommands") {
    RunResult mu = run("sg mu " + kData + "/dlmu-extension.json --json");
    REQUIRE(mu.exit_code == 0);
    auto j = nlohmann::json::parse(mu.out);
    CHECK(j["results"]["mu"] == 3);
    CHECK(j["results"]["module_generators"] == nlohmann::json::array({0, 4, 5}));

    RunResult certify = run("sg certify " + kData + "/dlmu-extension.json " + kData +
                            "/dlmu-certificate.json --json");
    REQUIRE(certify.exit_code == 0);
    auto c = nlohmann::json::parse(certify.out);
    CHECK(c["results"]["valid"] == true);
    CHECK(c["results"]["d"] == 2);

    RunResult id = run("sg id --gens 3,8,10 --m 4 --json");
    auto i = nlohmann::json::parse(id.out);
    CHECK(i["results"]["id"] == 2);
}

TEST_CASE("field subcommands") {
    RunResult insep = run("field insep " + kData + "/tower-insep.json --json");
    auto j = nlohmann::json::parse(insep.out);
    CHECK(j["results"]["d"] == 2);
    CHECK(j["results"]["total_degree"] == 4);

    RunResult elem = run("field element " + kData + "/tower-insep.json " + kData +
                         "/tower-element.json --json");
    auto e = nlohmann::json::parse(elem.out);
    CHECK(e["results"]["id"] == 2);

    RunResult demo = run("field demo --p 3 --json");
    auto d = nlohmann::json::parse(demo.out);
    CHECK(d["results"]["d_K_M"] == 3);
    CHECK(d["results"]["stepwise_product"] == 9);
    CHECK(d["results"]["strict"] == true);
}

TEST_CASE("exit code contract") {
    // 0: success
    CHECK(run("examples run --id EX-INSEP-P").exit_code == 0);
    // 2: schema problem (missing file)
    CHECK(run("order degree /nonexistent/nope.json --json").exit_code == 2);
    // 1: mathematical precondition (gcd != 1)
    std::string tmp = temp_path("gcd");
    {
        std::ofstream f(tmp);
        f << R"({"kind":"semigroup-extension","A":[2,4],"B":[2,4]})";
    }
    RunResult r = run("sg mu " + tmp);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("divide") != std::string::npos);  // normalization hint
    std::remove(tmp.c_str());
}

TEST_CASE("machine sections are byte-stable across runs") {
    for (std::string args :
         {std::string("examples run --json"), std::string("check --seed 1 --cases 8 --json"),
          std::string("order degree ") + kData + "/dedekind-subring.json --json"}) {
        RunResult a = run(args);
        RunResult b = run(args);
        REQUIRE(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("check subcommand runs the harness") {
    RunResult r = run("check --seed 7 --cases 5 --json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["ok"] == true);
    CHECK(j["results"]["total_cases"].get<int>() > 100);
}
