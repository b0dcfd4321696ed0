#include "test_support.hpp"

#include "toric_volume/cli.hpp"
#include "toric_volume/serialization.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace toric;
using namespace toric::testing;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::main_entry(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "toric_volume_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string germ_file()
{
    auto path = scratch("p2.json");
    std::ofstream(path) << germ_to_json(reference_germ()).dump(2);
    return path.string();
}

bool contains(const std::string& haystack, const std::string& needle)
{
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("volume with oracle")
{
    auto r = invoke({"volume", "--germ", germ_file(), "--weights", "3:1,2:3", "--oracle"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "f = 3/28"));
    CHECK(contains(r.out, "vol_z = 25/28"));
    CHECK(contains(r.out, "AGREE"));

    auto j = Json::parse(invoke({"--format", "json", "volume", "--germ", germ_file(), "--weights", "2:1"}).out);
    CHECK(j["f_value"] == "1/6");
    CHECK(j["vol_z"] == "5/6");
}

TEST_CASE("decimal output is labeled")
{
    auto r = invoke({"--decimal", "5", "volume", "--germ", germ_file(), "--weights", "2:1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "f = 1/6 (APPROX 0.16667, 5 digits)"));
    auto d = invoke({"--decimal", "lift", "--d", "3", "--v", "1/3"});
    CHECK(d.code == 0);
    CHECK(contains(d.out, "4 (APPROX 4.000000000000, 12 digits)"));
}

TEST_CASE("non-members are refused with diagnostics")
{
    auto r = invoke({"volume", "--germ", germ_file(), "--weights", "2:1,3:2"});
    CHECK(r.code == 1);
    CHECK(contains(r.err, "SNP: MONOTONIC violated"));

    auto c = invoke({"check-snp", "--germ", germ_file(), "--weights", "2:1,3:2"});
    CHECK(c.code == 1);
    CHECK(contains(c.out, "not a member"));
    CHECK(contains(c.out, "NEF2(k=2)"));

    auto ok = invoke({"check-snp", "--germ", germ_file(), "--weights", "3:1,2:3"});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "member"));

    auto invalid = invoke({"check-snp", "--germ", germ_file(), "--weights", "2:2"});
    CHECK(invalid.code == 1);
    CHECK(contains(invalid.out, "PRIMITIVE(k=1)"));
}

TEST_CASE("intersect, factorize, gen-snp, lift")
{
    auto m = invoke({"intersect", "--germ", germ_file(), "--weights", "3:1,2:3", "--format", "csv"});
    CHECK(m.code == 0);
    CHECK(contains(m.out, ",C0,C1,C2,C3"));
    CHECK(contains(m.out, "C0,-4,1,0,0"));
    auto no_germ = invoke({"intersect", "--weights", "3:1,2:3"});
    if (!std::getenv(cli::kGermEnvVar)) {
        CHECK(no_germ.code == 0);
        CHECK(contains(no_germ.out, "undefined"));
    }

    auto f = invoke({"factorize", "--weights", "3:1,2:3"});
    CHECK(f.code == 0);
    CHECK(contains(f.out, "step 2: 1/3(1,2), weights (2/3, 7/3), mult 7"));
    CHECK(contains(f.out, "multiplicities: 1 7 2"));

    auto g = invoke({"gen-snp", "--germ", germ_file(), "--n", "5"});
    CHECK(g.code == 0);
    CHECK(g.out == "6:1,5:2,4:3,3:4,2:5\n");

    CHECK(invoke({"lift", "--d", "4", "--v", "25/28"}).out == "375/14\n");
    CHECK(invoke({"lift", "--d", "2", "--v", "1"}).code == 1);
}

TEST_CASE("usage errors exit 2")
{
    ::unsetenv(cli::kGermEnvVar);
    CHECK(invoke({"volume", "--weights", "2:1"}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"--format", "xml", "lift", "--d", "3", "--v", "1"}).code == 2);
    CHECK(invoke({"gen-snp", "--germ", germ_file()}).code == 2);
}

TEST_CASE("bad inputs exit 1")
{
    auto missing = invoke({"volume", "--germ", scratch("nope.json").string(), "--weights", "2:1"});
    CHECK(missing.code == 1);
    auto bad_path = scratch("bad.json");
    std::ofstream(bad_path) << R"({"b1_sq": "1", "l": 0, "vol_x": "1", "kb_dot_b2": "1"})";
    auto bad = invoke({"volume", "--germ", bad_path.string(), "--weights", "2:1"});
    CHECK(bad.code == 1);
    CHECK(contains(bad.err, "b1_sq < 0"));
    CHECK(contains(bad.err, "l >= 1"));
    auto typed = scratch("typed.json");
    std::ofstream(typed) << R"({"b1_sq": "-1", "l": 2, "vol_x": "1", "kb_dot_b2": "1", "label": 5})";
    CHECK(invoke({"volume", "--germ", typed.string(), "--weights", "2:1"}).code == 1);
}

TEST_CASE("germ from the environment")
{
    ::setenv(cli::kGermEnvVar, germ_file().c_str(), 1);
    auto r = invoke({"volume", "--weights", "2:1"});
    ::unsetenv(cli::kGermEnvVar);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "vol_z = 5/6"));
}

TEST_CASE("weights from a JSON file")
{
    auto path = scratch("weights.json");
    std::ofstream(path) << "[[3, 1], [2, 3]]";
    auto r = invoke({"volume", "--germ", germ_file(), "--weights", "@" + path.string()});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "f = 3/28"));
}

TEST_CASE("chain output is independent of --jobs")
{
    auto serial = invoke({"--format", "csv", "chain", "--germ", germ_file(), "--n", "3", "--samples", "6"});
    auto threaded =
        invoke({"--format", "csv", "--jobs", "4", "chain", "--germ", germ_file(), "--n", "3", "--samples", "6"});
    CHECK(serial.code == 0);
    CHECK(threaded.code == 0);
    CHECK(serial.out == threaded.out);
    CHECK(contains(serial.out, "level,m,f_value,increment\n"));

    auto csv = scratch("chain.csv");
    auto v = invoke({"--decimal", "4", "chain", "--germ", germ_file(), "--n", "1", "--samples", "3", "--volumes",
        "--csv", csv.string()});
    CHECK(v.code == 0);
    CHECK(contains(v.out, "VERIFIED"));
    std::ifstream in(csv);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str()
        == "level,m,vol,increment,vol_approx,increment_approx\n"
           "1,1,5/6,1/6,0.8333,0.1667\n"
           "1,3,9/10,1/10,0.9000,0.1000\n"
           "1,5,13/14,1/14,0.9286,0.0714\n");
}

TEST_CASE("verify-cert")
{
    auto cert_path = scratch("cert.json");
    auto chain = invoke({"--format", "json", "chain", "--germ", germ_file(), "--n", "2"});
    REQUIRE(chain.code == 0);
    auto j = Json::parse(chain.out);
    CHECK(j["verified"] == true);
    std::ofstream(cert_path) << j.dump();
    auto ok = invoke({"verify-cert", "--cert", cert_path.string()});
    CHECK(ok.code == 0);
    CHECK(ok.out == "VERIFIED\n");

    j["certificate"]["limit_value"] = "1/13";
    std::ofstream(cert_path) << j.dump();
    auto bad = invoke({"verify-cert", "--cert", cert_path.string()});
    CHECK(bad.code == 1);
    CHECK(bad.out == "FAILED\n");
}
