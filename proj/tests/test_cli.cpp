#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "conifold/report.hpp"
#include "process.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace conifold;

namespace {

std::string g_exe;

process::Result run(const std::vector<std::string>& args) { return process::run(g_exe, args); }

std::filesystem::path temp_file(const std::string& name, const std::string& contents)
{
    const auto path = std::filesystem::temp_directory_path() / ("conifold_cli_" + name);
    std::ofstream(path) << contents;
    return path;
}

}  // namespace

TEST_CASE("analyze: conifold point of x + 1/x")
{
    const auto r = run({"analyze", "--poly", "x1 + x1^-1"});
    REQUIRE(r.exit_code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["tool_version"] == kToolVersion);
    CHECK(doc["input_echo"] == "x1^-1 + x1");
    CHECK(doc["validation"]["origin_interior"] == true);
    CHECK(doc["conifold"]["critical_value"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::fabs(doc["conifold"]["point_log"][0].get<double>()) <= 1e-12);
    CHECK_FALSE(doc.contains("moments"));
}

TEST_CASE("analyze with moments adds the growth comparison")
{
    const auto r = run({"analyze", "--poly", "x1 + x1^-1", "--kmax", "200"});
    REQUIRE(r.exit_code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["moments"]["period"] == 2);
    CHECK(doc["dk"]["relative_gap"].get<double>() <= 0.02);
    CHECK(doc["dk"]["radius"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("validate: x1 + x2 fails the hypothesis with exit 1")
{
    const auto r = run({"validate", "--poly", "x1 + x2"});
    CHECK(r.exit_code == 1);
    const Json doc = Json::parse(r.out);
    CHECK(doc["validation"]["origin_interior"] == false);
    CHECK(doc["validation"]["polytope_dim"] == 1);
    CHECK(doc["validation"].contains("failure_direction"));

    const auto ok = run({"validate", "--poly", "x1 + x2 + x1^-1*x2^-1"});
    CHECK(ok.exit_code == 0);
    CHECK(run({"analyze", "--poly", "x1 + x2"}).exit_code == 1);
}

TEST_CASE("toric: P2 with moments")
{
    const auto r = run({"toric", "--fan", "P2", "--moments", "300"});
    REQUIRE(r.exit_code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(std::fabs(doc["toric"]["critical_value"].get<double>() - 3.0) <= 1e-9);
    CHECK(doc["toric"]["upper_ok"] == true);
    CHECK(doc["dk"]["relative_gap"].get<double>() <= 0.02);

    const auto file = run({"toric", "--fan-file", std::string(CONIFOLD_DATA_DIR) + "/fans/dP7.json"});
    REQUIRE(file.exit_code == 0);
    CHECK(Json::parse(file.out)["toric"]["rays_sum_to_zero"] == false);

    const auto half = temp_file("half.json", R"({"d": 2, "rays": [[1,0],[0,1],[1,1]]})");
    CHECK(run({"toric", "--fan-file", half.string()}).exit_code == 1);
}

TEST_CASE("input errors exit with 2")
{
    CHECK(run({"analyze", "--poly", "x1 - x2"}).exit_code == 2);
    CHECK(run({"analyze", "--poly", "x1 +"}).exit_code == 2);
    CHECK(run({"analyze"}).exit_code == 2);
    CHECK(run({"toric", "--fan", "nope"}).exit_code == 2);
    CHECK(run({"toric", "--fan-file", "/nonexistent.json"}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({"analyze", "--poly", "x1 + x1^-1", "--format", "xml"}).exit_code == 2);
    const auto nonprim = temp_file("nonprim.json", R"({"d": 1, "rays": [[2],[-1]]})");
    CHECK(run({"toric", "--fan-file", nonprim.string()}).exit_code == 2);
}

TEST_CASE("numerical failure exits with 3")
{
    const auto r = run({"analyze", "--poly", "100*x1^3 + 0.01*x1^-2 + x1*x2^2 + 7/3*x2^-1", "--max-iter", "1"});
    CHECK(r.exit_code == 3);
    const Json doc = Json::parse(r.out);
    CHECK(doc["error"]["code"] == "MaxIterations");
    CHECK(doc["trace"].size() == 2);
}

TEST_CASE("polynomial files: text and JSON")
{
    const auto text = temp_file("w.txt", "x1^2*x2^-1 + x1^-1*x2^2\n + x1^-1*x2^-1\n");
    auto r = run({"analyze", "--poly-file", text.string()});
    REQUIRE(r.exit_code == 0);
    CHECK(Json::parse(r.out)["conifold"]["critical_value"].get<double>() == doctest::Approx(3.0));

    const auto json = temp_file("w.json", R"({"d": 1, "terms": [{"e": [1], "c": "2"}, {"e": [-1], "c": "1"}]})");
    r = run({"analyze", "--poly-file", json.string()});
    REQUIRE(r.exit_code == 0);
    CHECK(Json::parse(r.out)["conifold"]["critical_value"].get<double>()
          == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("moments subcommand and CSV export")
{
    const auto csv = std::filesystem::temp_directory_path() / "conifold_cli_moments.csv";
    const auto r = run({"moments", "--poly", "x1 + x1^-1", "--kmax", "20", "--csv", csv.string()});
    REQUIRE(r.exit_code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["moments"]["values"][20] == "184756");
    std::ifstream in(csv);
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(header == "k,M_k");
    CHECK(first == "0,1");
}

TEST_CASE("text format and determinism")
{
    const auto r = run({"analyze", "--poly", "x1 + x1^-1", "--format", "text"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("conifold.critical_value: 2") != std::string::npos);

    for (const auto& args : std::vector<std::vector<std::string>>{
             {"analyze", "--poly", "x1^2 + 1/2*x1^-1*x2 + 3*x2^-2 + 5/4*x1*x2", "--kmax", "40"},
             {"validate", "--poly", "x1 + x2"},
             {"toric", "--fan", "dP6", "--moments", "60"}}) {
        CHECK(run(args).out == run(args).out);
    }
}

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-conifold> [doctest options]\n");
        return 2;
    }
    g_exe = argv[1];
    doctest::Context context;
    context.applyCommandLine(argc - 1, argv + 1);
    return context.run();
}
