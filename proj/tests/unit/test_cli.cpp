#include "cli.hpp"

#include "fzeta/serialize.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace fs = std::filesystem;
using fzeta::cli::run;
using Json = nlohmann::ordered_json;

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("fzeta_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const
    {
        std::ofstream(path / name) << text;
        return (path / name).string();
    }
};

struct Outcome {
    int code;
    std::string out, err;
};

Outcome call(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& p)
{
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST_CASE("curve-validate exit codes")
{
    TempDir d;
    const auto good = d.write("e.json", R"({"genus":1,"q":2,"point_counts":[3]})");
    auto r = call({"curve-validate", "--curve", good});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["command"] == "curve-validate");

    // symmetric but violates the Weil bound
    const auto nonweil = d.write("w.json", R"({"genus":1,"q":2,"numerator_coeffs":["1","5","2"]})");
    CHECK(call({"curve-validate", "--curve", nonweil}).code == 1);

    const auto asym = d.write("a.json", R"({"genus":1,"q":2,"numerator_coeffs":["1","1","3"]})");
    r = call({"curve-validate", "--curve", asym});
    CHECK(r.code == 2);
    CHECK(r.err.find("/numerator_coeffs") != std::string::npos);
}

TEST_CASE("input errors name the offending field")
{
    TempDir d;
    auto r = call({"curve-validate", "--curve", d.write("m.json", "{\"genus\": 1, ")});
    CHECK(r.code == 2);

    r = call({"curve-validate", "--curve", d.write("q.json", R"({"genus":1,"point_counts":[3]})")});
    CHECK(r.code == 2);
    CHECK(r.err.find("q") != std::string::npos);

    r = call({"curve-validate", "--curve", d.write("b.json", R"({"genus":1,"q":2,"point_counts":[3],"numerator_coeffs":["1"]})")});
    CHECK(r.code == 2);

    r = call({"curve-validate", "--curve", (d.path / "missing.json").string()});
    CHECK(r.code == 2);

    const auto good = d.write("e.json", R"({"genus":1,"q":2,"point_counts":[3]})");
    CHECK(call({"group", "--curve", good, "--type", "E", "--rank", "6", "--p", "1"}).code == 2);
    CHECK(call({"group", "--curve", good, "--type", "A", "--rank", "2", "--p", "3"}).code == 2);
    CHECK(call({"pure", "--curve", good, "--r", "3"}).code == 2);
    CHECK(call({"no-such-command"}).code == 2);
}

TEST_CASE("pure zeta over the command line")
{
    TempDir d;
    const auto good = d.write("e.json", R"({"genus":1,"q":2,"point_counts":[3]})");
    const auto csv = (d.path / "z.csv").string();
    const auto jout = (d.path / "z.json").string();
    const auto r = call({"pure", "--curve", good, "--r", "2", "--csv-out", csv, "--json-out", jout});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["numerator"] == Json::array({"3", "3", "12"}));
    CHECK(j["fe"] == true);
    CHECK(j["rh"]["verdict"] == "pass");
    CHECK(slurp(jout) == r.out);
    const std::string table = slurp(csv);
    CHECK(table.rfind("re_s,im_s,modulus_u,deviation\n", 0) == 0);
    CHECK(std::count(table.begin(), table.end(), '\n') == 3);

    // same job twice gives byte-identical output
    CHECK(call({"pure", "--curve", good, "--r", "2"}).out == call({"pure", "--curve", good, "--r", "2"}).out);
}

TEST_CASE("configuration file with flag overrides")
{
    TempDir d;
    const auto cfg = d.write("job.json", R"({"curve":{"genus":1,"q":3,"point_counts":[4]},"group":{"type":"A","rank":1,"p":1}})");
    auto r = call({"group", "--config", cfg});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["q"] == "3");
    CHECK(j["fe"] == true);

    r = call({"group", "--config", cfg, "--rank", "2"});
    REQUIRE(r.code == 0);
    j = Json::parse(r.out);
    CHECK(j["group"].get<std::string>().find("A_2") != std::string::npos);

    const auto csv = (d.path / "g.csv").string();
    CHECK(call({"group", "--config", cfg, "--csv-out", csv}).code == 0);
    const std::string table = slurp(csv);
    // A_1 has two zeros on Re s = -1
    CHECK(std::count(table.begin(), table.end(), '\n') == 3);
    CHECK(table.find("\n-1,") != std::string::npos);

    const auto bad = d.write("bad.json", R"({"curve":{"genus":1,"q":3,"point_counts":[4]},"tol":-1})");
    CHECK(call({"curve-validate", "--config", bad}).code == 2);
}

TEST_CASE("empty zero table is header only")
{
    CHECK(fzeta::zeros_csv({}) == "re_s,im_s,modulus_u,deviation\n");
}

TEST_CASE("other subcommands run")
{
    TempDir d;
    const auto good = d.write("e.json", R"({"genus":1,"q":2,"point_counts":[3]})");
    CHECK(call({"mass", "--curve", good}).code == 0);
    CHECK(call({"residue-compare", "--curve", good, "--type", "A", "--rank", "2", "--p", "1"}).code == 0);
    CHECK(call({"uniformity", "--curve", good}).code == 0);
    const auto nf = call({"numfield", "--r", "3"});
    CHECK(nf.code == 0);
    CHECK(call({"numfield", "--r", "12"}).code == 2);
}
