#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperjet/cli.hpp"

using nlohmann::json;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("cli_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
    std::string read() const
    {
        std::ifstream f(path, std::ios::binary);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    void write(const std::string& body) const
    {
        std::ofstream f(path, std::ios::binary);
        f << body;
    }
};

int run(std::vector<std::string> args)
{
    std::vector<const char*> argv;
    argv.push_back("hyperjet");
    for (const auto& a : args) argv.push_back(a.c_str());
    return hyperjet::run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("rank document")
{
    TempFile out("rank.json");
    CHECK(run({"rank", "--n", "2", "--kappa", "1", "--m", "2", "--out", out.path}) == 0);
    json doc = json::parse(out.read());
    CHECK(doc["n"] == 2);
    CHECK(doc["kappa"] == 1);
    CHECK(doc["m"] == 2);
    CHECK(doc["rank"] == "3");
}

TEST_CASE("decompose document")
{
    TempFile out("decompose.json");
    CHECK(run({"decompose", "--n", "2", "--kappa", "2", "--m", "2", "--out", out.path}) == 0);
    json doc = json::parse(out.read());
    REQUIRE(doc["entries"].size() == 2);
    CHECK(doc["entries"][0]["partition"] == json::array({2, 0}));
    CHECK(doc["entries"][0]["mult"] == "1");
    CHECK(doc["entries"][1]["partition"] == json::array({1, 0}));
    CHECK(doc["rank"] == "5");
}

TEST_CASE("decompose csv")
{
    TempFile out("decompose.csv");
    CHECK(run({"decompose", "--n", "2", "--kappa", "2", "--m", "2", "--format", "csv",
               "--out", out.path}) == 0);
    std::string body = out.read();
    CHECK(body == "partition,mult\n\"2,0\",1\n\"1,0\",1\n");
}

TEST_CASE("chi of a twisted schur bundle")
{
    TempFile out("chi.json");
    CHECK(run({"chi", "--n", "2", "--d", "5", "--partition", "1,1", "--twist", "1", "--out",
               out.path}) == 0);
    json doc = json::parse(out.read());
    CHECK(doc["chi"] == "10");
}

TEST_CASE("chi sweep over a weight range")
{
    TempFile out("chi_range.json");
    CHECK(run({"chi", "--n", "2", "--d", "5", "--kappa", "1", "--m-range", "1..3", "--out",
               out.path}) == 0);
    json doc = json::parse(out.read());
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][0]["m"] == 1);
    CHECK(doc["rows"][0]["chi_gr"] == "-45");
}

TEST_CASE("cohomology document")
{
    TempFile out("coh.json");
    CHECK(run({"cohomology", "--n", "2", "--d", "5", "--space", "lambda", "--r", "1",
               "--twist", "0", "--out", out.path}) == 0);
    json doc = json::parse(out.read());
    CHECK(doc["h"] == json::array({"0", "45", "0"}));
    CHECK(doc["chi"] == "-45");

    TempFile amb("coh_p.json");
    CHECK(run({"cohomology", "--n", "1", "--space", "projective", "--partition", "1,0",
               "--twist", "0", "--out", amb.path}) == 0);
    json pdoc = json::parse(amb.read());
    CHECK(pdoc["h"] == json::array({"0", "1", "0"}));
}

TEST_CASE("vanishing document")
{
    TempFile out("vanishing.json");
    CHECK(run({"vanishing", "--n", "2", "--d", "5", "--partition", "8,8", "--out", out.path}) ==
          0);
    json doc = json::parse(out.read());
    REQUIRE(doc["rows"].size() == 1);
    CHECK(doc["rows"][0]["vanishes"] == true);
    CHECK(doc["rows"][0]["threshold"] == "8");
}

TEST_CASE("report document")
{
    TempFile out("report.json");
    CHECK(run({"report", "--n", "2", "--d", "5", "--kappa", "1", "--m", "1", "--out",
               out.path}) == 0);
    json doc = json::parse(out.read());
    CHECK(doc["context"]["n"] == 2);
    CHECK(doc["context"]["d"] == 5);
    CHECK(doc["chi_gr"] == "-45");
    CHECK(doc["general_type"] == true);
    CHECK(doc["leading_coefficient_symbolic"] == "d(d-n-2)^n (log k)^n / n!");
    REQUIRE(doc["vanishing"].size() == 1);
    CHECK(doc["vanishing"][0]["partition"] == json::array({1, 0}));
    CHECK(doc["vanishing"][0]["vanishes"] == false);

    TempFile fano("report_fano.json");
    CHECK(run({"report", "--n", "3", "--d", "4", "--kappa", "1", "--m", "1", "--out",
               fano.path}) == 0);
    CHECK(json::parse(fano.read())["general_type"] == false);
}

TEST_CASE("asymptotics polylog")
{
    TempFile out("polylog.json");
    CHECK(run({"asymptotics", "--kind", "polylog", "--kappa", "2", "--q", "2", "--out",
               out.path}) == 0);
    json doc = json::parse(out.read());
    CHECK(doc["value"] == "7/4");
    CHECK(!doc.contains("approx"));

    TempFile fl("polylog_float.json");
    CHECK(run({"asymptotics", "--kind", "polylog", "--kappa", "2", "--q", "2", "--mode",
               "float", "--out", fl.path}) == 0);
    json fdoc = json::parse(fl.read());
    CHECK(fdoc["approx"] == true);
    CHECK(fdoc["value"].get<double>() == doctest::Approx(1.75));
}

TEST_CASE("asymptotics harness csv headers")
{
    TempFile out("harness.csv");
    CHECK(run({"asymptotics", "--kind", "leading", "--n", "1", "--d", "5", "--kappa", "1",
               "--m-range", "1..3", "--format", "csv", "--out", out.path}) == 0);
    std::string body = out.read();
    CHECK(body.rfind("parameter,exact_or_float,value_numerator,value_denominator,predicted,"
                     "ratio\n", 0) == 0);
    CHECK(body.find("m=1,exact,10,1,10,1\n") != std::string::npos);

    TempFile fl("harness_float.csv");
    CHECK(run({"asymptotics", "--kind", "leading", "--n", "1", "--d", "5", "--kappa", "1",
               "--m-range", "1..3", "--mode", "float", "--format", "csv", "--out",
               fl.path}) == 0);
    CHECK(fl.read().rfind("parameter,exact_or_float,float_value,predicted,ratio\n", 0) == 0);
}

TEST_CASE("plucker document")
{
    TempFile out("plucker.json");
    CHECK(run({"plucker", "--n", "2", "--kappa", "3", "--points", "20", "--out", out.path}) ==
          0);
    json doc = json::parse(out.read());
    REQUIRE(doc["pairs"].size() == 1);
    CHECK(doc["pairs"][0]["left"] == json::array({2, 3}));
    CHECK(doc["pairs"][0]["right"] == json::array({1}));
    CHECK(doc["pairs"][0]["vanishes"] == true);
    CHECK(doc["pairs"][0]["relation"].size() == 3);
}

TEST_CASE("verify single suite")
{
    TempFile out("verify.txt");
    CHECK(run({"verify", "--suite", "simplex-moments", "--out", out.path}) == 0);
    std::string body = out.read();
    CHECK(body.rfind("PASS", 0) == 0);
    CHECK(body.find("simplex-moments") != std::string::npos);
    CHECK(run({"verify", "--suite", "no-such-suite"}) == 2);
}

TEST_CASE("config file values sit under explicit flags")
{
    TempFile cfg("rank.cfg");
    cfg.write("# sweep defaults\nn = 3\nkappa = 1\nm = 2\n");
    TempFile out("rank_cfg.json");
    CHECK(run({"rank", "--config", cfg.path, "--n", "2", "--out", out.path}) == 0);
    json doc = json::parse(out.read());
    CHECK(doc["n"] == 2);       // flag wins
    CHECK(doc["kappa"] == 1);   // config fills the rest
    CHECK(doc["m"] == 2);
    CHECK(doc["rank"] == "3");
}

TEST_CASE("deterministic output")
{
    TempFile a("det_a.json"), b("det_b.json");
    CHECK(run({"decompose", "--n", "2", "--kappa", "3", "--m", "5", "--out", a.path}) == 0);
    CHECK(run({"decompose", "--n", "2", "--kappa", "3", "--m", "5", "--out", b.path}) == 0);
    CHECK(a.read() == b.read());
    CHECK(!a.read().empty());
}

TEST_CASE("exit codes")
{
    CHECK(run({"nonsense"}) == 2);
    CHECK(run({}) == 2);
    CHECK(run({"chi", "--n", "2", "--d", "5", "--partition", "1,x"}) == 2);
    CHECK(run({"chi", "--n", "2", "--d", "5", "--partition", "1,2"}) == 2);   // not a partition
    CHECK(run({"cohomology", "--n", "2", "--d", "5", "--format", "csv"}) == 2);
    CHECK(run({"rank", "--format", "yaml"}) == 2);
    CHECK(run({"vanishing", "--n", "2", "--d", "4", "--partition", "1,1"}) == 2);
    CHECK(run({"decompose", "--n", "2", "--kappa", "2", "--m", "50", "--max-cells", "10"}) ==
          3);
    CHECK(run({"asymptotics", "--kind", "leading", "--n", "1", "--d", "5", "--kappa", "1",
               "--m-range", "5..4"}) == 2);
    CHECK(run({"rank", "--config", "no_such_file.cfg"}) == 2);
}
