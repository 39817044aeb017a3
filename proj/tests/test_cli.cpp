#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "sqfsym");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = sqfsym::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}   // namespace

TEST_CASE("invariants subcommand", "[cli]")
{
    const auto r = run({"invariants", "path:4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("match: 2") != std::string::npos);
    CHECK(r.out.find("ind_match: 1") != std::string::npos);
    CHECK(r.out.find("ord_match: 2") != std::string::npos);
    CHECK(r.out.find("is_chordal: true") != std::string::npos);

    const auto j = run({"invariants", "startri:2", "--json"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)["is_cameron_walker"] == true);
}

TEST_CASE("ideal subcommand", "[cli]")
{
    const auto r = run({"ideal", "kbip:3,5", "--kind", "sqf-symbolic", "-s", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("degrees 6..6") != std::string::npos);

    const auto p = run({"ideal", "g6:Bw", "--kind", "sqf-symbolic", "-s", "2"});
    CHECK(p.out.rfind("(x0x1x2)", 0) == 0);

    CHECK(run({"ideal", "path:4", "--kind", "nonsense"}).code == 2);
}

TEST_CASE("betti subcommand", "[cli]")
{
    const auto r = run({"betti", "startri:2", "--kind", "sqf-symbolic", "-s", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("regularity: 5") != std::string::npos);

    const auto i = run({"betti", "ideal:5:x0x1x2x3x4", "--field", "2"});
    CHECK(i.code == 0);
    CHECK(i.out.find("regularity: 5") != std::string::npos);
    CHECK(i.out.find("GF(2)") != std::string::npos);

    CHECK(run({"betti", "path:4", "--field", "4"}).code == 2);
    CHECK(run({"betti", "path:4", "--kind", "sqf-symbolic", "-s", "3"}).code == 2);   // zero ideal
    CHECK(run({"betti", "ideal:3:x0y"}).code == 2);
}

TEST_CASE("verify subcommand exit codes", "[cli]")
{
    const auto path = (std::filesystem::temp_directory_path() / "sqfsym_cli_report.json").string();
    const auto ok = run({"verify", "--checks", "all", "--corpus", "enumerate:4", "--out", path});
    CHECK(ok.code == 0);
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    CHECK(j["checks"].size() == 17);

    CHECK(run({"verify", "--checks", "chk-conj", "--corpus", "enumerate:7"}).code == 3);
    CHECK(run({"verify", "--checks", "chk-bogus", "--corpus", "enumerate:3"}).code == 2);
    CHECK(run({"verify", "--checks", "chk-conj", "--corpus", "g6:B"}).code == 2);
    CHECK(run({"verify", "--checks", "chk-conj"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("explore subcommand", "[cli]")
{
    const auto r = run({"explore", "--max-n", "4", "--out", "-"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["violations"].empty());
    CHECK_FALSE(j["tight"].empty());
    CHECK(run({"explore", "--max-n", "8"}).code == 3);
}
