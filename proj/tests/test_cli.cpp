#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sumsetlab/cli.hpp"

namespace fs = std::filesystem;
using sumsetlab::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::string tmpl = (fs::temp_directory_path() / "sumsetlab-XXXXXX").string();
    path = mkdtemp(tmpl.data());
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

const char* kFan = R"({"height":1,"layers":[[1,2,3],[4,5,6,7]],"edges":[[1,4],[2,4],[2,5],[3,5],[3,6],[3,7]]})";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("construct then bounds reproduces the observed 48") {
    TempDir dir;
    auto c = cli({"construct", "example1", "--h", "2", "--a", "4", "--l", "1", "--out-dir", dir.path.string()});
    REQUIRE(c.code == 0);
    CHECK(nlohmann::json::parse(c.out)["predicted"]["m"] == 18);
    auto b = cli({"bounds", dir / "A.json", dir / "B.json", "--h", "2", "--instance", "ex1", "--csv", dir / "r.csv"});
    CHECK(b.code == 0);
    auto j = nlohmann::json::parse(b.out);
    CHECK(j["observed"] == 48);
    std::string row = j["csv"]["row"];
    CHECK(row.rfind("ex1,2,18,30,16,48,", 0) == 0);
    std::ifstream csv(dir / "r.csv");
    std::string header, line;
    std::getline(csv, header);
    std::getline(csv, line);
    CHECK(line == row);
  }

  TEST_CASE("second construction") {
    TempDir dir;
    auto c = cli({"construct", "example2", "--h", "2", "--a", "8", "--alpha", "1.5", "--out-dir", dir.path.string()});
    REQUIRE(c.code == 0);
    auto s = cli({"sumset", dir / "A.json", dir / "B.json", "--h", "2", "--cardinality-only"});
    CHECK(s.code == 0);
    CHECK(nlohmann::json::parse(s.out)["cardinalities"] == nlohmann::json({66, 94, 192}));
    auto bad = cli({"construct", "example2", "--h", "2", "--a", "3", "--alpha", "1.5", "--out-dir", dir.path.string()});
    CHECK(bad.code == 2);
  }

  TEST_CASE("mag with and without the enumeration oracle") {
    TempDir dir;
    auto g = dir.file("fan.json", kFan);
    auto expected = nlohmann::json::parse(R"({"level":1,"ratio":[1,1],"tight_set":[1,2]})");
    auto o = cli({"mag", "--level", "1", "--oracle", g});
    CHECK(o.code == 0);
    CHECK(nlohmann::json::parse(o.out) == expected);
    auto f = cli({"mag", "--level", "1", g});
    CHECK(nlohmann::json::parse(f.out) == expected);
    CHECK(cli({"mag", "--level", "2", g}).code == 2);
  }

  TEST_CASE("graph commands and partition") {
    TempDir dir;
    auto a = dir.file("A.json", R"({"moduli":[0],"elements":[[0],[1],[2],[3],[100]]})");
    auto b = dir.file("B.json", R"({"moduli":[0],"elements":[[0],[1]]})");
    auto c = dir.file("C.json", R"({"moduli":[0],"elements":[[4]]})");
    auto built = cli({"graph", "build", a, b, "--h", "2"});
    REQUIRE(built.code == 0);
    auto g = dir.file("G.json", built.out);
    CHECK(cli({"graph", "check", g}).code == 0);
    auto p = cli({"partition", g});
    CHECK(p.code == 0);
    auto pj = nlohmann::json::parse(p.out);
    CHECK(pj["ratios"] == nlohmann::json::parse("[[5,4],[2,1]]"));
    CHECK(pj["top_sum"] == 9);
    auto r = cli({"graph", "restrict", a, b, c, "--h", "2"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["layers"][1].size() == 6);

    auto bad = dir.file("bad.json", R"({"height":2,"layers":[[1],[2],[3,4]],"edges":[[1,2],[2,3],[2,4]]})");
    CHECK(cli({"graph", "check", bad}).code == 1);
    CHECK(cli({"partition", bad}).code == 2);
  }

  TEST_CASE("input and guard errors exit with 2") {
    TempDir dir;
    CHECK(cli({"sumset", dir / "missing.json", dir / "missing.json", "--h", "1"}).code == 2);
    auto junk = dir.file("junk.json", "{not json");
    CHECK(cli({"sumset", junk, junk, "--h", "1"}).code == 2);
    auto a = dir.file("A.json", R"({"moduli":[0],"elements":[[0],[1],[2],[3]]})");
    auto b = dir.file("B.json", R"({"moduli":[0],"elements":[[0],[10],[20]]})");
    auto capped = cli({"sumset", a, b, "--h", "1", "--cap", "5"});
    CHECK(capped.code == 2);
    CHECK(capped.err.find("sumset-cap") != std::string::npos);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"--help"}).code == 0);
  }

  TEST_CASE("verify suite is deterministic") {
    auto first = cli({"verify", "suite", "--seed", "42", "--cases", "10"});
    CHECK(first.code == 0);
    CHECK(first.out.find("criterion 11: PASS") != std::string::npos);
    auto second = cli({"verify", "suite", "--seed", "42", "--cases", "10", "--threads", "3"});
    CHECK(first.out == second.out);
    auto other = cli({"verify", "suite", "--seed", "43", "--cases", "10", "--only", "1"});
    CHECK(other.code == 0);
    CHECK(other.out != first.out);
    auto js = cli({"verify", "suite", "--seed", "42", "--cases", "5", "--json", "--only", "7", "8"});
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["schema"] == 1);
    CHECK(j["criteria"].size() == 2);
    CHECK(j["pass"] == true);
  }
}
