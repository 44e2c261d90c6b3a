#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

#include "charkit/error.hpp"
#include "charkit/families.hpp"
#include "charkit/io.hpp"
#include "charkit/simd/kernels.hpp"
#include "charkit/verify.hpp"

using namespace charkit;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(CHARKIT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "charkit-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("group files") {
  const Json j = Json::parse(R"({"name": "s3-file", "degree": 3, "generators": [[1,0,2],[1,2,0]]})");
  const GroupPtr g = group_from_json(j);
  CHECK(g->order() == 6);
  CHECK(g->name() == "s3-file");
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"degree": 3, "generators": [[1,1,2]]})")), InputError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"degree": 3, "generators": [[1,0]]})")), InputError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"degree": 3, "generators": [[0,1,5]]})")), InputError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"generators": []})")), InputError);
  CHECK_THROWS_AS(load_group_file("/nonexistent/group.json"), InputError);

  const auto path = scratch("s3.json");
  write_file(path, j.dump());
  CHECK(load_group(path.string())->order() == 6);
  CHECK(load_group("dihedral-8")->order() == 8);
  write_file(scratch("bad.json"), "{not json");
  CHECK_THROWS_AS(load_group_file(scratch("bad.json").string()), InputError);
}

TEST_CASE("action files") {
  const VectorAction a = action_from_json(Json::parse(R"({"q": 2, "dim": 2, "generators": [[[0,1],[1,1]]]})"));
  CHECK(a.q == 2);
  CHECK(a.generators.size() == 1);
  CHECK(a.generators[0] == std::vector<std::int64_t>{0, 1, 1, 1});
  CHECK_THROWS_AS(action_from_json(Json::parse(R"({"q": 2, "dim": 2, "generators": [[[0,1]]]})")), InputError);
  CHECK_THROWS_AS(action_from_json(Json::parse(R"({"q": 2, "dim": 2, "generators": [[[0,1,1],[1,1]]]})")), InputError);
}

TEST_CASE("table dump") {
  const CharacterTable t = character_table(parse_family("S3"));
  const Json j = table_to_json(t);
  CHECK(j["class_sizes"] == Json({1, 3, 2}));
  CHECK(j["characters"].size() == 3);
  CHECK(j["characters"][2]["degree"] == 2);
  CHECK(j["characters"][2]["multiplicities"][0][0] == 2);
  CHECK(table_to_json(character_table(parse_family("S3"))).dump() == j.dump());
}

TEST_CASE("report writing stops at the first failure") {
  VerifyReport rep;
  VerificationRecord ok;
  ok.group = "g";
  ok.kind = "constituent";
  ok.eta = 1;
  ok.predicates["x"] = Outcome::Pass;
  VerificationRecord bad = ok;
  bad.predicates["x"] = Outcome::Fail;
  rep.records = {ok, bad, ok};
  rep.first_failure = 1;
  std::ostringstream out;
  CHECK_FALSE(write_report(rep, out, ReportFormat::JsonLines));
  std::istringstream lines(out.str());
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) ++n;
  CHECK(n == 2);
  CHECK(out.str().find("\"fail\"") != std::string::npos);

  std::ostringstream tsv;
  rep.first_failure.reset();
  rep.records = {ok};
  CHECK(write_report(rep, tsv, ReportFormat::Tsv));
  CHECK(tsv.str().rfind("group\tkind", 0) == 0);
  CHECK(tsv.str().find("x=pass") != std::string::npos);
}

TEST_CASE("theorem selectors") {
  const CheckOptions b = parse_theorems("B");
  CHECK(b.coprime);
  CHECK_FALSE(b.chains);
  CHECK_FALSE(b.linear);
  const CheckOptions all = parse_theorems("A,B,supersolvable,lemmas,section4");
  CHECK((all.chains && all.coprime && all.supersolvable && all.lemmas && all.linear));
  const CheckOptions named = parse_theorems("chains,coprime,linear");
  CHECK((named.chains && named.coprime && named.linear && !named.lemmas && !named.supersolvable));
  CHECK_THROWS_AS(parse_theorems("B,C"), InputError);
}

TEST_CASE("corpus directories") {
  const auto dir = scratch("corpus");
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  write_file(dir / "b.json", R"({"name": "s3", "degree": 3, "generators": [[1,0,2],[1,2,0]]})");
  write_file(dir / "a.json", R"({"name": "c4", "degree": 4, "generators": [[1,2,3,0]]})");
  write_file(dir / "notes.txt", "ignored");
  const auto groups = load_corpus(dir.string(), 0);
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].name == "c4");
  CHECK(groups[1].name == "s3");
  CHECK(load_corpus(dir.string(), 5).size() == 1);
  CHECK_THROWS_AS(load_corpus("/nonexistent/dir", 0), InputError);
}

TEST_CASE("cli: table, decompose, chains, orbits") {
  {
    const Run r = run_cli("table cyclic-1");
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["class_sizes"].size() == 1);
    CHECK(j["characters"].size() == 1);
  }
  {
    const Run r = run_cli("decompose extraspecial-27 --chi 9 --psi 'conj(9)'");
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["eta"] == 9);
    CHECK(j["psi"] == 10);
    for (const auto& c : j["constituents"]) {
      CHECK(c["multiplicity"] == 1);
      CHECK(c["degree"] == 1);
    }
  }
  {
    const Run r = run_cli("chains dihedral-8 --chi 4 --psi 4 --alpha 0");
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["length"] == 1);
    CHECK(j["links"].size() == 2);
  }
  {
    const auto path = scratch("gl22.json");
    write_file(path, R"({"q": 2, "dim": 2, "generators": [[[0,1],[1,1]]]})");
    const Run r = run_cli("orbits " + path.string());
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["orbits"] == 1);
    CHECK(j["derived_length"] == 1);
  }
}

TEST_CASE("cli: verify and exit codes") {
  {
    const Run r = run_cli("verify --corpus builtin --max-order 100 --theorems coprime");
    CHECK(r.code == 0);
    const auto last = r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1);
    const Json summary = Json::parse(last);
    CHECK(summary["summary"] == true);
    CHECK(summary["groups"] == 48);
  }
  {
    const Run r = run_cli("verify --max-order 12 --format tsv");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("group\tkind", 0) == 0);
  }
  CHECK(run_cli("table no-such-family").code == 2);
  CHECK(run_cli("decompose S3 --chi 7 --psi 0").code == 2);
  CHECK(run_cli("chains S3 --chi 2 --psi 1 --alpha 0").code == 2);
  CHECK(run_cli("orbits /nonexistent.json").code == 2);
  CHECK(run_cli("verify --theorems Z").code == 2);
  CHECK(run_cli("verify --format xml --max-order 2").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("cli: order cap from the environment") {
  const std::string cmd = "CHARKIT_MAX_ORDER=10 " + std::string(CHARKIT_CLI) + " table S4 >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 2);
  const std::string ok = "CHARKIT_MAX_ORDER=30 " + std::string(CHARKIT_CLI) + " table S4 >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(ok.c_str())) == 0);
}

TEST_CASE("cli: reports do not depend on threads or kernel set") {
  const Run base = run_cli("verify --max-order 64");
  REQUIRE(base.code == 0);
  CHECK(run_cli("verify --max-order 64 --threads 1").out == base.out);
  CHECK(run_cli("--simd scalar verify --max-order 64").out == base.out);
  if (simd::avx2_kernels()) CHECK(run_cli("--simd avx2 verify --max-order 64 --threads 3").out == base.out);
}
