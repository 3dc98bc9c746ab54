#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <doctest.h>

#include "mubsupport/commands.hpp"
#include "mubsupport/errors.hpp"
#include "mubsupport/serialization.hpp"

using namespace mubsupport;

namespace {

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "mub_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path.string();
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const auto out_path = scratch_dir() / "stdout.txt";
  const std::string cmd = std::string(MUB_BINARY) + " " + args + " > " + out_path.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  r.out = buffer.str();
  return r;
}

}  // namespace

TEST_CASE("field element JSON round trip") {
  const auto a = Cyclotomic::root_power(5, 3) + Cyclotomic(BigRational(2, 3)).in_order(5);
  const Json j = to_json(a, 5);
  CHECK(j.size() == 4);
  CHECK(j[0] == "2/3");
  CHECK(cyclotomic_from_json(j, 5) == a);
  CHECK(cyclotomic_from_json(Json::array({1, 0, 0, 0}), 5) == Cyclotomic::one(5));
  CHECK_THROWS_AS(cyclotomic_from_json(Json::array({1, 0}), 5), ParseError);
  CHECK_THROWS_AS(cyclotomic_from_json(Json::array({"a", 0, 0, 0}), 5), ParseError);
}

TEST_CASE("state JSON round trip") {
  const auto psi = make_state(3, {1, -1, 0}, "saturating");
  const auto back = state_from_json(to_json(psi));
  CHECK(back.dim == 3);
  CHECK(back.label == "saturating");
  for (int x = 0; x < 3; ++x) CHECK(back.entries(x) == psi.entries(x));
}

TEST_CASE("basis set JSON round trip") {
  for (int d : {2, 3, 5, 7}) {
    const MubSet mubs = build_mub_set(d);
    const Json j = to_json(mubs);
    CHECK(j["dim"] == d);
    CHECK(mub_set_from_json(j) == mubs);
    Json tampered = j;
    auto& exps = tampered["bases"][1]["exponents"];
    exps[1][1] = (exps[1][1].get<int>() + 1) % mubs.order();
    CHECK_THROWS_AS(mub_set_from_json(tampered), ParseError);
  }
}

TEST_CASE("state file ingestion") {
  const auto psi = ingest_state(write_file("q.json", R"({"dim": 3, "entries": [[1, 0], [-1, 0], [0, 0]]})"));
  CHECK(support_profile(psi, build_mub_set(3)).sizes == std::vector<int>{2, 2, 2, 2});

  const auto ket = parse_state_text(R"({"dim": 5, "entries": [["1/1","0","0","0"], [0,0,0,0], [0,0,0,0], [0,0,0,0], [0,0,0,0]]})");
  CHECK(support_profile(ket, build_mub_set(5)).total == 26);
}

TEST_CASE("state file errors") {
  CHECK_THROWS_AS(parse_state_text(R"({"dim": 3, "entries": [[0,0],[0,0],[0,0]]})"), DegenerateState);
  CHECK_THROWS_AS(parse_state_text(R"({"dim": 3, "entries": []})"), ParseError);
  CHECK_THROWS_AS(parse_state_text(R"({"dim": 3, "entries": [[1,0],[0,0]]})"), ParseError);
  CHECK_THROWS_AS(ingest_state("/nonexistent/state.json"), ParseError);
  try {
    parse_state_text("{\n  \"dim\": 3,\n  \"entries\": [[1, 0],,\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("output formats and worker resolution") {
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(parse_format("table") == OutputFormat::table);
  CHECK_THROWS_AS(parse_format("xml"), ParseError);
  CHECK(resolve_workers(3) == 3);
  setenv("MUB_WORKERS", "2", 1);
  CHECK(resolve_workers(0) == 2);
  setenv("MUB_WORKERS", "many", 1);
  CHECK_THROWS_AS(resolve_workers(0), ParseError);
  unsetenv("MUB_WORKERS");
  CHECK(resolve_workers(0) >= 1);
  CHECK_THROWS_AS(validate_dimension(9), InvalidDimension);
}

TEST_CASE("profile CSV") {
  const auto csv = profile_csv(make_profile(3, {2, 2, 2, 2}));
  CHECK(csv.rfind("j,k,size_j,size_k,sum", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 6);
  CHECK(csv.find("0,1,2,2,4,0,4,1") != std::string::npos);
}

TEST_CASE("verify-all at small d") {
  for (int d : {2, 3, 5}) {
    const auto report = cmd_verify_all(d, 200, 1);
    CHECK(report.passed());
    for (const auto& c : report.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
  }
  CHECK_THROWS_AS(cmd_verify_all(17, 10, 1), InvalidDimension);
}

TEST_CASE("bound table up to 7") {
  Table1Options options;
  options.max_d = 7;
  const auto rows = cmd_table1(options);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].T == BigRational(9, 2));
  CHECK(rows[1].T == 8);
  CHECK(rows[2].T == 18);
  CHECK(rows[3].T == 32);
  CHECK(rows[0].achievable == "no");
  CHECK(rows[1].achievable == "yes");
  CHECK(rows[2].achievable == "no");
  CHECK(rows[3].achievable == "no");
  CHECK(rows[0].sharp == 5);
  CHECK(rows[1].sharp == 8);
  CHECK(rows[2].sharp == 22);
  CHECK(rows[3].sharp == 44);
  CHECK(to_json(rows).dump() == to_json(cmd_table1(options)).dump());
  CHECK(table1_csv(rows).find("9/2") != std::string::npos);

  options.max_d = 17;
  CHECK_THROWS_AS(cmd_table1(options), InvalidDimension);
}

TEST_CASE("command line exit codes") {
  CHECK(run_cli("gen 3").code == 0);
  CHECK(Json::parse(run_cli("gen 5").out) == to_json(build_mub_set(5)));
  CHECK(run_cli("gen 4").code == 3);
  CHECK(run_cli("gen").code == 3);
  CHECK(run_cli("no-such-command").code == 3);
  CHECK(run_cli("search-saturation 17").code == 3);

  const auto state = write_file("s.json", R"({"dim": 3, "entries": [[1, 0], [-1, 0], [0, 0]]})");
  const auto profile = run_cli("profile 3 --state " + state);
  CHECK(profile.code == 0);
  CHECK(Json::parse(profile.out)["total"] == 8);
  CHECK(run_cli("profile 5 --state " + state).code == 3);
  CHECK(run_cli("profile 3 --state " + write_file("bad.json", "{\"dim\": 3,\n oops")).code == 3);

  const auto bad_checkpoint = write_file("ckpt.json", "not json");
  CHECK(run_cli("search-saturation 5 --checkpoint " + bad_checkpoint).code == 4);
}

TEST_CASE("search reports are byte identical across worker counts") {
  const auto one = run_cli("search-saturation 5 --workers 1");
  const auto two = run_cli("search-saturation 5 --workers 2");
  CHECK(one.code == 0);
  CHECK(one.out == two.out);
  const auto j = Json::parse(one.out);
  CHECK(j["hits"].empty());
  CHECK_FALSE(j.contains("timings"));
}
