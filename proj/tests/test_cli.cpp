#include "rigidroots/cli.hpp"

#include <json.hpp>

#include <doctest.h>

#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "rigidroots");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = rigid::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Result r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("canonical chain of [59,23]") {
  const Result r = run({"canseq", "--m", "3", "--root", "59,23"});
  CHECK(r.code == 0);
  const auto j = run_json({"canseq", "--m", "3", "--root", "59,23"});
  REQUIRE(j.at("chain").size() == 4);
  CHECK(j.at("chain")[0].at("rho") == "13/23");
  CHECK(j.at("chain")[1].at("type") == "-");
  CHECK(j.at("chain")[3].at("seq") == nlohmann::json::array({2}));
  CHECK(j.at("root") == nlohmann::json::array({59, 23}));
}

TEST_CASE("reduce and words") {
  const Result r = run({"reduce", "--m", "3", "--word", "121"});
  CHECK(r.code == 0);
  CHECK(r.out == "212\n");
  CHECK(run({"reduce", "--m", "3", "--word", "11"}).out == "e\n");
  CHECK(run_json({"reduce", "--m", "3", "--word", "1211"}).at("normal_form") == "12");
  const auto w = run_json({"word", "--m", "3", "--root", "[5,3]"});
  CHECK(w.at("s") == "2321232321232");
  CHECK(w.at("crossing") == "2321232321232");
  CHECK(run_json({"standard", "--m", "3", "--root", "17,7"}).at("word") == "21321323123131");
  CHECK(run_json({"level", "--m", "3", "--root", "339,130"}).at("level") == 3);
  const auto roots = run_json({"roots", "--m", "3", "--bound", "8"});
  CHECK(roots.at("roots").size() == 7);
  CHECK(run_json({"roots", "--m", "3", "--root", "5,3"}).at("class") == "imaginary");
}

TEST_CASE("bases and completion") {
  const auto g = run_json({"gs-basis", "--m", "4"});
  CHECK(g.at("rules").size() == 6);
  CHECK(g.at("rules")[5] == nlohmann::json{{"lhs", "1213232"}, {"rhs", "2121323"}});
  const auto c = run_json({"complete", "--m", "4"});
  CHECK(c.at("equals_gs_basis") == true);
  CHECK(c.at("rounds") == 1);
  const Result text = run({"gs-basis", "--m", "3"});
  CHECK(text.out.find("121 -> 212") != std::string::npos);
}

TEST_CASE("verify") {
  const Result r = run({"verify", "--m", "3", "--suite", "injectivity", "--bound", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  const auto j = run_json({"verify", "--m", "4", "--bound", "40"});
  CHECK(j.at("ok") == true);
  CHECK(j.at("reports").size() == 4);
  for (const auto& rep : j.at("reports")) {
    CHECK(rep.contains("campaign"));
    CHECK(rep.at("failures").empty());
  }
  CHECK(run({"verify", "--m", "3", "--suite", "bogus"}).code == 2);
}

TEST_CASE("svg") {
  const auto path = (std::filesystem::temp_directory_path() / "rigidroots_cli.svg").string();
  const auto j = run_json({"svg", "--m", "3", "--root", "2,1", "--out", path});
  CHECK(j.at("crossing") == "232");
  CHECK(std::filesystem::exists(path));
  std::filesystem::remove(path);
  CHECK(run({"svg", "--m", "3", "--root", "2,1", "--out", "/nonexistent-dir/a.svg"}).code == 1);
}

TEST_CASE("json output matches the documented keys") {
  using Keys = std::set<std::string>;
  auto keys = [](const nlohmann::json& j) {
    Keys k;
    for (const auto& [key, value] : j.items()) k.insert(key);
    return k;
  };
  const std::vector<std::pair<std::vector<std::string>, Keys>> cases{
      {{"roots", "--m", "3", "--root", "5,3"}, {"m", "root", "class", "quadratic_form", "orbit_representative", "level"}},
      {{"roots", "--m", "3", "--root", "3,1"}, {"m", "root", "class", "quadratic_form", "real_index"}},
      {{"roots", "--m", "3", "--bound", "8"}, {"m", "bound", "roots"}},
      {{"canseq", "--m", "3", "--root", "5,3"}, {"m", "root", "chain"}},
      {{"level", "--m", "3", "--root", "5,3"}, {"m", "root", "level", "gammas"}},
      {{"word", "--m", "3", "--root", "5,3"}, {"m", "root", "s", "crossing", "s_axb", "normal_form"}},
      {{"word", "--m", "3", "--root", "3,5"}, {"m", "root", "s", "crossing", "normal_form"}},
      {{"standard", "--m", "3", "--root", "17,7"}, {"m", "root", "word", "form", "level", "N_L", "type"}},
      {{"standard", "--m", "3", "--root", "8,3"}, {"m", "root", "word", "form", "real_index"}},
      {{"reduce", "--m", "3", "--word", "1211"}, {"m", "word", "normal_form"}},
      {{"gs-basis", "--m", "3"}, {"m", "rules"}},
      {{"complete", "--m", "3"}, {"m", "rounds", "closed", "equals_gs_basis", "rules"}},
      {{"verify", "--m", "3", "--bound", "10", "--suite", "stdwords"}, {"ok", "reports"}},
  };
  for (const auto& [args, want] : cases) {
    const auto j = run_json(args);
    INFO(args[0]);
    CHECK(keys(j) == want);
    CHECK(nlohmann::json::parse(j.dump()) == j);
  }
  const auto rep = run_json({"verify", "--m", "3", "--bound", "10", "--suite", "stdwords"}).at("reports")[0];
  CHECK(keys(rep) == Keys{"campaign", "m", "bound", "ok", "counts", "failures"});
  for (const auto& row : run_json({"canseq", "--m", "3", "--root", "59,23"}).at("chain"))
    CHECK(keys(row) == Keys{"k", "seq", "N", "rho", "type"});
  CHECK(run_json({"roots", "--m", "3", "--root", "4000000000,1"}).at("quadratic_form") == "15999999988000000001");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"canseq", "--m", "1", "--root", "5,3"}).code == 2);
  CHECK(run({"canseq", "--m", "3", "--root", "5"}).code == 2);
  CHECK(run({"canseq", "--m", "3", "--root", "6,4"}).code == 2);
  CHECK(run({"reduce", "--m", "3", "--word", "124"}).code == 2);
  CHECK(run({"reduce", "--m", "3"}).code == 2);
  CHECK(run({"roots", "--m", "3", "--frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const Result bad = run({"level", "--m", "3", "--root", "3,1"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
}
