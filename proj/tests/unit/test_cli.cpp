#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

using nlohmann::json;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ofl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(OFL_TEST_DATA_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ofl_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("solve runs the binary welfare maximizer on the tightness instance") {
  const Run r = run({"solve", "--mechanism", "mech2", "--instance", data("tightness.json")});
  REQUIRE(r.code == ofl::cli::kSuccess);
  const json doc = json::parse(r.out);
  CHECK(doc["solution"] == json::array({"1", "0"}));
  CHECK(doc["social_welfare"] == "2");
}

TEST_CASE("solve with the five-thirds mechanism includes the beta report") {
  const Run r = run({"solve", "--mechanism", "mech4", "--instance", data("single_pair.json")});
  REQUIRE(r.code == ofl::cli::kSuccess);
  const json doc = json::parse(r.out);
  CHECK(doc["solution"] == json::array({"1/2"}));
  CHECK(doc["beta_report"]["chosen"] == 0);
  CHECK(doc["beta_report"]["zero"]["beta"] == "4/3");
}

TEST_CASE("audit finds the SGSP violation of approval voting") {
  const Run r = run({"audit", "--property", "sgsp", "--mechanism", "mech1", "--instance", data("five_voters.json")});
  CHECK(r.code == ofl::cli::kWitnessFound);
  const json doc = json::parse(r.out);
  CHECK(doc["witness"]["winner_before"] == 2);
  CHECK(doc["witness"]["winner_after"] == 1);
  const Run wgsp = run({"audit", "--property", "wgsp", "--mechanism", "mech1", "--instance", data("five_voters.json")});
  CHECK(wgsp.code == ofl::cli::kSuccess);
}

TEST_CASE("audit over sampled instances") {
  const Run r = run({"audit", "--property", "sp", "--mechanism", "mech7", "--trials", "30", "--seed", "9"});
  CHECK(r.code == ofl::cli::kSuccess);
  CHECK(json::parse(r.out)["violations"] == 0);
  const Run ratio = run({"audit", "--ratio", "--mechanism", "mech3", "--instance", data("tightness.json")});
  CHECK(ratio.code == ofl::cli::kSuccess);
  CHECK(json::parse(ratio.out)["ratio"] == "2");
}

TEST_CASE("lowerbound egalitarian reports both optima") {
  const Run r = run({"lowerbound", "egalitarian", "--q", "4"});
  REQUIRE(r.code == ofl::cli::kSuccess);
  const json doc = json::parse(r.out);
  CHECK(doc["opt"] == "1/4");
  CHECK(doc["opt_lies"] == "1/8");
  CHECK_FALSE(doc["mech8_wgsp_witness"].is_null());
}

TEST_CASE("lowerbound utilitarian reports the forced ratios") {
  const Run r = run({"lowerbound", "utilitarian", "--n", "4"});
  REQUIRE(r.code == ofl::cli::kSuccess);
  const json doc = json::parse(r.out);
  CHECK(doc["opt_u_lies"] == "9");
  CHECK(doc["opt_v_lies"] == "9");
  CHECK(doc["bound_holds"] == true);
}

TEST_CASE("vote and beta subcommands") {
  const Run v = run({"vote", "--instance", data("five_voters.json")});
  REQUIRE(v.code == ofl::cli::kSuccess);
  CHECK(json::parse(v.out)["winner"] == 2);
  const Run b = run({"beta", "--instance", data("two_symmetric.json")});
  REQUIRE(b.code == ofl::cli::kSuccess);
  CHECK(json::parse(b.out)["report"]["zero"]["beta"] == "4/3");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == ofl::cli::kUsage);
  CHECK(run({"solve", "--instance", data("tightness.json")}).code == ofl::cli::kUsage);
  const Run unknown = run({"solve", "--mechanism", "mech99", "--instance", data("tightness.json")});
  CHECK(unknown.code == ofl::cli::kUsage);
  CHECK(unknown.err.find("mech5 (cycle)") != std::string::npos);
  const Run mismatch = run({"solve", "--mechanism", "mech5", "--instance", data("tightness.json")});
  CHECK(mismatch.code == ofl::cli::kUsage);
  CHECK(mismatch.err.find("valid pairs") != std::string::npos);
  CHECK(run({"solve", "--mechanism", "mech2", "--instance", data("broken.json")}).code == ofl::cli::kParse);
  CHECK(run({"solve", "--mechanism", "mech2", "--instance", data("missing.json")}).code == ofl::cli::kParse);
  CHECK(run({"audit", "--property", "sp", "--mechanism", "mech7", "--instance", data("seven_agents.json")}).code ==
        ofl::cli::kResourceCap);
  CHECK(run({"--help"}).code == ofl::cli::kSuccess);
}

TEST_CASE("identical inputs and seed give byte-identical files") {
  const auto a = scratch("bench_a.csv"), b = scratch("bench_b.csv");
  for (const auto& p : {a, b}) {
    const Run r = run({"bench", "--mechanism", "mech3", "--mechanism", "mech9", "--trials", "20", "--seed", "4", "--out",
                       p.string()});
    REQUIRE(r.code == ofl::cli::kSuccess);
  }
  const std::string text = slurp(a);
  CHECK(text == slurp(b));
  CHECK(text.rfind("instance-id,mechanism,objective,mech-value,oracle-value,ratio\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 41);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}
