#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "qdouble/cochain.hpp"

using namespace qdouble;
using nlohmann::json;

namespace {

std::string data(const std::string& rel) { return std::string(QDOUBLE_DATA_DIR) + "/" + rel; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(cli::RunConfig cfg) {
  std::ostringstream out, err;
  const int code = cli::run(cfg, out, err);
  return {code, out.str(), err.str()};
}

cli::RunConfig config(const std::string& command, const std::string& group, const std::string& cocycle = "",
                      std::optional<std::string> subgroup = std::nullopt) {
  cli::RunConfig c;
  c.command = command;
  if (!group.empty()) c.group_path = data(group);
  if (!cocycle.empty()) c.cocycle_path = data(cocycle);
  c.subgroup = std::move(subgroup);
  return c;
}

json run_json(cli::RunConfig cfg) {
  cfg.format = "json";
  const Result r = run_cli(cfg);
  return json::parse(r.out);
}

Result run_argv(std::vector<std::string> args) {
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("the Z4 cocycle file is the cyclic cocycle") {
  std::ifstream in(data("cocycles/z4_q1.json"));
  const json j = json::parse(in);
  const Cochain w = cyclic_cocycle(4, 1);
  REQUIRE(j.at("modulus").get<int>() == w.modulus());
  std::vector<int> values(w.values().size(), 0);
  for (const auto& e : j.at("entries")) values[(e[0].get<int>() * 4 + e[1].get<int>()) * 4 + e[2].get<int>()] = e[3].get<int>();
  CHECK(values == w.values());

  const Result r = run_cli(config("check-cocycle", "groups/z4.json", "cocycles/z4_q1.json"));
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("closed: true") != std::string::npos);
}

TEST_CASE("a non-closed cochain is a mathematical failure with a witness") {
  const json j = run_json(config("check-cocycle", "", "cocycles/z2_not_closed.json"));
  CHECK(j.at("closed") == false);
  CHECK(j.at("witness") == json::array({1, 1, 1, 1}));
  CHECK(j.at("exit_code") == cli::kMathNo);
}

TEST_CASE("modularity verdicts") {
  const Result yes = run_cli(config("modularity", "groups/z2.json", "cocycles/z2_q1.json", "1"));
  CHECK(yes.code == cli::kOk);
  CHECK(yes.out.find("verdict: MODULAR") != std::string::npos);

  const Result no = run_cli(config("modularity", "groups/z2.json", "", "1"));
  CHECK(no.code == cli::kMathNo);
  CHECK(no.out.find("verdict: NOT MODULAR") != std::string::npos);

  const json j = run_json(config("modularity", "groups/z2.json", "cocycles/z2_q1.json", "1"));
  CHECK(j.at("modulus") == 4);
  CHECK(j.at("pairing") == json::parse("[[0,0],[0,2]]"));
  CHECK(j.at("double_braiding_trivial") == true);
}

TEST_CASE("admissibility outcomes") {
  const Result nc = run_cli(config("admissible", "groups/d4.json", "", "1,2,3"));
  CHECK(nc.code == cli::kInputError);
  CHECK(nc.out.find("NotCentral") != std::string::npos);
  CHECK(nc.err.find("NotCentral") != std::string::npos);

  cli::RunConfig ns;
  ns.command = "admissible";
  ns.cleft_path = data("cleft/z2_nonsplit.json");
  ns.subgroup = "1";
  const json nsj = run_json(ns);
  CHECK(nsj.at("admissible") == false);
  CHECK(nsj.at("reason") == "ExtensionNonSplit");
  CHECK(nsj.at("exit_code") == cli::kMathNo);

  const json t3 = run_json(config("admissible", "groups/z2xz2xz2.json", "cocycles/z2cubed_type3.json", "1"));
  CHECK(t3.at("reason") == "NotCCentral");
  CHECK(t3.at("witness") == 1);

  const json ok = run_json(config("admissible", "groups/z2.json", "cocycles/z2_q1.json", "1"));
  CHECK(ok.at("admissible") == true);
  CHECK(ok.at("certificate_check").at("ok") == true);
  CHECK(ok.at("certificate").at("nu").size() == 2);
}

TEST_CASE("quotients") {
  const json q = run_json(config("quotient", "groups/q8.json", "cocycles/q8_inflated.json", "1"));
  CHECK(q.at("dim") == 32);
  CHECK(q.at("verification").at("passed") == true);
  CHECK(q.at("morphism").at("ok") == true);
  CHECK(q.at("exit_code") == cli::kOk);

  cli::RunConfig twisted = config("quotient", "groups/z2.json", "cocycles/z2_q1.json", "1");
  twisted.twist = 1;
  CHECK(run_cli(twisted).code == cli::kOk);
  twisted.twist = 7;
  CHECK(run_cli(twisted).code == cli::kInputError);

  cli::RunConfig nu = config("quotient", "groups/z2.json", "cocycles/z2_q1.json", "1");
  nu.nu = 1;
  CHECK(run_cli(nu).code == cli::kOk);
  nu.nu = 2;
  CHECK(run_cli(nu).code == cli::kInputError);
}

TEST_CASE("every command runs on D^omega(Z2)") {
  for (const auto& command : cli::commands()) {
    const Result r = run_cli(config(command, "groups/z2.json", "cocycles/z2_q1.json", "1"));
    CAPTURE(command);
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("exit_code: 0") != std::string::npos);
  }
}

TEST_CASE("machine-readable output is deterministic") {
  for (const auto& command : cli::commands()) {
    cli::RunConfig c = config(command, "groups/q8.json", "", "1");
    c.format = "json";
    const Result a = run_cli(c), b = run_cli(c);
    CAPTURE(command);
    CHECK(a.out == b.out);
    CHECK(json::accept(a.out));
  }
}

TEST_CASE("input errors") {
  CHECK(run_cli(config("double", "groups/missing.json")).code == cli::kInputError);

  const auto bad = std::filesystem::temp_directory_path() / "qdouble_bad_group.json";
  {
    std::ofstream f(bad);
    f << "{\"order\": 2, \"table\": [[0, 1], [1, 1]]}";
  }
  cli::RunConfig c;
  c.command = "double";
  c.group_path = bad.string();
  CHECK(run_cli(c).code == cli::kInputError);
  {
    std::ofstream f(bad);
    f << "{not json";
  }
  CHECK(run_cli(c).code == cli::kInputError);
  std::filesystem::remove(bad);

  CHECK(run_cli(config("admissible", "groups/q8.json", "", "2")).code == cli::kInputError);  // not a subgroup
  CHECK(run_cli(config("admissible", "groups/q8.json", "", "x")).code == cli::kInputError);

  cli::RunConfig theta;
  theta.command = "group-likes";
  theta.cleft_path = data("cleft/z2_bad_theta.json");
  const Result r = run_cli(theta);
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find("Condition4Violation") != std::string::npos);

  CHECK(run_argv({"qdouble", "no-such-command"}).code == cli::kInputError);
  CHECK(run_argv({"qdouble", "double", "--format", "yaml"}).code == cli::kInputError);
  CHECK(run_argv({"qdouble", "double", "--group", data("groups/z2.json")}).code == cli::kOk);
}

TEST_CASE("text and json carry the same fields") {
  cli::RunConfig c = config("double", "groups/z2.json", "cocycles/z2_q1.json");
  const Result text = run_cli(c);
  const json j = run_json(c);
  CHECK(j.at("dim") == 4);
  CHECK(text.out.find("dim: 4") != std::string::npos);
  CHECK(j.at("h2") == 1);
  CHECK(text.out.find("h2: 1") != std::string::npos);
  CHECK(j.at("c_center") == json::array({0, 1}));
}
