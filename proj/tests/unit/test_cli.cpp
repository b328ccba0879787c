#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "io.hpp"

using spinitf::io::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = spinitf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(const std::vector<std::string>& args) {
  const Run r = run(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return Json::parse(r.out);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

}  // namespace

TEST_CASE("itf on the 9-ring") {
  const Json j = run_json({"itf", "--ring", "9"});
  const auto v = j["distinct_values"].get<std::vector<double>>();
  REQUIRE(v.size() == 2);
  CHECK(v[0] == doctest::Approx(0.4094).epsilon(5e-5 / 0.4094));
  CHECK(v[1] == doctest::Approx(4.0 / 9.0));
  CHECK(j["pmax"].size() == 9);
}

TEST_CASE("spectrum reports descending values") {
  const Json j = run_json({"spectrum", "--ring", "5"});
  const auto v = j["values"].get<std::vector<double>>();
  CHECK(v.front() == doctest::Approx(2.0));
  CHECK(j["multiplicities"].get<std::vector<int>>() == std::vector<int>{1, 2, 2});
  const Json h = run_json({"spectrum", "--ring", "5", "--kind", "heisenberg"});
  CHECK(h["values"][0].get<double>() == doctest::Approx(3.0));
}

TEST_CASE("csv output") {
  const Run r = run({"--format", "csv", "itf", "--ring", "4"});
  REQUIRE(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
  const Run s = run({"--format", "csv", "simulate", "--ring", "4", "--from", "1", "--to", "3",
                     "--tmax", "1", "--dt", "0.5"});
  REQUIRE(s.code == 0);
  CHECK(s.out.rfind("t,p\n", 0) == 0);
}

TEST_CASE("attainability, dio and time round trip") {
  const Json att = run_json({"attainability", "--ring", "7", "--from", "1", "--to", "3"});
  CHECK(att["parity"] == "oo");
  CHECK(att["n_bar"] == 2);
  write_file("cli_att.json", att.dump());

  const Json dio = run_json({"dio", "--input", "cli_att.json", "--s", "3.1622776601683795e-9"});
  CHECK(dio["theta_hp"] == att["theta_hp"]);
  write_file("cli_dio.json", dio.dump());

  const Json sweep = run_json({"dio", "--input", "cli_att.json", "--sweep", "--s-min", "1.7782794100389228e-9",
                               "--s-max", "5.623413251903491e-9", "--s-count", "3"});
  bool found = false;
  for (const Json& f : sweep["family"]) found = found || f["q"] == 192028;
  CHECK(found);

  if (dio["solution"]["parity_ok"] == Json::array({true, true})) {
    const Json t = run_json({"time", "--input", "cli_dio.json", "--eps", "0.05"});
    CHECK(t["estimate"]["t_f"].get<double>() > 0.0);
    CHECK(t.contains("q_min"));
  }
  write_file("cli_fixed.json", [&] {
    Json j = dio;
    j["solution"] = {{"p", {170921, 307989}}, {"q", 192028}};
    return j.dump();
  }());
  const Json t = run_json({"time", "--input", "cli_fixed.json", "--eps", "0.05"});
  CHECK(t["estimate"]["t_f"].get<double>() == doctest::Approx(713080.4948).epsilon(1e-6));
  CHECK(t["error_bound_ok"] == true);
  std::remove("cli_att.json");
  std::remove("cli_dio.json");
  std::remove("cli_fixed.json");
}

TEST_CASE("dio with inline theta") {
  const Json j = run_json({"dio", "--theta", "3.2360679774997896964", "--parity", "e",
                           "--parity-fix", "--qmax", "300"});
  CHECK(j["solution"]["p"][0] == 754);
  CHECK(j["solution"]["q"] == 233);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"dio", "--ring", "7", "--from", "1", "--to", "3", "--ga",
                                      "--seed", "7", "--population", "16", "--gens", "3",
                                      "--s", "1e-9"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
  CHECK(run({"geometry", "--ring", "6"}).out == run({"geometry", "--ring", "6"}).out);
}

TEST_CASE("geometry and route") {
  const Json g = run_json({"geometry", "--ring", "6"});
  CHECK(g["antipodal_identification"]["failures_are_antipodal"] == true);
  CHECK(g["distances"][0][3].get<double>() == doctest::Approx(0.0));
  const Json r = run_json({"route", "--n", "9", "--from", "1", "--to", "8", "--zeta", "10"});
  CHECK(r["bias_nodes"][0]["node"] == 9);
  CHECK(r["mechanism"] == "odd_arc_midpoint");
}

TEST_CASE("network files") {
  write_file("cli_net.json", R"({"n": 4, "topology": "ring", "bias": [0, 0, 0.5, 0]})");
  const Json j = run_json({"itf", "--net", "cli_net.json", "--from", "1", "--to", "3"});
  CHECK(j["network"]["bias"][2] == 0.5);
  CHECK(j["pair"]["p_max"].get<double>() <= 1.0);
  write_file("cli_net.json", R"({"n": 3, "topology": "custom"})");
  CHECK(run({"itf", "--net", "cli_net.json"}).code == 1);
  write_file("cli_net.json", "{not json");
  CHECK(run({"itf", "--net", "cli_net.json"}).code == 1);
  std::remove("cli_net.json");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"itf"}).code == 2);
  CHECK(run({"itf", "--ring", "9", "--chain", "4"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"dio", "--ring", "7", "--from", "1", "--to", "3", "--ga"}).code == 2);
  CHECK(run({"itf", "--ring", "2"}).code == 1);
  CHECK(run({"itf", "--ring", "5", "--from", "1", "--to", "9"}).code == 1);
  CHECK(run({"attainability", "--ring", "3", "--from", "1", "--to", "2"}).code == 1);
  CHECK(run({"route", "--n", "3", "--from", "1", "--to", "2"}).code == 1);
}

TEST_CASE("config file overrides") {
  write_file("cli_cfg.txt", "output_format = csv\n");
  const Run r = run({"--config", "cli_cfg.txt", "itf", "--ring", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find('{') == std::string::npos);
  write_file("cli_cfg.txt", "bogus = 1\n");
  CHECK(run({"--config", "cli_cfg.txt", "itf", "--ring", "4"}).code == 1);
  std::remove("cli_cfg.txt");
}
