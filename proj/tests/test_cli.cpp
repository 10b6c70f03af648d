#include <doctest.h>

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "bgg/errors.hpp"
#include "bgg/jobspec.hpp"

using namespace bgg;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& tokens) {
  std::ostringstream out, err;
  Run r;
  try {
    JobSpec job = parse_jobspec(tokens);
    r.code = execute_job(job, out, err);
  } catch (const UsageError& e) {
    err << e.what();
    r.code = 2;
  }
  r.out = out.str();
  r.err = err.str();
  return r;
}

// run the installed binary, capturing stdout
std::string run_binary(const std::string& args) {
  std::string cmd = std::string(BGG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  pclose(p);
  return out;
}

}  // namespace

TEST_CASE("job parsing") {
  JobSpec job = parse_jobspec(
      {"bgg", "A5", "x{2}", "--lambda", "1,0,0,0,1", "--realform", "split",
       "--format", "dot"});
  CHECK(job.command == JobSpec::Command::Bgg);
  CHECK(job.series == "A5");
  CHECK(job.crossing == "x{2}");
  CHECK(job.lambda == std::vector<long>{1, 0, 0, 0, 1});
  CHECK(job.realform == "split");
  CHECK(job.format == "dot");
  CHECK(spec_of(job).rank == 5);
  CHECK(crossing_of(job).nodes == std::vector<int>{2});

  JobSpec sub = parse_jobspec({"subcomplexes", "C4", "x{2}", "--lambda", "2,0,0,0",
                               "--e0", "preset:torsion-free"});
  CHECK(sub.command == JobSpec::Command::Subcomplexes);
  CHECK(sub.e0 == "preset:torsion-free");
  CHECK(sub.seed == 12345);  // documented default

  CHECK_THROWS_AS(parse_jobspec({"bgg", "A5", "x{2}"}), UsageError);
  CHECK_THROWS_AS(parse_jobspec({"frobnicate"}), UsageError);
}

TEST_CASE("exit codes") {
  CHECK(run({"hasse", "A5", "x{2}"}).code == 0);
  CHECK(run({"hasse", "A5", "x{9}"}).code == 2);       // node out of range
  CHECK(run({"hasse", "B5", "x{2}"}).code == 2);       // unknown series
  CHECK(run({"bgg", "A5", "x{2}", "--lambda", "1,0,0,0,-1"}).code == 2);
  CHECK(run({"bgg", "A5", "x{2}", "--lambda", "1,0,0,0,1", "--realform", "weird"}).code == 2);
  CHECK(run({"oracle", "A3", "x{2}", "--rep", "nonsense"}).code == 2);
}

TEST_CASE("dot output shape") {
  Run r = run({"bgg", "A5", "x{2}", "--lambda", "1,0,0,0,1", "--format", "dot"});
  REQUIRE(r.code == 0);
  size_t nodes = 0, edges = 0;
  std::istringstream is(r.out);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find("->") != std::string::npos)
      ++edges;
    else if (line.find("[label=") != std::string::npos)
      ++nodes;
  }
  CHECK(nodes == 15);
  CHECK(edges == 20);
  CHECK(r.out.find("color=red") == std::string::npos);  // no chains requested

  Run hot = run({"subcomplexes", "A5", "x{2}", "--lambda", "1,0,0,0,1", "--format",
                 "dot"});
  REQUIRE(hot.code == 0);
  CHECK(hot.out.find("color=red") != std::string::npos);
}

TEST_CASE("json outputs parse and carry the schema tag") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"hasse", "C4", "x{2}", "--format", "json"},
           {"bgg", "A4", "x{1,4}", "--lambda", "1,0,0,1", "--realform", "cr",
            "--format", "json"},
           {"subcomplexes", "A5", "x{2}", "--lambda", "0,1,0,1,0", "--format", "json"},
           {"oracle", "A3", "x{2}", "--rep", "standard", "--format", "json"},
           {"symbol-check", "--mode", "tower", "-n", "2", "-k", "1", "-l", "1",
            "--format", "json"},
       }) {
    Run r = run(args);
    REQUIRE(r.code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed.at("schema") == "bgg-explorer/1");
  }
}

TEST_CASE("parallel verdicts agree with the serial path") {
  Run serial = run({"subcomplexes", "C4", "x{2}", "--lambda", "2,0,0,0", "--format",
                    "json"});
  Run parallel = run({"subcomplexes", "C4", "x{2}", "--lambda", "2,0,0,0", "--jobs",
                      "4", "--format", "json"});
  REQUIRE(serial.code == 0);
  REQUIRE(parallel.code == 0);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("repeated binary runs are byte-identical") {
  std::string a = run_binary("subcomplexes A5 x{2} --lambda 1,0,0,0,1 --format json");
  std::string b = run_binary("subcomplexes A5 x{2} --lambda 1,0,0,0,1 --format json");
  REQUIRE(!a.empty());
  CHECK(a == b);
  std::string c = run_binary("bgg C4 x{2} --lambda 2,0,0,0 --format dot");
  std::string d = run_binary("bgg C4 x{2} --lambda 2,0,0,0 --format dot");
  REQUIRE(!c.empty());
  CHECK(c == d);
}

TEST_CASE("symbol check subcommands") {
  CHECK(run({"symbol-check", "--mode", "plain", "-n", "3", "-k", "1"}).code == 0);
  CHECK(run({"symbol-check", "--mode", "dual", "-n", "2", "-k", "1", "-l", "1"}).code == 0);
  CHECK(run({"symbol-check", "--mode", "quaternion", "-n", "2"}).code == 0);
  CHECK(run({"symbol-check", "--mode", "bogus"}).code == 2);
  Run bad_x = run({"symbol-check", "--mode", "plain", "-n", "3", "--x", "1,0;0,1"});
  CHECK(bad_x.code == 2);  // coordinate lists must have length n
}

TEST_CASE("job specs round-trip through their token form") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"hasse", "C5", "x{2}", "--cap", "500"},
           {"bgg", "A5", "x{2}", "--lambda", "1,0,2,0,1", "--realform",
            "quaternionic", "--format", "json"},
           {"subcomplexes", "A4", "x{1,4}", "--lambda", "1,0,0,1", "--realform",
            "cr", "--jobs", "2"},
           {"oracle", "C3", "x{2}", "--rep", "standard", "--degree", "2"},
           {"symbol-check", "--mode", "tower", "-n", "3", "-k", "1", "-l", "2",
            "--x", "1,0,0;0,1,0"},
           {"accept", "--seed", "99"},
       }) {
    JobSpec a = parse_jobspec(args);
    JobSpec b = parse_jobspec(to_tokens(a));
    CHECK(to_tokens(a) == to_tokens(b));
  }
}

TEST_CASE("parallel symbol stages agree with the serial path") {
  Run serial = run({"symbol-check", "--mode", "tower", "-n", "3", "-k", "2", "-l",
                    "2", "--format", "json"});
  Run parallel = run({"symbol-check", "--mode", "tower", "-n", "3", "-k", "2", "-l",
                      "2", "--jobs", "3", "--format", "json"});
  REQUIRE(serial.code == 0);
  CHECK(serial.out == parallel.out);
}
