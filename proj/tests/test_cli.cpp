#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "phin/json_io.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& arguments) {
  const std::string command = std::string(PHIN_CLI_PATH) + " " + arguments + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t read = 0;
  while ((read = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, read);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("structure constant lookup") {
  const RunResult result = run("pi --degree 1 --mode 2");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "6\n");
  CHECK(run("pi --degree 2 --mode -3").output == "-120\n");
  CHECK(run("pi --degree 1 --mode 2 --prime").output == "3\n");
}

TEST_CASE("exit codes follow the contract") {
  CHECK(run("pi --degree 1 --mode 2").exit_code == 0);       // success
  CHECK(run("no-such-command").exit_code == 2);              // usage
  CHECK(run("pi --degree 1").exit_code == 2);                // missing option
  CHECK(run("pi --degree 1 --mode 0 --prime").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
  CHECK(run("gram --degree -3 --level 2").exit_code == 2);
  CHECK(run("nuclearity --beta0 0").exit_code == 2);
}

TEST_CASE("gram and nulls table output") {
  const RunResult gram = run("gram --degree 1 --level 2");
  CHECK(gram.exit_code == 0);
  CHECK(gram.output == "basis: {2} {1,1}\n[ 6 0 ]\n[ 0 0 ]\n");

  const RunResult nulls = run("nulls --degree 1 --level 2");
  CHECK(nulls.exit_code == 0);
  CHECK(nulls.output.find("rank: 1") != std::string::npos);
  CHECK(nulls.output.find("1 * {1,1}") != std::string::npos);
}

TEST_CASE("json envelopes carry version, command, and config") {
  const RunResult result = run("gram --degree 1 --level 2 --format json");
  REQUIRE(result.exit_code == 0);
  const phin::Json doc = phin::Json::parse(result.output);
  CHECK(doc.at("version").is_string());
  CHECK(doc.at("command") == "gram");
  CHECK(doc.at("config").at("degree") == 1);
  CHECK(doc.at("config").at("q") == "0");
  CHECK(doc.at("report").at("entries")[0][0] == "6");
}

TEST_CASE("reruns are byte-identical") {
  const std::string commands[] = {
      "gram --degree 2 --level 5 --format json",
      "character --degree 1 --max-level 10 --format csv",
      "nuclearity --beta0 1.7 --points 6 --format csv",
      "certify --degree 1 --format json",
      "bounds --degree 1 --smeared 3 --format json",
  };
  for (const auto& command : commands) {
    CAPTURE(command);
    const RunResult first = run(command);
    const RunResult second = run(command);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(!first.output.empty());
  }
}

TEST_CASE("character output formats") {
  CHECK(run("character --degree 1 --max-level 6").output == "1 0 1 1 2 2 4\n");
  const RunResult csv = run("character --degree 1 --max-level 3 --format csv");
  CHECK(csv.output == "N,d_N\n0,1\n1,0\n2,1\n3,1\n");
}

TEST_CASE("kernel check reports every degree") {
  const RunResult result = run("kernel-check --max-degree 3");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("3 ok ok") != std::string::npos);
}

TEST_CASE("bounds grid passes and flags failures through the exit code") {
  const RunResult result = run("bounds --degree 1 --mode 2 --max-level 3");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("FAIL") == std::string::npos);
}

TEST_CASE("certificate round-trip through verify") {
  const std::string path = "cli_cert_roundtrip.json";
  const RunResult emitted = run("certify --degree 1 --format json");
  CHECK(emitted.exit_code == 0);
  {
    std::ofstream seed(path);
    seed << emitted.output;
  }

  const RunResult ok = run("verify --input " + path);
  CHECK(ok.exit_code == 0);
  CHECK(ok.output == "ok\n");

  // Tamper with one exact number: verification must fail with exit 1.
  std::ifstream in(path);
  phin::Json doc = phin::Json::parse(in);
  in.close();
  doc["report"]["checks"][0]["required"]["constant"] = "47";
  const std::string tampered_path = "cli_cert_tampered.json";
  std::ofstream out(tampered_path);
  out << doc.dump(2);
  out.close();

  const RunResult bad = run("verify --input " + tampered_path);
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("FAIL") != std::string::npos);

  const RunResult missing = run("verify --input does_not_exist.json");
  CHECK(missing.exit_code == 2);

  std::ofstream garbage("cli_cert_garbage.json");
  garbage << "{ not json";
  garbage.close();
  CHECK(run("verify --input cli_cert_garbage.json").exit_code == 2);

  std::remove(path.c_str());
  std::remove(tampered_path.c_str());
  std::remove("cli_cert_garbage.json");
}

TEST_CASE("verify accepts a bare certificate without the envelope") {
  const RunResult emitted = run("certify --degree 3 --format json");
  REQUIRE(emitted.exit_code == 0);
  const phin::Json doc = phin::Json::parse(emitted.output);
  std::ofstream out("cli_cert_bare.json");
  out << doc.at("report").dump(2);
  out.close();
  CHECK(run("verify --input cli_cert_bare.json").exit_code == 0);
  std::remove("cli_cert_bare.json");
}
