#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

// Runs the CLI with the given arguments, capturing stdout (and stderr when
// merge_stderr is set).
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(IMBACOST_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) {
    output.append(buf, n);
  }
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), output};
}

std::string data_path(const std::string& name) {
  return std::string(IMBACOST_TEST_DATA_DIR) + "/" + name;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(current);
  return fields;
}

// value of a metrics record, keyed by (index, measure)
double metrics_value(const std::string& csv, const std::string& index,
                     const std::string& measure) {
  for (const std::string& line : split_lines(csv)) {
    const auto fields = split_fields(line);
    if (fields.size() >= 4 && fields[0] == index && fields[1] == measure) {
      return std::stod(fields[3]);
    }
  }
  REQUIRE_MESSAGE(false, "record not found");
  return 0.0;
}

} // namespace

TEST_CASE("help exits zero for every subcommand") {
  CHECK(run_cli("--help").exit_code == 0);
  for (const char* sub :
       {"metrics", "costs", "scenario1", "scenario2", "figures"}) {
    const RunResult r = run_cli(std::string(sub) + " --help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("--") != std::string::npos);
  }
  // Every documented flag shows up in its help text.
  CHECK(run_cli("metrics --help").output.find("--beta") != std::string::npos);
  CHECK(run_cli("costs --help").output.find("--p2-grid") != std::string::npos);
  CHECK(run_cli("scenario2 --help").output.find("--p2-list") !=
        std::string::npos);
  CHECK(run_cli("figures --help").output.find("--which") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").exit_code == 2);                      // missing subcommand
  CHECK(run_cli("scenario1 --bogus").exit_code == 2);     // unknown flag
  CHECK(run_cli("metrics").exit_code == 2);               // missing --input
  CHECK(run_cli("metrics --input /nonexistent.csv").exit_code == 2);
  CHECK(run_cli("costs --measure nope --p2 0.1").exit_code == 2);
  CHECK(run_cli("costs --measure ber --p2 0.1 --p2-grid 5").exit_code == 2);
  CHECK(run_cli("figures --which 7").exit_code == 2);
  CHECK(run_cli("scenario2 --p2-list 1.5").exit_code == 2);
  CHECK(run_cli("scenario2 --measures bogus").exit_code == 2);
}

TEST_CASE("metrics evaluates every measure per record") {
  const RunResult r =
      run_cli("metrics --input " + data_path("sample.csv") + " --beta 2");
  REQUIRE(r.exit_code == 0);
  const auto lines = split_lines(r.output);
  CHECK(lines[0] ==
        "index,measure,beta,value,orientation,degenerate,cost_type,exactness,"
        "verdict");
  // 2 records x (12 measures + 1 beta)
  CHECK(lines.size() == 1 + 2 * 13);

  CHECK(metrics_value(r.output, "0", "ber") == doctest::Approx(0.306).epsilon(2e-3));
  CHECK(metrics_value(r.output, "0", "f1") == doctest::Approx(0.4).epsilon(1e-9));
  CHECK(metrics_value(r.output, "1", "mcc") == doctest::Approx(0.6).epsilon(1e-9));
  CHECK(metrics_value(r.output, "1", "kappa") == doctest::Approx(0.6).epsilon(1e-9));

  // Annotations ride along with each record.
  CHECK(r.output.find("ber,,") != std::string::npos);
  CHECK(r.output.find(",III,exact,proper") != std::string::npos);
  CHECK(r.output.find(",I,exact,improper") != std::string::npos);
  CHECK(r.output.find("fbeta,2,") != std::string::npos);
}

TEST_CASE("metrics reads json input") {
  const RunResult r = run_cli("metrics --input " + data_path("sample.json") +
                              " --format json");
  REQUIRE(r.exit_code == 0);
  CHECK(metrics_value(r.output, "0", "at") == doctest::Approx(0.85).epsilon(1e-9));
}

TEST_CASE("metrics rejects an empty input with a diagnostic") {
  const RunResult r =
      run_cli("metrics --input " + data_path("empty.csv"), true);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("no records") != std::string::npos);
}

TEST_CASE("metrics reports the offending line on parse failures") {
  const RunResult r =
      run_cli("metrics --input " + data_path("broken.csv"), true);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("line 3") != std::string::npos);
}

TEST_CASE("costs prints the lambda pair") {
  const RunResult r = run_cli("costs --measure ber --p2 0.01");
  REQUIRE(r.exit_code == 0);
  const auto lines = split_lines(r.output);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "measure,p2,lambda12,lambda21");
  const auto fields = split_fields(lines[1]);
  CHECK(fields[0] == "ber");
  CHECK(std::stod(fields[2]) == doctest::Approx(1.010).epsilon(1e-3));
  CHECK(std::stod(fields[3]) == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("costs sweeps a log-spaced grid") {
  const RunResult r = run_cli("costs --measure f1 --p2-grid 5");
  REQUIRE(r.exit_code == 0);
  const auto lines = split_lines(r.output);
  REQUIRE(lines.size() == 6);
  CHECK(std::stod(split_fields(lines[1])[1]) == doctest::Approx(1e-3).epsilon(1e-9));
  CHECK(std::stod(split_fields(lines[5])[1]) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("scenario1 emits the fixed-population table") {
  const RunResult r = run_cli("scenario1");
  REQUIRE(r.exit_code == 0);
  const auto lines = split_lines(r.output);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "measure,0.5,0.1,0.05,0.01,0.005,0.001");
  CHECK(split_fields(lines[1])[0] == "ber");

  // Identical invocations produce byte-identical output.
  CHECK(run_cli("scenario1").output == r.output);

  const RunResult json = run_cli("scenario1 --format json");
  REQUIRE(json.exit_code == 0);
  const auto doc = nlohmann::json::parse(json.output);
  CHECK(doc["schema"] == "table2");
  CHECK(doc["rows"].size() == 6);
}

TEST_CASE("scenario1 writes to a file") {
  const std::string path = "/tmp/imbacost_test_scenario1.csv";
  std::remove(path.c_str());
  const RunResult r = run_cli("scenario1 --out " + path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.empty());
  FILE* f = fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  fclose(f);
  std::remove(path.c_str());
}

TEST_CASE("scenario2 supports overrides") {
  const RunResult r =
      run_cli("scenario2 --p2-list 0.5,0.2 --measures ber,at");
  REQUIRE(r.exit_code == 0);
  const auto lines = split_lines(r.output);
  CHECK(lines[0] == "measure,p2,value,x_b,e1_over_p1,e2_over_p2");
  CHECK(split_fields(lines[1])[0] == "ber");
  // table3 block (1 + 4 rows), a separator, then the fig5 block (1 + 4 rows).
  REQUIRE(lines.size() == 11);
  CHECK(lines[5].empty());
  CHECK(lines[6] == "series,p1_over_p2,e2_over_p2");

  const RunResult json =
      run_cli("scenario2 --p2-list 0.5 --measures ber --format json");
  REQUIRE(json.exit_code == 0);
  const auto doc = nlohmann::json::parse(json.output);
  CHECK(doc["schema"] == "scenario2");
  CHECK(doc["table3"]["rows"].size() == 1);
  CHECK(doc["fig5"]["rows"].size() == 1);
}

TEST_CASE("figures emit the requested series") {
  const RunResult fig4 = run_cli("figures --which 4");
  REQUIRE(fig4.exit_code == 0);
  CHECK(split_lines(fig4.output)[0] == "series,p2,lambda");
  CHECK(fig4.output.find("f1_lambda,0.05,40") != std::string::npos);

  const RunResult fig3 = run_cli("figures --which 3 --format json");
  REQUIRE(fig3.exit_code == 0);
  const auto doc = nlohmann::json::parse(fig3.output);
  CHECK(doc["schema"] == "fig3");
  CHECK(doc["rows"].size() == 4 * 99);

  const RunResult fig5 = run_cli("figures --which 5");
  REQUIRE(fig5.exit_code == 0);
  CHECK(fig5.output.find("ber,1,0.158") != std::string::npos);
}
