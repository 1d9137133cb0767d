/**
 * This code is part of cscc.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Exercises the installed binary's exit-code contract and output formats.
// Usage: test_cli <path-to-cscc>

#include <array>
#include <cstdio>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

int g_failures = 0;
std::string g_binary;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string &args) {
  std::string cmd = args + " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << cmd << "\n";
    std::exit(1);
  }
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

void expect(bool ok, const std::string &what) {
  if (ok) {
    std::cout << "ok: " << what << "\n";
  } else {
    std::cout << "FAILED: " << what << "\n";
    ++g_failures;
  }
}

}  // namespace

int main(int argc, char **argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <cscc binary>\n";
    return 1;
  }
  g_binary = argv[1];

  {
    RunResult r = run(g_binary + " build --variant truncated --extent 2,2,2 --format json");
    expect(r.exit_code == 0, "build truncated exits 0");
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    expect(!j.is_discarded() && !j["truncation_region"].empty(),
           "truncated build emits a nonempty truncation_region");
  }
  {
    RunResult r = run(g_binary + " build --variant cube --extent 0,1,1");
    expect(r.exit_code == 2, "zero extent exits 2");
  }
  {
    RunResult r = run(g_binary + " build --variant cube --extent 2,2,2 --format json | " +
                      g_binary + " validate");
    expect(r.exit_code == 0, "build | validate exits 0");
    expect(r.out.find("all checks passed") != std::string::npos, "validate reports success");
  }
  {
    RunResult r = run(g_binary + " verify --fixture truncated_cube_min --format json");
    expect(r.exit_code == 0, "verify truncated_cube_min exits 0");
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    expect(!j.is_discarded() && j["pass"] == true && j["schema"] == "csreport/1",
           "verify emits a passing csreport/1 document");
    expect(j["classification_text"].get<std::string>().find("CS") != std::string::npos,
           "classification names CS");
  }
  {
    RunResult r = run(g_binary + " verify --fixture tetrahedral15");
    expect(r.exit_code == 0, "verify tetrahedral15 exits 0");
    expect(r.out.find("T(") != std::string::npos || r.out.find("T^") != std::string::npos,
           "tetrahedral15 classifies as a T power");
  }
  {
    RunResult r = run(g_binary + " verify --fixture cube");
    expect(r.exit_code == 0, "verify cube exits 0");
  }
  {
    RunResult r = run(g_binary + " verify --fixture nonsense");
    expect(r.exit_code == 2, "unknown fixture exits 2");
  }
  {
    RunResult a = run(g_binary + " oracle-crosscheck --seed 1 --trials 20 --format json");
    RunResult b = run(g_binary + " oracle-crosscheck --seed 1 --trials 20 --format json");
    expect(a.exit_code == 0, "oracle-crosscheck exits 0");
    expect(a.out == b.out, "fixed seed reproduces identical bytes");
    auto j = nlohmann::json::parse(a.out, nullptr, false);
    expect(!j.is_discarded() && j["agreements"] == 20, "20/20 agreements");
  }
  {
    RunResult r = run(g_binary + " oracle-crosscheck --trials 0");
    expect(r.exit_code == 2, "zero trials exits 2");
  }
  {
    RunResult r = run(g_binary + " build --variant truncated --extent 2,2,2 --format json | " +
                      g_binary + " logicals --format json");
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    expect(r.exit_code == 0 && !j.is_discarded() && j["k"] == 2,
           "logicals on the truncated complex reports k=2");
  }
  {
    RunResult r = run(g_binary + " commutators --fixture truncated_cube_min --format json");
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    expect(r.exit_code == 0 && !j.is_discarded() && j["phi_exp"] == 0,
           "commutators reports phi_exp=0");
  }

  if (g_failures) {
    std::cout << g_failures << " CLI check(s) failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
