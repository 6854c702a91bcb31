// End-to-end exercises of the command-line tool through a shell: JSON schema
// and field order, frozen example values, format variants, round-trip
// stability, determinism, and exit codes.  argv[1] is the tool's path.
#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cout << "FAILED: " << what << "\n";
  }
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  return r;
}

std::vector<std::string> top_keys(const nlohmann::ordered_json& j) {
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  return keys;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-cli>\n";
    return 2;
  }
  std::string cli = argv[1];
  using nlohmann::ordered_json;

  {
    RunResult r = run(cli + " series G10 --n 5 --a 5 --order 3 --format json");
    check(r.code == 0, "series G10 exit code");
    ordered_json j = ordered_json::parse(r.out, nullptr, false);
    check(!j.is_discarded(), "series G10 output parses as JSON");
    if (!j.is_discarded()) {
      check(j["model"]["n"] == 5, "model.n field");
      check(j["model"]["a"] == ordered_json::array({5}), "model.a field");
      check(j["order"] == 3, "order field");
      check(j["seed"] == 0, "seed field");
      check(j["series"]["name"] == "G10", "series.name field");
      check(j["series"]["coeffs"].size() == 4, "series.coeffs length");
      check(j["series"]["coeffs"][0] == "0", "G10 q^0 value");
      check(j["series"]["coeffs"][1] == "-4375/12", "G10 q^1 value");
      check(top_keys(j) ==
                std::vector<std::string>{"model", "order", "seed", "series"},
            "series top-level field order");
      check(j.dump(2) + "\n" == r.out, "series JSON round trip");
    }
  }

  {
    RunResult r = run(cli + " series Idot:0 --n 5 --a 5 --order 2 --format csv");
    check(r.code == 0, "Idot:0 csv exit code");
    check(r.out == "index,numerator,denominator\n0,1,1\n1,120,1\n2,113400,1\n",
          "Idot:0 csv body");
  }

  {
    RunResult r = run(cli + " series L --n 2 --a 2 --order 3 --format json");
    check(r.code == 0, "series L exit code");
    ordered_json j = ordered_json::parse(r.out, nullptr, false);
    check(!j.is_discarded() && j["series"]["coeffs"] ==
                                   ordered_json::array({"1", "2", "6", "20"}),
          "L coefficients");
  }

  {
    RunResult a = run(cli + " g1 --n 5 --a 5 --order 2 --format json");
    RunResult b = run(cli + " series G10 --n 5 --a 5 --order 2 --format json");
    check(a.code == 0, "g1 exit code");
    check(a.out == b.out, "g1 aliases series G10");
  }

  {
    std::string cmd =
        cli + " verify --suite hyper --n 5 --a 5 --order 2 --seed 7 --format json";
    RunResult a = run(cmd), b = run(cmd);
    check(a.code == 0, "verify hyper exit code");
    check(!a.out.empty() && a.out == b.out, "verify determinism");
    ordered_json j = ordered_json::parse(a.out, nullptr, false);
    check(!j.is_discarded(), "verify output parses as JSON");
    if (!j.is_discarded()) {
      check(top_keys(j) == std::vector<std::string>{"model", "suite", "checks"},
            "verify top-level field order");
      check(j["suite"] == "hyper", "suite field");
      check(!j["checks"].empty(), "checks nonempty");
      for (const auto& c : j["checks"]) {
        check(c.contains("name") && c.contains("paper_ref") &&
                  c.contains("status") && c.contains("detail"),
              "check entry fields");
        check(c["status"] == "pass", "hyper check passes");
      }
      check(j.dump(2) + "\n" == a.out, "verify JSON round trip");
    }
  }

  {
    std::string cmd =
        cli + " verify --suite residue --n 3 --a 3 --order 2 --format csv";
    RunResult a = run(cmd), b = run(cmd);
    check(a.code == 0, "verify residue exit code");
    check(a.out == b.out, "csv determinism");
    check(a.out.rfind("name,paper_ref,status,detail\n", 0) == 0, "csv header");
  }

  {
    std::string cmd =
        cli + " verify --suite equivariant --n 2 --a 2 --order 2 "
              "--direction 1,2 --direction 2,-3 --format text";
    RunResult r = run(cmd);
    check(r.code == 0, "explicit directions accepted");
    check(r.out.find("FAIL") == std::string::npos, "no failing checks in text");
  }

  {
    check(run(cli + " series L --n 5 --a 4 --order 2").code == 2,
          "degree-sum violation exits 2");
    check(run(cli + " series L --n 5 --a 5 --order -1").code == 2,
          "negative order exits 2");
    check(run(cli + " series Nope --n 5 --a 5").code == 2,
          "unknown series exits 2");
    check(run(cli + " verify --n 5 --a 5 --suite bogus --order 0").code == 2,
          "unknown suite exits 2");
    check(run(cli + " verify --n 2 --a 2 --order 1 --direction 1,1").code == 2,
          "repeated direction entry exits 2");
    check(run(cli + " verify --n 2 --a 2 --order 1 --direction 0,1").code == 2,
          "zero direction entry exits 2");
    check(run(cli + " verify --n 2 --a 2 --order 1 --direction 1,2,3").code == 2,
          "wrong direction length exits 2");
    check(run(cli + " frobnicate").code == 2, "unknown subcommand exits 2");
    check(run(cli + " series L --a 5 --order 1").code == 2, "missing --n exits 2");
    check(run(cli + " series").code == 2, "missing series name exits 2");
  }

  { check(run(cli + " --help").code == 0, "--help exits 0"); }

  if (failures == 0) {
    std::cout << "test_cli: all checks passed\n";
    return 0;
  }
  std::cout << "test_cli: " << failures << " check(s) failed\n";
  return 1;
}
