// Exercises the polarmap binary end to end: argv[1] is the path to the
// executable. Prints one line per check and exits nonzero on failure.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "polarmap/json_io.hpp"
#include "polarmap/mueller.hpp"

using nlohmann::json;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  std::cout << (ok ? "ok" : "FAIL") << "  " << what << "\n";
  if (!ok) ++failures;
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
  const int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: polarmap_cli_tests <path-to-polarmap>\n";
    return 2;
  }
  const std::string bin = std::string("\"") + argv[1] + "\"";

  using namespace polarmap;

  write_file("cli_id4.json", serialize(MuellerReal::identity()).dump());
  write_file("cli_hwp.json", serialize(jones_hwp(0.0)).dump());
  write_file("cli_depol.json", serialize(make_isotropic_depolarizer(0.5)).dump());
  write_file("cli_bad.json", serialize(make_depolarizer(1.5, 1.5, 1.5)).dump());

  // validate: classification json on stdout, exit 0
  RunResult r = run(bin + " validate cli_id4.json");
  expect(r.code == 0, "validate exits 0");
  {
    const json doc = json::parse(r.out, nullptr, false);
    expect(!doc.is_discarded() && doc["trace_preserving"] == true && doc["unital"] == true,
           "identity classifies as trace-preserving and unital");
  }

  // jones2mueller: half-wave plate becomes diag(1,-1,-1,1)
  r = run(bin + " jones2mueller cli_hwp.json");
  expect(r.code == 0, "jones2mueller exits 0");
  {
    const json doc = json::parse(r.out, nullptr, false);
    const auto& data = doc["mueller_real"]["data"];
    expect(data[0][0] == 1.0 && data[1][1] == -1.0 && data[2][2] == -1.0 && data[3][3] == 1.0,
           "half-wave plate mueller matrix is diag(1,-1,-1,1)");
  }

  // cloude: depolarizer weights (1+3p)/2 and (1-p)/2
  r = run(bin + " cloude cli_depol.json");
  expect(r.code == 0, "cloude exits 0");
  {
    const json doc = json::parse(r.out, nullptr, false);
    const auto& l = doc["lambdas"];
    expect(std::abs(l[0].get<double>() - 1.25) < 1e-12 &&
               std::abs(l[3].get<double>() - 0.25) < 1e-12,
           "cloude weights match the depolarizer spectrum");
  }

  // cloude on an unphysical matrix: exit 2, one-line stderr diagnostic
  r = run(bin + " cloude cli_bad.json 2>cli_err.txt");
  expect(r.code == 2, "cloude exits 2 on unphysical input");
  {
    std::ifstream err("cli_err.txt");
    std::string line, rest;
    std::getline(err, line);
    const bool single_line = !std::getline(err, rest) || rest.empty();
    expect(line.rfind("polarmap:", 0) == 0 && single_line,
           "diagnostic is a single machine-parsable line");
  }

  // apply --singlet produces the Werner state
  r = run(bin + " apply --map cli_depol.json --singlet");
  expect(r.code == 0, "apply --singlet exits 0");
  {
    const json doc = json::parse(r.out, nullptr, false);
    const auto parsed = parse_matrix(doc["state"]);
    const auto& rho = std::get<DensityMatrix2>(parsed.value);
    double err = 0.0;
    const CMat4 expect_w = 0.5 * singlet_state().r + 0.125 * CMat4::identity();
    err = max_abs_diff(rho.r, expect_w);
    expect(err < 1e-12, "singlet through the half-depolarizer is Werner(1/2)");
  }

  // deterministic csv: same seed twice, byte-identical; env fallback
  const RunResult csv1 = run(bin + " simulate-dichroic --samples 40 --seed 9");
  const RunResult csv2 = run(bin + " simulate-dichroic --samples 40 --seed 9");
  expect(csv1.code == 0 && csv1.out == csv2.out, "csv is byte-identical for one seed");
  const RunResult csv3 = run(bin + " simulate-dichroic --samples 40 --seed 10");
  expect(csv3.out != csv1.out, "different seed changes the csv");
  const RunResult csv4 = run("POLARMAP_SEED=9 " + bin + " simulate-dichroic --samples 40");
  expect(csv4.out == csv1.out, "POLARMAP_SEED is the fallback seed");
  expect(csv1.out.rfind("index,p,d0,d1,theta,linear_entropy,tangle,class", 0) == 0,
         "csv header row");

  // curves
  r = run(bin + " curves --grid 5");
  {
    int lines = 0;
    for (char c : r.out) lines += (c == '\n');
    expect(r.code == 0 && lines == 11, "curves emits a header and 2 x 5 rows");
  }

  // mems --check
  r = run(bin + " mems --p 0.8 --check");
  expect(r.code == 0, "mems --check exits 0");
  {
    const json doc = json::parse(r.out, nullptr, false);
    expect(doc["report"]["max_error"].get<double>() <= 1e-9, "mems report max error <= 1e-9");
  }

  // network --check, plus region validation
  r = run(bin + " network --figure 7 --p 0.5 --input 0.6,0,0.8,0 --check");
  expect(r.code == 0, "network --check exits 0");
  r = run(bin + " network --figure 5 --p 0.5 2>/dev/null");
  expect(r.code == 2, "figure 5 rejects region-II p");

  // usage errors
  r = run(bin + " validate missing_file.json 2>/dev/null");
  expect(r.code == 1, "missing file is a usage error");
  r = run(bin + " validate 2>/dev/null");
  expect(r.code == 1, "missing argument is a usage error");
  r = run(bin + " frobnicate 2>/dev/null");
  expect(r.code == 1, "unknown subcommand is a usage error");
  r = run(bin + " mems --p 0.8 --frobnicate 2>/dev/null");
  expect(r.code == 1, "unknown flag is a usage error");

  // malformed json is a validation error
  write_file("cli_malformed.json", "{\"kind\": \"mueller_real\", \"data\": [[1,2],[3,4]]}");
  r = run(bin + " validate cli_malformed.json 2>/dev/null");
  expect(r.code == 2, "shape mismatch is a validation error");

  if (failures) std::cout << failures << " cli check(s) failed\n";
  return failures ? 1 : 0;
}
