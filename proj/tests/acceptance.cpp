// Acceptance suite: every release-gating property in one binary, one line of
// output per criterion.  Exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gapord/harness.hpp"
#include "gapord/literal.hpp"
#include "gapord/motype.hpp"
#include "gapord/ordinal.hpp"

using namespace gapord;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, double seconds, double budget,
            const std::string& detail = "") {
  bool in_time = seconds < budget;
  bool pass = ok && in_time;
  if (!pass) ++failures;
  std::printf("%s [%d] %-28s %7.2fs (budget %gs)%s%s\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), seconds, budget, detail.empty() ? "" : " ", detail.c_str());
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

bool run_checked(const std::string& suite, const DomainSpec& spec, std::string& detail,
                 double& seconds) {
  CheckReport r = run_suite(suite, spec);
  seconds += r.wall_seconds;
  if (!r.passed()) {
    detail += suite + ": " + std::to_string(r.failures_total) + " failures; ";
    for (std::size_t i = 0; i < r.failures.size() && i < 3; ++i)
      detail += r.failures[i] + "; ";
    return false;
  }
  return true;
}

// a captured run of the command line tool
struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(GAPORD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliResult res{-1, {}};
  if (!pipe) return res;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe)) res.out += buf;
  int status = pclose(pipe);
  res.exit_code = WEXITSTATUS(status);
  return res;
}

void criterion_1() {
  Timer t;
  DomainSpec spec;
  spec.alphabet = 3;
  spec.max_len = 4;
  CheckReport r = run_suite("seq-equivalence", spec);
  bool ok = r.passed() && r.cases == 14641;
  std::string detail = "cases=" + std::to_string(r.cases);
  report(1, "order equivalences", ok, t.seconds(), 10.0, detail);
}

void criterion_2() {
  Timer t;
  DomainSpec spec;
  spec.alphabet = 3;  // random tuples draw members below alphabet + 1 = 4
  spec.max_len = 4;
  spec.count = 100000;
  std::string detail;
  double seconds = 0;
  bool ok = run_checked("seq-cancellation", spec, detail, seconds);
  report(2, "cancellation/concatenation", ok, t.seconds(), 30.0, detail);
}

void criterion_3() {
  Timer t;
  DomainSpec spec;
  spec.max_size = 8;
  spec.count = 100000;
  std::string detail;
  double seconds = 0;
  bool ok = true;
  for (const char* suite :
       {"ord-total-order", "ord-add", "ord-lsub", "ord-hessenberg", "ord-psi", "ord-cnf"})
    ok = run_checked(suite, spec, detail, seconds) && ok;
  report(3, "ordinal laws", ok, t.seconds(), 60.0, detail);
}

void criterion_4() {
  Timer t;
  bool ok = true;
  std::string detail;
  std::ifstream in(std::string(GAPORD_FIXTURE_DIR) + "/motype_values.txt");
  if (!in.good()) {
    ok = false;
    detail = "missing fixture";
  }
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string fn, input, expected;
    ls >> fn >> input >> expected;
    OrdTerm a = parse_ord(input);
    OrdTerm value = fn == "F" ? motype_F(a) : fn == "G" ? motype_G(a) : motype_H(a);
    ++rows;
    if (print_ord(value) != expected) {
      ok = false;
      detail += fn + "(" + input + ")=" + print_ord(value) + "!=" + expected + "; ";
    }
  }
  if (rows != 11) {
    ok = false;
    detail += "expected 11 fixture rows, saw " + std::to_string(rows);
  }
  report(4, "pinned order types", ok, t.seconds(), 1.0, detail);
}

void criterion_5() {
  Timer t;
  std::string detail;
  double seconds = 0;
  bool ok = true;
  {
    DomainSpec spec;
    spec.alphabet = 3;
    spec.max_len = 4;
    ok = run_checked("reflect-seq-to-tree", spec, detail, seconds) && ok;
    ok = run_checked("reflect-strong-to-weak", spec, detail, seconds) && ok;
  }
  {
    DomainSpec spec;
    spec.max_size = 5;
    ok = run_checked("reflect-phi-to-gapseq", spec, detail, seconds) && ok;
  }
  {
    DomainSpec spec;
    spec.count = 500;
    ok = run_checked("reflect-bullet-pipeline", spec, detail, seconds) && ok;
    ok = run_checked("reflect-strong-lower", spec, detail, seconds) && ok;
  }
  {
    DomainSpec spec;
    spec.count = 15000;  // split across three variants; at least 10^4 pairs
    ok = run_checked("reflect-left-set", spec, detail, seconds) && ok;
    spec.count = 10000;
    ok = run_checked("reflect-tree-label-split", spec, detail, seconds) && ok;
  }
  report(5, "reflection suites", ok, t.seconds(), 120.0, detail);
}

void criterion_6() {
  Timer t;
  DomainSpec spec;
  spec.alphabet = 3;
  spec.count = 1000;  // 1000 grown sequences plus 10^4 + 10^4 sampled checks
  std::string detail;
  double seconds = 0;
  bool ok = run_checked("reify-descent", spec, detail, seconds);
  report(6, "reification descent", ok, t.seconds(), 120.0, detail);
}

void criterion_7() {
  Timer t;
  DomainSpec spec;
  spec.alphabet = 3;
  spec.max_len = 5;
  std::string detail;
  double seconds = 0;
  bool ok = run_checked("bullet-order", spec, detail, seconds);
  report(7, "bullet order", ok, t.seconds(), 10.0, detail);
}

void criterion_8() {
  Timer t;
  bool ok = true;
  std::string detail;
  {
    CliResult r = run_cli("cmp-seq --order s \"[1]\" \"[0,1]\"");
    if (r.exit_code != 1 || !r.out.empty()) {
      ok = false;
      detail += "cmp-seq: exit=" + std::to_string(r.exit_code) + " out='" + r.out + "'; ";
    }
  }
  {
    CliResult r = run_cli("motype G 2");
    if (r.exit_code != 0 || r.out != "w^w^w\n") {
      ok = false;
      detail += "motype: exit=" + std::to_string(r.exit_code) + " out='" + r.out + "'; ";
    }
  }
  {
    CliResult r = run_cli("cmp-ord 0 1");
    if (r.exit_code != 0 || r.out != "<\n") {
      ok = false;
      detail += "cmp-ord: exit=" + std::to_string(r.exit_code) + " out='" + r.out + "'; ";
    }
  }
  report(8, "command line contract", ok, t.seconds(), 10.0, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
