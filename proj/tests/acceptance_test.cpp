// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <utility>

#include "qmod/verify.hpp"

#ifndef QMOD_CLI_PATH
#error "QMOD_CLI_PATH must name the qmod executable"
#endif

namespace {

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<bool()> run;
};

std::pair<std::string, int> run_cli(const std::string& args) {
  const std::string cmd = std::string(QMOD_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {"", -1};
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

}  // namespace

int main() {
  using qmod::verify::RunContext;
  const RunContext ctx{qmod::PrimeField(), 0, false};
  const auto passes = [&ctx](const char* name) {
    return [&ctx, name] { return qmod::verify::checks().at(name)(ctx).at("pass").get<bool>(); };
  };

  const Criterion criteria[] = {
      {1, "expected-dimension identities", 1.0, passes("identities")},
      {2, "Harris-Tu degrees", 1.0, passes("harris-tu")},
      {3, "quadric divisor classes and tilde-b bounds", 5.0, passes("quad-class")},
      {4, "degenerate-pencil class and Z_{15,9}", 1.0, passes("dp-class")},
      {5, "general-type certificate", 1.0, passes("certificate")},
      {6, "quadrics through rational normal curves", 30.0, passes("rnc-quadrics")},
      {7, "secant-line condition", 10.0, passes("secant")},
      {8, "canonical curves of genus 4 and 5", 30.0, passes("canonical-curves")},
      {9, "blow-up of P^2 at 15 points", 60.0, passes("surface")},
      {10, "verify all is deterministic", 120.0,
       [] {
         const auto a = run_cli("verify all --seed 7");
         const auto b = run_cli("verify all --seed 7");
         return a.second == 0 && b.second == 0 && !a.first.empty() && a.first == b.first;
       }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      note = std::string(" error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_seconds;
    if (ok && !in_time) note = " over time budget";
    ok = ok && in_time;
    all = all && ok;
    std::printf("%s  %2d  %-45s %7.2fs / %.0fs%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                c.budget_seconds, note.c_str());
  }
  return all ? 0 : 1;
}
