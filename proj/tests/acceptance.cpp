// Acceptance criteria 1-7: one PASS/FAIL line each. Exit status is nonzero if
// any selected criterion fails. `--only N` runs a single criterion.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "tautring/suites.hpp"

using namespace tautring;

namespace {

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0 for none
  std::function<std::vector<SuiteResult>()> run;
};

void print(const Criterion& c, const std::vector<SuiteResult>& results, double seconds, bool ok, bool verbose) {
  std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  ("
            << std::to_string(seconds).substr(0, 5) << " s";
  if (c.budget_seconds > 0) std::cout << ", budget " << c.budget_seconds << " s";
  std::cout << ")\n";
  for (const auto& r : results) {
    for (const auto& chk : r.checks) {
      if (chk.report.ok && !verbose) continue;
      std::cout << "    " << (chk.report.ok ? "ok   " : "FAIL ") << chk.name << " [" << chk.report.checked
                << " checks]";
      if (!chk.report.ok) std::cout << " first failure: " << chk.report.first_failure();
      std::cout << "\n";
      if (verbose)
        for (const auto& l : chk.lines) std::cout << "      " << l << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--only") && i + 1 < argc) {
      only = std::stoi(argv[++i]);
    } else if (!std::strcmp(argv[i], "--verbose")) {
      verbose = true;
    } else {
      std::cerr << "usage: acceptance [--only N] [--verbose]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "Transform: c_{k,0} = B_k/(k(k-1)) for 2 <= k <= 20; sum c_{k,k} z^k = log A to order 20", 10,
       [] { return std::vector<SuiteResult>{ionel_suite(20)}; }},
      {2, "ODE suite: A, C, identity (i), sigma=(11) identity, sine series", 0,
       [] { return std::vector<SuiteResult>{ode_suite(30)}; }},
      {3, "Lemma suite: b^n_{n-1}, c^n_{0,n}, c^n_{k,k+n}, uy_extract", 0,
       [] { return std::vector<SuiteResult>{lemma_suite()}; }},
      {4, "Structure: expanded = sign |Aut| sq3, triviality thresholds, genus shift", 0,
       [] {
         return std::vector<SuiteResult>{expanded_suite(14, 8), triviality_suite(14, 7), genus_shift_suite(14, 7)};
       }},
      {5, "Equivalence: SQ->FZ unit-triangular, SQ_(111) row, lemma5 (8,8), prop3 ~ fz for g <= 12, r <= 5", 300,
       [] { return std::vector<SuiteResult>{fz_equiv_suite(12, 5)}; }},
      {6, "Cross-family: faber in span(fz), g <= 9, r <= 4, d <= 2g, |sigma_z| <= 2", 0,
       [] { return std::vector<SuiteResult>{thm1_span_suite(9, 4)}; }},
      {7, "Parity: minus-parity expanded relations with |sigma| <= 3 as plus-parity combinations", 0,
       [] { return std::vector<SuiteResult>{prop2_suite(9, 6)}; }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    auto results = c.run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = c.budget_seconds <= 0 || secs < c.budget_seconds;
    for (const auto& r : results) ok = ok && r.ok();
    print(c, results, secs, ok, verbose);
    all = all && ok;
  }
  return all ? 0 : 1;
}
