#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tautring/report.hpp"

namespace tautring {

struct SuiteCheck {
  std::string name;
  CheckReport report;
  std::vector<std::string> lines;  // per-cell detail, printed on request
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCheck> checks;
  double seconds = 0;
  bool ok() const;
};

/// Negative values select each suite's default.
struct SuiteParams {
  int order = -1;
  int gmax = -1;
  int rmax = -1;
};

/// c_{k,0} against B_k/(k(k-1)), the shifted B_{k+1}/(k(k+1)), and sum c_{k,k} z^k = log A.
SuiteResult ionel_suite(int order = 20);
/// b^n_{n-1}, c^n_{0,n}, c^n_{k,k+n} and the (u, y) transfer rule on random series.
SuiteResult lemma_suite();
SuiteResult ode_suite(int order = 30);
SuiteResult lemma5_suite(int order = 8);
/// expanded = sign |Aut| sq3 for |sigma| <= 4, d <= 5, r <= rmax.
SuiteResult expanded_suite(int gmax = 14, int rmax = 8);
SuiteResult triviality_suite(int gmax = 14, int rmax = 7);
SuiteResult genus_shift_suite(int gmax = 14, int rmax = 7);
/// Minus-parity expanded relations with |sigma| <= 3 as combinations of plus-parity ones.
SuiteResult prop2_suite(int gmax = 9, int rmax = 6);
SuiteResult fz_equiv_suite(int gmax = 12, int rmax = 5);
/// Faber-family cells against the span of the FZ family at the same (g, r).
SuiteResult thm1_span_suite(int gmax = 9, int rmax = 4);

std::vector<std::string> suite_names();
std::optional<SuiteResult> run_suite(const std::string& name, const SuiteParams& params);

}  // namespace tautring
