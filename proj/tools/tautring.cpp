#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tautring/algebra.hpp"
#include "tautring/faber.hpp"
#include "tautring/fz.hpp"
#include "tautring/io.hpp"
#include "tautring/ionel.hpp"
#include "tautring/sq.hpp"
#include "tautring/suites.hpp"

using namespace tautring;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open " + path);
  out << text;
  return kOk;
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string family;
  int g = 0;
  int r = 0;
  std::optional<int> d;
  std::string sigma;
  bool all_d = false;
  bool specialize = false;
  std::string out = "-";
  std::string format = "json";
};

bool uses_d(Family f) { return f == Family::Faber || f == Family::Sq2 || f == Family::Sq3 || f == Family::Thm4; }

Partition parse_sigma(const std::string& csv) {
  try {
    return Partition::parse(csv);
  } catch (const std::exception& e) {
    throw UsageError("malformed --sigma '" + csv + "': " + e.what());
  }
}

int cmd_gen(const GenArgs& a) {
  auto fam = parse_family(a.family);
  if (!fam) throw UsageError("unknown family " + a.family);
  const Family f = *fam;
  if (uses_d(f) && !a.d && !a.all_d) throw UsageError(a.family + " needs --d or --all-d");
  if (!uses_d(f) && (a.d || a.all_d)) throw UsageError(a.family + " takes no d");
  if (a.d && a.all_d) throw UsageError("--d and --all-d are exclusive");

  std::optional<ZMonomial> z;
  Partition sigma;
  if (f == Family::Faber) {
    try {
      z = a.sigma.empty() ? ZMonomial() : ZMonomial::parse(a.sigma);
    } catch (const std::exception& e) {
      throw UsageError("malformed --sigma '" + a.sigma + "' (expected i:j,...): " + e.what());
    }
  } else {
    sigma = parse_sigma(a.sigma);
  }
  if (f == Family::Sq2 && !sigma.empty()) throw UsageError("sq2 takes no sigma");
  if (f == Family::Fz && !no_part_two_mod_three(sigma)) {
    throw UsageError("fz sigma " + sigma.to_string() + " has a part congruent to 2 mod 3");
  }

  std::vector<int> ds;
  if (a.d) {
    ds.push_back(*a.d);
  } else if (a.all_d) {
    const int hi = f == Family::Faber ? 2 * a.g : a.g + 1;
    for (int d = 1; d <= hi; ++d) ds.push_back(d);
  }

  auto build = [&](std::optional<int> d) -> std::optional<Relation> {
    switch (f) {
      case Family::Faber: return thm1_relation(a.g, a.r, *d, *z);
      case Family::Sq2: return thm2_relation(a.g, a.r, *d);
      case Family::Sq3: return thm3_relation(a.g, a.r, *d, sigma);
      case Family::Thm4: return thm4_relation(a.g, a.r, *d, sigma);
      case Family::Prop3: return prop3_relation(a.g, a.r, sigma);
      case Family::Fz: return thm5_relation(a.g, a.r, sigma);
      case Family::FzReindexed: return fz_reindexed_relation(a.g, a.r, sigma);
      default: throw UsageError("family " + a.family + " is not generated from the command line");
    }
  };

  std::vector<RelationDocument> docs;
  auto emit = [&](std::optional<int> d) {
    if (auto rel = build(d)) {
      docs.push_back(make_document(*rel, a.specialize));
    } else if (!a.all_d) {
      docs.push_back(inapplicable_document(f, a.g, a.r, d, sigma, z));
    }
  };
  if (ds.empty()) {
    emit(std::nullopt);
  } else {
    for (int d : ds) emit(d);
  }
  if (docs.empty()) docs.push_back(inapplicable_document(f, a.g, a.r, std::nullopt, sigma, z));

  std::string text;
  if (a.format == "json") {
    text = docs.size() == 1 && !a.all_d ? to_json(docs.front()) : to_json(docs);
  } else {
    for (const auto& d : docs) text += to_text(d);
  }
  return write_output(a.out, text);
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& suite, const SuiteParams& p, bool verbose) {
  auto res = run_suite(suite, p);
  if (!res) throw UsageError("unknown suite " + suite);
  std::cout << "suite " << res->suite << "\n";
  for (const auto& c : res->checks) {
    std::cout << (c.report.ok ? "  ✓ " : "  ✗ ") << c.name << " (" << c.report.checked << " checks)\n";
    for (const auto& f : c.report.failures) std::cout << "      failure: " << f << "\n";
    if (verbose || !c.report.ok)
      for (const auto& l : c.lines) std::cout << "      " << l << "\n";
  }
  std::cout << (res->ok() ? "PASS" : "FAIL") << "\n";
  return res->ok() ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------
// span

std::string verdict(const std::string& a, const std::string& b, bool ab, bool ba) {
  if (ab && ba) return "equal";
  if (ab) return a + " ⊆ " + b;
  if (ba) return b + " ⊆ " + a;
  return "incomparable";
}

void print_certificates(const RelationMatrix& from, const RelationMatrix& into, std::ostream& os) {
  for (std::size_t i = 0; i < from.rows.size(); ++i) {
    SpanCertificate cert = span_contains(into, from.rows[i]);
    os << "  [" << from.provenance[i] << "] ";
    if (!cert.contained) {
      os << "not contained\n";
      continue;
    }
    std::string expr;
    for (std::size_t k = 0; k < cert.coefficients.size(); ++k) {
      if (cert.coefficients[k] == 0) continue;
      expr += (expr.empty() ? "" : " + ") + std::string("(") + fraction_string(cert.coefficients[k]) + ")·[" +
              into.provenance[k] + "]";
    }
    os << "= " << (expr.empty() ? "0" : expr) << "\n";
  }
}

int cmd_span(int g, int r, const std::string& compare, bool certify) {
  auto colon = compare.find(':');
  if (colon == std::string::npos) throw UsageError("--compare expects A:B");
  const std::string an = compare.substr(0, colon), bn = compare.substr(colon + 1);
  auto fa = parse_family(an), fb = parse_family(bn);
  if (!fa || !fb) throw UsageError("unknown family in --compare " + compare);
  if (g < 2 || r < 0) throw UsageError("span needs g >= 2 and r >= 0");

  RelationMatrix la(r), lb(r);
  auto ra = family_relations(*fa, g, r), rb = family_relations(*fb, g, r);
  for (const auto& x : ra) la.add_relation(x);
  for (const auto& x : rb) lb.add_relation(x);
  RelationMatrix ia = ideal_within_degree(family_relations_upto(*fa, g, r), r);
  RelationMatrix ib = ideal_within_degree(family_relations_upto(*fb, g, r), r);

  auto inside = [](const RelationMatrix& x, const RelationMatrix& y) {
    for (const auto& row : x.rows)
      if (!span_contains(y, row).contained) return false;
    return true;
  };
  const bool lab = inside(la, lb), lba = inside(lb, la), iab = inside(ia, ib), iba = inside(ib, ia);
  std::ostringstream os;
  os << "g=" << g << " r=" << r << " compare " << an << ":" << bn << "\n";
  os << an << ": " << ra.size() << " relations, rank " << rank(la) << ", ideal rank " << rank(ia) << "\n";
  os << bn << ": " << rb.size() << " relations, rank " << rank(lb) << ", ideal rank " << rank(ib) << "\n";
  os << "linear span: " << verdict(an, bn, lab, lba) << "\n";
  os << "ideal within degree: " << verdict(an, bn, iab, iba) << "\n";
  os << "verdict: " << verdict(an, bn, iab, iba) << "\n";
  if (certify) {
    os << "certificates " << an << " in " << bn << " (ideal within degree):\n";
    print_certificates(ia, ib, os);
    os << "certificates " << bn << " in " << an << " (ideal within degree):\n";
    print_certificates(ib, ia, os);
  }
  std::cout << os.str();
  return kOk;
}

// ---------------------------------------------------------------------------
// tables

int cmd_tables(const std::string& which, int max) {
  if (max < 0) throw UsageError("--max must be non-negative");
  std::ostringstream os;
  auto row = [&](const std::string& name, const Rational& v) { os << name << "=" << fraction_string(v) << "\n"; };
  auto idx = [](std::initializer_list<int> xs) {
    std::string s;
    for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  };
  if (which == "q" || which == "c") {
    auto tab = ionel_tables(max, 1);
    for (int k = which == "q" ? 0 : 1; k <= max; ++k)
      for (int j = 0; j <= k; ++j) row(which + "_{" + idx({k, j}) + "}", which == "q" ? tab->q(k, j) : tab->c(k, j));
  } else if (which == "cn") {
    auto tab = ionel_tables(max, std::max(max, 1));
    for (int n = 1; n <= max; ++n)
      for (int k = 0; k <= max; ++k)
        for (int j = 0; j <= k + n; ++j) row("c^" + std::to_string(n) + "_{" + idx({k, j}) + "}", tab->cn(n, k, j));
  } else if (which == "b") {
    auto tab = ionel_tables(1, std::max(max, 1));
    for (int n = 1; n <= max; ++n)
      for (int j = 0; j < n; ++j) row("b^" + std::to_string(n) + "_" + std::to_string(j), tab->b(n, j));
  } else if (which == "Crd") {
    if (max < 1) throw UsageError("Crd needs --max >= 1");
    auto tab = log_phi_table(max, max);
    for (int d = 1; d <= max; ++d)
      for (int r = -1; r <= max; ++r) row("C^{" + std::to_string(r) + "}_{" + std::to_string(d) + "}", tab->at(d, r));
  } else if (which == "CrSigma") {
    for (const auto& s : enumerate_partitions(max, no_part_two_mod_three)) {
      auto lg = psi_log(s, max);
      for (int r = 0; r <= max; ++r) row("C^{" + std::to_string(r) + "}" + s.to_string(), lg->at(s, r));
    }
  } else {
    throw UsageError("unknown table " + which);
  }
  std::cout << os.str();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tautring: exact kappa-class relations in the tautological ring"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "generate relation documents");
  g->add_option("--family", gen.family, "faber|sq2|sq3|thm4|prop3|fz|fz-reindexed")->required();
  g->add_option("--g", gen.g, "genus")->required();
  g->add_option("--r", gen.r, "degree")->required();
  g->add_option("--d", gen.d, "d (faber, sq2, sq3, thm4)");
  g->add_option("--sigma", gen.sigma, "partition as CSV; for faber i:j,...");
  g->add_flag("--all-d", gen.all_d, "every d in the family grid");
  g->add_flag("--specialize", gen.specialize, "substitute kappa_0 = 2g-2");
  g->add_option("--out", gen.out, "output path, - for stdout");
  g->add_option("--format", gen.format, "json|text")->check(CLI::IsMember({"json", "text"}));

  std::string suite;
  SuiteParams params;
  bool verbose = false;
  auto* v = app.add_subcommand("verify", "run a verification suite");
  v->add_option("--suite", suite, "ionel|ode|lemma5|expanded|genus-shift|triviality|prop2|fz-equiv|thm1-span")
      ->required();
  v->add_option("--order", params.order, "truncation order");
  v->add_option("--gmax", params.gmax, "largest genus");
  v->add_option("--rmax", params.rmax, "largest degree");
  v->add_flag("--verbose", verbose, "print per-cell lines");

  int sg = 0, sr = 0;
  std::string compare;
  bool certify = false;
  auto* s = app.add_subcommand("span", "compare the spans of two families");
  s->add_option("--g", sg, "genus")->required();
  s->add_option("--r", sr, "degree")->required();
  s->add_option("--compare", compare, "A:B")->required();
  s->add_flag("--certify", certify, "print membership certificates");

  std::string which;
  int max = 0;
  auto* t = app.add_subcommand("tables", "dump coefficient tables");
  t->add_option("--which", which, "q|c|cn|b|Crd|CrSigma")->required();
  t->add_option("--max", max, "largest index")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*v) return cmd_verify(suite, params, verbose);
    if (*s) return cmd_span(sg, sr, compare, certify);
    if (*t) return cmd_tables(which, max);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
