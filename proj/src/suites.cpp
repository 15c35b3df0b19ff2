#include "tautring/suites.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "tautring/algebra.hpp"
#include "tautring/bernoulli.hpp"
#include "tautring/faber.hpp"
#include "tautring/fz.hpp"
#include "tautring/ionel.hpp"
#include "tautring/sq.hpp"

namespace tautring {

bool SuiteResult::ok() const {
  for (const auto& c : checks)
    if (!c.report.ok) return false;
  return true;
}

namespace {

const VariableId kT = VariableId::t();
const VariableId kX = VariableId::x();
const VariableId kZ = VariableId::z();

SuiteResult timed(const std::string& name, const std::function<void(SuiteResult&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteResult res;
  res.suite = name;
  body(res);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::string cell(int g, int r, int d, const std::string& sigma) {
  return "g=" + std::to_string(g) + " r=" + std::to_string(r) + (d >= 0 ? " d=" + std::to_string(d) : "") +
         " sigma=" + sigma;
}

Rational pow_int(long b, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

/// n!! for odd n >= -3 with (-1)!! = 1 and (-3)!! = -1.
Rational odd_double_factorial(int n) {
  if (n == -3) return -1;
  return Rational(double_factorial(n));
}

}  // namespace

SuiteResult ionel_suite(int order) {
  return timed("ionel", [&](SuiteResult& res) {
    auto tab = ionel_tables(order, 1);
    SuiteCheck lit{"c_{k,0} = B_k/(k(k-1)), 2 <= k <= " + std::to_string(order), {}, {}};
    SuiteCheck shifted{"c_{k,0} = B_{k+1}/(k(k+1)), 1 <= k <= " + std::to_string(order), {}, {}};
    for (int k = 2; k <= order; ++k) {
      Rational want = bernoulli(k) / (k * (k - 1));
      lit.report.expect(tab->c(k, 0) == want, "k=" + std::to_string(k) + ": c_{k,0} = " + to_string(tab->c(k, 0)) +
                                                  ", B_k/(k(k-1)) = " + to_string(want));
    }
    for (int k = 1; k <= order; ++k) {
      shifted.report.expect(tab->c(k, 0) == bernoulli(k + 1) / (k * (k + 1)), "k=" + std::to_string(k));
    }
    SuiteCheck ckk{"sum c_{k,k} z^k = log A to order " + std::to_string(order), {}, {}};
    TruncationSpec s = TruncationSpec().add(kZ, order);
    RSeries a(s);
    for (int k = 0; k <= order; ++k) a.add_term({{kZ, k}}, fz_a_coeff(k) / pow_int(72, k));
    RSeries la = series_log(a);
    for (int k = 1; k <= order; ++k) {
      ckk.report.expect(tab->c(k, k) == la.extract({{kZ, k}}), "k=" + std::to_string(k));
    }
    res.checks = {lit, shifted, ckk};
  });
}

SuiteResult lemma_suite() {
  return timed("lemma", [&](SuiteResult& res) {
    auto tab = ionel_tables(9, 8);
    SuiteCheck b{"b^n_{n-1} = -2^{n-2}(2n-5)!!, n <= 8", {}, {}};
    for (int n = 1; n <= 8; ++n) {
      Rational want = -odd_double_factorial(2 * n - 5) * (n >= 2 ? pow_int(2, n - 2) : frac(1, 2));
      b.report.expect(tab->b(n, n - 1) == want, "n=" + std::to_string(n));
    }
    SuiteCheck c0{"c^n_{0,n} = 4^{n-1}(n-1)!, n <= 6", {}, {}};
    for (int n = 1; n <= 6; ++n) {
      c0.report.expect(tab->cn(n, 0, n) == pow_int(4, n - 1) * Rational(factorial(static_cast<unsigned>(n - 1))),
                       "n=" + std::to_string(n));
    }
    SuiteCheck ck{"c^n_{k,k+n} = prod (6k+4m) c_{k,k}, n <= 5, 1 <= k <= 8", {}, {}};
    for (int n = 1; n <= 5; ++n) {
      for (int k = 1; k <= 8; ++k) {
        Rational prod = tab->c(k, k);
        for (int m = 0; m < n; ++m) prod *= 6 * k + 4 * m;
        ck.report.expect(tab->cn(n, k, k + n) == prod, "n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
    SuiteCheck uy{"uy_extract = direct extraction on 50 random series", {}, {}};
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6), coin(0, 1);
    TruncationSpec s = TruncationSpec().add(kT, 5).add(kX, 5);
    for (int trial = 0; trial < 50; ++trial) {
      RSeries p(s);
      for (int i = 0; i <= 5; ++i)
        for (int j = 0; j <= 5; ++j)
          if (coin(rng)) p.add_term({{kT, i}, {kX, j}}, frac(num(rng), den(rng)));
      for (int r = 0; r <= 5; ++r)
        for (int d = 0; d <= 5; ++d)
          uy.report.expect(uy_extract(p, r, d) == p.extract({{kT, r}, {kX, d}}),
                           "trial " + std::to_string(trial) + " r=" + std::to_string(r) + " d=" + std::to_string(d));
    }
    res.checks = {b, c0, ck, uy};
  });
}

SuiteResult ode_suite(int order) {
  return timed("ode", [&](SuiteResult& res) {
    res.checks.push_back({"hypergeometric, C, sigma=(11) and sine identities to order " + std::to_string(order),
                          identity_suite(order), {}});
  });
}

SuiteResult lemma5_suite(int order) {
  return timed("lemma5", [&](SuiteResult& res) {
    res.checks.push_back(
        {"log f linear in y to (" + std::to_string(order) + "," + std::to_string(order) + ")",
         lemma5_check(order, order).report, {}});
  });
}

SuiteResult expanded_suite(int gmax, int rmax) {
  return timed("expanded", [&](SuiteResult& res) {
    SuiteCheck c{"expanded = |Aut(sigma)| sq3 (parity-signed), |sigma| <= 4, d <= 5, r <= " + std::to_string(rmax),
                 {}, {}};
    for (const auto& sigma : enumerate_partitions(4)) {
      for (int g = 2; g <= gmax; ++g) {
        for (int r = 0; r <= rmax; ++r) {
          for (int d = 1; d <= 5; ++d) {
            auto t3 = thm3_relation(g, r, d, sigma);
            if (!t3) continue;
            int sign = expanded_parity(g, r, sigma);
            auto ex = expanded_relation(g, r, d, sigma, sign);
            c.report.expect(ex && ex->poly == t3->poly * Rational(sign * sigma.aut()),
                            cell(g, r, d, sigma.to_string()));
          }
        }
      }
    }
    res.checks.push_back(std::move(c));
  });
}

SuiteResult triviality_suite(int gmax, int rmax) {
  return timed("triviality", [&](SuiteResult& res) {
    SuiteCheck t2{"thm2 zero below 3r < g+1 (kappa_0 = 2g-2)", {}, {}};
    SuiteCheck t4{"thm4 zero below 3r < g+1+3|sigma|-2l(sigma)", {}, {}};
    SuiteCheck p3{"prop3 yields no relation below 3r < g+1+3|sigma|-2l(sigma)", {}, {}};
    for (int g = 2; g <= gmax; ++g) {
      for (int r = 0; r <= rmax; ++r) {
        for (int d = 1; d <= 6; ++d) {
          if (3 * r >= g + 1) continue;
          if (auto rel = thm2_relation(g, r, d)) t2.report.expect(rel->specialized().is_zero(), cell(g, r, d, "()"));
        }
        for (const auto& sigma : enumerate_partitions(3)) {
          if (3 * r >= g + 1 + 3 * sigma.size() - 2 * sigma.length()) continue;
          for (int d = 1; d <= 6; ++d) {
            if (auto rel = thm4_relation(g, r, d, sigma))
              t4.report.expect(rel->poly.is_zero(), cell(g, r, d, sigma.to_string()));
          }
          p3.report.expect(!prop3_relation(g, r, sigma).has_value(), cell(g, r, -1, sigma.to_string()));
        }
      }
    }
    res.checks = {t2, t4, p3};
  });
}

SuiteResult genus_shift_suite(int gmax, int rmax) {
  return timed("genus-shift", [&](SuiteResult& res) {
    // thm4 and gsigma carry kappa_0 = 2g-2 inside their (1+4y) powers, so only the
    // kappa_0-symbolic families are compared.
    SuiteCheck c{"kappa_0-symbolic polynomials agree for g and g-2", {}, {}};
    auto same = [&](const std::optional<Relation>& hi, const std::optional<Relation>& lo, const std::string& what) {
      if (hi && lo) c.report.expect(hi->poly == lo->poly, what);
    };
    for (int g = 4; g <= gmax; ++g) {
      for (int r = 0; r <= rmax; ++r) {
        for (int d = 1; d <= 6; ++d) same(thm2_relation(g, r, d), thm2_relation(g - 2, r, d), "sq2 " + cell(g, r, d, "()"));
        for (const auto& sigma : enumerate_partitions(3)) {
          const std::string s = sigma.to_string();
          for (int d = 1; d <= 4; ++d) {
            same(thm3_relation(g, r, d, sigma), thm3_relation(g - 2, r, d, sigma), "sq3 " + cell(g, r, d, s));
            const int sign = expanded_parity(g, r, sigma);
            same(expanded_relation(g, r, d, sigma, sign), expanded_relation(g - 2, r, d, sigma, sign),
                 "expanded " + cell(g, r, d, s));
          }
          same(prop3_relation(g, r, sigma), prop3_relation(g - 2, r, sigma), "prop3 " + cell(g, r, -1, s));
          same(fz_reindexed_relation(g, r, sigma), fz_reindexed_relation(g - 2, r, sigma),
               "fz-reindexed " + cell(g, r, -1, s));
          if (no_part_two_mod_three(sigma))
            same(thm5_relation(g, r, sigma), thm5_relation(g - 2, r, sigma), "fz " + cell(g, r, -1, s));
        }
        // Faber cells stay on the cross-family grid; d = 2g grows the series quickly.
        if (g > 9 || r > 4) continue;
        for (const auto& z : enumerate_zmonomials(2, 2)) {
          for (int d = 2 * g - 1; d <= 2 * g; ++d)
            same(thm1_relation(g, r, d, z), thm1_relation(g - 2, r, d, z), "faber " + cell(g, r, d, z.to_string()));
        }
      }
    }
    res.checks.push_back(std::move(c));
  });
}

SuiteResult prop2_suite(int gmax, int rmax) {
  return timed("prop2", [&](SuiteResult& res) {
    SuiteCheck c{"minus-parity expanded relations, |sigma| <= 3, d <= 5, as plus-parity combinations", {}, {}};
    for (const auto& sigma : enumerate_partitions(3)) {
      if (sigma.empty()) continue;
      for (int g = 2; g <= gmax; ++g) {
        for (int r = 0; r <= rmax; ++r) {
          for (int d = 1; d <= 5; ++d) {
            if (!thm3_applicable(g, r, d, sigma) || expanded_parity(g, r, sigma) != -1) continue;
            const std::string where = cell(g, r, d, sigma.to_string());
            Prop2Report rep = prop2_check(g, r, d, sigma);
            bool ok = rep.applicable && rep.ok && rep.minus == expanded_poly(r, d, sigma, -1);
            KappaPoly sum;
            std::string expr;
            for (const auto& t : rep.terms) {
              ok = ok && t.rest.size() < sigma.size() && expanded_parity(g, t.r, t.rest) == +1 &&
                   t.plus == expanded_poly(t.r, d, t.rest, +1);
              sum += t.plus * t.kappa * t.weight;
              expr += (expr.empty() ? "" : " + ") + std::string("(") + to_string(t.weight) + ")·" +
                      t.kappa.to_text() + "·P[" + t.rest.to_string() + ", r=" + std::to_string(t.r) + "]";
            }
            ok = ok && sum == rep.minus;
            c.report.expect(ok, where);
            c.lines.push_back(where + ": M = " + (expr.empty() ? "0" : expr));
          }
        }
      }
    }
    res.checks.push_back(std::move(c));
  });
}

SuiteResult fz_equiv_suite(int gmax, int rmax) {
  return timed("fz-equiv", [&](SuiteResult& res) {
    SuiteCheck tri{"SQ to FZ decomposition unit-triangular, |sigma| <= 5", {}, {}};
    for (const auto& row : decompose_sq_in_fz(5)) {
      CheckReport r = check_sq_row(row, 8);
      tri.report.expect(r.ok, row.sigma.to_string() + (r.ok ? "" : ": " + r.first_failure()));
    }
    SuiteCheck row111{"SQ_(111) = (4/3)k_1 z FZ_() + (-1/3 - k_0/2) FZ_(1) + FZ_(111)", {}, {}};
    SqFzRow row = decompose_sq_row(Partition({1, 1, 1}));
    KappaPoly k1 = KappaPoly::kappa(1) * frac(4, 3);
    KappaPoly mid = KappaPoly(frac(-1, 3)) - KappaPoly::kappa(0) * frac(1, 2);
    row111.report.expect(row.coeff.size() == 3, "three entries");
    row111.report.expect(row.coeff.count(Partition()) && row.coeff.at(Partition()) == SymPoly::constant(k1, 1),
                         "() entry");
    row111.report.expect(row.coeff.count(Partition({1})) && row.coeff.at(Partition({1})) == SymPoly::constant(mid),
                         "(1) entry");
    row111.report.expect(row.coeff.count(Partition({1, 1, 1})) &&
                             row.coeff.at(Partition({1, 1, 1})) == SymPoly::constant(KappaPoly(1)),
                         "(1,1,1) entry");
    SuiteCheck l5{"lemma5 to (8,8)", lemma5_check(8, 8).report, {}};
    SuiteCheck span{"ideal(prop3) = ideal(fz) within degree, g <= " + std::to_string(gmax) +
                        ", r <= " + std::to_string(rmax),
                    {}, {}};
    for (int g = 2; g <= gmax; ++g) {
      for (int r = 1; r <= rmax; ++r) {
        auto pa = family_relations(Family::Prop3, g, r), fa = family_relations(Family::Fz, g, r);
        if (pa.empty() && fa.empty()) continue;
        RelationMatrix lp(r), lf(r);
        for (const auto& x : pa) lp.add_relation(x);
        for (const auto& x : fa) lf.add_relation(x);
        auto ip = ideal_within_degree(family_relations_upto(Family::Prop3, g, r), r);
        auto iff = ideal_within_degree(family_relations_upto(Family::Fz, g, r), r);
        bool eq = span_equal(ip, iff);
        span.report.expect(eq, cell(g, r, -1, "*"));
        span.lines.push_back(cell(g, r, -1, "*") + ": ideal ranks " + std::to_string(rank(ip)) + "/" +
                             std::to_string(rank(iff)) + (eq ? " equal" : " DIFFER") + "; linear ranks " +
                             std::to_string(rank(lp)) + "/" + std::to_string(rank(lf)) +
                             (span_equal(lp, lf) ? " equal" : " differ"));
      }
    }
    res.checks = {tri, row111, l5, span};
  });
}

SuiteResult thm1_span_suite(int gmax, int rmax) {
  return timed("thm1-span", [&](SuiteResult& res) {
    SuiteCheck c{"faber in span(fz), g <= " + std::to_string(gmax) + ", r <= " + std::to_string(rmax) +
                     ", d <= 2g, |sigma_z| <= 2",
                 {}, {}};
    int zero = 0, nonzero = 0;
    for (int g = 2; g <= gmax; ++g) {
      for (int r = 0; r <= rmax; ++r) {
        RelationMatrix fz(r);
        for (const auto& x : family_relations(Family::Fz, g, r)) fz.add_relation(x);
        for (const auto& z : enumerate_zmonomials(2, 2)) {
          for (int d = 1; d <= 2 * g; ++d) {
            auto rel = thm1_relation(g, r, d, z);
            if (!rel) continue;
            const std::string where = "g=" + std::to_string(g) + " r=" + std::to_string(r) +
                                      " d=" + std::to_string(d) + " z=" + z.to_string();
            std::vector<Rational> v = vectorize(rel->specialized(), r);
            bool is_zero = std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
            if (is_zero) {
              ++zero;
              c.report.expect(true, where);
              c.lines.push_back(where + ": zero");
              continue;
            }
            ++nonzero;
            SpanCertificate cert = span_contains(fz, v);
            c.report.expect(cert.contained, where + ": not in span(fz)");
            c.lines.push_back(where + (cert.contained ? ": contained" : ": NOT CONTAINED"));
          }
        }
      }
    }
    c.lines.push_back("cells: " + std::to_string(zero + nonzero) + " (zero after specialization: " +
                      std::to_string(zero) + ", nonzero: " + std::to_string(nonzero) + ")");
    res.checks.push_back(std::move(c));
  });
}

std::vector<std::string> suite_names() {
  return {"ionel", "ode", "lemma5", "expanded", "genus-shift", "triviality", "prop2", "fz-equiv", "thm1-span"};
}

std::optional<SuiteResult> run_suite(const std::string& name, const SuiteParams& p) {
  auto pick = [](int v, int dflt) { return v >= 0 ? v : dflt; };
  if (name == "ionel") {
    SuiteResult a = ionel_suite(pick(p.order, 20));
    SuiteResult b = lemma_suite();
    a.checks.insert(a.checks.end(), b.checks.begin(), b.checks.end());
    a.seconds += b.seconds;
    return a;
  }
  if (name == "ode") return ode_suite(pick(p.order, 30));
  if (name == "lemma5") return lemma5_suite(pick(p.order, 8));
  if (name == "expanded") return expanded_suite(pick(p.gmax, 14), pick(p.rmax, 8));
  if (name == "genus-shift") return genus_shift_suite(pick(p.gmax, 14), pick(p.rmax, 7));
  if (name == "triviality") return triviality_suite(pick(p.gmax, 14), pick(p.rmax, 7));
  if (name == "prop2") return prop2_suite(pick(p.gmax, 9), pick(p.rmax, 6));
  if (name == "fz-equiv") return fz_equiv_suite(pick(p.gmax, 12), pick(p.rmax, 5));
  if (name == "thm1-span") return thm1_span_suite(pick(p.gmax, 9), pick(p.rmax, 4));
  return std::nullopt;
}

}  // namespace tautring
