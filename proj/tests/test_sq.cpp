#include <doctest.h>

#include "tautring/bernoulli.hpp"
#include "tautring/sq.hpp"

using namespace tautring;

namespace {

const VariableId T = VariableId::t();
const VariableId X = VariableId::x();

KSeries plain_gamma(int r_max, int d_max) {
  TruncationSpec s = TruncationSpec().add(T, r_max).add(X, d_max);
  return sq_gamma(*log_phi_table(d_max, r_max), GammaFlavor::Plain, s);
}

KappaPoly coeff(const KSeries& f, int r, int d) { return f.extract({{T, r}, {X, d}}); }

}  // namespace

TEST_CASE("phi slices and its differential equation") {
  const int d_max = 5, t_hi = 8;
  RSeries phi = phi_series(d_max, t_hi);
  CHECK(phi.extract({{T, 0}, {X, 0}}) == 1);
  for (int k = 1; k <= t_hi; ++k) CHECK(phi.extract({{T, k}, {X, 0}}) == 0);
  for (int k = -1; k + 1 <= t_hi; ++k) CHECK(phi.extract({{T, k}, {X, 1}}) == -1);

  // d (phi_d - t d phi_d) = -phi_{d-1} / t, read coefficient-wise.
  auto at = [&](int k, int d) -> Rational {
    if (k < -d) return 0;
    return phi.extract({{T, k}, {X, d}});
  };
  for (int d = 1; d <= d_max; ++d) {
    for (int k = -d; k + d <= t_hi && k + 1 + (d - 1) <= t_hi; ++k) {
      Rational lhs = d * (at(k, d) - d * at(k - 1, d));
      CHECK(lhs == -at(k + 1, d - 1));
    }
  }
}

TEST_CASE("log phi coefficients") {
  auto table = log_phi_table(6, 10);
  for (int r = -1; r <= 10; ++r) CHECK(table->at(1, r) == -1);
  // C^r_2 = 2^{r+3} - r - 4 from the x^2 slice of log phi.
  for (int r = -1; r <= 10; ++r) CHECK(table->at(2, r) == Rational((1L << (r + 3)) - r - 4));
  CHECK(table->at(2, -1) == 1);
  for (int d = 1; d <= 6; ++d) CHECK_THROWS_AS(table->at(d, -2), OutOfSpec);
}

TEST_CASE("gamma variants") {
  const int r_max = 6, d_max = 3;
  auto table = log_phi_table(d_max, r_max);
  TruncationSpec s2 = sigma_spec(Partition({1, 1}), r_max, d_max);
  KSeries gp = sq_gamma(*table, GammaFlavor::PEnriched, s2);
  KSeries gh = sq_gamma(*table, GammaFlavor::PEnrichedHat, s2);
  KSeries g = plain_gamma(r_max, d_max);
  CHECK(gp.slice(VariableId::p(1), 0) == g);
  CHECK(gh.slice(VariableId::p(1), 0) == g.sign_flip({{T, 1}}));

  KSeries p1 = gp.slice(VariableId::p(1), 1);
  for (int d = 1; d <= d_max; ++d) {
    for (int r = 0; r <= r_max; ++r) {
      KappaPoly want = KappaPoly::monomial(KappaMonomial::kappa(r), table->at(d, r - 1) * d /
                                                                      Rational(factorial(static_cast<unsigned>(d))));
      CHECK(coeff(p1, r, d) == want);
    }
  }
  // Bernoulli part sits at x^0.
  for (int i = 1; 2 * i - 1 <= r_max; ++i) {
    CHECK(coeff(g, 2 * i - 1, 0) ==
          KappaPoly::monomial(KappaMonomial::kappa(2 * i - 1), bernoulli(2 * i) / (2 * i * (2 * i - 1))));
  }
}

TEST_CASE("kappa_{-1} dropped early or late gives the same coefficients") {
  const int r_max = 6, d_max = 3;
  auto table = log_phi_table(d_max, r_max + d_max);
  TruncationSpec lau = TruncationSpec().add(T, r_max + d_max).add(X, d_max).laurent(T, X);
  KSeries sym = series_exp(-sq_gamma(*table, GammaFlavor::Plain, lau, KappaMinusOne::Symbolic));
  KSeries drop = series_exp(-plain_gamma(r_max, d_max));
  bool saw_minus_one = false;
  for (const auto& [e, c] : sym.terms()) {
    for (const auto& [m, q] : c.terms()) saw_minus_one |= m.exponent(-1) > 0;
  }
  CHECK(saw_minus_one);
  for (int r = 0; r <= r_max; ++r) {
    for (int d = 0; d <= d_max; ++d) CHECK(kill_minus_one(coeff(sym, r, d)) == coeff(drop, r, d));
  }
  CHECK_THROWS_AS(sq_gamma(*table, GammaFlavor::Plain, TruncationSpec().add(T, 3).add(X, 2), KappaMinusOne::Symbolic),
                  std::invalid_argument);
}

TEST_CASE("log of the p-enriched phi") {
  // log Phi^p = sum C^r_d t^r x^d / d! * exp(d sum p_i t^i), with Phi^p built from its definition.
  const int d_max = 3, t_hi = 5;
  TruncationSpec s = TruncationSpec()
                         .add(T, t_hi)
                         .add(X, d_max)
                         .add(VariableId::p(1), 2)
                         .add(VariableId::p(2), 1)
                         .laurent(T, X);
  RSeries phip(s);
  auto table = log_phi_table(d_max, t_hi);
  RSeries want(s);
  for (int a1 = 0; a1 <= 2; ++a1) {
    for (int a2 = 0; a2 <= 1; ++a2) {
      Partition sigma = Partition::from_multiplicities(a2 ? std::map<int, int>{{1, a1}, {2, a2}}
                                                          : (a1 ? std::map<int, int>{{1, a1}} : std::map<int, int>{}));
      for (int d = 0; d <= d_max; ++d) {
        Rational w = Rational(sign_power(d)) / Rational(factorial(static_cast<unsigned>(d)) * sigma.aut());
        for (int k = 0; k < sigma.length(); ++k) w *= d;
        auto p = inverse_falling_product(d, t_hi);
        for (int k = 0; k <= t_hi; ++k) {
          phip.add_term({{T, k - d + sigma.size()}, {X, d}, {VariableId::p(1), a1}, {VariableId::p(2), a2}},
                        w * p[static_cast<std::size_t>(k)]);
        }
        if (d == 0) continue;
        Rational v = Rational(1) / Rational(factorial(static_cast<unsigned>(d)) * sigma.aut());
        for (int k = 0; k < sigma.length(); ++k) v *= d;
        for (int r = -1; r + d + sigma.size() <= t_hi; ++r) {
          want.add_term({{T, r + sigma.size()}, {X, d}, {VariableId::p(1), a1}, {VariableId::p(2), a2}},
                        table->at(d, r) * v);
        }
      }
    }
  }
  CHECK(series_log(phip) == want);
}

TEST_CASE("theorem 2 relations") {
  CHECK_FALSE(thm2_relation(5, 2, 1).has_value());
  auto rel = thm2_relation(3, 2, 1);
  REQUIRE(rel.has_value());
  KappaPoly spec = rel->specialized();
  CHECK_FALSE(spec.is_zero());
  CHECK(spec.is_homogeneous(2));

  KSeries eg = series_exp(-plain_gamma(8, 5));
  for (int r = 0; r <= 8; ++r) {
    for (int d = 0; d <= 5; ++d) CHECK(coeff(eg, r, d).is_homogeneous(r));
  }
  int zero_cases = 0;
  for (int g = 2; g <= 14; ++g) {
    for (int r = 0; r <= 7; ++r) {
      for (int d = 1; d <= 8; ++d) {
        auto x = thm2_relation(g, r, d);
        if (!x || 3 * r >= g + 1) continue;
        CHECK(x->specialized().is_zero());
        ++zero_cases;
      }
    }
  }
  CHECK(zero_cases > 10);
}

TEST_CASE("theorem 3 for small sigma") {
  const int r_max = 6, d_max = 4;
  KSeries eg = series_exp(-plain_gamma(r_max, d_max));
  auto table = log_phi_table(d_max, r_max);
  KSeries f11 = f_series(1, 1, *table, r_max, d_max);
  KSeries k0 = KSeries::constant(eg.spec(), KappaPoly::kappa(0));
  KSeries alt = eg * (k0 + f11 + f11);
  for (int g = 2; g <= 10; ++g) {
    for (int r = 0; r <= r_max; ++r) {
      for (int d = 1; d <= d_max; ++d) {
        auto e = thm3_relation(g, r, d, Partition());
        if (e) {
          if ((g - r) % 2 != 0) {
            CHECK(e->poly == coeff(eg, r, d) * Rational(2));
          } else {
            CHECK(e->poly.is_zero());
          }
        }
        auto one = thm3_relation(g, r, d, Partition({1}));
        if (!one) continue;
        if ((g - r) % 2 != 0) {
          CHECK(one->poly == -(KappaPoly::kappa(0) * coeff(eg, r, d)));
        } else {
          CHECK(one->poly == coeff(alt, r, d));
        }
      }
    }
  }
}

TEST_CASE("F series: direct and operator constructions agree") {
  const int t_hi = 7, x_hi = 4;
  auto table = log_phi_table(x_hi, t_hi + x_hi);
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      CHECK(f_series(n, m, *table, t_hi, x_hi) == f_series_operator(n, m, *table, t_hi, x_hi));
    }
  }
  KSeries f11 = f_series(1, 1, *table, t_hi, x_hi);
  for (int k = 0; k <= t_hi; ++k) CHECK(coeff(f11, k, 1) == KappaPoly::kappa(k));
  CHECK(f11.spec().size() == 2);
}

TEST_CASE("expanded forms match the worked cases") {
  const int r_max = 7, d_max = 3;
  auto table = log_phi_table(d_max, r_max);
  KSeries eg = series_exp(-plain_gamma(r_max, d_max));
  const TruncationSpec& s = eg.spec();
  auto kt = [&](int k) { return KSeries::monomial(s, {{T, k - 1}}, KappaPoly::kappa(k - 1)); };
  auto F = [&](int n, int m) { return f_series(n, m, *table, r_max, d_max); };

  for (int k = 1; k <= 3; ++k) {
    KSeries plus_k = eg * (kt(k) + F(1, k) + F(1, k));
    KSeries plus_kk = eg * (kt(k) * kt(k) + kt(k) * F(1, k) + kt(k) * F(1, k) + F(2, 2 * k) + F(2, 2 * k) +
                            F(1, k) * F(1, k) + F(1, k) * F(1, k));
    for (int r = 0; r <= r_max; ++r) {
      for (int d = 0; d <= d_max; ++d) {
        CHECK(expanded_poly(r, d, Partition({k}), +1) == coeff(plus_k, r, d));
        CHECK(expanded_poly(r, d, Partition({k, k}), +1) == coeff(plus_kk, r, d));
      }
    }
  }
  for (auto [k1, k2] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    KSeries minus = eg * (kt(k1) * kt(k2) + kt(k1) * F(1, k2) + kt(k2) * F(1, k1));
    KSeries plus = minus + eg * (F(2, k1 + k2) + F(2, k1 + k2) + F(1, k1) * F(1, k2) + F(1, k1) * F(1, k2));
    for (int r = 0; r <= r_max; ++r) {
      for (int d = 0; d <= d_max; ++d) {
        CHECK(expanded_poly(r, d, Partition({k1, k2}), -1) == coeff(minus, r, d));
        CHECK(expanded_poly(r, d, Partition({k1, k2}), +1) == coeff(plus, r, d));
      }
    }
  }
}

TEST_CASE("expanded form equals the automorphism-weighted theorem 3 relation") {
  int checked = 0;
  for (const auto& sigma : enumerate_partitions(3)) {
    for (int g = 2; g <= 9; ++g) {
      for (int r = 0; r <= 6; ++r) {
        for (int d = 1; d <= 3; ++d) {
          auto t3 = thm3_relation(g, r, d, sigma);
          if (!t3) continue;
          int sign = expanded_parity(g, r, sigma);
          auto ex = expanded_relation(g, r, d, sigma, sign);
          REQUIRE(ex.has_value());
          CHECK(ex->poly == t3->poly * Rational(sign * sigma.aut()));
          CHECK_FALSE(expanded_relation(g, r, d, sigma, -sign).has_value());
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("genus shift") {
  for (const auto& sigma : enumerate_partitions(2)) {
    for (int g = 4; g <= 10; ++g) {
      for (int r = 0; r <= 6; ++r) {
        for (int d = 1; d <= 3; ++d) {
          auto hi = thm3_relation(g, r, d, sigma);
          auto lo = thm3_relation(g - 2, r, d, sigma);
          if (hi && lo) CHECK(hi->poly == lo->poly);
        }
      }
    }
  }
}

TEST_CASE("tanh coefficients") {
  CHECK(tanh_half_coefficient(0) == 0);
  CHECK(tanh_half_coefficient(1) == frac(1, 2));
  CHECK(tanh_half_coefficient(2) == 0);
  CHECK(tanh_half_coefficient(3) == frac(-1, 4));
  CHECK(tanh_half_coefficient(5) == frac(1, 2));
}

TEST_CASE("minus parity reduces to plus parity of smaller partitions") {
  // sigma = (k): kappa_{k-1} times the sigma = empty relation.
  for (int k = 1; k <= 3; ++k) {
    for (int g = 2; g <= 9; ++g) {
      for (int r = 0; r <= 6; ++r) {
        for (int d = 1; d <= 3; ++d) {
          auto rep = prop2_check(g, r, d, Partition({k}));
          if (!rep.applicable) continue;
          CHECK(rep.ok);
          REQUIRE(rep.terms.size() == 1);
          CHECK(rep.terms[0].rest.empty());
          CHECK(rep.terms[0].r == r - k + 1);
        }
      }
    }
  }
  int ok = 0;
  for (const auto& sigma : enumerate_partitions(4)) {
    if (sigma.empty()) {
      CHECK_FALSE(prop2_check(3, 2, 1, sigma).applicable);
      continue;
    }
    for (int g = 2; g <= 8; ++g) {
      for (int r = 0; r <= 6; ++r) {
        for (int d = 1; d <= 2; ++d) {
          auto rep = prop2_check(g, r, d, sigma);
          if (!rep.applicable) continue;
          CHECK(rep.ok);
          for (const auto& t : rep.terms) CHECK(t.rest.size() < sigma.size());
          ++ok;
        }
      }
    }
  }
  CHECK(ok > 50);
}
