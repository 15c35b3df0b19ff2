#include <doctest.h>

#include "tautring/bernoulli.hpp"
#include "tautring/faber.hpp"

using namespace tautring;

namespace {

const VariableId T = VariableId::t();
const VariableId X = VariableId::x();

ZMonomial zm(const std::string& s) { return s.empty() ? ZMonomial() : ZMonomial::parse(s); }

}  // namespace

TEST_CASE("theta slices, its ODE and the closed form") {
  const int d_max = 6, t_hi = 7;
  RSeries th = theta_series(d_max, t_hi);
  CHECK(th.extract({{T, 0}, {X, 0}}) == 1);
  CHECK(th.extract({{T, -1}, {X, 1}}) == -1);
  CHECK(th.extract({{T, 0}, {X, 1}}) == -1);
  CHECK(th.extract({{T, 1}, {X, 1}}) == 0);
  // (1+t)(1+2t)/(2 t^2) x^2
  CHECK(th.extract({{T, -2}, {X, 2}}) == frac(1, 2));
  CHECK(th.extract({{T, -1}, {X, 2}}) == frac(3, 2));
  CHECK(th.extract({{T, 0}, {X, 2}}) == 1);

  // t (1+x) dTheta/dx + (t+1) Theta = 0, coefficient of t^k x^d.
  auto at = [&](int k, int d) -> Rational {
    if (d < 0 || k < -d) return 0;
    return th.extract({{T, k}, {X, d}});
  };
  for (int d = 0; d < d_max; ++d) {
    for (int k = -d; k + d + 1 <= t_hi; ++k) {
      Rational v = (d + 1) * at(k - 1, d + 1) + d * at(k - 1, d) + at(k - 1, d) + at(k, d);
      CHECK(v == 0);
    }
  }
  CHECK((th - theta_closed_form(d_max, t_hi)).is_zero());
}

TEST_CASE("exp(D) Theta closed expansion matches operator iteration") {
  for (const char* s : {"", "1:0", "1:1", "2:1", "1:0,1:0", "1:1,2:1", "1:0,2:1,2:2", "3:2,1:1,1:1"}) {
    ZMonomial sigma = zm(s);
    CAPTURE(sigma.to_string());
    RSeries a = theta_d_series(sigma, 5, 6);
    RSeries b = theta_d_by_operator(sigma, 5, 6);
    CHECK((a - b).is_zero());
  }
}

TEST_CASE("C^r_d for the empty monomial") {
  auto lg = theta_d_log(ZMonomial(), 4, 6);
  CHECK(lg->at(ZMonomial(), 1, -1) == -1);
  CHECK(lg->at(ZMonomial(), 1, 0) == -1);
  for (int r = 1; r <= 6; ++r) CHECK(lg->at(ZMonomial(), 1, r) == 0);
  // log Theta = -(1 + 1/t) log(1+x): C^r_d = 0 for r >= 1, C^{-1}_d = C^0_d = (-1)^d (d-1)!.
  for (int d = 1; d <= 4; ++d) {
    Rational v = Rational(factorial(static_cast<unsigned>(d - 1)));
    if (d % 2) v = -v;
    CHECK(lg->at(ZMonomial(), d, -1) == v);
    CHECK(lg->at(ZMonomial(), d, 0) == v);
    for (int r = 1; r <= 6; ++r) CHECK(lg->at(ZMonomial(), d, r) == 0);
  }
  CHECK_THROWS_AS(lg->at(ZMonomial(), 5, 0), OutOfSpec);
}

TEST_CASE("log exp(D) Theta has at most a simple pole") {
  for (const auto& sigma : enumerate_zmonomials(3, 3)) {
    CAPTURE(sigma.to_string());
    CHECK_NOTHROW(theta_d_log(sigma, 4, 3));
  }
}

TEST_CASE("C^r_d(tau) agrees with the logarithm of the operator series") {
  ZMonomial sigma = zm("1:0,2:1");
  const int d_max = 4, r_max = 3;
  auto lg = theta_d_log(sigma, d_max, r_max);
  RSeries l = series_log(theta_d_by_operator(sigma, d_max, r_max + d_max));
  for (const auto& tau : z_divisors(sigma)) {
    Exponents e = z_exponents(l.spec(), tau);
    for (int d = 1; d <= d_max; ++d) {
      for (int r = -1; r <= r_max; ++r) {
        e[l.spec().require_index(T)] = static_cast<std::int16_t>(r);
        e[l.spec().require_index(X)] = static_cast<std::int16_t>(d);
        CHECK(lg->at(tau, d, r) == Rational(factorial(static_cast<unsigned>(d))) * l.extract(e));
      }
    }
  }
}

TEST_CASE("faber gamma") {
  KSeries gm = faber_gamma(ZMonomial(), 3, 5);
  CHECK(gm.extract({{T, 1}, {X, 0}}) == KappaPoly::monomial(KappaMonomial::kappa(1), frac(1, 12)));
  CHECK(gm.extract({{T, 3}, {X, 0}}) == KappaPoly::monomial(KappaMonomial::kappa(3), frac(-1, 360)));
  CHECK(gm.extract({{T, 0}, {X, 1}}) == KappaPoly::monomial(KappaMonomial::kappa(0), -1));
  CHECK(gm.extract({{T, 0}, {X, 2}}) == KappaPoly::monomial(KappaMonomial::kappa(0), frac(1, 2)));
  CHECK(gm.extract({{T, 2}, {X, 1}}).is_zero());
}

TEST_CASE("theorem 1 applicability") {
  CHECK_FALSE(thm1_applicable(3, 2, 4, ZMonomial()));
  CHECK_FALSE(thm1_relation(3, 2, 4, ZMonomial()).has_value());
  CHECK_FALSE(thm1_applicable(1, 2, 5, ZMonomial()));
  CHECK_FALSE(thm1_applicable(3, 0, 5, zm("1:3")));
  CHECK(thm1_applicable(3, 2, 5, ZMonomial()));
}

TEST_CASE("theorem 1 for the empty monomial is binomial(kappa_0, d) times the Bernoulli part") {
  // gamma = bern - kappa_0 log(1+x) - kappa_{-1} log(1+x)/t, so exp(-gamma) = exp(-bern) (1+x)^kappa_0.
  for (int r = 0; r <= 5; ++r) {
    for (int d = 3; d <= 7; ++d) {
      TruncationSpec s = TruncationSpec().add(T, r);
      KSeries bern(s);
      for (int i = 1; 2 * i - 1 <= r; ++i) {
        bern.add_term({{T, 2 * i - 1}},
                      KappaPoly::monomial(KappaMonomial::kappa(2 * i - 1), bernoulli(2 * i) / (2 * i * (2 * i - 1))));
      }
      KappaPoly binom = 1;
      for (int k = 0; k < d; ++k) binom = binom * (KappaPoly::kappa(0) - KappaPoly(k)) * frac(1, k + 1);
      KappaPoly expect = series_exp(-bern).extract({{T, r}}) * binom;
      for (int g = 2; 2 * g - 2 < d; ++g) {
        auto rel = thm1_relation(g, r, d, ZMonomial());
        if (!rel) continue;
        CHECK(rel->poly == expect);
        CHECK(rel->specialized().is_zero());
      }
    }
  }
}

TEST_CASE("theorem 1 against the operator-iteration oracle") {
  for (const char* s : {"3:2", "1:1,2:1", "2:1,2:1", "3:3", "1:0,3:2"}) {
    ZMonomial sigma = zm(s);
    const int r_max = 3, d_max = 4;
    RSeries lg = series_log(theta_d_by_operator(sigma, d_max, r_max + d_max));
    TruncationSpec ks = TruncationSpec().add(T, r_max).add(X, d_max);
    for (const auto& [ij, a] : sigma.multiplicities()) ks.add(VariableId::zij(ij.first, ij.second), a);
    KSeries gm(ks);
    for (int i = 1; 2 * i - 1 <= r_max; ++i) {
      gm.add_term({{T, 2 * i - 1}},
                  KappaPoly::monomial(KappaMonomial::kappa(2 * i - 1), bernoulli(2 * i) / (2 * i * (2 * i - 1))));
    }
    const std::size_t ti = lg.spec().require_index(T);
    for (const auto& [e, c] : lg.terms()) {
      if (e[ti] < 0) continue;
      auto m = ks.embed(e, lg.spec());
      if (m && ks.admits(*m)) gm.add_term(*m, KappaPoly::monomial(KappaMonomial::kappa(e[ti]), c));
    }
    KSeries ex = series_exp(-gm);
    for (int r = 1; r <= r_max; ++r) {
      for (int d = 3; d <= d_max; ++d) {
        auto rel = thm1_relation(2, r, d, sigma);
        if (!rel) continue;
        Exponents e = z_exponents(ks, sigma);
        e[ks.require_index(T)] = static_cast<std::int16_t>(r);
        e[ks.require_index(X)] = static_cast<std::int16_t>(d);
        CAPTURE(s);
        CAPTURE(r);
        CAPTURE(d);
        CHECK(rel->poly == ex.extract(e));
      }
    }
  }
  auto rel = thm1_relation(2, 1, 3, zm("3:2"));
  REQUIRE(rel.has_value());
  CHECK(rel->family == Family::Faber);
  CHECK_FALSE(rel->specialized().is_zero());
  CHECK(rel->specialized().is_homogeneous(1));
}

TEST_CASE("genus 3 has no degree-1 theorem 1 relation") {
  // kappa_1 is nonzero in degree 1 of the genus-3 ring.
  for (const auto& sigma : enumerate_zmonomials(3, 2)) {
    for (int d = 5; d <= 6; ++d) {
      auto rel = thm1_relation(3, 1, d, sigma);
      if (!rel) continue;
      CAPTURE(sigma.to_string());
      CHECK(rel->specialized().is_zero());
    }
  }
}

TEST_CASE("theorem 1 relations are homogeneous and genus independent") {
  for (const auto& sigma : enumerate_zmonomials(2, 2)) {
    for (int g = 2; g <= 4; ++g) {
      for (int r = 0; r <= 4; ++r) {
        for (int d = 2 * g - 1; d <= 2 * g + 1; ++d) {
          auto rel = thm1_relation(g, r, d, sigma);
          if (!rel) continue;
          CAPTURE(sigma.to_string());
          CAPTURE(g);
          CAPTURE(r);
          CAPTURE(d);
          CHECK(rel->poly.is_homogeneous(r));
          if (thm1_applicable(g + 1, r, d, sigma)) CHECK(thm1_relation(g + 1, r, d, sigma)->poly == rel->poly);
        }
      }
    }
  }
}
