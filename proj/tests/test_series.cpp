#include "doctest.h"
#include "support.hpp"
#include "tautring/bernoulli.hpp"
#include "tautring/series.hpp"

using namespace tautring;
using testing::Dense;
using testing::Gen;

namespace {

const VariableId t = VariableId::t();
const VariableId x = VariableId::x();
const VariableId y = VariableId::y();

TruncationSpec tx(int n, int m) { return TruncationSpec().add(t, n).add(x, m); }

Dense to_dense(const RSeries& f, int n, int m) {
  Dense d(n, m);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= m; ++j) d.a[i][j] = f.extract({{t, i}, {x, j}});
  return d;
}

void check_equal(const RSeries& f, const Dense& d) {
  for (int i = 0; i <= d.n(); ++i)
    for (int j = 0; j <= d.m(); ++j) CHECK(f.extract({{t, i}, {x, j}}) == d.a[i][j]);
}

// exp by the plain power sum, log by the Mercator series.
Dense dense_exp(const Dense& f) {
  Dense out(f.n(), f.m());
  Dense power(f.n(), f.m());
  power.a[0][0] = 1;
  out.a[0][0] = 1;
  for (int k = 1; k <= f.n() + f.m(); ++k) {
    power = power.mul(f);
    out = out.add(power, Rational(1) / Rational(factorial(static_cast<unsigned>(k))));
  }
  return out;
}

Dense dense_log(const Dense& f) {
  Dense g = f;
  g.a[0][0] -= 1;
  Dense out(f.n(), f.m());
  Dense power(f.n(), f.m());
  power.a[0][0] = 1;
  for (int k = 1; k <= f.n() + f.m(); ++k) {
    power = power.mul(g);
    out = out.add(power, frac(k % 2 ? 1 : -1, k));
  }
  return out;
}

}  // namespace

TEST_CASE("difference of squares and monomial products") {
  auto s = TruncationSpec().add(x, 4);
  RSeries one = RSeries::constant(s, 1);
  RSeries xx = RSeries::monomial(s, {{x, 1}}, 1);
  RSeries p = (one + xx) * (one - xx);
  CHECK(p == one - RSeries::monomial(s, {{x, 2}}, 1));
  CHECK(RSeries::monomial(s, {{x, 1}}, 1) * RSeries::monomial(s, {{x, 2}}, 1) == RSeries::monomial(s, {{x, 3}}, 1));
  // Beyond the bound the product is truncated, never reported.
  CHECK((RSeries::monomial(s, {{x, 3}}, 1) * RSeries::monomial(s, {{x, 3}}, 1)).is_zero());
}

TEST_CASE("exp and log on classical inputs") {
  auto s = TruncationSpec().add(x, 3);
  CHECK(series_exp(RSeries(s)) == RSeries::constant(s, 1));
  CHECK(series_log(RSeries::constant(s, 1)).is_zero());
  auto e = series_exp(RSeries::monomial(s, {{x, 1}}, 1));
  CHECK(e.extract({{x, 2}}) == Rational(1, 2));
  CHECK(e.extract({{x, 3}}) == Rational(1, 6));
  RSeries onex = RSeries::constant(s, 1) + RSeries::monomial(s, {{x, 1}}, 1);
  auto l = series_log(onex);
  CHECK(l.extract({{x, 1}}) == 1);
  CHECK(l.extract({{x, 2}}) == Rational(-1, 2));
  CHECK(l.extract({{x, 3}}) == Rational(1, 3));

  RSeries f = onex + RSeries::monomial(s, {{x, 2}}, 3);
  CHECK(series_exp(series_log(f)) == f);
  CHECK_THROWS(series_exp(onex));
  CHECK_THROWS(series_log(RSeries::monomial(s, {{x, 1}}, 1)));
}

TEST_CASE("multiplication, exp and log agree with the dense oracle") {
  Gen gen(11);
  for (int trial = 0; trial < 12; ++trial) {
    int n = gen.integer(1, 4);
    int m = gen.integer(1, 4);
    auto s = tx(n, m);
    RSeries a = gen.series(s);
    RSeries b = gen.series(s);
    check_equal(a * b, to_dense(a, n, m).mul(to_dense(b, n, m)));
    check_equal(RSeries::multiply(a, b, 1), to_dense(a, n, m).mul(to_dense(b, n, m)));
    RSeries a0 = a - RSeries::constant(s, a.constant_term());
    check_equal(series_exp(a0), dense_exp(to_dense(a0, n, m)));
    RSeries u = gen.series(s, 0.6, true);
    check_equal(series_log(u), dense_log(to_dense(u, n, m)));
    check_equal(series_inverse(u) * u, dense_exp(Dense(n, m)));
  }
}

TEST_CASE("serial and parallel kernels agree") {
  Gen gen(5);
  auto s = TruncationSpec().add(t, 8).add(x, 8).add(y, 3);
  RSeries a = gen.series(s, 0.8);
  RSeries b = gen.series(s, 0.8);
  CHECK(RSeries::multiply(a, b, 1) == RSeries::multiply(a, b, 4));
}

TEST_CASE("Laurent variable: pole order tied to the partner") {
  auto s = TruncationSpec().add(t, 3).add(x, 3).laurent(t, x);
  RSeries f(s);
  f.add_term({{t, -1}, {x, 1}}, 1);
  CHECK_THROWS(f.add_term({{t, -2}, {x, 1}}, 1));
  RSeries g = f * f;
  CHECK(g.extract({{t, -2}, {x, 2}}) == 1);
  // Shifted bound: t^1 x^3 has shifted exponent 4 > 3.
  CHECK_THROWS_AS(g.extract({{t, 1}, {x, 3}}), OutOfSpec);
  CHECK(g.extract({{t, 0}, {x, 3}}) == 0);
  CHECK_THROWS(f.euler(t, 1));
  CHECK(f.euler(x, 2).extract({{t, -1}, {x, 1}}) == 1);
}

TEST_CASE("Laurent products are exact inside the shifted region") {
  // Compare against the same computation with larger bounds.
  Gen gen(3);
  for (int trial = 0; trial < 5; ++trial) {
    auto big = TruncationSpec().add(t, 6).add(x, 6).laurent(t, x);
    auto small = TruncationSpec().add(t, 3).add(x, 3).laurent(t, x);
    RSeries a(big);
    RSeries b(big);
    for (int j = 0; j <= 6; ++j)
      for (int i = -j; i + j <= 6; ++i) {
        a.add_term({{t, i}, {x, j}}, gen.rational());
        b.add_term({{t, i}, {x, j}}, gen.rational());
      }
    RSeries full = a * b;
    RSeries part = a.restrict(small) * b.restrict(small);
    for (const auto& [e, c] : part.terms()) CHECK(full.extract(e) == c);
    CHECK(full.restrict(small) == part);
    RSeries a0 = a - RSeries::constant(big, a.constant_term());
    CHECK(series_exp(a0).restrict(small) == series_exp(a0.restrict(small)));
  }
}

TEST_CASE("extract refuses monomials outside the spec") {
  auto s = TruncationSpec().add(y, 3);
  RSeries f = RSeries::constant(s, 1) + RSeries::monomial(s, {{y, 1}}, 4);
  CHECK(f.extract({{y, 1}}) == 4);
  CHECK(f.extract({{y, 3}}) == 0);
  CHECK_THROWS_AS(f.extract({{y, 4}}), OutOfSpec);
}

TEST_CASE("Euler operator") {
  auto s = TruncationSpec().add(x, 5);
  RSeries xk = RSeries::monomial(s, {{x, 4}}, 1);
  CHECK(xk.euler(x, 1) == xk.scaled(4));
  RSeries f = RSeries::constant(s, 1) + RSeries::monomial(s, {{x, 1}}, 1) + RSeries::monomial(s, {{x, 2}}, 1);
  CHECK(f.euler(x, 0) == f);

  // exp(lambda x d/dx) f = f(e^lambda x), lambda a formal variable to order 3.
  auto sl = TruncationSpec().add(t, 3).add(x, 2);
  RSeries lhs(sl);
  Rational lam_pow_over_fact = 1;
  for (int n = 0; n <= 3; ++n) {
    RSeries term = f.euler(x, static_cast<unsigned>(n)).restrict(TruncationSpec().add(x, 2));
    for (const auto& [e, c] : term.terms()) {
      lhs.add_term({{t, n}, {x, e[0]}}, c * lam_pow_over_fact);
    }
    lam_pow_over_fact /= (n + 1);
  }
  // f(e^t x) = 1 + e^t x + e^{2t} x^2
  RSeries rhs = RSeries::constant(sl, 1);
  for (int k = 1; k <= 2; ++k) {
    RSeries kt = RSeries::monomial(sl, {{t, 1}}, k);
    rhs += series_exp(kt) * RSeries::monomial(sl, {{x, k}}, 1);
  }
  CHECK(lhs == rhs);
}

TEST_CASE("composition") {
  const int n = 9;
  std::vector<Rational> sin_c(n + 1), asin_c(n + 1);
  for (int k = 0; 2 * k + 1 <= n; ++k) {
    sin_c[static_cast<std::size_t>(2 * k + 1)] =
        Rational(k % 2 ? -1 : 1) / Rational(factorial(static_cast<unsigned>(2 * k + 1)));
    Rational a = Rational(factorial(static_cast<unsigned>(2 * k)));
    Integer fk = factorial(static_cast<unsigned>(k));
    a /= Rational(Integer(1) << (2 * k)) * Rational(fk * fk) * (2 * k + 1);
    asin_c[static_cast<std::size_t>(2 * k + 1)] = a;
  }
  RSeries sin_s = univariate(t, n, sin_c);
  RSeries asin_s = univariate(t, n, asin_c);
  CHECK(series_compose(sin_s, asin_s) == RSeries::monomial(asin_s.spec(), {{t, 1}}, 1));
  RSeries ident = univariate(t, n, {0, 1});
  CHECK(series_compose(sin_s, ident) == sin_s);
  CHECK_THROWS(series_compose(sin_s, RSeries::constant(asin_s.spec(), 1)));
}

TEST_CASE("binomial powers") {
  auto s = TruncationSpec().add(y, 4);
  CHECK(binomial_power(y, 2, s) == RSeries::constant(s, 1) + RSeries::monomial(s, {{y, 1}}, 4));
  auto inv = binomial_power(y, -2, s);
  CHECK(inv.extract({{y, 1}}) == -4);
  CHECK(inv.extract({{y, 2}}) == 16);
  CHECK(inv.extract({{y, 3}}) == -64);
  auto root = binomial_power(y, 1, s);
  CHECK(root.extract({{y, 1}}) == 2);
  CHECK(root.extract({{y, 2}}) == -2);
  CHECK(root.extract({{y, 3}}) == 4);
  CHECK(root.extract({{y, 4}}) == -10);
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b) CHECK(binomial_power(y, a, s) * binomial_power(y, b, s) == binomial_power(y, a + b, s));
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (unsigned n = 3; n < 40; n += 2) CHECK(bernoulli(n) == 0);
  // t/(e^t - 1) times (e^t - 1)/t is 1.
  const int n = 14;
  std::vector<Rational> b(n + 1), e(n + 1);
  for (int k = 0; k <= n; ++k) {
    b[static_cast<std::size_t>(k)] = bernoulli(static_cast<unsigned>(k)) / Rational(factorial(static_cast<unsigned>(k)));
    e[static_cast<std::size_t>(k)] = Rational(1) / Rational(factorial(static_cast<unsigned>(k + 1)));
  }
  CHECK(univariate(t, n, b) * univariate(t, n, e) == univariate(t, n, {1}));
}

TEST_CASE("property: log of products, exp of sums, Leibniz") {
  Gen gen(2024);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = TruncationSpec().add(x, gen.integer(1, 4)).add(y, gen.integer(0, 3));
    RSeries f = gen.series(s, 0.7, true);
    RSeries g = gen.series(s, 0.7, true);
    CHECK(series_log(f * g) == series_log(f) + series_log(g));
    CHECK(series_exp(series_log(f)) == f);
    RSeries a = series_log(f);
    RSeries b = series_log(g);
    CHECK(series_exp(a + b) == series_exp(a) * series_exp(b));
    CHECK(series_log(series_exp(a)) == a);
    CHECK((f * g).euler(x, 1) == f.euler(x, 1) * g + f * g.euler(x, 1));
  }
}

TEST_CASE("derivative, shift, slice and rename") {
  auto s = TruncationSpec().add(x, 4).add(y, 2);
  RSeries f(s);
  f.add_term({{x, 3}, {y, 1}}, 2);
  f.add_term({{x, 0}, {y, 2}}, 5);
  auto d = f.derivative(x);
  CHECK(d.extract({{x, 2}, {y, 1}}) == 6);
  CHECK_THROWS_AS(d.extract({{x, 4}}), OutOfSpec);
  auto sh = f.shift(x, 2);
  CHECK(sh.extract({{x, 5}, {y, 1}}) == 2);
  auto sl = f.slice(y, 1);
  CHECK(sl.extract({{x, 3}}) == 2);
  auto rn = f.renamed(x, t);
  CHECK(rn.extract({{t, 3}, {y, 1}}) == 2);
}
