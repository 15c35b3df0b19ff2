#include "tautring/ionel.hpp"

#include <functional>
#include <stdexcept>

#include "tautring/bernoulli.hpp"
#include "tautring/cache.hpp"
#include "tautring/sq.hpp"

namespace tautring {

namespace {

const VariableId kT = VariableId::t();
const VariableId kX = VariableId::x();
const VariableId kU = VariableId::u();
const VariableId kY = VariableId::y();

Rational pow_int(long base, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

std::string where(int a, int b) { return "t^" + std::to_string(a) + " x^" + std::to_string(b); }

}  // namespace

namespace detail {

Rational binom4(int half_exponent, int i) {
  return binomial(frac(half_exponent, 2), static_cast<unsigned>(i)) * pow_int(4, i);
}

}  // namespace detail

IonelTables::IonelTables(int k_max, int n_max) : k_max_(k_max), n_max_(n_max) {
  if (k_max < 0 || n_max < 0) throw std::invalid_argument("negative table bound");
  const auto K = static_cast<std::size_t>(k_max);
  q_.assign(K + 1, {});
  for (int k = 0; k <= k_max; ++k) q_[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(k) + 1, 0);
  auto qv = [&](int k, int j) -> Rational {
    if (k < 0 || j < 0 || j > k) return 0;
    return q_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
  };
  q_[0][0] = 1;
  for (int k = 1; k <= k_max; ++k) {
    for (int j = 0; j <= k; ++j) {
      Rational v = (2 * k + 4 * j - 2) * qv(k - 1, j - 1) + (j + 1) * qv(k - 1, j);
      for (int m = 0; m <= k - 1; ++m) {
        for (int l = 0; l <= j - 1; ++l) v += qv(m, l) * qv(k - 1 - m, j - 1 - l);
      }
      q_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = v;
    }
  }

  c_.assign(K + 1, {});
  for (int k = 1; k <= k_max; ++k) {
    auto& row = c_[static_cast<std::size_t>(k)];
    row.assign(static_cast<std::size_t>(k) + 2, 0);
    for (int j = k; j >= 0; --j) {
      row[static_cast<std::size_t>(j)] =
          (qv(k, j) - (j + 1) * row[static_cast<std::size_t>(j + 1)]) / (2 * k + 4 * j);
    }
    row.pop_back();
  }

  const int nb = std::max(n_max, 1);
  b_.assign(static_cast<std::size_t>(nb) + 1, {});
  b_[1] = {frac(1, 2)};
  for (int n = 1; n < nb; ++n) {
    const auto& prev = b_[static_cast<std::size_t>(n)];
    std::vector<Rational> next(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
      Rational v = 0;
      if (j < n) v += j * prev[static_cast<std::size_t>(j)];
      if (j >= 1) v += (4 * j - 6) * prev[static_cast<std::size_t>(j - 1)];
      next[static_cast<std::size_t>(j)] = v;
    }
    b_[static_cast<std::size_t>(n + 1)] = std::move(next);
  }
  for (int n = 1; n <= nb; ++n) {
    Rational want = -pow_int(2, std::max(n - 2, 0)) * Rational(double_factorial(2 * n - 5));
    if (n == 1) want /= 2;
    if (b_[static_cast<std::size_t>(n)][static_cast<std::size_t>(n - 1)] != want) {
      throw std::logic_error("b^n_{n-1} closed form fails at n = " + std::to_string(n));
    }
  }

  // c^1 from c by the Euler operator 2yu d/du + y(1+4y) d/dy; the log(1+4x)/4
  // term contributes c^1_{0,1} = 1. Then c^{n+1} from c^n for all k.
  cn_.assign(static_cast<std::size_t>(n_max) + 1, {});
  auto euler_step = [&](const std::function<Rational(int, int)>& prev, int n) {
    std::vector<std::vector<Rational>> next(K + 1);
    for (int k = 0; k <= k_max; ++k) {
      auto& row = next[static_cast<std::size_t>(k)];
      row.assign(static_cast<std::size_t>(k + n) + 1, 0);
      for (int j = 0; j <= k + n; ++j) {
        row[static_cast<std::size_t>(j)] = j * prev(k, j) + (2 * k + 4 * (j - 1)) * prev(k, j - 1);
      }
    }
    return next;
  };
  if (n_max >= 1) {
    cn_[1] = euler_step([&](int k, int j) { return c(k, j); }, 1);
    cn_[1][0][1] += 1;
  }
  for (int n = 1; n < n_max; ++n) {
    cn_[static_cast<std::size_t>(n + 1)] = euler_step([&](int k, int j) { return cn(n, k, j); }, n + 1);
  }
}

Rational IonelTables::q(int k, int j) const {
  if (k > k_max_) throw OutOfSpec("q table too small");
  if (k < 0 || j < 0 || j > k) return 0;
  return q_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
}

Rational IonelTables::c(int k, int j) const {
  if (k > k_max_) throw OutOfSpec("c table too small");
  if (k < 1 || j < 0 || j > k) return 0;
  return c_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
}

Rational IonelTables::cn(int n, int k, int j) const {
  if (n == 0) return c(k, j);
  if (n < 0 || n > n_max_ || k > k_max_) throw OutOfSpec("c^n table too small");
  if (k < 0 || j < 0 || j > k + n) return 0;
  return cn_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
}

Rational IonelTables::b(int n, int j) const {
  if (n < 1 || n > std::max(n_max_, 1)) throw OutOfSpec("b table too small");
  if (j < 0 || j >= n) return 0;
  return b_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
}

std::shared_ptr<const IonelTables> ionel_tables(int k_max, int n_max) {
  static BoundedCache<int, IonelTables> cache;
  return cache.get(0, {std::max(k_max, 0), std::max(n_max, 1)},
                   [](const std::vector<int>& b) { return IonelTables(b[0], b[1]); });
}

RSeries big_gamma(int t_hi, int x_hi) {
  TruncationSpec s = TruncationSpec().add(kT, t_hi).add(kX, x_hi);
  RSeries out(s);
  for (int i = 1; 2 * i <= t_hi; ++i) out.add_term({{kT, 2 * i}}, -bernoulli(2 * i) / (2 * i * (2 * i - 1)));
  if (x_hi >= 1) {
    auto table = log_phi_table(x_hi, std::max(t_hi - 1, 0));
    for (int d = 1; d <= x_hi; ++d) {
      Rational inv = Rational(1) / Rational(factorial(static_cast<unsigned>(d)));
      for (int a = 0; a <= t_hi; ++a) out.add_term({{kT, a}, {kX, d}}, -table->at(d, a - 1) * inv);
    }
  }
  return out;
}

CheckReport gamma_x_check(int order) {
  CheckReport rep;
  const int T = order, X = order;
  auto tables = ionel_tables(T, 1);
  TruncationSpec s1 = TruncationSpec().add(kT, T).add(kX, X + 1);
  TruncationSpec s0 = TruncationSpec().add(kT, T).add(kX, X);
  RSeries gam = big_gamma(T, X + 2);
  RSeries gx = gam.derivative(kX).restrict(s1);
  RSeries gxx = gam.derivative(kX).derivative(kX).restrict(s0);

  // Gamma_x closed form.
  RSeries closed(s1);
  for (int i = 0; i <= X + 1; ++i) {
    closed.add_term({{kX, i}}, detail::binom4(1, i + 1) / 2);
    closed.add_term({{kT, 1}, {kX, i}}, pow_int(-4, i));
  }
  for (int k = 1; k + 1 <= T; ++k) {
    for (int j = 0; j <= k; ++j) {
      Rational q = tables->q(k, j);
      if (j % 2 != 0) q = -q;
      for (int i = 0; j + i <= X + 1; ++i) {
        closed.add_term({{kT, k + 1}, {kX, j + i}}, q * detail::binom4(-(2 * j + k + 2), i));
      }
    }
  }
  for (int a = 0; a <= T; ++a) {
    for (int b = 0; b <= X + 1; ++b) {
      rep.expect(gx.extract({{kT, a}, {kX, b}}) == closed.extract({{kT, a}, {kX, b}}), "Gamma_x closed form at " + where(a, b));
    }
  }

  // Gamma closed form: Gamma(0,x) + (t/4) log(1+4x) - sum c t^{k+1} (-x)^j (1+4x)^{-j-k/2}.
  RSeries gclosed(s0);
  auto phi_table = log_phi_table(std::max(X, 1), std::max(T, 0));
  for (int d = 1; d <= X; ++d) {
    gclosed.add_term({{kX, d}}, -phi_table->at(d, -1) / Rational(factorial(static_cast<unsigned>(d))));
  }
  for (int i = 1; i <= X; ++i) gclosed.add_term({{kT, 1}, {kX, i}}, pow_int(-4, i) * frac(-1, 4 * i));
  for (int k = 1; k + 1 <= T; ++k) {
    for (int j = 0; j <= k; ++j) {
      Rational c = tables->c(k, j);
      if (j % 2 == 0) c = -c;
      for (int i = 0; j + i <= X; ++i) {
        gclosed.add_term({{kT, k + 1}, {kX, j + i}}, c * detail::binom4(-(2 * j + k), i));
      }
    }
  }
  RSeries g0 = gam.restrict(s0);
  for (int a = 0; a <= T; ++a) {
    for (int b = 0; b <= X; ++b) {
      rep.expect(g0.extract({{kT, a}, {kX, b}}) == gclosed.extract({{kT, a}, {kX, b}}), "Gamma closed form at " + where(a, b));
    }
  }

  // Initial condition Gamma(t, 0).
  for (int a = 0; a <= T; ++a) {
    Rational want = (a >= 2 && a % 2 == 0) ? Rational(-bernoulli(a) / (a * (a - 1))) : Rational(0);
    rep.expect(g0.extract({{kT, a}}) == want, "Gamma(t,0) at t^" + std::to_string(a));
  }

  // t x Gamma_xx = x Gamma_x^2 + (1 - t) Gamma_x - 1.
  RSeries t = RSeries::monomial(s0, {{kT, 1}}, 1);
  RSeries x = RSeries::monomial(s0, {{kX, 1}}, 1);
  RSeries one = RSeries::constant(s0, 1);
  RSeries gx0 = gx.restrict(s0);
  RSeries ode = t * x * gxx - x * gx0 * gx0 - (one - t) * gx0 + one;
  rep.expect(ode.is_zero(), "Gamma differential equation");

  // The same equation for tau = t d/dx log Phi, built straight from C^s_d:
  // -t x tau_x = x tau^2 + t tau - tau - 1.
  RSeries tau(TruncationSpec().add(kT, T).add(kX, X + 1));
  auto wide = log_phi_table(X + 2, std::max(T, 0));
  for (int d = 0; d <= X + 1; ++d) {
    Rational inv = Rational(1) / Rational(factorial(static_cast<unsigned>(d)));
    for (int sdx = -1; sdx + 1 <= T; ++sdx) tau.add_term({{kT, sdx + 1}, {kX, d}}, wide->at(d + 1, sdx) * inv);
  }
  RSeries tx = tau.derivative(kX).restrict(s0);
  RSeries tau0 = tau.restrict(s0);
  RSeries ode2 = t * x * tx + x * tau0 * tau0 + t * tau0 - tau0 - one;
  rep.expect(ode2.is_zero(), "log Phi differential equation");
  rep.expect(tau0 == -gx0, "tau = -Gamma_x");
  return rep;
}

KSeries gamma_c(int u_hi, int y_hi) {
  auto tab = ionel_tables(u_hi, 1);
  TruncationSpec s = TruncationSpec().add(kU, u_hi).add(kY, y_hi);
  KSeries out(s);
  for (int k = 1; k <= u_hi; ++k) {
    for (int j = 0; j <= std::min(k, y_hi); ++j) {
      out.add_term({{kU, k}, {kY, j}}, KappaPoly::monomial(KappaMonomial::kappa(k), tab->c(k, j)));
    }
  }
  return out;
}

KSeries g_series(int n, int m, int u_hi, int y_hi) {
  if (n < 1 || m < 1) throw std::invalid_argument("G_{n,m} needs n, m >= 1");
  auto tab = ionel_tables(std::max(u_hi - n, 0), n);
  TruncationSpec s = TruncationSpec().add(kU, u_hi).add(kY, y_hi);
  KSeries out(s);
  if (n - 1 <= u_hi) {
    for (int j = 0; j <= std::min(n - 1, y_hi); ++j) {
      out.add_term({{kU, n - 1}, {kY, j}}, KappaPoly::monomial(KappaMonomial::kappa(m - 1), tab->b(n, j)));
    }
  }
  for (int k = 0; k + n <= u_hi; ++k) {
    for (int j = 0; j <= std::min(k + n, y_hi); ++j) {
      out.add_term({{kU, k + n}, {kY, j}}, KappaPoly::monomial(KappaMonomial::kappa(k + m), -tab->cn(n, k, j)));
    }
  }
  return out;
}

KSeries h_series(int n, int m, int u_hi) {
  if (n < 1 || m < 1) throw std::invalid_argument("H_{n,m} needs n, m >= 1");
  auto tab = ionel_tables(std::max(u_hi, 1), 1);
  TruncationSpec s = TruncationSpec().add(kU, u_hi);
  KSeries out(s);
  Rational lead = pow_int(2, std::max(n - 2, 0)) * Rational(double_factorial(2 * n - 5));
  if (n == 1) lead /= 2;
  if (n - 1 <= u_hi) out.add_term({{kU, n - 1}}, KappaPoly::monomial(KappaMonomial::kappa(m - 1), lead));
  if (n <= u_hi) {
    out.add_term({{kU, n}}, KappaPoly::monomial(KappaMonomial::kappa(m), pow_int(4, n - 1) * Rational(factorial(static_cast<unsigned>(n - 1)))));
  }
  for (int k = 1; k + n <= u_hi; ++k) {
    Rational w = tab->c(k, k);
    for (int i = 0; i < n; ++i) w *= 6 * k + 4 * i;
    out.add_term({{kU, k + n}}, KappaPoly::monomial(KappaMonomial::kappa(k + m), w));
  }
  return out;
}

namespace {

TruncationSpec uy_sigma_spec(const Partition& sigma, int u_hi, int y_hi) {
  TruncationSpec s = TruncationSpec().add(kU, u_hi).add(kY, y_hi);
  for (const auto& [i, a] : sigma.multiplicities()) s.add(VariableId::p(i), a);
  return s;
}

Exponents uy_target(const TruncationSpec& s, const Partition& sigma, int u, int y) {
  Exponents e = sigma_exponents(s, sigma);
  e[s.require_index(kU)] = static_cast<std::int16_t>(u);
  if (auto yi = s.index_of(kY)) e[*yi] = static_cast<std::int16_t>(y);
  return e;
}

KSeries p_monomial(const TruncationSpec& s, const Partition& tau, const KSeries& f) {
  Exponents e = sigma_exponents(s, tau);
  KSeries mono(s);
  mono.add_term(e, KappaPoly(1));
  return mono * f;
}

}  // namespace

bool thm4_applicable(int g, int r, int d, const Partition& sigma) {
  return thm3_applicable(g, r, d, sigma) && (g - r - sigma.size() - 1) % 2 == 0;
}

std::optional<Relation> thm4_relation(int g, int r, int d, const Partition& sigma) {
  if (!thm4_applicable(g, r, d, sigma)) return std::nullopt;
  const int R = r - sigma.size() + sigma.length();
  if (R < 0) return Relation{Family::Thm4, g, r, d, sigma, std::nullopt, KappaPoly()};
  TruncationSpec s = uy_sigma_spec(sigma, R, d);
  KSeries expo = -gamma_c(R, d);
  for (const auto& tau : sub_multisets(sigma)) {
    KSeries gt = g_series(tau.length(), tau.size(), R, d).scaled(Rational(1) / Rational(tau.aut()));
    expo += p_monomial(s, tau, gt);
  }
  KSeries val = lift(binomial_power(kY, r - sigma.size() - g + 2 * d - 1, s)) * series_exp(expo);
  return Relation{Family::Thm4, g, r, d, sigma, std::nullopt, val.extract(uy_target(s, sigma, R, d))};
}

bool gsigma_applicable(int g, int r, int d, const Partition& sigma) { return thm4_applicable(g, r, d, sigma); }

std::optional<Relation> gsigma_relation(int g, int r, int d, const Partition& sigma) {
  if (!gsigma_applicable(g, r, d, sigma)) return std::nullopt;
  const int R = r - sigma.size() + sigma.length();
  if (R < 0) return Relation{Family::GSigma, g, r, d, sigma, std::nullopt, KappaPoly()};
  TruncationSpec s = TruncationSpec().add(kU, R).add(kY, d);
  // G+ + G-: products of (G_b +- kappa sqrt(1+4y)/2 [l(b) = 1]) keep only even
  // numbers of square-root factors, each pair giving (1+4y) kappa kappa / 4.
  KSeries sum(s);
  for (const auto& div : divisions(sigma)) {
    std::vector<KSeries> g;
    std::vector<int> singles;
    for (const auto& blk : div.blocks) {
      g.push_back(g_series(blk.length(), blk.size(), R, d));
      if (blk.length() == 1) singles.push_back(static_cast<int>(g.size()) - 1);
    }
    const std::size_t ns = singles.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << ns); ++mask) {
      if (__builtin_popcountll(mask) % 2 != 0) continue;
      std::vector<bool> root(g.size(), false);
      for (std::size_t i = 0; i < ns; ++i) {
        if (mask >> i & 1) root[static_cast<std::size_t>(singles[i])] = true;
      }
      int nroot = 0;
      KappaPoly kroot(1);
      KSeries term = KSeries::constant(s, KappaPoly(Rational(2) * Rational(div.m)));
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (root[i]) {
          ++nroot;
          kroot = kroot * KappaPoly::monomial(KappaMonomial::kappa(div.blocks[i].size() - 1), frac(1, 2));
        } else {
          term = term * g[i];
        }
      }
      if (nroot > 0) term = term * lift(binomial_power(kY, nroot, s)) * KSeries::constant(s, kroot);
      sum += term;
    }
  }
  KSeries val = lift(binomial_power(kY, r - sigma.size() - g + 2 * d - 1, s)) * series_exp(-gamma_c(R, d)) * sum;
  return Relation{Family::GSigma, g, r, d, sigma, std::nullopt, val.extract({{kU, R}, {kY, d}})};
}

bool prop3_applicable(int g, int r, const Partition& sigma) {
  return g >= 2 && r >= 0 && 3 * r >= g + 1 + 3 * sigma.size() - 2 * sigma.length() &&
         (g - r - sigma.size() - 1) % 2 == 0;
}

KappaPoly prop3_extraction(int r, const Partition& sigma) {
  const int R = r - sigma.size() + sigma.length();
  if (R < 0) return KappaPoly();
  auto tab = ionel_tables(R, 1);
  TruncationSpec s = TruncationSpec().add(kU, R);
  for (const auto& [i, a] : sigma.multiplicities()) s.add(VariableId::p(i), a);
  KSeries expo(s);
  for (int k = 1; k <= R; ++k) expo.add_term({{kU, k}}, KappaPoly::monomial(KappaMonomial::kappa(k), -tab->c(k, k)));
  for (const auto& tau : sub_multisets(sigma)) {
    KSeries h = h_series(tau.length(), tau.size(), R).scaled(-Rational(1) / Rational(tau.aut()));
    expo += p_monomial(s, tau, h);
  }
  KSeries val = series_exp(expo);
  Exponents e = sigma_exponents(s, sigma);
  e[s.require_index(kU)] = static_cast<std::int16_t>(R);
  return val.extract(e);
}

std::optional<Relation> prop3_relation(int g, int r, const Partition& sigma) {
  if (!prop3_applicable(g, r, sigma)) return std::nullopt;
  return Relation{Family::Prop3, g, r, std::nullopt, sigma, std::nullopt, prop3_extraction(r, sigma)};
}

}  // namespace tautring
