#include "tautring/faber.hpp"

#include <functional>
#include <stdexcept>

#include "tautring/bernoulli.hpp"
#include "tautring/cache.hpp"

namespace tautring {

namespace {

const VariableId kT = VariableId::t();
const VariableId kX = VariableId::x();

/// Coefficients of prod_{i=1}^d (1 + i t).
std::vector<Rational> rising_product(int d) {
  std::vector<Rational> p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = 1;
  for (int i = 1; i <= d; ++i) {
    for (int k = i; k >= 1; --k) p[static_cast<std::size_t>(k)] += i * p[static_cast<std::size_t>(k - 1)];
  }
  return p;
}

Rational sign_over_factorial(int d) {
  Rational v = Rational(1) / Rational(factorial(static_cast<unsigned>(d)));
  return d % 2 ? Rational(-v) : v;
}

}  // namespace

RSeries theta_series(int d_max, int t_hi) {
  TruncationSpec s = TruncationSpec().add(kT, t_hi).add(kX, d_max).laurent(kT, kX);
  RSeries out(s);
  for (int d = 0; d <= d_max; ++d) {
    auto p = rising_product(d);
    Rational w = sign_over_factorial(d);
    for (int k = 0; k <= d; ++k) out.add_term({{kT, k - d}, {kX, d}}, w * p[static_cast<std::size_t>(k)]);
  }
  return out;
}

RSeries theta_closed_form(int d_max, int t_hi) {
  TruncationSpec s = TruncationSpec().add(kT, t_hi).add(kX, d_max).laurent(kT, kX);
  RSeries l(s), inv(s);
  for (int d = 1; d <= d_max; ++d) l.add_term({{kT, -1}, {kX, d}}, frac(d % 2 ? -1 : 1, d));
  for (int d = 0; d <= d_max; ++d) inv.add_term({{kX, d}}, d % 2 ? -1 : 1);
  return inv * series_exp(l);
}

TruncationSpec z_spec(const ZMonomial& sigma, int t_hi, int x_hi) {
  TruncationSpec s = TruncationSpec().add(kT, t_hi).add(kX, x_hi);
  for (const auto& [ij, a] : sigma.multiplicities()) s.add(VariableId::zij(ij.first, ij.second), a);
  return s.laurent(kT, kX);
}

std::vector<ZMonomial> z_divisors(const ZMonomial& sigma) {
  std::vector<std::pair<std::pair<int, int>, int>> items(sigma.multiplicities().begin(), sigma.multiplicities().end());
  std::vector<ZMonomial> out;
  std::map<std::pair<int, int>, int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == items.size()) {
      out.emplace_back(cur);
      return;
    }
    for (int a = 0; a <= items[k].second; ++a) {
      if (a > 0) {
        cur[items[k].first] = a;
      } else {
        cur.erase(items[k].first);
      }
      rec(k + 1);
    }
    cur.erase(items[k].first);
  };
  rec(0);
  return out;
}

Exponents z_exponents(const TruncationSpec& spec, const ZMonomial& sigma) {
  Exponents e{};
  for (const auto& [ij, a] : sigma.multiplicities()) {
    e[spec.require_index(VariableId::zij(ij.first, ij.second))] = static_cast<std::int16_t>(a);
  }
  return e;
}

RSeries theta_d_series(const ZMonomial& sigma, int d_max, int t_hi) {
  TruncationSpec s = z_spec(sigma, t_hi, d_max);
  const std::size_t ti = s.require_index(kT), xi = s.require_index(kX);
  RSeries out(s);
  for (const auto& tau : z_divisors(sigma)) {
    Exponents base = z_exponents(s, tau);
    const int ell = tau.ell();
    for (int d = 0; d <= d_max; ++d) {
      if (d == 0 && ell > 0) continue;
      auto p = rising_product(d);
      Rational w = sign_over_factorial(d) / Rational(tau.aut());
      for (int k = 0; k < ell; ++k) w *= d;
      for (int k = 0; k <= d; ++k) {
        if (k + tau.size() > t_hi) break;
        Exponents e = base;
        e[ti] = static_cast<std::int16_t>(k - d + tau.size());
        e[xi] = static_cast<std::int16_t>(d);
        out.add_term(e, w * p[static_cast<std::size_t>(k)]);
      }
    }
  }
  return out;
}

RSeries theta_d_by_operator(const ZMonomial& sigma, int d_max, int t_hi) {
  TruncationSpec s = z_spec(sigma, t_hi, d_max);
  RSeries theta = theta_series(d_max, t_hi).restrict(s);
  // D f = sum z_{i,j} t^j (x d/dx)^i f; D raises the z-degree, so the exponential series is finite.
  auto apply_d = [&](const RSeries& f) {
    RSeries out(s);
    for (const auto& [ij, a] : sigma.multiplicities()) {
      RSeries mono = RSeries::monomial(s, {{VariableId::zij(ij.first, ij.second), 1}, {kT, ij.second}}, 1);
      out += mono * f.euler(kX, static_cast<unsigned>(ij.first));
    }
    return out;
  };
  RSeries term = theta, total = theta;
  for (int n = 1; n <= sigma.factors(); ++n) {
    term = apply_d(term).scaled(frac(1, n));
    total += term;
  }
  return total;
}

ThetaDLog::ThetaDLog(const ZMonomial& sigma, int d_max, int r_max) : sigma_(sigma), d_max_(d_max), r_max_(r_max) {
  if (d_max < 1 || r_max < -1) throw std::invalid_argument("log Theta^D needs d_max >= 1, r_max >= -1");
  log_ = series_log(theta_d_series(sigma, d_max, r_max + d_max));
  const TruncationSpec& s = log_.spec();
  const std::size_t ti = s.require_index(kT);
  for (const auto& [e, c] : log_.terms()) {
    if (e[ti] < -1) throw std::logic_error("log Theta^D has a pole of order > 1");
  }
  for (const auto& tau : z_divisors(sigma)) {
    auto& tab = c_[tau];
    tab.assign(static_cast<std::size_t>(d_max) + 1, std::vector<Rational>(static_cast<std::size_t>(r_max) + 2));
    Exponents e = z_exponents(s, tau);
    for (int d = 1; d <= d_max; ++d) {
      Rational df = Rational(factorial(static_cast<unsigned>(d)));
      for (int r = -1; r <= r_max; ++r) {
        e[ti] = static_cast<std::int16_t>(r);
        e[s.require_index(kX)] = static_cast<std::int16_t>(d);
        tab[static_cast<std::size_t>(d)][static_cast<std::size_t>(r + 1)] = df * log_.extract(e);
      }
    }
  }
}

const Rational& ThetaDLog::at(const ZMonomial& tau, int d, int r) const {
  auto it = c_.find(tau);
  if (it == c_.end() || d < 1 || d > d_max_ || r < -1 || r > r_max_) throw OutOfSpec("C^r_d(sigma) outside the table");
  return it->second[static_cast<std::size_t>(d)][static_cast<std::size_t>(r + 1)];
}

std::shared_ptr<const ThetaDLog> theta_d_log(const ZMonomial& sigma, int d_max, int r_max) {
  static BoundedCache<ZMonomial, ThetaDLog> cache;
  return cache.get(sigma, {std::max(d_max, 1), std::max(r_max, 0)},
                   [&](const std::vector<int>& b) { return ThetaDLog(sigma, b[0], b[1]); });
}

KSeries faber_gamma(const ZMonomial& sigma, int d_max, int r_max) {
  auto lg = theta_d_log(sigma, d_max, r_max);
  const TruncationSpec& from = lg->series().spec();
  TruncationSpec s = TruncationSpec().add(kT, r_max).add(kX, d_max);
  for (const auto& [ij, a] : sigma.multiplicities()) s.add(VariableId::zij(ij.first, ij.second), a);
  const std::size_t ti = from.require_index(kT);
  KSeries gamma(s);
  for (int i = 1; 2 * i - 1 <= r_max; ++i) {
    gamma.add_term({{kT, 2 * i - 1}},
                   KappaPoly::monomial(KappaMonomial::kappa(2 * i - 1), bernoulli(2 * i) / (2 * i * (2 * i - 1))));
  }
  for (const auto& [e, c] : lg->series().terms()) {
    if (e[ti] < 0) continue;  // kappa_{-1}
    auto m = s.embed(e, from);
    if (!m || !s.admits(*m)) continue;
    gamma.add_term(*m, KappaPoly::monomial(KappaMonomial::kappa(e[ti]), c));
  }
  return gamma;
}

bool thm1_applicable(int g, int r, int d, const ZMonomial& sigma) {
  return g >= 2 && r >= 0 && d >= 1 && r > -g + sigma.size() && d > 2 * g - 2;
}

namespace {

struct FaberExp {
  KSeries value;
};

}  // namespace

std::optional<Relation> thm1_relation(int g, int r, int d, const ZMonomial& sigma) {
  if (!thm1_applicable(g, r, d, sigma)) return std::nullopt;
  static BoundedCache<ZMonomial, FaberExp> cache;
  auto v = cache.get(sigma, {r, d}, [&](const std::vector<int>& b) {
    return FaberExp{series_exp(-faber_gamma(sigma, b[1], b[0]))};
  });
  Exponents e = z_exponents(v->value.spec(), sigma);
  e[v->value.spec().require_index(kT)] = static_cast<std::int16_t>(r);
  e[v->value.spec().require_index(kX)] = static_cast<std::int16_t>(d);
  Relation rel{Family::Faber, g, r, d, Partition(), sigma, v->value.extract(e)};
  return rel;
}

}  // namespace tautring
