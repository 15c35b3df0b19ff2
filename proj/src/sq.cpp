#include "tautring/sq.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "tautring/bernoulli.hpp"
#include "tautring/cache.hpp"

namespace tautring {

namespace {

const VariableId kT = VariableId::t();
const VariableId kX = VariableId::x();

Rational sign_rational(long n) { return Rational(sign_power(n)); }

}  // namespace

std::vector<Rational> inverse_falling_product(int d, int n) {
  std::vector<Rational> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int i = 1; i <= d; ++i) {
    // multiply by 1/(1 - i t): q_k = p_k + i q_{k-1}
    for (int k = 1; k <= n; ++k) p[static_cast<std::size_t>(k)] += i * p[static_cast<std::size_t>(k - 1)];
  }
  return p;
}

RSeries phi_series(int d_max, int t_hi) {
  TruncationSpec s = TruncationSpec().add(kT, t_hi).add(kX, d_max).laurent(kT, kX);
  RSeries phi(s);
  for (int d = 0; d <= d_max; ++d) {
    Rational lead = sign_rational(d) / Rational(factorial(static_cast<unsigned>(d)));
    auto p = inverse_falling_product(d, t_hi);
    for (int k = 0; k <= t_hi; ++k) phi.add_term({{kT, k - d}, {kX, d}}, lead * p[static_cast<std::size_t>(k)]);
  }
  return phi;
}

LogPhiTable::LogPhiTable(int d_max, int r_max) : d_max_(d_max), r_max_(r_max) {
  if (d_max < 1 || r_max < -1) throw std::invalid_argument("log Phi table needs d_max >= 1, r_max >= -1");
  RSeries log_phi = series_log(phi_series(d_max, r_max + d_max));
  c_.assign(static_cast<std::size_t>(d_max) + 1, std::vector<Rational>(static_cast<std::size_t>(r_max) + 2));
  for (int d = 1; d <= d_max; ++d) {
    for (int r = -d; r < -1; ++r) {
      if (!is_zero(log_phi.extract({{kT, r}, {kX, d}}))) {
        throw std::logic_error("log Phi has a pole of order > 1 at x^" + std::to_string(d));
      }
    }
    Rational df = Rational(factorial(static_cast<unsigned>(d)));
    for (int r = -1; r <= r_max; ++r) {
      c_[static_cast<std::size_t>(d)][static_cast<std::size_t>(r + 1)] = df * log_phi.extract({{kT, r}, {kX, d}});
    }
  }
}

const Rational& LogPhiTable::at(int d, int r) const {
  if (d < 1 || d > d_max_ || r < -1 || r > r_max_) {
    throw OutOfSpec("C^" + std::to_string(r) + "_" + std::to_string(d) + " outside the table");
  }
  return c_[static_cast<std::size_t>(d)][static_cast<std::size_t>(r + 1)];
}

std::shared_ptr<const LogPhiTable> log_phi_table(int d_max, int r_max) {
  static BoundedCache<int, LogPhiTable> cache;
  return cache.get(0, {std::max(d_max, 1), std::max(r_max, 0)},
                   [](const std::vector<int>& b) { return LogPhiTable(b[0], b[1]); });
}

namespace {

struct PVar {
  int part;
  std::size_t index;
  int hi;
};

std::vector<PVar> p_variables(const TruncationSpec& spec) {
  std::vector<PVar> out;
  for (std::size_t k = 0; k < spec.size(); ++k) {
    if (spec.var(k).kind() == VarKind::P) out.push_back({spec.var(k).i(), k, spec.hi(k)});
  }
  return out;
}

// Every p-monomial within the per-variable bounds.
void for_each_p_monomial(const std::vector<PVar>& vars, const std::function<void(const Exponents&, const Partition&)>& fn) {
  Exponents e{};
  std::map<int, int> mult;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == vars.size()) {
      fn(e, Partition::from_multiplicities(mult));
      return;
    }
    for (int a = 0; a <= vars[k].hi; ++a) {
      e[vars[k].index] = static_cast<std::int16_t>(a);
      if (a > 0) {
        mult[vars[k].part] = a;
      } else {
        mult.erase(vars[k].part);
      }
      rec(k + 1);
    }
    e[vars[k].index] = 0;
    mult.erase(vars[k].part);
  };
  rec(0);
}

}  // namespace

KSeries sq_gamma(const LogPhiTable& table, GammaFlavor flavor, const TruncationSpec& spec, KappaMinusOne mode) {
  const std::size_t ti = spec.require_index(kT);
  const std::size_t xi = spec.require_index(kX);
  const bool laurent = spec.is_laurent(ti);
  if (mode == KappaMinusOne::Symbolic && !laurent) {
    throw std::invalid_argument("symbolic kappa_{-1} needs t to be Laurent");
  }
  const bool hat = flavor == GammaFlavor::PEnrichedHat;
  const int t_hi = spec.hi(ti);
  const int x_hi = spec.hi(xi);
  KSeries gamma(spec);

  for (int i = 1; 2 * i - 1 <= t_hi; ++i) {
    Rational c = bernoulli(static_cast<unsigned>(2 * i)) / (2 * i * (2 * i - 1));
    if (hat) c = -c;
    Exponents e{};
    e[ti] = static_cast<std::int16_t>(2 * i - 1);
    gamma.add_term(e, KappaPoly::monomial(KappaMonomial::kappa(2 * i - 1), c));
  }

  std::vector<PVar> pvars;
  if (flavor != GammaFlavor::Plain) pvars = p_variables(spec);
  for_each_p_monomial(pvars, [&](const Exponents& pe, const Partition& sigma) {
    const int size = sigma.size();
    const int ell = sigma.length();
    const Rational aut = Rational(sigma.aut());
    for (int d = 1; d <= x_hi; ++d) {
      Rational base = 1;
      for (int k = 0; k < ell; ++k) base *= d;
      base /= Rational(factorial(static_cast<unsigned>(d))) * aut;
      for (int r = -1;; ++r) {
        const int et = r + size;
        const int shifted = laurent ? et + d : et;
        if (shifted > t_hi) break;
        if (r + size < 0 && mode == KappaMinusOne::Drop) continue;
        if (r > table.r_max()) throw OutOfSpec("log Phi table too small for the requested gamma");
        Rational c = table.at(d, r) * base;
        if (hat) c *= sign_rational(r);
        Exponents e = pe;
        e[ti] = static_cast<std::int16_t>(et);
        e[xi] = static_cast<std::int16_t>(d);
        gamma.add_term(e, KappaPoly::monomial(KappaMonomial::kappa(r + size), c));
      }
    }
  });
  return gamma;
}

TruncationSpec sigma_spec(const Partition& sigma, int t_hi, int x_hi) {
  TruncationSpec s = TruncationSpec().add(kT, t_hi).add(kX, x_hi);
  for (const auto& [i, a] : sigma.multiplicities()) s.add(VariableId::p(i), a);
  return s;
}

Exponents sigma_exponents(const TruncationSpec& spec, const Partition& sigma) {
  Exponents e{};
  for (const auto& [i, a] : sigma.multiplicities()) e[spec.require_index(VariableId::p(i))] = static_cast<std::int16_t>(a);
  return e;
}

Thm3Evaluator::Thm3Evaluator(const Partition& sigma, int r_max, int d_max)
    : sigma_(sigma), r_max_(r_max), d_max_(d_max), spec_(sigma_spec(sigma, r_max, d_max)) {
  auto table = log_phi_table(std::max(d_max, 1), r_max);
  KSeries gamma_p = sq_gamma(*table, GammaFlavor::PEnriched, spec_);
  KSeries gamma_hat = sq_gamma(*table, GammaFlavor::PEnrichedHat, spec_);
  lhs_ = series_exp(-gamma_p);
  KSeries mark(spec_);
  for (const auto& [i, a] : sigma.multiplicities()) {
    // kappa_s t^s p_{s+1} with s = i - 1
    Exponents e{};
    e[spec_.require_index(kT)] = static_cast<std::int16_t>(i - 1);
    e[spec_.require_index(VariableId::p(i))] = 1;
    mark.add_term(e, KappaPoly::kappa(i - 1));
  }
  rhs_ = series_exp(-mark) * series_exp(-gamma_hat);
}

Exponents Thm3Evaluator::at(int r, int d) const {
  Exponents e = sigma_exponents(spec_, sigma_);
  e[spec_.require_index(kT)] = static_cast<std::int16_t>(r);
  e[spec_.require_index(kX)] = static_cast<std::int16_t>(d);
  return e;
}

KappaPoly Thm3Evaluator::lhs(int r, int d) const { return lhs_.extract(at(r, d)); }
KappaPoly Thm3Evaluator::rhs_core(int r, int d) const { return rhs_.extract(at(r, d)); }

std::shared_ptr<const Thm3Evaluator> thm3_evaluator(const Partition& sigma, int r, int d) {
  static BoundedCache<Partition, Thm3Evaluator> cache;
  return cache.get(sigma, {r, d}, [&](const std::vector<int>& b) { return Thm3Evaluator(sigma, b[0], b[1]); });
}

bool thm2_applicable(int g, int r, int d) {
  return g >= 2 && r >= 0 && d >= 1 && g - 2 * d - 1 < r && (g - r - 1) % 2 == 0;
}

bool thm3_applicable(int g, int r, int d, const Partition& sigma) {
  return g >= 2 && r >= 0 && d >= 1 && g - 2 * d - 1 + sigma.size() < r;
}

std::optional<Relation> thm2_relation(int g, int r, int d) {
  if (!thm2_applicable(g, r, d)) return std::nullopt;
  Relation rel{Family::Sq2, g, r, d, Partition(), std::nullopt, thm3_evaluator(Partition(), r, d)->lhs(r, d)};
  return rel;
}

std::optional<Relation> thm3_relation(int g, int r, int d, const Partition& sigma) {
  if (!thm3_applicable(g, r, d, sigma)) return std::nullopt;
  auto ev = thm3_evaluator(sigma, r, d);
  KappaPoly poly = ev->lhs(r, d);
  KappaPoly rhs = ev->rhs_core(r, d);
  if (g % 2 == 0) {
    poly -= rhs;
  } else {
    poly += rhs;
  }
  return Relation{Family::Sq3, g, r, d, sigma, std::nullopt, poly};
}

KSeries f_series(int n, int m, const LogPhiTable& table, int t_hi, int x_hi) {
  if (n < 1 || m < 1) throw std::invalid_argument("F_{n,m} needs n, m >= 1");
  TruncationSpec s = TruncationSpec().add(kT, t_hi).add(kX, x_hi);
  KSeries f(s);
  for (int d = 1; d <= x_hi; ++d) {
    Rational dn = 1;
    for (int k = 0; k < n; ++k) dn *= d;
    dn /= Rational(factorial(static_cast<unsigned>(d)));
    for (int sdx = -1; sdx + m <= t_hi; ++sdx) {
      f.add_term({{kT, sdx + m}, {kX, d}}, KappaPoly::monomial(KappaMonomial::kappa(sdx + m), -table.at(d, sdx) * dn));
    }
  }
  return f;
}

KSeries f_series_operator(int n, int m, const LogPhiTable& table, int t_hi, int x_hi) {
  if (n < 1 || m < 1) throw std::invalid_argument("F_{n,m} needs n, m >= 1");
  const int inner_hi = t_hi - m + x_hi;
  TruncationSpec s = TruncationSpec().add(kT, inner_hi).add(kX, x_hi).laurent(kT, kX);
  KSeries inner(s);
  for (int d = 1; d <= x_hi; ++d) {
    Rational inv = Rational(1) / Rational(factorial(static_cast<unsigned>(d)));
    for (int sdx = -1; sdx + d <= inner_hi; ++sdx) {
      inner.add_term({{kT, sdx}, {kX, d}}, KappaPoly::monomial(KappaMonomial::kappa(sdx + m), table.at(d, sdx) * inv));
    }
  }
  KSeries out = -inner.euler(kX, static_cast<unsigned>(n)).shift(kT, m);
  return out.restrict(TruncationSpec().add(kT, t_hi).add(kX, x_hi));
}

namespace {

struct ExpandedSeries {
  TruncationSpec spec;
  KSeries value;  // exp(-gamma) * (sum over marked divisions)
};

ExpandedSeries build_expanded(const Partition& sigma, int sign, int r_max, int d_max) {
  auto table = log_phi_table(std::max(d_max, 1), r_max);
  TruncationSpec s = TruncationSpec().add(kT, r_max).add(kX, d_max);
  std::map<std::pair<int, int>, KSeries> f_cache;
  auto f_of = [&](int n, int m) -> const KSeries& {
    auto it = f_cache.find({n, m});
    if (it == f_cache.end()) it = f_cache.emplace(std::make_pair(n, m), f_series(n, m, *table, r_max, d_max)).first;
    return it->second;
  };
  KSeries sum(s);
  for (const auto& md : marked_divisions(sigma)) {
    Integer w = m_pm_factor(md, sign);
    if (w == 0) continue;
    KappaMonomial km;
    int tdeg = 0;
    for (int part : md.marked.parts()) {
      km = km * KappaMonomial::kappa(part - 1);
      tdeg += part - 1;
    }
    KSeries term(s);
    term.add_term({{kT, tdeg}}, KappaPoly::monomial(km, Rational(w)));
    for (const auto& b : md.blocks) term = term * f_of(b.length(), b.size());
    sum += term;
  }
  KSeries gamma = sq_gamma(*table, GammaFlavor::Plain, s);
  return {s, series_exp(-gamma) * sum};
}

}  // namespace

KappaPoly expanded_poly(int r, int d, const Partition& sigma, int sign) {
  if (r < 0 || d < 0) return KappaPoly();
  static BoundedCache<std::pair<Partition, int>, ExpandedSeries> cache;
  auto v = cache.get({sigma, sign}, {r, d},
                     [&](const std::vector<int>& b) { return build_expanded(sigma, sign, b[0], b[1]); });
  return v->value.extract({{kT, r}, {kX, d}});
}

int expanded_parity(int g, int r, const Partition& sigma) {
  return ((g - r - sigma.size()) % 2 == 0) ? -1 : +1;
}

std::optional<Relation> expanded_relation(int g, int r, int d, const Partition& sigma, int sign) {
  if (!thm3_applicable(g, r, d, sigma) || expanded_parity(g, r, sigma) != sign) return std::nullopt;
  return Relation{Family::Expanded, g, r, d, sigma, std::nullopt, expanded_poly(r, d, sigma, sign)};
}

Rational tanh_half_coefficient(int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  // tanh(a/2) = (e^a - 1) / (e^a + 1)
  std::vector<Rational> num(static_cast<std::size_t>(n) + 1), den(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational ik = Rational(1) / Rational(factorial(static_cast<unsigned>(k)));
    num[static_cast<std::size_t>(k)] = k == 0 ? Rational(0) : ik;
    den[static_cast<std::size_t>(k)] = k == 0 ? Rational(2) : ik;
  }
  RSeries q = univariate(kX, n, num) * series_inverse(univariate(kX, n, den));
  Rational c = q.extract({{kX, n}});
  return c * Rational(factorial(static_cast<unsigned>(n)));
}

Prop2Report prop2_check(int g, int r, int d, const Partition& sigma) {
  Prop2Report rep;
  if (sigma.empty() || !thm3_applicable(g, r, d, sigma) || expanded_parity(g, r, sigma) != -1) return rep;
  rep.applicable = true;
  rep.minus = expanded_poly(r, d, sigma, -1);

  // Sub-multisets S of sigma with an odd number of parts.
  auto mult = sigma.multiplicities();
  std::vector<std::pair<int, int>> items(mult.begin(), mult.end());
  std::map<int, int> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == items.size()) {
      Partition s = Partition::from_multiplicities(pick);
      if (s.empty() || s.length() % 2 == 0) return;
      Prop2Term term;
      term.removed = s;
      Integer copies = 1;
      KappaMonomial km;
      for (const auto& [part, b] : pick) {
        Rational c = binomial(Rational(mult.at(part)), static_cast<unsigned>(b));
        copies *= c.get_num();
        km = km * KappaMonomial::kappa(part - 1, b);
      }
      term.weight = tanh_half_coefficient(s.length()) * Rational(copies);
      term.kappa = KappaPoly::monomial(km);
      term.rest = *sigma.minus(s);
      term.r = r - s.size() + s.length();
      term.plus = expanded_poly(term.r, d, term.rest, +1);
      rep.combination += term.kappa * term.plus * term.weight;
      rep.terms.push_back(std::move(term));
      return;
    }
    for (int b = 0; b <= items[k].second; ++b) {
      if (b > 0) {
        pick[items[k].first] = b;
      } else {
        pick.erase(items[k].first);
      }
      rec(k + 1);
    }
    pick.erase(items[k].first);
  };
  rec(0);
  rep.ok = rep.combination == rep.minus;
  return rep;
}

}  // namespace tautring
