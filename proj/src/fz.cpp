#include "tautring/fz.hpp"

#include <sstream>
#include <stdexcept>

#include "tautring/cache.hpp"
#include "tautring/sq.hpp"

namespace tautring {

namespace {

const VariableId kZ = VariableId::z();
const VariableId kT = VariableId::t();
const VariableId kU = VariableId::u();
const VariableId kX = VariableId::x();
const VariableId kY = VariableId::y();

RSeries z_mono(const TruncationSpec& s, int k, const Rational& c = 1) {
  RSeries m(s);
  m.add_term({{kZ, k}}, c);
  return m;
}

std::string exps_to_string(const TruncationSpec& s, const Exponents& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (e[k] == 0) continue;
    os << (first ? "" : "*") << s.var(k).name() << "^" << e[k];
    first = false;
  }
  return first ? "1" : os.str();
}

template <class R>
void expect_series_equal(CheckReport& rep, const std::string& what, const Series<R>& a, const Series<R>& b) {
  Series<R> diff = a - b;
  if (diff.is_zero()) {
    rep.expect(true, what);
    return;
  }
  rep.expect(false, what + ": first mismatch at " + exps_to_string(diff.spec(), diff.terms().begin()->first));
}

Exponents p_exponents(const TruncationSpec& s, const Partition& sigma) { return sigma_exponents(s, sigma); }

/// Slices every p variable of sigma at its multiplicity.
template <class R>
Series<R> p_coefficient(const Series<R>& f, const Partition& sigma) {
  Series<R> out = f;
  for (const auto& [i, a] : sigma.multiplicities()) out = out.slice(VariableId::p(i), a);
  return out;
}

TruncationSpec zp_spec(const Partition& sigma, int z_hi) {
  TruncationSpec s = TruncationSpec().add(kZ, z_hi);
  for (const auto& [i, a] : sigma.multiplicities()) s.add(VariableId::p(i), a);
  return s;
}

void require_fz_partition(const Partition& sigma) {
  if (!no_part_two_mod_three(sigma)) throw std::invalid_argument("partition has a part congruent to 2 mod 3");
}

}  // namespace

Rational fz_a_coeff(int i) {
  return Rational(factorial(static_cast<unsigned>(6 * i))) /
         Rational(factorial(static_cast<unsigned>(3 * i)) * factorial(static_cast<unsigned>(2 * i)));
}

Rational fz_b_coeff(int i) { return fz_a_coeff(i) * frac(6 * i + 1, 6 * i - 1); }

KSeries kappa_insert_z(const RSeries& f) { return insert_kappa(f, kZ, 0); }

HypergeomPack ab_series(int order, int n_max) {
  HypergeomPack p;
  p.order = order;
  TruncationSpec s = TruncationSpec().add(kZ, order);
  p.A = RSeries(s);
  p.B = RSeries(s);
  Rational scale = 1;
  for (int i = 0; i <= order; ++i) {
    p.A.add_term({{kZ, i}}, fz_a_coeff(i) * scale);
    p.B.add_term({{kZ, i}}, fz_b_coeff(i) * scale);
    scale /= 72;
  }
  p.C = p.B * series_inverse(p.A);
  p.logA = series_log(p.A);
  p.E = series_exp(-kappa_insert_z(p.logA));
  p.Cn.assign(static_cast<std::size_t>(std::max(n_max, 1)) + 1, RSeries(s));
  p.Cn[1] = p.C;
  RSeries z = z_mono(s, 1);
  for (int i = 1; i < n_max; ++i) {
    const RSeries& c = p.Cn[static_cast<std::size_t>(i)];
    p.Cn[static_cast<std::size_t>(i) + 1] = z * (c.euler(kZ, 1).scaled(12) - c.scaled(4 * i));
  }
  return p;
}

std::shared_ptr<const HypergeomPack> hypergeom(int order, int n_max) {
  static BoundedCache<int, HypergeomPack> cache;
  return cache.get(0, {order, std::max(n_max, 1)},
                   [](const std::vector<int>& b) { return ab_series(b[0], b[1]); });
}

FPoly::FPoly(int n_max) {
  if (n_max < 1) throw std::invalid_argument("FPoly needs n_max >= 1");
  TruncationSpec s = TruncationSpec().add(kZ, n_max).add(kU, n_max + 1);
  cn_.assign(static_cast<std::size_t>(n_max) + 1, RSeries(s));
  cn_[1] = RSeries::monomial(s, {{kU, 1}}, 1);
  // 12 z^2 dC/dz = 1 + 4 z C - C^2
  RSeries dc = RSeries::constant(s, 1) + RSeries::monomial(s, {{kZ, 1}, {kU, 1}}, 4) - RSeries::monomial(s, {{kU, 2}}, 1);
  const std::size_t ui = s.require_index(kU);
  for (int i = 1; i < n_max; ++i) {
    const RSeries& p = cn_[static_cast<std::size_t>(i)];
    RSeries du(s);
    for (const auto& [e, c] : p.terms()) {
      if (e[ui] == 0) continue;
      Exponents f = e;
      --f[ui];
      du.add_term(f, c * e[ui]);
    }
    RSeries z = RSeries::monomial(s, {{kZ, 1}}, 1);
    cn_[static_cast<std::size_t>(i) + 1] = z * p.euler(kZ, 1).scaled(12) + du * dc - (z * p).scaled(4 * i);
  }
}

std::vector<Rational> FPoly::f(int i, int j) const {
  std::vector<Rational> out;
  const RSeries& p = cn(i);
  for (int k = 0; k <= n_max(); ++k) out.push_back(p.extract({{kZ, k}, {kU, j}}));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

RSeries FPoly::evaluate(int n, const RSeries& c) const {
  RSeries acc(c.spec()), power = RSeries::constant(c.spec(), 1);
  for (int j = 0; j <= n; ++j) {
    auto fj = f(n, j);
    for (std::size_t k = 0; k < fj.size(); ++k) {
      if (fj[k] != 0) acc += z_mono(c.spec(), static_cast<int>(k), fj[k]) * power;
    }
    power = power * c;
  }
  return acc;
}

RSeries FPoly::f_series(int x_order, int z_order) const {
  if (x_order > n_max()) throw std::invalid_argument("f_series needs C_n up to the x order");
  TruncationSpec s = TruncationSpec().add(kX, x_order).add(kY, x_order).add(kZ, z_order);
  RSeries out = RSeries::constant(s, 1);
  for (int i = 1; i <= x_order; ++i) {
    for (int j = 1; j <= i; ++j) {
      Rational w = Rational(1) / Rational(factorial(static_cast<unsigned>(i)) * factorial(static_cast<unsigned>(j - 1)));
      if ((j - 1) % 2) w = -w;
      auto fij = f(i, j);
      for (std::size_t k = 0; k < fij.size() && static_cast<int>(k) <= z_order; ++k) {
        if (fij[k] != 0) out.add_term({{kX, i}, {kY, j}, {kZ, static_cast<int>(k)}}, w * fij[k]);
      }
    }
  }
  return out;
}

std::shared_ptr<const FPoly> fpoly(int n_max) {
  static BoundedCache<int, FPoly> cache;
  return cache.get(0, {std::max(n_max, 1)}, [](const std::vector<int>& b) { return FPoly(b[0]); });
}

CheckReport identity_suite(int order) {
  CheckReport rep;
  const int n_check = 6;
  auto p = hypergeom(order, n_check);
  const TruncationSpec& s = p->A.spec();
  RSeries z = z_mono(s, 1), one = RSeries::constant(s, 1);
  auto th = [](const RSeries& f) { return f.euler(kZ, 1); };

  // z * (36 z^2 A'' + (72 z - 6) A' + 5 A), with z^2 A'' = (theta^2 - theta) A and z A' = theta A
  RSeries ode = z * ((th(th(p->A)) - th(p->A)).scaled(36) + th(p->A).scaled(72) + p->A.scaled(5)) - th(p->A).scaled(6);
  expect_series_equal(rep, "36z^2A''+(72z-6)A'+5A = 0", ode, RSeries(s));

  expect_series_equal(rep, "A*C = B", p->A * p->C, p->B);

  RSeries lhs1 = p->A.scaled(frac(-1, 2)) + z * p->A + z * th(p->A).scaled(6);
  expect_series_equal(rep, "-A/2 + zA + 6z^2A' = B/2", lhs1, p->B.scaled(frac(1, 2)));

  RSeries z2 = z * z;
  RSeries lhs2 = z + z2.scaled(4) + z2 * th(th(p->logA)).scaled(36) + z2 * th(p->logA).scaled(24);
  RSeries rhs2 = one.scaled(frac(1, 4)) - (p->C * p->C).scaled(frac(1, 4));
  expect_series_equal(rep, "sigma=(11) identity", lhs2, rhs2);

  expect_series_equal(rep, "12z^2C' = 1 + 4zC - C^2", z * th(p->C).scaled(12), one + z * p->C.scaled(4) - p->C * p->C);

  auto fp = fpoly(n_check);
  for (int n = 1; n <= n_check; ++n) {
    expect_series_equal(rep, "C_" + std::to_string(n) + " polynomial form", fp->evaluate(n, p->C), p->Cn[static_cast<std::size_t>(n)]);
  }

  // (3/(2t)) sin(2/3 asin t) and -(3/(4t)) sin(4/3 asin t)
  const int i_max = 8, t_hi = 2 * i_max + 1;
  TruncationSpec ts = TruncationSpec().add(kT, t_hi);
  TruncationSpec xs = TruncationSpec().add(kX, t_hi);
  RSeries asin_t(ts), sin_x(xs);
  for (int k = 0; 2 * k + 1 <= t_hi; ++k) {
    Integer kf = factorial(static_cast<unsigned>(k));
    asin_t.add_term({{kT, 2 * k + 1}},
                    Rational(factorial(static_cast<unsigned>(2 * k))) / Rational(Integer(Integer(1) << (2 * k)) * kf * kf * (2 * k + 1)));
    Rational sk = Rational(1) / Rational(factorial(static_cast<unsigned>(2 * k + 1)));
    sin_x.add_term({{kX, 2 * k + 1}}, k % 2 ? Rational(-sk) : sk);
  }
  RSeries s1 = series_compose(sin_x, asin_t.scaled(frac(2, 3)));
  RSeries s2 = series_compose(sin_x, asin_t.scaled(frac(4, 3)));
  for (int i = 0; i <= i_max; ++i) {
    Rational w = Rational(1) / Rational(double_factorial(2 * i + 1));
    for (int k = 0; k < i; ++k) w /= 216;
    Rational l1 = frac(3, 2) * s1.extract({{kT, 2 * i + 1}});
    Rational l2 = frac(-3, 4) * s2.extract({{kT, 2 * i + 1}});
    rep.expect(l1 == fz_a_coeff(i) * w, "sine series (2/3) at i=" + std::to_string(i));
    rep.expect(l2 == fz_b_coeff(i) * w, "sine series (4/3) at i=" + std::to_string(i));
  }
  return rep;
}

Lemma5Result lemma5_check(int x_order, int z_order) {
  Lemma5Result out;
  auto fp = fpoly(x_order);
  RSeries f = fp->f_series(x_order, z_order);
  RSeries f0 = f.slice(kY, 0);
  out.report.expect((f0 - RSeries::constant(f0.spec(), 1)).is_zero(), "f at y=0 is 1");
  RSeries l = series_log(f);
  const std::size_t yi = l.spec().require_index(kY);
  bool linear = true;
  for (const auto& [e, c] : l.terms()) {
    if (e[yi] >= 2) {
      if (linear) out.report.expect(false, "log f has a y^" + std::to_string(e[yi]) + " term at " + exps_to_string(l.spec(), e));
      linear = false;
    }
  }
  if (linear) out.report.expect(true, "log f linear in y");
  out.g = l.slice(kY, 1);
  return out;
}

PsiLog::PsiLog(const Partition& sigma, int r_max) : sigma_(sigma), r_max_(r_max) {
  require_fz_partition(sigma);
  TruncationSpec s = TruncationSpec().add(kT, r_max);
  for (const auto& [i, a] : sigma.multiplicities()) s.add(VariableId::p(i), a);
  RSeries a(s), b(s);
  for (int i = 0; i <= r_max; ++i) {
    a.add_term({{kT, i}}, fz_a_coeff(i));
    b.add_term({{kT, i}}, fz_b_coeff(i));
  }
  RSeries psi = a;
  for (const auto& [i, m] : sigma.multiplicities()) {
    if (i % 3 == 0) {
      psi += RSeries::monomial(s, {{kT, i / 3}, {VariableId::p(i), 1}}, 1) * a;
    } else {
      psi += RSeries::monomial(s, {{kT, (i - 1) / 3}, {VariableId::p(i), 1}}, 1) * b;
    }
  }
  log_ = series_log(psi);
}

Rational PsiLog::at(const Partition& tau, int r) const {
  if (!sigma_.minus(tau) || r < 0 || r > r_max_) throw OutOfSpec("C^r(sigma) outside the table");
  Exponents e = p_exponents(log_.spec(), tau);
  e[log_.spec().require_index(kT)] = static_cast<std::int16_t>(r);
  return log_.extract(e);
}

std::shared_ptr<const PsiLog> psi_log(const Partition& sigma, int r_max) {
  static BoundedCache<Partition, PsiLog> cache;
  return cache.get(sigma, {std::max(r_max, 0)}, [&](const std::vector<int>& b) { return PsiLog(sigma, b[0]); });
}

bool thm5_applicable(int g, int r, const Partition& sigma) {
  return g >= 2 && r >= 0 && g - 1 + sigma.size() < 3 * r && (g - r - sigma.size() - 1) % 2 == 0;
}

namespace {

struct KVal {
  KSeries value;
};

}  // namespace

std::optional<Relation> thm5_relation(int g, int r, const Partition& sigma) {
  require_fz_partition(sigma);
  if (!thm5_applicable(g, r, sigma)) return std::nullopt;
  static BoundedCache<Partition, KVal> cache;
  auto v = cache.get(sigma, {r}, [&](const std::vector<int>& b) {
    auto lg = psi_log(sigma, b[0]);
    return KVal{series_exp(-insert_kappa(lg->series(), kT, 0))};
  });
  Exponents e = p_exponents(v->value.spec(), sigma);
  e[v->value.spec().require_index(kT)] = static_cast<std::int16_t>(r);
  return Relation{Family::Fz, g, r, std::nullopt, sigma, std::nullopt, v->value.extract(e)};
}

bool fz_reindexed_applicable(int g, int r, const Partition& sigma) {
  const int rhs = g + 3 * sigma.size() - 2 * sigma.length() + 1;
  return g >= 2 && r >= 0 && 3 * r >= rhs && (3 * r - rhs) % 2 == 0;
}

namespace {

/// 1 + C (p_1 + p_2 z + p_3 z^2 + ...) restricted to the parts of sigma.
RSeries one_plus_cp(const Partition& sigma, int z_order) {
  TruncationSpec s = zp_spec(sigma, z_order);
  auto pack = hypergeom(z_order, 1);
  RSeries pz(s);
  for (const auto& [i, a] : sigma.multiplicities()) pz.add_term({{kZ, i - 1}, {VariableId::p(i), 1}}, 1);
  return RSeries::constant(s, 1) + pack->C.restrict(s) * pz;
}

KSeries fz_exp(const Partition& sigma, int z_order) {
  return series_exp(-kappa_insert_z(series_log(one_plus_cp(sigma, z_order))));
}

KSeries sq_exp(const Partition& sigma, int z_order) {
  TruncationSpec s = zp_spec(sigma, z_order);
  auto pack = hypergeom(z_order, std::max(sigma.length(), 1));
  KSeries x(s);
  for (const auto& tau : sub_multisets(sigma)) {
    const int l = tau.length();
    RSeries term = (z_mono(s, tau.size() - l) * pack->Cn[static_cast<std::size_t>(l)].restrict(s))
                       .scaled(Rational(1) / Rational(tau.aut()));
    RSeries mono(s);
    mono.add_term(p_exponents(s, tau), 1);
    x += kappa_insert_z(term) * lift(mono);
  }
  return series_exp(-x);
}

}  // namespace

std::optional<Relation> fz_reindexed_relation(int g, int r, const Partition& sigma) {
  if (!fz_reindexed_applicable(g, r, sigma)) return std::nullopt;
  static BoundedCache<Partition, KVal> cache;
  auto v = cache.get(sigma, {r}, [&](const std::vector<int>& b) {
    auto pack = hypergeom(b[0], 1);
    return KVal{pack->E * fz_exp(sigma, b[0])};
  });
  Exponents e = p_exponents(v->value.spec(), sigma);
  e[v->value.spec().require_index(kZ)] = static_cast<std::int16_t>(r);
  return Relation{Family::FzReindexed, g, r, std::nullopt, sigma, std::nullopt, v->value.extract(e)};
}

KSeries sq_fz_sigma_series(const Partition& sigma, SqFzSide side, int z_order) {
  KSeries full = side == SqFzSide::FZ ? fz_exp(sigma, z_order) : sq_exp(sigma, z_order);
  return p_coefficient(full, sigma);
}

KappaPoly sq_relation_poly(const Partition& sigma, int r) {
  static BoundedCache<Partition, KVal> cache;
  auto v = cache.get(sigma, {r}, [&](const std::vector<int>& b) {
    auto pack = hypergeom(b[0], std::max(sigma.length(), 1));
    return KVal{pack->E * sq_fz_sigma_series(sigma, SqFzSide::SQ, b[0])};
  });
  return v->value.extract({{kZ, r}});
}

// ---- symbolic C-expansions ----

SymPoly SymPoly::constant(const KappaPoly& c, int zpow) {
  SymPoly p;
  p.add_term(Key{zpow, {}}, c);
  return p;
}

SymPoly SymPoly::symbol(int a, int j, const Rational& c) {
  SymPoly p;
  p.add_term(Key{0, {{a, j}}}, KappaPoly(c));
  return p;
}

void SymPoly::add_term(const Key& k, const KappaPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      SymPoly::Key k{ka.zpow + kb.zpow, ka.syms};
      k.syms.insert(k.syms.end(), kb.syms.begin(), kb.syms.end());
      std::sort(k.syms.begin(), k.syms.end());
      out.add_term(k, ca * cb);
    }
  }
  return out;
}

SymPoly SymPoly::scaled(const Rational& c) const {
  SymPoly out;
  for (const auto& [k, v] : terms_) out.add_term(k, v * c);
  return out;
}

KSeries SymPoly::to_series(int z_order) const {
  auto pack = hypergeom(z_order, 1);
  TruncationSpec s = TruncationSpec().add(kZ, z_order);
  RSeries cz = pack->C.restrict(s);
  std::map<std::pair<int, int>, KSeries> sym;
  std::vector<RSeries> cpow{RSeries::constant(s, 1)};
  auto symbol_series = [&](int a, int j) -> const KSeries& {
    auto it = sym.find({a, j});
    if (it != sym.end()) return it->second;
    while (static_cast<int>(cpow.size()) <= j) cpow.push_back(cpow.back() * cz);
    return sym.emplace(std::make_pair(a, j), kappa_insert_z(z_mono(s, a) * cpow[static_cast<std::size_t>(j)])).first->second;
  };
  KSeries out(s);
  for (const auto& [k, c] : terms_) {
    if (k.zpow > z_order) continue;
    KSeries term(s);
    term.add_term({{kZ, k.zpow}}, c);
    for (const auto& [a, j] : k.syms) term = term * symbol_series(a, j);
    out += term;
  }
  return out;
}

namespace {

/// Power series in the p-variables of sigma with SymPoly coefficients, indexed by sub-multisets.
using PGraded = std::map<Partition, SymPoly>;

PGraded pg_mul(const PGraded& a, const PGraded& b, const Partition& sigma) {
  PGraded out;
  for (const auto& [pa, ca] : a) {
    for (const auto& [pb, cb] : b) {
      Partition m = pa + pb;
      if (!sigma.minus(m)) continue;
      SymPoly prod = ca * cb;
      if (!prod.is_zero()) out[m] += prod;
    }
  }
  return out;
}

SymPoly pg_exp_neg_at(const PGraded& x, const Partition& sigma) {
  PGraded neg;
  for (const auto& [p, c] : x) neg[p] = c.scaled(-1);
  PGraded total{{Partition(), SymPoly::constant(KappaPoly(1))}};
  PGraded term = total;
  for (int k = 1; k <= sigma.length(); ++k) {
    term = pg_mul(term, neg, sigma);
    for (auto& [p, c] : term) c = c.scaled(frac(1, k));
    for (const auto& [p, c] : term) total[p] += c;
  }
  auto it = total.find(sigma);
  return it == total.end() ? SymPoly() : it->second;
}

}  // namespace

SymPoly fz_symbolic(const Partition& sigma) {
  PGraded x;
  for (const auto& tau : sub_multisets(sigma)) {
    const int l = tau.length();
    Rational w = Rational(factorial(static_cast<unsigned>(l - 1))) / Rational(tau.aut());
    if ((l - 1) % 2) w = -w;
    x[tau] = SymPoly::symbol(tau.size() - l, l, w);
  }
  return pg_exp_neg_at(x, sigma);
}

SymPoly sq_symbolic(const Partition& sigma) {
  PGraded x;
  auto fp = fpoly(std::max(sigma.length(), 1));
  for (const auto& tau : sub_multisets(sigma)) {
    const int l = tau.length(), a = tau.size() - l;
    Rational w = Rational(1) / Rational(tau.aut());
    SymPoly c;
    for (int j = 0; j <= l; ++j) {
      auto f = fp->f(l, j);
      for (std::size_t k = 0; k < f.size(); ++k) {
        if (f[k] == 0) continue;
        const int zp = a + static_cast<int>(k);
        if (j == 0) {
          c += SymPoly::constant(KappaPoly::monomial(KappaMonomial::kappa(zp), w * f[k]), zp);
        } else {
          c += SymPoly::symbol(zp, j, w * f[k]);
        }
      }
    }
    x[tau] = c;
  }
  return pg_exp_neg_at(x, sigma);
}

SqFzRow decompose_sq_row(const Partition& sigma) {
  SqFzRow row{sigma, {}};
  SymPoly residual = sq_symbolic(sigma);
  std::vector<std::pair<SymPoly::Key, KappaPoly>> linear;
  for (const auto& [k, c] : residual.terms()) {
    bool all_one = true;
    for (const auto& [a, j] : k.syms) all_one = all_one && j == 1;
    if (all_one) linear.emplace_back(k, c);
  }
  for (const auto& [k, c] : linear) {
    std::vector<int> parts;
    for (const auto& [a, j] : k.syms) parts.push_back(a + 1);
    Partition tau(parts);
    // the C-linear term of FZ_tau has coefficient (-1)^l / |Aut|
    Rational lead_inv = Rational(tau.aut());
    if (tau.length() % 2) lead_inv = -lead_inv;
    SymPoly entry = SymPoly::constant(c * lead_inv, k.zpow);
    row.coeff[tau] += entry;
    residual -= entry * fz_symbolic(tau);
  }
  if (!residual.is_zero()) throw std::logic_error("SQ to FZ decomposition leaves a residual for " + sigma.to_string());
  for (auto it = row.coeff.begin(); it != row.coeff.end();) {
    it = it->second.is_zero() ? row.coeff.erase(it) : std::next(it);
  }
  return row;
}

std::vector<SqFzRow> decompose_sq_in_fz(int sigma_max) {
  std::vector<SqFzRow> out;
  for (int n = 0; n <= sigma_max; ++n) {
    for (const auto& p : partitions_of(n)) out.push_back(decompose_sq_row(p));
  }
  return out;
}

CheckReport check_sq_row(const SqFzRow& row, int z_order) {
  CheckReport rep;
  const std::string name = "SQ_" + row.sigma.to_string();
  auto diag = row.coeff.find(row.sigma);
  rep.expect(diag != row.coeff.end() && diag->second == SymPoly::constant(KappaPoly(1)), name + " unit diagonal");
  for (const auto& [tau, c] : row.coeff) {
    if (tau == row.sigma) continue;
    rep.expect(tau.size() < row.sigma.size(), name + " entry at " + tau.to_string() + " not below the diagonal");
  }
  KSeries lhs = sq_fz_sigma_series(row.sigma, SqFzSide::SQ, z_order);
  KSeries rhs(lhs.spec());
  for (const auto& [tau, c] : row.coeff) rhs += c.to_series(z_order) * sq_fz_sigma_series(tau, SqFzSide::FZ, z_order);
  expect_series_equal(rep, name + " series identity", lhs, rhs);
  return rep;
}

}  // namespace tautring
