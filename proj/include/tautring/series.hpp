#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tautring/kappa.hpp"
#include "tautring/parallel.hpp"
#include "tautring/rational.hpp"
#include "tautring/truncation.hpp"

namespace tautring {

namespace ring {
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const KappaPoly& p) { return p.is_zero(); }
inline std::optional<Rational> scalar(const Rational& q) { return q; }
inline std::optional<Rational> scalar(const KappaPoly& p) { return p.as_constant(); }
inline void scale(Rational& a, const Rational& c) { a *= c; }
inline void scale(KappaPoly& a, const Rational& c) { a *= c; }
}  // namespace ring

using Monomial = std::initializer_list<std::pair<VariableId, int>>;

/// Truncated multivariate series with coefficients in R (Rational or KappaPoly).
/// Only coefficients inside spec() are stored or reported.
template <class R>
class Series {
 public:
  using Map = std::map<Exponents, R, GradedLexLess>;
  using Term = std::pair<Exponents, R>;

  Series() = default;
  explicit Series(TruncationSpec spec) : spec_(std::move(spec)) {}

  static Series constant(TruncationSpec spec, const R& c) {
    Series s(std::move(spec));
    s.add_term(Exponents{}, c);
    return s;
  }
  static Series monomial(TruncationSpec spec, Monomial m, const R& c) {
    Series s(std::move(spec));
    s.add_term(s.spec_.exponents(m), c);
    return s;
  }

  const TruncationSpec& spec() const { return spec_; }
  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c at e. Terms above the upper bounds are silently dropped; a term
  /// violating the lower-bound invariant is rejected.
  void add_term(const Exponents& e, const R& c) {
    if (!spec_.lower_ok(e)) throw std::invalid_argument("exponent violates the lower bound of the spec");
    if (!spec_.admits(e) || ring::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (ring::is_zero(it->second)) terms_.erase(it);
    }
  }
  void add_term(Monomial m, const R& c) { add_term(spec_.exponents(m), c); }

  R extract(const Exponents& e) const {
    if (!spec_.lower_ok(e) || !spec_.admits(e)) throw OutOfSpec("monomial outside truncation spec");
    auto it = terms_.find(e);
    return it == terms_.end() ? R{} : it->second;
  }
  R extract(Monomial m) const { return extract(spec_.exponents(m)); }
  R constant_term() const { return extract(Exponents{}); }

  Series& operator+=(const Series& o) { return *this = combine(*this, o, false); }
  Series& operator-=(const Series& o) { return *this = combine(*this, o, true); }
  friend Series operator+(const Series& a, const Series& b) { return combine(a, b, false); }
  friend Series operator-(const Series& a, const Series& b) { return combine(a, b, true); }
  Series operator-() const {
    Series out(spec_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, R{} - c);
    return out;
  }
  friend Series operator*(const Series& a, const Series& b) { return multiply(a, b, thread_budget()); }

  /// Coefficient-wise multiplication by a ring element.
  Series times(const R& c) const {
    Series out(spec_);
    for (const auto& [e, v] : terms_) out.add_term(e, v * c);
    return out;
  }
  Series scaled(const Rational& c) const {
    Series out(spec_);
    if (ring::is_zero(c)) return out;
    for (const auto& [e, v] : terms_) {
      R w = v;
      ring::scale(w, c);
      out.terms_.emplace(e, std::move(w));
    }
    return out;
  }

  /// Re-expresses the series over a region covered by the current one.
  Series restrict(const TruncationSpec& target) const {
    if (!spec_.covers(target)) throw OutOfSpec("restriction target not covered by the source spec");
    Series out(target);
    for (const auto& [e, c] : terms_) {
      auto mapped = target.embed(e, spec_);
      if (mapped && target.lower_ok(*mapped) && target.admits(*mapped)) out.terms_.emplace(*mapped, c);
    }
    return out;
  }

  /// The v^k slice, as a series without v.
  Series slice(VariableId v, int k) const {
    const std::size_t idx = spec_.require_index(v);
    TruncationSpec target = spec_.without(v, k);
    Series out(target);
    for (const auto& [e, c] : terms_) {
      if (e[idx] != k) continue;
      Exponents f = e;
      f[idx] = 0;
      out.terms_.emplace(*target.embed(f, spec_), c);
    }
    return out;
  }

  Series renamed(VariableId from, VariableId to) const {
    TruncationSpec target = spec_.renamed(from, to);
    const std::size_t src = spec_.require_index(from);
    const std::size_t dst = target.require_index(to);
    Series out(target);
    for (const auto& [e, c] : terms_) {
      Exponents f{};
      for (std::size_t k = 0; k < spec_.size(); ++k) {
        if (k == src) continue;
        f[target.require_index(spec_.var(k))] = e[k];
      }
      f[dst] = e[src];
      out.terms_.emplace(f, c);
    }
    return out;
  }

  /// Multiplies by v^k (k may be negative when every term allows it).
  Series shift(VariableId v, int k) const {
    const std::size_t idx = spec_.require_index(v);
    Series out(spec_.shifted_by(v, k));
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f[idx] = static_cast<std::int16_t>(f[idx] + k);
      if (!out.spec_.lower_ok(f)) throw std::invalid_argument("shift by " + v.name() + " breaks the lower bound");
      out.terms_.emplace(f, c);
    }
    return out;
  }

  /// (v d/dv)^n.
  Series euler(VariableId v, unsigned n) const {
    const std::size_t idx = spec_.require_index(v);
    if (spec_.is_laurent(idx)) throw std::invalid_argument("Euler operator on the Laurent variable");
    Series out(spec_);
    for (const auto& [e, c] : terms_) {
      Integer f = 1;
      for (unsigned k = 0; k < n; ++k) f *= e[idx];
      if (f == 0) continue;
      R w = c;
      ring::scale(w, Rational(f));
      out.terms_.emplace(e, std::move(w));
    }
    return out;
  }

  /// d/dv.
  Series derivative(VariableId v) const {
    const std::size_t idx = spec_.require_index(v);
    if (spec_.is_laurent_partner(idx)) throw std::invalid_argument("derivative in the Laurent partner");
    Series out(spec_.shifted_by(v, -1));
    for (const auto& [e, c] : terms_) {
      if (e[idx] == 0) continue;
      Exponents f = e;
      f[idx] = static_cast<std::int16_t>(f[idx] - 1);
      if (!out.spec_.lower_ok(f)) throw std::invalid_argument("derivative breaks the lower bound");
      R w = c;
      ring::scale(w, Rational(e[idx]));
      out.terms_.emplace(f, std::move(w));
    }
    return out;
  }

  /// f(..., lambda * v, ...).
  Series scale_var(VariableId v, const Rational& lambda) const {
    const std::size_t idx = spec_.require_index(v);
    Series out(spec_);
    for (const auto& [e, c] : terms_) {
      R w = c;
      Rational f = 1;
      if (e[idx] >= 0) {
        for (int k = 0; k < e[idx]; ++k) f *= lambda;
      } else {
        for (int k = 0; k < -e[idx]; ++k) f /= lambda;
      }
      ring::scale(w, f);
      out.add_term(e, w);
    }
    return out;
  }

  /// Multiplies each term by (-1)^{sum_v w_v e_v}.
  Series sign_flip(const std::vector<std::pair<VariableId, int>>& weights) const {
    std::vector<std::pair<std::size_t, int>> idx;
    for (const auto& [v, w] : weights) {
      if (auto k = spec_.index_of(v)) idx.emplace_back(*k, w);
    }
    Series out(spec_);
    for (const auto& [e, c] : terms_) {
      long s = 0;
      for (const auto& [k, w] : idx) s += static_cast<long>(w) * e[k];
      out.terms_.emplace(e, sign_power(s) > 0 ? R(c) : R(-c));
    }
    return out;
  }

  /// Applies fn to every (exponent, coefficient) pair; fn returns the new coefficient.
  template <class S, class Fn>
  Series<S> map(Fn&& fn) const {
    Series<S> out(spec_);
    for (const auto& [e, c] : terms_) out.add_term(e, fn(e, c));
    return out;
  }

  /// Terms grouped by shifted total degree, 0 .. spec().max_degree().
  std::vector<std::vector<Term>> graded() const {
    std::vector<std::vector<Term>> out(static_cast<std::size_t>(spec_.max_degree()) + 1);
    for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(spec_.degree(e))].emplace_back(e, c);
    return out;
  }

  bool operator==(const Series& o) const { return spec_ == o.spec_ && terms_ == o.terms_; }

  // Kernels. `threads` <= 1 selects the serial reference path.
  static Series multiply(const Series& a, const Series& b, int threads) {
    TruncationSpec s = TruncationSpec::intersect(a.spec_, b.spec_);
    auto ta = relayout(a, s);
    auto tb = relayout(b, s);
    Series out(s);
    if (threads > 1 && ta.size() * tb.size() > 256) {
      mul_parallel(ta, tb, s, out.terms_, threads);
    } else {
      mul_serial(ta, tb, s, out.terms_);
    }
    return out;
  }

  static void mul_serial(const std::vector<Term>& a, const std::vector<Term>& b, const TruncationSpec& s,
                         Map& out) {
    Exponents e;
    for (const auto& [ea, ca] : a) {
      for (const auto& [eb, cb] : b) {
        for (std::size_t k = 0; k < kMaxVars; ++k) e[k] = static_cast<std::int16_t>(ea[k] + eb[k]);
        if (!s.admits(e)) continue;
        accumulate(out, e, ca * cb);
      }
    }
    prune(out);
  }

  static void mul_parallel(const std::vector<Term>& a, const std::vector<Term>& b, const TruncationSpec& s,
                           Map& out, int threads) {
#ifdef _OPENMP
    const long n = static_cast<long>(a.size());
    std::vector<Map> partial(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
    {
      Map& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
      Exponents e;
#pragma omp for schedule(dynamic, 4)
      for (long i = 0; i < n; ++i) {
        const auto& [ea, ca] = a[static_cast<std::size_t>(i)];
        for (const auto& [eb, cb] : b) {
          for (std::size_t k = 0; k < kMaxVars; ++k) e[k] = static_cast<std::int16_t>(ea[k] + eb[k]);
          if (!s.admits(e)) continue;
          accumulate(local, e, ca * cb);
        }
      }
    }
    for (auto& m : partial) {
      for (auto& [e, c] : m) accumulate(out, e, c);
    }
    prune(out);
#else
    (void)threads;
    mul_serial(a, b, s, out);
#endif
  }

  static std::vector<Term> relayout(const Series& a, const TruncationSpec& s) {
    std::vector<Term> out;
    out.reserve(a.terms_.size());
    for (const auto& [e, c] : a.terms_) {
      auto m = s.embed(e, a.spec_);
      if (m && s.admits(*m)) out.emplace_back(*m, c);
    }
    return out;
  }

 private:
  template <class V>
  static void accumulate(Map& m, const Exponents& e, V&& c) {
    auto it = m.find(e);
    if (it == m.end()) {
      m.emplace(e, R(std::forward<V>(c)));
    } else {
      it->second += c;
    }
  }
  static void prune(Map& m) {
    for (auto it = m.begin(); it != m.end();) {
      if (ring::is_zero(it->second)) {
        it = m.erase(it);
      } else {
        ++it;
      }
    }
  }

  static Series combine(const Series& a, const Series& b, bool subtract) {
    TruncationSpec s = TruncationSpec::intersect(a.spec_, b.spec_);
    Series out(s);
    for (auto& [e, c] : relayout(a, s)) out.terms_.emplace(e, c);
    for (auto& [e, c] : relayout(b, s)) {
      if (subtract) {
        accumulate(out.terms_, e, R{} - c);
      } else {
        accumulate(out.terms_, e, c);
      }
    }
    prune(out.terms_);
    return out;
  }

  template <class S>
  friend class Series;

  TruncationSpec spec_;
  Map terms_;
};

using RSeries = Series<Rational>;
using KSeries = Series<KappaPoly>;

namespace detail {

template <class R>
using Piece = std::vector<typename Series<R>::Term>;

template <class R>
void product_into(typename Series<R>::Map& acc, const Piece<R>& a, const Piece<R>& b, const TruncationSpec& s,
                  const Rational& weight) {
  typename Series<R>::Map tmp;
  if (thread_budget() > 1 && a.size() * b.size() > 256) {
    Series<R>::mul_parallel(a, b, s, tmp, thread_budget());
  } else {
    Series<R>::mul_serial(a, b, s, tmp);
  }
  for (auto& [e, c] : tmp) {
    ring::scale(c, weight);
    auto it = acc.find(e);
    if (it == acc.end()) {
      acc.emplace(e, std::move(c));
    } else {
      it->second += c;
    }
  }
}

template <class R>
Piece<R> finish(typename Series<R>::Map& acc, const Rational& factor) {
  Piece<R> out;
  for (auto& [e, c] : acc) {
    if (ring::is_zero(c)) continue;
    ring::scale(c, factor);
    out.emplace_back(e, std::move(c));
  }
  return out;
}

template <class R>
Series<R> assemble(const TruncationSpec& s, const std::vector<Piece<R>>& pieces) {
  Series<R> out(s);
  for (const auto& piece : pieces) {
    for (const auto& [e, c] : piece) out.add_term(e, c);
  }
  return out;
}

}  // namespace detail

/// exp(f) for f with zero constant term.
template <class R>
Series<R> series_exp(const Series<R>& f) {
  if (!ring::is_zero(f.constant_term())) throw std::invalid_argument("exp requires a zero constant term");
  const auto& s = f.spec();
  auto g = f.graded();
  const std::size_t n_max = g.size() - 1;
  std::vector<detail::Piece<R>> e(n_max + 1);
  e[0].emplace_back(Exponents{}, R(Rational(1)));
  for (std::size_t n = 1; n <= n_max; ++n) {
    typename Series<R>::Map acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (g[k].empty() || e[n - k].empty()) continue;
      detail::product_into<R>(acc, g[k], e[n - k], s, Rational(static_cast<long>(k)));
    }
    e[n] = detail::finish<R>(acc, frac(1, static_cast<long>(n)));
  }
  return detail::assemble<R>(s, e);
}

/// log(f) for f with constant term 1.
template <class R>
Series<R> series_log(const Series<R>& f) {
  auto c = ring::scalar(f.constant_term());
  if (!c || *c != 1) throw std::invalid_argument("log requires constant term 1");
  const auto& s = f.spec();
  auto g = f.graded();
  const std::size_t n_max = g.size() - 1;
  std::vector<detail::Piece<R>> l(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    typename Series<R>::Map acc;
    for (const auto& [e, v] : g[n]) acc.emplace(e, v);
    for (std::size_t k = 1; k < n; ++k) {
      if (l[k].empty() || g[n - k].empty()) continue;
      detail::product_into<R>(acc, l[k], g[n - k], s, frac(-static_cast<long>(k), static_cast<long>(n)));
    }
    l[n] = detail::finish<R>(acc, Rational(1));
  }
  return detail::assemble<R>(s, l);
}

/// 1/f for f whose constant term is a nonzero scalar.
template <class R>
Series<R> series_inverse(const Series<R>& f) {
  auto c = ring::scalar(f.constant_term());
  if (!c || sgn(*c) == 0) throw std::invalid_argument("inverse requires an invertible scalar constant term");
  const auto& s = f.spec();
  auto g = f.graded();
  const std::size_t n_max = g.size() - 1;
  Rational inv = 1 / *c;
  Rational neg_inv = -inv;
  std::vector<detail::Piece<R>> h(n_max + 1);
  h[0].emplace_back(Exponents{}, R(inv));
  for (std::size_t n = 1; n <= n_max; ++n) {
    typename Series<R>::Map acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (g[k].empty() || h[n - k].empty()) continue;
      detail::product_into<R>(acc, g[k], h[n - k], s, neg_inv);
    }
    h[n] = detail::finish<R>(acc, Rational(1));
  }
  return detail::assemble<R>(s, h);
}

/// f(g) for univariate f (over the rationals) and g with zero constant term.
template <class R>
Series<R> series_compose(const RSeries& f, const Series<R>& g) {
  if (f.spec().size() != 1) throw std::invalid_argument("compose requires a univariate outer series");
  if (!ring::is_zero(g.constant_term())) throw std::invalid_argument("compose requires a zero constant term");
  const int order = f.spec().hi(0);
  int min_deg = -1;
  for (const auto& [e, c] : g.terms()) {
    int d = g.spec().degree(e);
    if (min_deg < 0 || d < min_deg) min_deg = d;
  }
  std::vector<Rational> coeff(static_cast<std::size_t>(order) + 1);
  for (const auto& [e, c] : f.terms()) coeff[static_cast<std::size_t>(e[0])] = c;
  TruncationSpec s = g.spec();
  if (min_deg > 0 && static_cast<long>(order + 1) * min_deg <= s.max_degree()) {
    std::vector<std::pair<VariableId, int>> ones;
    for (const auto& v : s.vars()) ones.emplace_back(v, 1);
    s.cap(ones, (order + 1) * min_deg - 1);
  }
  Series<R> gg = g.restrict(s);
  Series<R> acc = Series<R>::constant(s, R(coeff[static_cast<std::size_t>(order)]));
  for (int k = order - 1; k >= 0; --k) {
    acc = acc * gg;
    acc.add_term(Exponents{}, R(coeff[static_cast<std::size_t>(k)]));
  }
  return acc.restrict(s);
}

/// (1 + 4 v)^{half_exponent / 2} inside `spec`.
RSeries binomial_power(VariableId v, int half_exponent, const TruncationSpec& spec);

/// Univariate series from coefficients c_0, c_1, ... in v with upper bound hi.
RSeries univariate(VariableId v, int hi, const std::vector<Rational>& coeffs);

/// c * kappa_{e_v + shift} on every term (other variables are spectators).
KSeries insert_kappa(const RSeries& f, VariableId v, int shift);
/// Rational series viewed over KappaPoly.
KSeries lift(const RSeries& f);
/// Applies a coefficient map to every term.
KSeries map_kappa(const KSeries& f, const std::function<KappaPoly(const KappaPoly&)>& fn);
/// Sets every kappa to 1.
RSeries evaluate_ones(const KSeries& f);

}  // namespace tautring
