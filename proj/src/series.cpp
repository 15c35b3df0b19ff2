#include "tautring/series.hpp"

namespace tautring {

RSeries binomial_power(VariableId v, int half_exponent, const TruncationSpec& spec) {
  RSeries out(spec);
  const std::size_t idx = spec.require_index(v);
  const Rational a = frac(half_exponent, 2);
  Rational four_k = 1;
  for (int k = 0; k <= spec.hi(idx); ++k) {
    Exponents e{};
    e[idx] = static_cast<std::int16_t>(k);
    out.add_term(e, binomial(a, static_cast<unsigned>(k)) * four_k);
    four_k *= 4;
  }
  return out;
}

RSeries univariate(VariableId v, int hi, const std::vector<Rational>& coeffs) {
  RSeries out(TruncationSpec().add(v, hi));
  for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= hi; ++k) {
    Exponents e{};
    e[0] = static_cast<std::int16_t>(k);
    out.add_term(e, coeffs[k]);
  }
  return out;
}

KSeries insert_kappa(const RSeries& f, VariableId v, int shift) {
  const std::size_t idx = f.spec().require_index(v);
  return f.map<KappaPoly>([&](const Exponents& e, const Rational& c) {
    int index = e[idx] + shift;
    if (index < KappaMonomial::kMinIndex) throw std::invalid_argument("kappa insertion below kappa_{-1}");
    return KappaPoly::monomial(KappaMonomial::kappa(index), c);
  });
}

KSeries lift(const RSeries& f) {
  return f.map<KappaPoly>([](const Exponents&, const Rational& c) { return KappaPoly(c); });
}

KSeries map_kappa(const KSeries& f, const std::function<KappaPoly(const KappaPoly&)>& fn) {
  return f.map<KappaPoly>([&](const Exponents&, const KappaPoly& c) { return fn(c); });
}

RSeries evaluate_ones(const KSeries& f) {
  return f.map<Rational>([](const Exponents&, const KappaPoly& c) { return c.evaluate_ones(); });
}

}  // namespace tautring
