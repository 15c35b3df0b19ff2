#include "tautring/kappa.hpp"

#include <algorithm>
#include <stdexcept>

namespace tautring {

namespace {
constexpr int kSlots = KappaMonomial::kMaxKappa + 2;

int slot(int index) {
  if (index < KappaMonomial::kMinIndex || index > KappaMonomial::kMaxKappa) {
    throw std::out_of_range("kappa index " + std::to_string(index) + " out of range");
  }
  return index + 1;
}
}  // namespace

KappaMonomial KappaMonomial::kappa(int index, int power) {
  KappaMonomial m;
  if (power < 0 || power > 255) throw std::out_of_range("kappa power out of range");
  m.exps_[static_cast<std::size_t>(slot(index))] = static_cast<std::uint8_t>(power);
  return m;
}

KappaMonomial KappaMonomial::from_parts(const std::vector<int>& parts) {
  KappaMonomial m;
  for (int p : parts) m = m * kappa(p);
  return m;
}

int KappaMonomial::exponent(int index) const {
  if (index < kMinIndex || index > kMaxKappa) return 0;
  return exps_[static_cast<std::size_t>(index + 1)];
}

int KappaMonomial::degree() const {
  int d = 0;
  for (int s = 0; s < kSlots; ++s) d += (s - 1) * exps_[static_cast<std::size_t>(s)];
  return d;
}

bool KappaMonomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

std::vector<int> KappaMonomial::parts() const {
  std::vector<int> out;
  for (int s = kSlots - 1; s >= 0; --s) {
    for (int k = 0; k < exps_[static_cast<std::size_t>(s)]; ++k) out.push_back(s - 1);
  }
  return out;
}

KappaMonomial KappaMonomial::operator*(const KappaMonomial& other) const {
  KappaMonomial m;
  for (std::size_t s = 0; s < exps_.size(); ++s) {
    int e = exps_[s] + other.exps_[s];
    if (e > 255) throw std::overflow_error("kappa exponent overflow");
    m.exps_[s] = static_cast<std::uint8_t>(e);
  }
  return m;
}

KappaMonomial KappaMonomial::without(int index) const {
  KappaMonomial m = *this;
  m.exps_[static_cast<std::size_t>(slot(index))] = 0;
  return m;
}

bool KappaMonomial::operator<(const KappaMonomial& other) const {
  int da = degree();
  int db = other.degree();
  if (da != db) return da < db;
  for (int s = kSlots - 1; s >= 0; --s) {
    auto a = exps_[static_cast<std::size_t>(s)];
    auto b = other.exps_[static_cast<std::size_t>(s)];
    if (a != b) return a > b;
  }
  return false;
}

std::string KappaMonomial::to_string() const {
  std::string out;
  for (int p : parts()) out += "κ_{" + std::to_string(p) + "}";
  return out.empty() ? "1" : out;
}

KappaPoly::KappaPoly(const Rational& c) {
  if (!tautring::is_zero(c)) terms_.emplace(KappaMonomial{}, c);
}

KappaPoly KappaPoly::monomial(const KappaMonomial& m, const Rational& c) {
  KappaPoly p;
  p.add_term(m, c);
  return p;
}

Rational KappaPoly::coefficient(const KappaMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> KappaPoly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

void KappaPoly::add_term(const KappaMonomial& m, const Rational& c) {
  if (tautring::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (tautring::is_zero(it->second)) terms_.erase(it);
  }
}

bool KappaPoly::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& kv) { return kv.first.degree() == degree; });
}

std::vector<int> KappaPoly::degrees() const {
  std::vector<int> out;
  for (const auto& [m, c] : terms_) out.push_back(m.degree());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

KappaPoly& KappaPoly::operator+=(const KappaPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

KappaPoly& KappaPoly::operator-=(const KappaPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

KappaPoly& KappaPoly::operator*=(const Rational& c) {
  if (tautring::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

KappaPoly KappaPoly::operator-() const {
  KappaPoly out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

KappaPoly operator*(const KappaPoly& a, const KappaPoly& b) {
  KappaPoly out;
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(ma * mb, prod);
    }
  }
  return out;
}

KappaPoly KappaPoly::substitute(int index, const Rational& value) const {
  KappaPoly out;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(index);
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    Rational f = c;
    for (int k = 0; k < e; ++k) f *= value;
    out.add_term(m.without(index), f);
  }
  return out;
}

Rational KappaPoly::evaluate_ones() const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

std::string KappaPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + to_string(c) + ")";
    if (!m.is_one()) out += "·" + m.to_string();
  }
  return out;
}

KappaPoly specialize_genus(const KappaPoly& p, int g) {
  return p.substitute(-1, 0).substitute(0, Rational(2 * g - 2));
}

KappaPoly kill_minus_one(const KappaPoly& p) { return p.substitute(-1, 0); }

namespace {
void partitions_into(int r, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (r == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(r, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_into(r - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<std::vector<int>> kappa_basis(int r) {
  std::vector<std::vector<int>> out;
  if (r < 0) return out;
  std::vector<int> cur;
  partitions_into(r, r, cur, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return KappaMonomial::from_parts(a) < KappaMonomial::from_parts(b);
  });
  return out;
}

std::vector<Rational> vectorize(const KappaPoly& p, int r) {
  auto basis = kappa_basis(r);
  std::map<KappaMonomial, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(KappaMonomial::from_parts(basis[k]), k);
  std::vector<Rational> v(basis.size());
  for (const auto& [m, c] : p.terms()) {
    auto it = index.find(m);
    if (it == index.end()) {
      throw std::invalid_argument("monomial " + m.to_string() + " is not a basis element of degree " +
                                  std::to_string(r));
    }
    v[it->second] = c;
  }
  return v;
}

KappaPoly from_vector(const std::vector<Rational>& v, int r) {
  auto basis = kappa_basis(r);
  if (v.size() != basis.size()) throw std::invalid_argument("vector length does not match basis");
  KappaPoly p;
  for (std::size_t k = 0; k < v.size(); ++k) p.add_term(KappaMonomial::from_parts(basis[k]), v[k]);
  return p;
}

}  // namespace tautring
