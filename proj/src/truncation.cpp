#include "tautring/truncation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tautring {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = 0;
  int db = 0;
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    da += a[k];
    db += b[k];
  }
  if (da != db) return da < db;
  return a < b;
}

TruncationSpec& TruncationSpec::add(VariableId v, int hi) {
  if (hi < 0) throw std::invalid_argument("upper bound must be non-negative for " + v.name());
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it != vars_.end() && *it == v) {
    throw std::invalid_argument("variable " + v.name() + " added twice");
  }
  if (vars_.size() == kMaxVars) throw std::length_error("too many series variables");
  const auto pos = static_cast<int>(it - vars_.begin());
  vars_.insert(it, v);
  hi_.insert(hi_.begin() + pos, hi);
  if (laurent_ >= pos) ++laurent_;
  if (partner_ >= pos) ++partner_;
  for (auto& c : caps_) c.weights.insert(c.weights.begin() + pos, 0);
  return *this;
}

TruncationSpec& TruncationSpec::laurent(VariableId v, VariableId partner) {
  if (laurent_ >= 0) throw std::invalid_argument("only one Laurent variable per series");
  laurent_ = static_cast<int>(require_index(v));
  partner_ = static_cast<int>(require_index(partner));
  if (laurent_ == partner_) throw std::invalid_argument("Laurent partner must differ");
  return *this;
}

TruncationSpec& TruncationSpec::cap(const std::vector<std::pair<VariableId, int>>& weights,
                                    int bound) {
  Cap c{std::vector<int>(vars_.size(), 0), bound};
  for (const auto& [v, w] : weights) {
    if (w < 0) throw std::invalid_argument("cap weights must be non-negative");
    c.weights[require_index(v)] = w;
  }
  caps_.push_back(std::move(c));
  return *this;
}

std::optional<std::size_t> TruncationSpec::index_of(const VariableId& v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

std::size_t TruncationSpec::require_index(const VariableId& v) const {
  auto k = index_of(v);
  if (!k) throw std::invalid_argument("variable " + v.name() + " not in truncation spec");
  return *k;
}

std::optional<std::size_t> TruncationSpec::laurent_index() const {
  if (laurent_ < 0) return std::nullopt;
  return static_cast<std::size_t>(laurent_);
}

int TruncationSpec::shifted(const Exponents& e, std::size_t k) const {
  if (static_cast<int>(k) == laurent_) return e[k] + e[static_cast<std::size_t>(partner_)];
  return e[k];
}

bool TruncationSpec::lower_ok(const Exponents& e) const {
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    if (shifted(e, k) < 0) return false;
  }
  for (std::size_t k = vars_.size(); k < kMaxVars; ++k) {
    if (e[k] != 0) return false;
  }
  return true;
}

bool TruncationSpec::admits(const Exponents& e) const {
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    if (shifted(e, k) > hi_[k]) return false;
  }
  for (const auto& c : caps_) {
    int s = 0;
    for (std::size_t k = 0; k < vars_.size(); ++k) s += c.weights[k] * shifted(e, k);
    if (s > c.bound) return false;
  }
  return true;
}

int TruncationSpec::degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t k = 0; k < vars_.size(); ++k) d += shifted(e, k);
  return d;
}

int TruncationSpec::max_degree() const { return std::accumulate(hi_.begin(), hi_.end(), 0); }

TruncationSpec TruncationSpec::intersect(const TruncationSpec& a, const TruncationSpec& b) {
  TruncationSpec out;
  for (std::size_t k = 0; k < a.size(); ++k) out.add(a.var(k), a.hi(k));
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (auto idx = out.index_of(b.var(k))) {
      out.hi_[*idx] = std::min(out.hi_[*idx], b.hi(k));
    } else {
      out.add(b.var(k), b.hi(k));
    }
  }
  const TruncationSpec* laurent_src = nullptr;
  for (const auto* s : {&a, &b}) {
    if (!s->has_laurent()) continue;
    if (laurent_src) {
      if (laurent_src->var(laurent_src->laurent_) != s->var(s->laurent_) ||
          laurent_src->var(laurent_src->partner_) != s->var(s->partner_)) {
        throw std::invalid_argument("incompatible Laurent structures");
      }
    } else {
      laurent_src = s;
    }
  }
  if (laurent_src) {
    out.laurent(laurent_src->var(laurent_src->laurent_), laurent_src->var(laurent_src->partner_));
  }
  for (const auto* s : {&a, &b}) {
    for (const auto& c : s->caps_) {
      Cap mapped{std::vector<int>(out.size(), 0), c.bound};
      for (std::size_t k = 0; k < s->size(); ++k) mapped.weights[out.require_index(s->var(k))] = c.weights[k];
      if (std::find(out.caps_.begin(), out.caps_.end(), mapped) == out.caps_.end()) {
        out.caps_.push_back(std::move(mapped));
      }
    }
  }
  return out;
}

bool TruncationSpec::covers(const TruncationSpec& other) const {
  // Regions with a Laurent variable here but not there (or vice versa) are
  // compared in this spec's shifted coordinates.
  if (other.has_laurent()) {
    auto here = index_of(other.var(other.laurent_));
    if (!here || !is_laurent(*here) || var(partner_) != other.var(other.partner_)) return false;
  }
  const bool same_coords =
      has_laurent() == other.has_laurent();

  // Upper bound of each shifted coordinate of ours over the other region.
  std::vector<long> ub(size(), 0);
  for (std::size_t k = 0; k < size(); ++k) {
    auto o = other.index_of(var(k));
    if (!o) continue;
    ub[k] = other.hi(*o);
    if (is_laurent(k) && !other.has_laurent()) {
      if (auto op = other.index_of(var(partner_))) ub[k] += other.hi(*op);
    }
  }

  auto bounded = [&](const std::vector<int>& w, int bound) {
    long s = 0;
    for (std::size_t k = 0; k < size(); ++k) s += static_cast<long>(w[k]) * ub[k];
    if (s <= bound) return true;
    if (!same_coords) return false;
    auto dominated = [&](const std::vector<int>& w_other_layout, int b_other) {
      if (b_other > bound) return false;
      for (std::size_t k = 0; k < size(); ++k) {
        if (w[k] == 0) continue;
        auto o = other.index_of(var(k));
        if (!o || w_other_layout[*o] < w[k]) return false;
      }
      return true;
    };
    for (const auto& c : other.caps_) {
      if (dominated(c.weights, c.bound)) return true;
    }
    return false;
  };

  for (std::size_t k = 0; k < size(); ++k) {
    std::vector<int> unit(size(), 0);
    unit[k] = 1;
    if (!bounded(unit, hi_[k])) return false;
  }
  for (const auto& c : caps_) {
    if (!bounded(c.weights, c.bound)) return false;
  }
  return true;
}

std::optional<Exponents> TruncationSpec::embed(const Exponents& e, const TruncationSpec& from) const {
  Exponents out{};
  for (std::size_t k = 0; k < from.size(); ++k) {
    if (e[k] == 0) continue;
    auto idx = index_of(from.var(k));
    if (!idx) return std::nullopt;
    out[*idx] = e[k];
  }
  return out;
}

Exponents TruncationSpec::exponents(std::initializer_list<std::pair<VariableId, int>> parts) const {
  Exponents out{};
  for (const auto& [v, e] : parts) out[require_index(v)] = static_cast<std::int16_t>(e);
  return out;
}

}  // namespace tautring

namespace tautring {

TruncationSpec TruncationSpec::without(VariableId v, int k) const {
  const std::size_t idx = require_index(v);
  if (is_laurent(idx) || is_laurent_partner(idx)) {
    throw std::invalid_argument("cannot slice the Laurent pair by " + v.name());
  }
  if (k < 0 || k > hi_[idx]) throw OutOfSpec("slice " + v.name() + "^" + std::to_string(k) + " outside spec");
  TruncationSpec out;
  for (std::size_t j = 0; j < size(); ++j) {
    if (j != idx) out.add(vars_[j], hi_[j]);
  }
  if (has_laurent()) out.laurent(var(static_cast<std::size_t>(laurent_)), var(static_cast<std::size_t>(partner_)));
  for (const auto& c : caps_) {
    Cap mapped{{}, c.bound - c.weights[idx] * k};
    if (mapped.bound < 0) throw OutOfSpec("slice " + v.name() + "^" + std::to_string(k) + " violates a cap");
    for (std::size_t j = 0; j < size(); ++j) {
      if (j != idx) mapped.weights.push_back(c.weights[j]);
    }
    out.caps_.push_back(std::move(mapped));
  }
  return out;
}

TruncationSpec TruncationSpec::renamed(VariableId from, VariableId to) const {
  const std::size_t idx = require_index(from);
  if (index_of(to)) throw std::invalid_argument("rename target " + to.name() + " already present");
  TruncationSpec out;
  for (std::size_t j = 0; j < size(); ++j) out.add(j == idx ? to : vars_[j], hi_[j]);
  auto map_var = [&](std::size_t j) { return j == idx ? to : vars_[j]; };
  if (has_laurent()) {
    out.laurent(map_var(static_cast<std::size_t>(laurent_)), map_var(static_cast<std::size_t>(partner_)));
  }
  for (const auto& c : caps_) {
    Cap mapped{std::vector<int>(size(), 0), c.bound};
    for (std::size_t j = 0; j < size(); ++j) mapped.weights[out.require_index(map_var(j))] = c.weights[j];
    out.caps_.push_back(std::move(mapped));
  }
  return out;
}

TruncationSpec TruncationSpec::shifted_by(VariableId v, int k) const {
  const std::size_t idx = require_index(v);
  TruncationSpec out = *this;
  // Raw coefficient of e_v inside the shifted coordinate j.
  auto raw_weight = [&](std::size_t j) {
    int w = (j == idx) ? 1 : 0;
    if (is_laurent(j) && is_laurent_partner(idx)) w += 1;
    return w;
  };
  for (std::size_t j = 0; j < size(); ++j) {
    out.hi_[j] = hi_[j] + k * raw_weight(j);
    if (out.hi_[j] < 0) throw OutOfSpec("shift by " + v.name() + " leaves no exact coefficients");
  }
  for (std::size_t c = 0; c < caps_.size(); ++c) {
    int coef = 0;
    for (std::size_t j = 0; j < size(); ++j) coef += caps_[c].weights[j] * raw_weight(j);
    out.caps_[c].bound = caps_[c].bound + k * coef;
    if (out.caps_[c].bound < 0) throw OutOfSpec("shift by " + v.name() + " leaves no exact coefficients");
  }
  return out;
}

}  // namespace tautring
