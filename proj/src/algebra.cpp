#include "tautring/algebra.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "tautring/faber.hpp"
#include "tautring/fz.hpp"
#include "tautring/ionel.hpp"
#include "tautring/parallel.hpp"
#include "tautring/sq.hpp"

namespace tautring {

std::size_t RelationMatrix::columns() const { return kappa_basis(r).size(); }

void RelationMatrix::add_row(std::vector<Rational> row, std::string origin) {
  if (row.size() != columns()) throw std::invalid_argument("row length does not match the kappa basis");
  rows.push_back(std::move(row));
  provenance.push_back(std::move(origin));
}

void RelationMatrix::add_relation(const Relation& rel) {
  if (rel.r != r) throw std::invalid_argument("relation degree does not match the matrix");
  add_row(vectorize(rel.specialized(), r), describe(rel));
}

std::string describe(const Relation& rel) {
  std::string s = family_name(rel.family) + " g=" + std::to_string(rel.g) + " r=" + std::to_string(rel.r);
  if (rel.d) s += " d=" + std::to_string(*rel.d);
  if (rel.zsigma) {
    s += " z=" + rel.zsigma->to_string();
  } else {
    s += " sigma=" + rel.sigma.to_string();
  }
  return s;
}

namespace {

std::vector<Integer> integer_row(const std::vector<Rational>& row) {
  Integer l = 1;
  for (const auto& c : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& c : row) {
    Integer v = c.get_num() * (l / c.get_den());
    out.push_back(v);
  }
  return out;
}

bool is_zero_row(const std::vector<Rational>& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

/// Incremental echelon basis; each pivot row remembers its combination of input rows.
struct Echelon {
  struct Pivot {
    std::size_t col;
    std::vector<Rational> row;
    std::map<std::size_t, Rational> combo;
  };
  std::vector<Pivot> pivots;

  /// Reduces v (with its combination) against the pivots in place.
  void reduce(std::vector<Rational>& v, std::map<std::size_t, Rational>& combo) const {
    for (const auto& p : pivots) {
      if (v[p.col] == 0) continue;
      Rational f = v[p.col];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * p.row[j];
      for (const auto& [k, c] : p.combo) {
        Rational& slot = combo[k];
        slot -= f * c;
        if (slot == 0) combo.erase(k);
      }
    }
  }

  void insert(std::vector<Rational> v, std::size_t index) {
    std::map<std::size_t, Rational> combo{{index, Rational(1)}};
    reduce(v, combo);
    std::size_t col = 0;
    while (col < v.size() && v[col] == 0) ++col;
    if (col == v.size()) return;
    Rational inv = 1 / v[col];
    for (auto& c : v) c *= inv;
    for (auto& [k, c] : combo) c *= inv;
    // Keep earlier pivots reduced in the new column so reduce() stays a single pass.
    for (auto& p : pivots) {
      if (p.row[col] == 0) continue;
      Rational f = p.row[col];
      for (std::size_t j = 0; j < v.size(); ++j) p.row[j] -= f * v[j];
      for (const auto& [k, c] : combo) {
        Rational& slot = p.combo[k];
        slot -= f * c;
        if (slot == 0) p.combo.erase(k);
      }
    }
    pivots.push_back({col, std::move(v), std::move(combo)});
  }
};

}  // namespace

std::size_t rank(const RelationMatrix& m) {
  std::vector<std::vector<Integer>> a;
  for (const auto& row : m.rows)
    if (!is_zero_row(row)) a.push_back(integer_row(row));
  const std::size_t n = a.size(), cols = m.columns();
  std::size_t rk = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && rk < n; ++col) {
    std::size_t piv = rk;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[rk]);
    for (std::size_t i = rk + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer v = a[rk][col] * a[i][j] - a[i][col] * a[rk][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rk][col];
    ++rk;
  }
  return rk;
}

SpanCertificate span_contains(const RelationMatrix& m, const std::vector<Rational>& v) {
  if (v.size() != m.columns()) throw std::invalid_argument("vector length does not match the kappa basis");
  Echelon ech;
  for (std::size_t i = 0; i < m.rows.size(); ++i) ech.insert(m.rows[i], i);
  std::vector<Rational> w = v;
  std::map<std::size_t, Rational> combo;
  ech.reduce(w, combo);
  SpanCertificate cert;
  if (!is_zero_row(w)) return cert;
  cert.coefficients.assign(m.rows.size(), Rational(0));
  // reduce() subtracted the combination; v = -combo applied to the rows.
  for (const auto& [k, c] : combo) cert.coefficients[k] = -c;
  std::vector<Rational> check(v.size(), Rational(0));
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    if (cert.coefficients[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) check[j] += cert.coefficients[i] * m.rows[i][j];
  }
  if (check != v) throw std::logic_error("span certificate does not reproduce the vector");
  cert.contained = true;
  return cert;
}

bool span_equal(const RelationMatrix& a, const RelationMatrix& b) {
  if (a.r != b.r) return false;
  for (const auto& row : a.rows)
    if (!span_contains(b, row).contained) return false;
  for (const auto& row : b.rows)
    if (!span_contains(a, row).contained) return false;
  return true;
}

RelationMatrix ideal_within_degree(const std::vector<Relation>& rels, int r) {
  RelationMatrix m(r);
  for (const auto& rel : rels) {
    if (rel.r > r || rel.r < 0) continue;
    KappaPoly p = rel.specialized();
    if (p.is_zero()) continue;
    const std::string origin = describe(rel);
    if (rel.r == r) {
      m.add_row(vectorize(p, r), origin);
      continue;
    }
    for (const auto& parts : kappa_basis(r - rel.r)) {
      KappaMonomial mono = KappaMonomial::from_parts(parts);
      m.add_row(vectorize(p * KappaPoly::monomial(mono, 1), r), origin + " * " + mono.to_string());
    }
  }
  return m;
}

namespace {

int default_d_max(const FamilyGrid& grid, int g) { return grid.d_max >= 0 ? grid.d_max : g + 1; }

/// Partitions that can satisfy 3r >= g + 1 + 3|sigma| - 2 l(sigma) (size at most 3r - g - 1).
std::vector<Partition> threshold_partitions(int g, int r, int sigma_cap) {
  int cap = 3 * r - g - 1;
  if (sigma_cap >= 0) cap = std::min(cap, sigma_cap);
  if (cap < 0) return {};
  return enumerate_partitions(cap);
}

}  // namespace

std::vector<Relation> family_relations(Family f, int g, int r, const FamilyGrid& grid) {
  using Builder = std::function<std::optional<Relation>()>;
  std::vector<Builder> cells;
  const int d_max = default_d_max(grid, g);
  switch (f) {
    case Family::Faber:
      for (const auto& z : enumerate_zmonomials(grid.zsigma_size, grid.zsigma_factors))
        for (int d = 2 * g - 1; d <= 2 * g; ++d) cells.push_back([=] { return thm1_relation(g, r, d, z); });
      break;
    case Family::Sq2:
      for (int d = 1; d <= d_max; ++d) cells.push_back([=] { return thm2_relation(g, r, d); });
      break;
    case Family::Sq3:
    case Family::Thm4:
    case Family::Expanded:
    case Family::GSigma:
      for (const auto& s : enumerate_partitions(grid.sigma_max)) {
        for (int d = 1; d <= d_max; ++d) {
          cells.push_back([=]() -> std::optional<Relation> {
            switch (f) {
              case Family::Sq3: return thm3_relation(g, r, d, s);
              case Family::Thm4: return thm4_relation(g, r, d, s);
              case Family::GSigma: return gsigma_relation(g, r, d, s);
              default: return expanded_relation(g, r, d, s, expanded_parity(g, r, s));
            }
          });
        }
      }
      break;
    case Family::Prop3:
      for (const auto& s : threshold_partitions(g, r, -1)) cells.push_back([=] { return prop3_relation(g, r, s); });
      break;
    case Family::FzReindexed:
      for (const auto& s : threshold_partitions(g, r, -1))
        cells.push_back([=] { return fz_reindexed_relation(g, r, s); });
      break;
    case Family::Fz:
      if (3 * r - g < 0) break;
      for (const auto& s : enumerate_partitions(3 * r - g, no_part_two_mod_three))
        cells.push_back([=] { return thm5_relation(g, r, s); });
      break;
  }
  std::vector<std::optional<Relation>> built(cells.size());
  const long n = static_cast<long>(cells.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_budget())
  for (long i = 0; i < n; ++i) built[static_cast<std::size_t>(i)] = cells[static_cast<std::size_t>(i)]();
  std::vector<Relation> out;
  for (auto& b : built)
    if (b) out.push_back(std::move(*b));
  return out;
}

std::vector<Relation> family_relations_upto(Family f, int g, int r, const FamilyGrid& grid) {
  std::vector<Relation> out;
  for (int k = 0; k <= r; ++k) {
    auto rels = family_relations(f, g, k, grid);
    out.insert(out.end(), std::make_move_iterator(rels.begin()), std::make_move_iterator(rels.end()));
  }
  return out;
}

}  // namespace tautring
