#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tautring/relation.hpp"

namespace tautring {

/// Rows are kappa_0-specialized relations of degree r over kappa_basis(r).
struct RelationMatrix {
  int r = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<std::string> provenance;

  explicit RelationMatrix(int degree = 0) : r(degree) {}
  std::size_t columns() const;
  void add_row(std::vector<Rational> row, std::string origin);
  /// Specializes at rel.g and vectorizes; zero relations are kept.
  void add_relation(const Relation& rel);
};

std::string describe(const Relation& rel);

/// Exact rank by fraction-free elimination.
std::size_t rank(const RelationMatrix& m);

struct SpanCertificate {
  bool contained = false;
  std::vector<Rational> coefficients;  // one per row of the matrix
};

/// v in the row span of m; on success the coefficients reproduce v exactly.
SpanCertificate span_contains(const RelationMatrix& m, const std::vector<Rational>& v);

bool span_equal(const RelationMatrix& a, const RelationMatrix& b);

/// Every relation of degree r' <= r times every kappa monomial (kappa_{>=1}) of degree r - r'.
RelationMatrix ideal_within_degree(const std::vector<Relation>& rels, int r);

/// Family grids used by span comparisons.
struct FamilyGrid {
  int d_max = -1;        // d-indexed families; default g + 1
  int sigma_max = 3;     // sq3/thm4/expanded/gsigma
  int zsigma_size = 2;   // faber
  int zsigma_factors = 2;
};

/// All applicable relations of one family at (g, r).
std::vector<Relation> family_relations(Family f, int g, int r, const FamilyGrid& grid = {});
/// Relations of the family at every degree 0..r for genus g.
std::vector<Relation> family_relations_upto(Family f, int g, int r, const FamilyGrid& grid = {});

}  // namespace tautring
