#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tautring/relation.hpp"

namespace tautring {

constexpr int kSchemaVersion = 1;

/// Serializable relation. Unspecialized documents keep kappa_0 symbolic, so
/// the basis then also lists the kappa_0-containing monomials that occur.
struct RelationDocument {
  int schema_version = kSchemaVersion;
  std::string family;
  int g = 0;
  int r = 0;
  std::optional<int> d;
  std::vector<int> sigma;                          // descending
  std::vector<std::pair<int, int>> zsigma;         // (i, j) with repetition, sorted
  bool applicable = true;
  std::vector<std::vector<int>> basis;             // graded-lex kappa partitions
  std::vector<Rational> coefficients;              // aligned with basis
  bool genus_specialized = false;

  KappaPoly poly() const;
  bool operator==(const RelationDocument&) const = default;
};

RelationDocument make_document(const Relation& rel, bool specialize);
RelationDocument inapplicable_document(Family f, int g, int r, std::optional<int> d, const Partition& sigma,
                                       const std::optional<ZMonomial>& zsigma = std::nullopt);

/// "num/den" with a positive denominator, "/1" included.
std::string fraction_string(const Rational& c);
/// Accepts "n", "n/d" and "-n/d".
Rational parse_fraction(const std::string& s);

std::string to_json(const RelationDocument& doc);
std::string to_json(const std::vector<RelationDocument>& docs);
RelationDocument document_from_json(const std::string& text);
std::vector<RelationDocument> documents_from_json(const std::string& text);

/// Header line plus "Σ (num/den)·κ_{a}κ_{b} + ..." (or "inapplicable").
std::string to_text(const RelationDocument& doc);

}  // namespace tautring
