#pragma once

#include <optional>
#include <string>

#include "tautring/kappa.hpp"
#include "tautring/partitions.hpp"

namespace tautring {

enum class Family { Faber, Sq2, Sq3, Thm4, Prop3, Fz, FzReindexed, Expanded, GSigma };

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

/// A homogeneous kappa polynomial of degree r (kappa_{-1} already set to 0,
/// kappa_0 symbolic) with its provenance.
struct Relation {
  Family family;
  int g = 0;
  int r = 0;
  std::optional<int> d;
  Partition sigma;
  std::optional<ZMonomial> zsigma;
  KappaPoly poly;

  KappaPoly specialized() const { return specialize_genus(poly, g); }
};

}  // namespace tautring
