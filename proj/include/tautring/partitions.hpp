#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tautring/rational.hpp"

namespace tautring {

/// Multiset of positive integers, stored in descending order.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition from_multiplicities(const std::map<int, int>& mult);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int multiplicity(int part) const;
  std::map<int, int> multiplicities() const;
  /// prod a_i!
  Integer aut() const;

  /// Multiset union.
  Partition operator+(const Partition& o) const;
  /// Multiset difference, if o is contained in this partition.
  std::optional<Partition> minus(const Partition& o) const;

  /// "(3,1,1)", "()" for the empty partition.
  std::string to_string() const;
  /// Accepts "3,1,1" in any order; empty string is the empty partition.
  static Partition parse(const std::string& csv);

  bool operator==(const Partition&) const = default;
  /// Size first, then larger parts first.
  bool operator<(const Partition& o) const;

 private:
  std::vector<int> parts_;
};

/// All partitions of size <= max_size, ordered by size then larger parts first.
std::vector<Partition> enumerate_partitions(int max_size,
                                            const std::function<bool(const Partition&)>& filter = {});
std::vector<Partition> partitions_of(int n);
bool no_part_two_mod_three(const Partition& p);
/// Every nonempty sub-multiset of sigma.
std::vector<Partition> sub_multisets(const Partition& sigma);

struct Division {
  std::vector<Partition> blocks;  // sorted
  Integer m;                      // number of ways the union can be made
  Integer block_aut() const;      // permutations of identical blocks
};

struct MarkedDivision {
  Partition marked;
  std::vector<Partition> blocks;  // unmarked, sorted
  Integer m;
  Integer block_aut() const;
};

/// Divisions of a nonempty partition (empty input yields the single empty division).
std::vector<Division> divisions(const Partition& sigma);
std::vector<MarkedDivision> marked_divisions(const Partition& sigma);

/// |Aut(sigma)| / (|Aut(sigma*)| prod |Aut(blocks)| |Aut(blocks as a multiset)|).
Integer m_formula(const Partition& sigma, const Partition& marked, const std::vector<Partition>& blocks);
Integer m_factor(const Partition& sigma, const Division& div);
Integer m_factor(const Partition& sigma, const MarkedDivision& div);
/// (1 + sign * [sigma* empty]) * m.
Integer m_pm_factor(const MarkedDivision& div, int sign);

}  // namespace tautring

namespace tautring {

/// Monomial in the variables z_{i,j} (i >= 1, j >= i - 1).
class ZMonomial {
 public:
  ZMonomial() = default;
  explicit ZMonomial(std::map<std::pair<int, int>, int> mult);

  const std::map<std::pair<int, int>, int>& multiplicities() const { return mult_; }
  bool empty() const { return mult_.empty(); }
  /// sum i * sigma_{i,j}
  int ell() const;
  /// sum j * sigma_{i,j}
  int size() const;
  /// number of factors
  int factors() const;
  Integer aut() const;
  std::string to_string() const;
  /// "1:0,2:1" style list of i:j pairs, one per factor.
  static ZMonomial parse(const std::string& text);

  bool operator==(const ZMonomial&) const = default;
  bool operator<(const ZMonomial& o) const { return mult_ < o.mult_; }

 private:
  std::map<std::pair<int, int>, int> mult_;
};

/// All z-monomials with at most `max_factors` factors and |sigma| <= max_size.
std::vector<ZMonomial> enumerate_zmonomials(int max_size, int max_factors);

}  // namespace tautring
