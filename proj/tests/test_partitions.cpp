#include "doctest.h"
#include "tautring/partitions.hpp"
#include "tautring/series.hpp"

using namespace tautring;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}

TEST_CASE("enumeration") {
  auto zero = enumerate_partitions(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());
  CHECK(partitions_of(5).size() == 7);
  std::vector<int> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(counts[static_cast<std::size_t>(n)]));
  auto filtered = enumerate_partitions(4, no_part_two_mod_three);
  std::vector<Partition> of4;
  for (auto& p : filtered)
    if (p.size() == 4) of4.push_back(p);
  REQUIRE(of4.size() == 3);
  CHECK(of4[0] == P({4}));
  CHECK(of4[1] == P({3, 1}));
  CHECK(of4[2] == P({1, 1, 1, 1}));
  CHECK(P({2, 1, 1}).aut() == 2);
  CHECK(P({1, 1, 1, 2, 2}).aut() == 12);
  CHECK(Partition::parse("1, 3,1") == P({3, 1, 1}));
}

TEST_CASE("divisions") {
  auto d12 = divisions(P({1, 2}));
  REQUIRE(d12.size() == 2);
  auto d111 = divisions(P({1, 1, 1}));
  REQUIRE(d111.size() == 3);  // includes (1)u(1)u(1)
  for (const auto& d : d111) {
    if (d.blocks.size() == 2) CHECK(d.m == 3);
    if (d.blocks.size() == 1) CHECK(d.m == 1);
    if (d.blocks.size() == 3) CHECK(d.m == 1);
  }
  CHECK(divisions(P({5})).size() == 1);
  for (const auto& d : divisions(P({1, 2, 3, 4}))) CHECK(d.m == 1);
}

TEST_CASE("marked divisions") {
  auto one = marked_divisions(P({3}));
  REQUIRE(one.size() == 2);
  auto empty = marked_divisions(Partition());
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].marked.empty());
  CHECK(marked_divisions(P({1, 2})).size() == 5);
  for (const auto& md : marked_divisions(P({1, 2}))) {
    CHECK(m_pm_factor(md, -1) == (md.marked.empty() ? 0 : md.m));
    CHECK(m_pm_factor(md, +1) == (md.marked.empty() ? 2 * md.m : md.m));
  }
}

TEST_CASE("property: orbit-stabilizer identity over divisions") {
  for (const auto& sigma : enumerate_partitions(8)) {
    if (sigma.empty()) continue;
    Integer total = 0;
    for (const auto& d : divisions(sigma)) {
      CHECK(d.m == m_factor(sigma, d));
      Integer stab = d.block_aut();
      for (const auto& b : d.blocks) stab *= b.aut();
      CHECK(d.m * stab == sigma.aut());
      total += d.m;
    }
    // Labeled set partitions: Bell number of the length.
    std::vector<Integer> bell = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    CHECK(total == bell[static_cast<std::size_t>(sigma.length())]);
  }
}

TEST_CASE("property: exponential formula on symbolic placeholders") {
  // X_tau = kappa_{index(tau)}; exp(sum X_tau p^tau / Aut(tau)) at p^sigma.
  const int max_size = 6;
  auto all = enumerate_partitions(max_size);
  std::map<Partition, int> index;
  for (const auto& p : all)
    if (!p.empty()) index.emplace(p, static_cast<int>(index.size()) + 1);
  TruncationSpec s;
  std::vector<std::pair<VariableId, int>> weights;
  for (int i = 1; i <= max_size; ++i) {
    s.add(VariableId::p(i), max_size / i);
    weights.emplace_back(VariableId::p(i), i);
  }
  s.cap(weights, max_size);
  auto exps = [&](const Partition& p) {
    Exponents e{};
    for (const auto& [i, a] : p.multiplicities()) e[s.require_index(VariableId::p(i))] = static_cast<std::int16_t>(a);
    return e;
  };
  KSeries gen(s);
  for (const auto& [tau, k] : index) {
    gen.add_term(exps(tau), KappaPoly::kappa(k) * (Rational(1) / Rational(tau.aut())));
  }
  KSeries e = series_exp(gen);
  for (const auto& sigma : all) {
    if (sigma.empty()) continue;
    KappaPoly expected;
    for (const auto& d : divisions(sigma)) {
      KappaPoly prod(Rational(d.m));
      for (const auto& b : d.blocks) prod = prod * KappaPoly::kappa(index.at(b));
      expected += prod;
    }
    expected *= Rational(1) / Rational(sigma.aut());
    CHECK(e.extract(exps(sigma)) == expected);
  }
}
