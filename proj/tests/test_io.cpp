#include <doctest.h>

#include "support.hpp"
#include "tautring/faber.hpp"
#include "tautring/fz.hpp"
#include "tautring/io.hpp"
#include "tautring/sq.hpp"

using namespace tautring;

TEST_CASE("fractions") {
  CHECK(fraction_string(frac(-6, 4)) == "-3/2");
  CHECK(fraction_string(Rational(5)) == "5/1");
  CHECK(parse_fraction("10/4") == frac(5, 2));
  CHECK(parse_fraction("-7") == -7);
  CHECK_THROWS_AS(parse_fraction("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction(""), std::invalid_argument);
}

TEST_CASE("documents round-trip losslessly") {
  std::vector<Relation> rels;
  for (int g = 2; g <= 6; ++g) {
    for (int r = 0; r <= 4; ++r) {
      for (const auto& s : enumerate_partitions(3, no_part_two_mod_three))
        if (auto rel = thm5_relation(g, r, s)) rels.push_back(*rel);
      if (auto rel = thm2_relation(g, r, 2)) rels.push_back(*rel);
    }
  }
  if (auto rel = thm1_relation(2, 1, 3, ZMonomial::parse("3:2"))) rels.push_back(*rel);
  REQUIRE(rels.size() > 20);
  for (const auto& rel : rels) {
    for (bool spec : {false, true}) {
      RelationDocument doc = make_document(rel, spec);
      CAPTURE(to_text(doc));
      CHECK(doc.poly() == (spec ? rel.specialized() : kill_minus_one(rel.poly)));
      RelationDocument back = document_from_json(to_json(doc));
      CHECK(back == doc);
      CHECK(back.poly() == doc.poly());
      CHECK(to_json(back) == to_json(doc));
      // Basis in graded-lex order.
      for (std::size_t k = 1; k < doc.basis.size(); ++k)
        CHECK(KappaMonomial::from_parts(doc.basis[k - 1]) < KappaMonomial::from_parts(doc.basis[k]));
    }
  }
  std::vector<RelationDocument> docs;
  for (const auto& rel : rels) docs.push_back(make_document(rel, true));
  CHECK(documents_from_json(to_json(docs)) == docs);
}

TEST_CASE("document layout") {
  auto rel = thm5_relation(3, 2, Partition());
  REQUIRE(rel.has_value());
  RelationDocument doc = make_document(*rel, true);
  CHECK(doc.basis == std::vector<std::vector<int>>{{2}, {1, 1}});
  CHECK(doc.coefficients == std::vector<Rational>{-25920, 1800});
  std::string j = to_json(doc);
  CHECK(j.find("\"coefficients\": [\n    \"-25920/1\",\n    \"1800/1\"\n  ]") != std::string::npos);
  CHECK(j.find("\"d\"") == std::string::npos);
  CHECK(to_text(doc) == "# fz g=3 r=2 sigma=() specialized\nΣ (-25920/1)·κ_{2} + (1800/1)·κ_{1}κ_{1}\n");

  RelationDocument na = inapplicable_document(Family::Sq2, 5, 2, 1, Partition());
  CHECK_FALSE(na.applicable);
  CHECK(to_json(na).find("\"status\": \"inapplicable\"") != std::string::npos);
  CHECK(document_from_json(to_json(na)) == na);
  CHECK(to_text(na) == "# sq2 g=5 r=2 d=1 sigma=()\ninapplicable\n");

  RelationDocument sym = make_document(*thm2_relation(2, 1, 1), false);
  bool has_k0 = false;
  for (const auto& b : sym.basis) has_k0 = has_k0 || std::find(b.begin(), b.end(), 0) != b.end();
  CHECK(has_k0);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS(document_from_json("{}"));
  CHECK_THROWS(document_from_json(R"({"schema_version": 2, "family": "fz", "g": 3, "r": 2, "sigma": []})"));
  CHECK_THROWS(document_from_json(
      R"({"schema_version": 1, "family": "fz", "g": 3, "r": 2, "sigma": [], "basis": [[2]], "coefficients": [], "genus_specialized": true})"));
}
