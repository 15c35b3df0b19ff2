#include "tautring/io.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace tautring {

using Json = nlohmann::ordered_json;

KappaPoly RelationDocument::poly() const {
  if (basis.size() != coefficients.size()) throw std::invalid_argument("basis and coefficients differ in length");
  KappaPoly p;
  for (std::size_t k = 0; k < basis.size(); ++k) p.add_term(KappaMonomial::from_parts(basis[k]), coefficients[k]);
  return p;
}

namespace {

std::vector<std::pair<int, int>> zsigma_list(const ZMonomial& z) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [ij, a] : z.multiplicities())
    for (int k = 0; k < a; ++k) out.push_back(ij);
  return out;
}

}  // namespace

RelationDocument make_document(const Relation& rel, bool specialize) {
  RelationDocument doc;
  doc.family = family_name(rel.family);
  doc.g = rel.g;
  doc.r = rel.r;
  doc.d = rel.d;
  doc.sigma = rel.sigma.parts();
  if (rel.zsigma) doc.zsigma = zsigma_list(*rel.zsigma);
  doc.genus_specialized = specialize;
  KappaPoly p = specialize ? rel.specialized() : kill_minus_one(rel.poly);
  std::map<KappaMonomial, Rational> coeff;
  for (const auto& parts : kappa_basis(rel.r)) coeff.emplace(KappaMonomial::from_parts(parts), Rational(0));
  for (const auto& [m, c] : p.terms()) coeff[m] = c;
  for (const auto& [m, c] : coeff) {
    doc.basis.push_back(m.parts());
    doc.coefficients.push_back(c);
  }
  return doc;
}

RelationDocument inapplicable_document(Family f, int g, int r, std::optional<int> d, const Partition& sigma,
                                       const std::optional<ZMonomial>& zsigma) {
  RelationDocument doc;
  doc.family = family_name(f);
  doc.g = g;
  doc.r = r;
  doc.d = d;
  doc.sigma = sigma.parts();
  if (zsigma) doc.zsigma = zsigma_list(*zsigma);
  doc.applicable = false;
  return doc;
}

std::string fraction_string(const Rational& c) { return c.get_num().get_str() + "/" + c.get_den().get_str(); }

Rational parse_fraction(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) throw std::invalid_argument("bad fraction: " + s);
  q.canonicalize();
  return q;
}

namespace {

Json to_object(const RelationDocument& doc) {
  Json j;
  j["schema_version"] = doc.schema_version;
  j["family"] = doc.family;
  j["g"] = doc.g;
  j["r"] = doc.r;
  if (doc.d) j["d"] = *doc.d;
  j["sigma"] = doc.sigma;
  if (!doc.zsigma.empty()) {
    Json z = Json::array();
    for (const auto& [i, k] : doc.zsigma) z.push_back(Json::array({i, k}));
    j["zsigma"] = z;
  }
  if (!doc.applicable) {
    j["status"] = "inapplicable";
    return j;
  }
  j["status"] = "ok";
  j["basis"] = doc.basis;
  Json c = Json::array();
  for (const auto& q : doc.coefficients) c.push_back(fraction_string(q));
  j["coefficients"] = c;
  j["genus_specialized"] = doc.genus_specialized;
  return j;
}

RelationDocument from_object(const Json& j) {
  RelationDocument doc;
  doc.schema_version = j.at("schema_version").get<int>();
  if (doc.schema_version != kSchemaVersion) throw std::invalid_argument("unsupported schema_version");
  doc.family = j.at("family").get<std::string>();
  doc.g = j.at("g").get<int>();
  doc.r = j.at("r").get<int>();
  if (j.contains("d")) doc.d = j.at("d").get<int>();
  doc.sigma = j.at("sigma").get<std::vector<int>>();
  if (j.contains("zsigma")) {
    for (const auto& p : j.at("zsigma")) doc.zsigma.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  }
  doc.applicable = j.value("status", std::string("ok")) != "inapplicable";
  if (!doc.applicable) return doc;
  doc.basis = j.at("basis").get<std::vector<std::vector<int>>>();
  for (const auto& c : j.at("coefficients")) doc.coefficients.push_back(parse_fraction(c.get<std::string>()));
  doc.genus_specialized = j.at("genus_specialized").get<bool>();
  if (doc.basis.size() != doc.coefficients.size()) throw std::invalid_argument("basis and coefficients differ in length");
  return doc;
}

}  // namespace

std::string to_json(const RelationDocument& doc) { return to_object(doc).dump(2) + "\n"; }

std::string to_json(const std::vector<RelationDocument>& docs) {
  Json a = Json::array();
  for (const auto& d : docs) a.push_back(to_object(d));
  return a.dump(2) + "\n";
}

RelationDocument document_from_json(const std::string& text) { return from_object(Json::parse(text)); }

std::vector<RelationDocument> documents_from_json(const std::string& text) {
  Json j = Json::parse(text);
  std::vector<RelationDocument> out;
  if (j.is_array()) {
    for (const auto& o : j) out.push_back(from_object(o));
  } else {
    out.push_back(from_object(j));
  }
  return out;
}

std::string to_text(const RelationDocument& doc) {
  std::string head = "# " + doc.family + " g=" + std::to_string(doc.g) + " r=" + std::to_string(doc.r);
  if (doc.d) head += " d=" + std::to_string(*doc.d);
  head += " sigma=(";
  for (std::size_t k = 0; k < doc.sigma.size(); ++k) head += (k ? "," : "") + std::to_string(doc.sigma[k]);
  head += ")";
  if (!doc.zsigma.empty()) {
    head += " z=";
    for (std::size_t k = 0; k < doc.zsigma.size(); ++k) {
      head += "z_{" + std::to_string(doc.zsigma[k].first) + "," + std::to_string(doc.zsigma[k].second) + "}";
    }
  }
  if (!doc.applicable) return head + "\ninapplicable\n";
  head += doc.genus_specialized ? " specialized" : " symbolic";
  std::string body;
  for (std::size_t k = 0; k < doc.basis.size(); ++k) {
    if (doc.coefficients[k] == 0) continue;
    body += body.empty() ? "Σ " : " + ";
    body += "(" + fraction_string(doc.coefficients[k]) + ")·";
    if (doc.basis[k].empty()) {
      body += "1";
    } else {
      for (int p : doc.basis[k]) body += "κ_{" + std::to_string(p) + "}";
    }
  }
  if (body.empty()) body = "Σ 0";
  return head + "\n" + body + "\n";
}

}  // namespace tautring
