#include <stdexcept>

#include "json.hpp"
#include "pentaflag/certificate.hpp"
#include "pentaflag/graph6.hpp"

namespace pentaflag::cert {

using nlohmann::ordered_json;

namespace {

constexpr int kMappingSchema = 1;

Poly parse_poly(const std::string& text) {
  const RationalFunction r = symbolic::parse_rational_function(text);
  if (!r.is_polynomial()) throw std::invalid_argument("expected a polynomial");
  return r.num() * Poly(Rational(1) / r.den().coeff(0));
}

Rational parse_rational(const std::string& text) {
  Rational q(text);
  q.canonicalize();
  return q;
}

}  // namespace

std::string mapping_to_json(const IndexMapping& m, const report::ClaimResult& search_claim) {
  ordered_json j;
  j["schema"] = kMappingSchema;
  j["classes"] = ordered_json::array();
  for (const auto& c : m.classes) j["classes"].push_back(graph6::encode(c));
  j["position"] = m.position;
  j["witnesses"] = ordered_json::array();
  for (const auto& w : m.witnesses) {
    ordered_json wj;
    wj["name"] = w.name;
    wj["shape"] = w.shape;
    wj["sigma"] = {w.sigma.size(), w.sigma.bits()};
    wj["flags"] = ordered_json::array();
    for (const auto& f : w.flags) wj["flags"].push_back(f.serialize());
    wj["coefficients"] = ordered_json::array();
    for (const auto& c : w.coefficients) wj["coefficients"].push_back(c.to_string());
    wj["multiplier"] = w.multiplier.get_str();
    wj["stated_multiplier"] = w.stated_multiplier.get_str();
    wj["vector"] = ordered_json::array();
    for (const auto& v : w.vector) wj["vector"].push_back(v.to_string());
    wj["equivalent_choices"] = w.equivalent_choices;
    j["witnesses"].push_back(std::move(wj));
  }
  j["solutions"] = m.solutions.get_str();
  j["witness_combinations"] = m.witness_combinations;
  j["surviving_candidates"] = m.surviving_candidates;
  j["discrepancies"] = ordered_json::array();
  for (const auto& d : m.discrepancies)
    j["discrepancies"].push_back(
        {{"square", d.square}, {"index", d.index}, {"table", d.table.to_string()}, {"derived", d.derived.to_string()}});
  report::CertificateReport claim_report;
  claim_report.claims.push_back(search_claim);
  j["search_report"] = ordered_json::parse(claim_report.to_json(false, -1));
  return j.dump(1);
}

std::optional<CachedMapping> mapping_from_json(std::string_view text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    if (j.at("schema").get<int>() != kMappingSchema) return std::nullopt;
    CachedMapping out;
    IndexMapping& m = out.mapping;
    const auto& classes = j.at("classes");
    if (classes.size() != kClasses) return std::nullopt;
    for (std::size_t i = 0; i < kClasses; ++i)
      m.classes[i] = graph::canonical_form(graph6::decode(classes[i].get<std::string>()));
    m.position = j.at("position").get<std::array<int, kClasses>>();
    const auto& ws = j.at("witnesses");
    if (ws.size() != kSquares) return std::nullopt;
    for (std::size_t s = 0; s < kSquares; ++s) {
      const auto& wj = ws[s];
      SquareWitness& w = m.witnesses[s];
      w.name = wj.at("name").get<std::string>();
      w.shape = wj.at("shape").get<std::string>();
      const auto sigma = wj.at("sigma");
      w.sigma = flag::TypeSigma::from_bits(sigma.at(0).get<int>(), sigma.at(1).get<std::uint64_t>());
      for (const auto& f : wj.at("flags")) w.flags.push_back(flag::TypedFlag::parse(f.get<std::string>()));
      for (const auto& c : wj.at("coefficients")) w.coefficients.push_back(parse_poly(c.get<std::string>()));
      w.multiplier = parse_rational(wj.at("multiplier").get<std::string>());
      w.stated_multiplier = parse_rational(wj.at("stated_multiplier").get<std::string>());
      for (const auto& v : wj.at("vector")) w.vector.push_back(parse_poly(v.get<std::string>()));
      w.equivalent_choices = wj.at("equivalent_choices").get<std::size_t>();
    }
    m.solutions = Integer(j.at("solutions").get<std::string>());
    m.witness_combinations = j.at("witness_combinations").get<std::size_t>();
    m.surviving_candidates = j.at("surviving_candidates").get<std::array<std::size_t, kSquares>>();
    for (const auto& d : j.at("discrepancies"))
      m.discrepancies.push_back({d.at("square").get<std::string>(), d.at("index").get<int>(),
                                 parse_poly(d.at("table").get<std::string>()),
                                 parse_poly(d.at("derived").get<std::string>())});
    const auto rep = report::CertificateReport::from_json(j.at("search_report").dump());
    if (rep.claims.size() != 1) return std::nullopt;
    out.search_claim = rep.claims.front();
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace pentaflag::cert
