#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "pentaflag/certificate.hpp"

using namespace pentaflag;
using namespace pentaflag::cert;
using symbolic::Rational;

namespace {

const IndexMapping& mapping() {
  static const IndexMapping m = [] {
    auto r = reconstruct_mapping();
    REQUIRE(r.mapping.has_value());
    return *r.mapping;
  }();
  return m;
}

// Oracle: a complete multipartite graph built edge by edge from part sizes.
CanonGraph multipartite_by_hand(const std::vector<int>& parts) {
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j, ++n) part_of.push_back(static_cast<int>(i));
  graph::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return graph::canonical_form(g);
}

const std::vector<std::vector<int>> kPartitionsOf5 = {{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};

const report::ClaimResult* find_claim(const report::CertificateReport& rep, std::string_view prefix) {
  for (const auto& c : rep.claims)
    if (c.claim_id.starts_with(prefix)) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("reconstruction fixes the anchor indices") {
  const auto& m = mapping();
  CHECK(m.classes[33] == multipartite_by_hand({1, 1, 1, 1, 1}));
  CHECK(m.classes[31].canon_key() == "D]{");
  CHECK(m.classes[32].canon_key() == "D^{");
  CHECK(m.witness_combinations == 1);
  CHECK(m.solutions == Integer("348713164800"));
  CHECK_FALSE(validate_mapping(m).has_value());
}

TEST_CASE("table order is a bijection onto the 34 classes") {
  const auto& m = mapping();
  std::set<CanonGraph> seen(m.classes.begin(), m.classes.end());
  CHECK(seen.size() == 34);
  for (const auto& g : m.classes) CHECK(g.order() == 5);
}

TEST_CASE("tight indices are the complete multipartite classes") {
  const auto& m = mapping();
  const auto& t = PublishedTables::get();
  std::set<CanonGraph> tight, expected;
  for (int i : t.tight_indices) tight.insert(m.classes[static_cast<std::size_t>(i)]);
  for (const auto& p : kPartitionsOf5) expected.insert(multipartite_by_hand(p));
  CHECK(tight.size() == 7);
  CHECK(tight == expected);

  std::set<CanonGraph> k4_free;
  for (const auto& g : tight)
    if (graph::clique_number(g) <= 3) k4_free.insert(g);
  CHECK(k4_free.size() == 5);
}

TEST_CASE("displayed scalars") {
  const auto& t = PublishedTables::get();
  CHECK(t.Z_generic(Rational(5)) == Rational(24, 625));
  CHECK(t.opt(Rational(4)) == Rational(45, 16));
  CHECK(t.opt(Rational(3)) == Rational(40, 27));
  CHECK(t.den(Rational(4)) == Rational(3072));
}

TEST_CASE("flag-derived coefficients are bounded by OPT at small k") {
  const auto& m = mapping();
  const auto c = main_coefficients(m, SquareSource::flags);
  for (int k : {4, 5, 6, 10}) {
    Rational opt(12 * k * k * k * k - 60 * k * k * k + 120 * k * k - 120 * k + 48, k * k * k * k);
    opt.canonicalize();
    Rational best = c[0](Rational(k));
    for (const auto& f : c) best = std::max(best, f(Rational(k)));
    CHECK(best == opt);
    for (int i : PublishedTables::get().tight_indices) CHECK(c[static_cast<std::size_t>(i)](Rational(k)) == opt);
  }
}

TEST_CASE("main verification: the C5 display typo is the only red claim") {
  const auto rep = verify_main(mapping(), 200);
  const auto* identity = find_claim(rep, "c_F(k) == C_i(k)");
  REQUIRE(identity != nullptr);
  CHECK_FALSE(identity->passed());
  bool mentions = false;
  for (const auto& w : identity->witnesses) mentions |= w.value.find("-9*k^2") != std::string::npos;
  CHECK(mentions);
  for (const auto& c : rep.claims)
    if (&c != identity) CHECK_MESSAGE(c.passed(), c.claim_id);
}

TEST_CASE("k = 3 certificate") {
  const auto rep = verify_k3(mapping());
  CHECK(rep.all_pass());
  bool unlisted = false;
  for (const auto& c : rep.claims)
    for (const auto& w : c.witnesses) unlisted |= w.name == "unlisted index 25" && w.value == "17/27";
  CHECK(unlisted);
}

TEST_CASE("tight-set characterization") { CHECK(tight_set_characterization(mapping()).all_pass()); }

TEST_CASE("finite decomposition identity on small orders") {
  const auto rep = finite_decomposition(mapping(), 6, 3);
  REQUIRE_FALSE(rep.claims.empty());
  CHECK(rep.claims.front().passed());
}

TEST_CASE("mapping JSON round trip") {
  report::ClaimResult claim("search");
  claim.witness("solutions", "1");
  const std::string text = mapping_to_json(mapping(), claim);
  const auto back = mapping_from_json(text);
  REQUIRE(back.has_value());
  CHECK(back->mapping.classes == mapping().classes);
  CHECK(back->mapping.position == mapping().position);
  CHECK(back->mapping.solutions == mapping().solutions);
  CHECK(back->search_claim.claim_id == "search");
  CHECK_FALSE(validate_mapping(back->mapping).has_value());
  CHECK(mapping_to_json(back->mapping, back->search_claim) == text);

  CHECK_FALSE(mapping_from_json("{").has_value());
  CHECK_FALSE(mapping_from_json("[]").has_value());
}

TEST_CASE("a tampered mapping is rejected") {
  IndexMapping m = mapping();
  std::swap(m.classes[0], m.classes[33]);
  CHECK(validate_mapping(m).has_value());
}
