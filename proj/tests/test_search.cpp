#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pentaflag/extremal.hpp"
#include "pentaflag/search.hpp"

using namespace pentaflag;
using namespace pentaflag::search;
using symbolic::Rational;

TEST_CASE("clique-free class counts") {
  CHECK(enumerate_clique_free(5, 3).size() == 14);
  CHECK(enumerate_clique_free(5, 6).size() == 34);
  CHECK(enumerate_clique_free(5, 5).size() == 33);
  CHECK(enumerate_clique_free(3, 3).size() == 3);
  CHECK_THROWS(enumerate_clique_free(9, 3));
}

TEST_CASE("clique-free classes match filtering the full enumeration") {
  for (int n = 1; n <= 7; ++n)
    for (int r = 2; r <= n + 1; ++r) {
      std::vector<graph::CanonGraph> filtered;
      for (const auto& g : graph::enumerate_graphs(n))
        if (graph::clique_number(g) < r) filtered.push_back(g);
      CHECK(enumerate_clique_free(n, r, 2) == filtered);
    }
}

TEST_CASE("extremal values") {
  CHECK(max_c5(5, 4).max_count == 4);
  const auto six = max_c5(6, 4);
  CHECK(six.max_count >= 24);
  CHECK(six.is_turan_among_argmax);
  const auto k5 = max_c5(5, 6);
  CHECK(k5.max_count == 12);
  REQUIRE(k5.argmax.size() == 1);
  CHECK(graph::clique_number(k5.argmax[0]) == 5);
}

TEST_CASE("finite normalisation") {
  Rational expected(10, 27);
  CHECK(injective_c5_density(graph::turan_graph(3, 6).to_graph()) == expected);
}

TEST_CASE("density bound and shadow report") {
  CHECK(verify_density_bound(3, 7).passed());
  CHECK(verify_density_bound(4, 6).passed());
  CHECK(finite_shadow(6).all_pass());
  CHECK(extremal_monotonicity(6, 5).passed());
}
