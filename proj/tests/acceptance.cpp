// One line per acceptance criterion with its runtime and limit.
//
//   acceptance [--with-n8] [--threads N] [--expect-red 2,3,9]
//
// Without --expect-red the exit code is 0 iff every criterion passes. With
// it, the exit code is 0 iff exactly the listed criteria fail.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pentaflag/certificate.hpp"
#include "pentaflag/extremal.hpp"
#include "pentaflag/flag_checks.hpp"
#include "pentaflag/graph.hpp"
#include "pentaflag/search.hpp"

using namespace pentaflag;
using report::CertificateReport;
using report::ClaimResult;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
  void require(const ClaimResult& c) {
    if (c.passed()) return;
    require(false, c.claim_id);
    for (const auto& w : c.witnesses) failures.push_back("  " + w.name + ": " + w.value);
  }
  void require(const CertificateReport& r) {
    for (const auto& c : r.claims) require(c);
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

const cert::IndexMapping& mapping() {
  static const cert::IndexMapping m = *cert::reconstruct_mapping().mapping;
  return m;
}

graph::CanonGraph multipartite(const std::vector<int>& parts) { return graph::complete_multipartite(graph::PartSizes(parts)); }

}  // namespace

int main(int argc, char** argv) {
  bool with_n8 = false;
  unsigned threads = 0;
  std::set<int> expect_red;
  bool expecting = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--with-n8") {
      with_n8 = true;
    } else if (a == "--threads" && i + 1 < argc) {
      threads = static_cast<unsigned>(std::stoul(argv[++i]));
    } else if (a == "--expect-red" && i + 1 < argc) {
      expecting = true;
      std::stringstream ss(argv[++i]);
      for (std::string item; std::getline(ss, item, ',');) expect_red.insert(std::stoi(item));
    } else {
      std::cerr << "usage: acceptance [--with-n8] [--threads N] [--expect-red LIST]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "enumeration: 34 classes on 5 vertices, nonzero C5 counts {1,1,1,2,2,4,6,12}", 1,
       [] {
         Outcome o;
         const auto& classes = graph::enumerate_graphs(5);
         o.require(classes.size() == 34, "class count " + std::to_string(classes.size()));
         std::vector<std::uint64_t> counts;
         for (const auto& g : classes)
           if (auto c = graph::count_five_cycles(g.to_graph())) counts.push_back(c);
         std::sort(counts.begin(), counts.end());
         o.require(counts == std::vector<std::uint64_t>{1, 1, 1, 2, 2, 4, 6, 12}, "nonzero C5 multiset");
         return o;
       }},
      {2, "mapping reconstruction: constraints (a)-(e) solvable, 33 -> K5, tight -> 7 multipartite, K4-free tight -> 5", 30,
       [] {
         Outcome o;
         const auto r = cert::reconstruct_mapping();
         o.require(r.claim);
         if (!r.mapping) return o;
         const auto& m = *r.mapping;
         o.require(m.classes[33] == multipartite({1, 1, 1, 1, 1}), "index 33 is not K5");
         std::set<graph::CanonGraph> tight, expected, k4_free;
         for (int i : cert::PublishedTables::get().tight_indices) tight.insert(m.classes[static_cast<std::size_t>(i)]);
         for (const auto& p : std::vector<std::vector<int>>{{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}})
           expected.insert(multipartite(p));
         o.require(tight == expected, "tight indices are not the complete multipartite classes");
         for (const auto& g : tight)
           if (graph::clique_number(g) <= 3) k4_free.insert(g);
         o.require(k4_free.size() == 5, "K4-free tight classes");
         return o;
       }},
      {3, "main certificate (k >= 4): c_F == C_i identities, C1 == OPT, C1 - C_i >= 0 for 4 <= k <= 1000 plus tail", 120,
       [] {
         Outcome o;
         o.require(cert::verify_main(mapping(), 1000));
         return o;
       }},
      {4, "k = 3 certificate: max 40/27, listed coefficients reproduced, attained on T3 (5 classes)", 10,
       [] {
         Outcome o;
         o.require(cert::verify_k3(mapping()));
         return o;
       }},
      {5, "tight set == complete multipartite == induced-P3bar-free", 10,
       [] {
         Outcome o;
         o.require(cert::tight_set_characterization(mapping()));
         return o;
       }},
      {6, "counting oracles: formula == brute force for totals <= 10, T3(6) = 24, T4(8) = 288", 60,
       [threads] {
         Outcome o;
         o.require(extremal::count_oracle_check(10, threads));
         o.require(extremal::multipartite_c5_brute_force(graph::PartSizes({2, 2, 2})) == 24, "T3(6) brute force");
         o.require(extremal::multipartite_c5_brute_force(graph::PartSizes({2, 2, 2, 2})) == 288, "T4(8) brute force");
         return o;
       }},
      {7, "vertex moves raise nu(C5) for totals <= 12; two-part inequalities for x1 <= 50", 60,
       [threads] {
         Outcome o;
         o.require(extremal::rebalancing_check(12, threads));
         o.require(extremal::two_part_inequalities(50));
         return o;
       }},
      {8, "eps-expansion matches the displayed series; eps^2 factor >= 8/81 with equality at k = 3", 10,
       [] {
         Outcome o;
         o.require(extremal::unbalanced_part_check(1000));
         return o;
       }},
      {9, "sparse-vertex and adjacent-pair bounds: displays re-derived, margin >= 1/k^5 for k >= 3", 30,
       [] {
         Outcome o;
         o.require(extremal::sparse_vertex_check(1000));
         o.require(extremal::adjacent_pair_check(1000));
         return o;
       }},
      {10, std::string("finite shadow: nu(C5) 5!/n^5 <= OPT_k for n <= ") + (with_n8 ? "8" : "7") + ", k in {3,4,5}", 600,
       [threads, with_n8] {
         Outcome o;
         o.require(search::finite_shadow(with_n8 ? 8 : 7, threads));
         return o;
       }},
      {11, "flag calculus: chain identity (types <= 3, flags <= 4, hosts <= 6); pair defect <= 4/n on T3(n)", 300,
       [threads] {
         Outcome o;
         o.require(flag::chain_identity({}, threads));
         o.require(flag::pair_defect_decay({6, 9, 12, 15}, threads));
         return o;
       }},
  };

  std::set<int> red;
  for (const auto& c : criteria) {
    report::Stopwatch clock;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double s = clock.elapsed_ms() / 1000.0;
    if (s > c.limit_s) o.require(false, "runtime limit exceeded");
    if (!o.pass) red.insert(c.id);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << "  (" << seconds(s) << ", limit "
              << seconds(c.limit_s) << ")\n";
    for (const auto& f : o.failures) std::cout << "         " << f << "\n";
    std::cout.flush();
  }
  std::cout << (criteria.size() - red.size()) << "/" << criteria.size() << " criteria pass\n";
  if (!expecting) return red.empty() ? 0 : 1;
  if (red == expect_red) {
    std::cout << "failing set matches the documented discrepancies\n";
    return 0;
  }
  std::cout << "failing set differs from the documented discrepancies\n";
  return 1;
}
