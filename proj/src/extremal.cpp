#include "pentaflag/extremal.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "pentaflag/parallel.hpp"

namespace pentaflag::extremal {

using report::CertificateReport;
using report::ClaimResult;
using report::Stopwatch;
using symbolic::Poly;
using symbolic::prove_nonneg_int;

std::string_view to_string(Provenance p) { return p == Provenance::formula ? "formula" : "brute_force"; }

namespace {

constexpr long kMaxTotal = 1000000;

Integer choose2(long x) { return Integer(x) * (x - 1) / 2; }

Integer binomial_z(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

void check_parts(const PartSizes& p) {
  if (p.total() > kMaxTotal) throw std::invalid_argument("part sizes total more than 10^6");
}

// N[s][d]: ways to pick s single vertices and d vertex pairs from distinct
// parts.
std::array<std::array<Integer, 3>, 6> part_choices(const PartSizes& p) {
  std::array<std::array<Integer, 3>, 6> n{};
  n[0][0] = 1;
  for (int x : p.parts) {
    const Integer one = x;
    const Integer two = choose2(x);
    for (int s = 5; s >= 0; --s)
      for (int d = 2; d >= 0; --d) {
        if (s > 0) n[s][d] += n[s - 1][d] * one;
        if (d > 0) n[s][d] += n[s][d - 1] * two;
      }
  }
  return n;
}

Rational over_c5(const Integer& count, long n) {
  Rational r(count, binomial_z(n, 5));
  r.canonicalize();
  return r;
}

RationalFunction k_var() { return RationalFunction(Poly::indeterminate()); }

// Every composition of each total in [lo, hi] with at least min_parts parts.
std::vector<PartSizes> compositions(int lo, int hi, int min_parts) {
  std::vector<PartSizes> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      if (static_cast<int>(cur.size()) >= min_parts) out.emplace_back(cur);
      return;
    }
    for (int x = 1; x <= left; ++x) {
      cur.push_back(x);
      rec(left - x);
      cur.pop_back();
    }
  };
  for (int t = lo; t <= hi; ++t) rec(t);
  return out;
}

std::string parts_text(const PartSizes& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.parts.size(); ++i) s += (i ? "," : "") + std::to_string(p.parts[i]);
  return s + "]";
}

void record_nonneg(ClaimResult& c, const std::string& label, const RationalFunction& r, long k0, long sweep) {
  const auto proof = prove_nonneg_int(r, k0, sweep);
  switch (proof.verdict) {
    case symbolic::NonnegVerdict::holds:
      c.witness(label, "holds (sweep " + std::to_string(k0) + ".." + std::to_string(sweep) + ", tail bound " +
                           proof.tail_bound.get_str() + ")");
      break;
    case symbolic::NonnegVerdict::inconclusive:
      c.inconclusive(label, "needs sweep_max " + proof.required_sweep->get_str());
      break;
    default:
      c.fail(label, std::string(symbolic::to_string(proof.verdict)) +
                        (proof.witness_k ? " at k = " + std::to_string(*proof.witness_k) : std::string()) +
                        (proof.witness_value ? ", value " + symbolic::to_string(*proof.witness_value) : std::string()));
  }
}

}  // namespace

RationalFunction opt_function() {
  return symbolic::parse_rational_function("(12*k^4 - 60*k^3 + 120*k^2 - 120*k + 48)/k^4");
}

Rational opt_formula(long k) {
  if (k < 2) throw std::invalid_argument("opt_formula needs k >= 2");
  return opt_function()(Rational(k));
}

Integer multipartite_c5_count(const PartSizes& p) {
  check_parts(p);
  const auto n = part_choices(p);
  return 12 * n[5][0] + 6 * n[3][1] + 4 * n[1][2];
}

Integer multipartite_k5_count(const PartSizes& p) {
  check_parts(p);
  return part_choices(p)[5][0];
}

Integer multipartite_c5_brute_force(const PartSizes& p) {
  if (p.total() > graph::kMaxHostOrder) throw std::invalid_argument("brute force limited to 64 vertices");
  return Integer(static_cast<unsigned long>(graph::count_five_cycles(graph::complete_multipartite_graph(p))));
}

CountFormulaResult turan_density_c5(int k, long n) {
  if (n < 5) throw std::invalid_argument("turan_density_c5 needs n >= 5");
  if (k < 1) throw std::invalid_argument("turan_density_c5 needs k >= 1");
  return {over_c5(multipartite_c5_count(graph::turan_parts(k, n)), n), Provenance::formula};
}

ZykovDensity zykov_k5_density(int k, long n) {
  if (n < 5) throw std::invalid_argument("zykov_k5_density needs n >= 5");
  if (k < 1) throw std::invalid_argument("zykov_k5_density needs k >= 1");
  Rational limit(Integer(k - 1) * (k - 2) * (k - 3) * (k - 4), Integer(k) * k * k * k);
  limit.canonicalize();
  return {over_c5(multipartite_k5_count(graph::turan_parts(k, n)), n), limit};
}

Integer move_vertex_gain(const PartSizes& p, int i, int j) {
  const int k = p.count();
  if (i < 0 || j < 0 || i >= k || j >= k || i == j) throw std::invalid_argument("move_vertex_gain: bad part index");
  if (p.parts[static_cast<std::size_t>(i)] < p.parts[static_cast<std::size_t>(j)] + 2)
    throw std::invalid_argument("move_vertex_gain needs p[i] >= p[j] + 2");
  PartSizes q = p;
  --q.parts[static_cast<std::size_t>(i)];
  ++q.parts[static_cast<std::size_t>(j)];
  return multipartite_c5_count(q) - multipartite_c5_count(p);
}

EpsPoly unbalanced_expansion() {
  const RationalFunction k = k_var();
  const EpsPoly e = EpsPoly::eps();
  const EpsPoly one(RationalFunction(1));
  auto c = [](const RationalFunction& r) { return EpsPoly(r); };
  const EpsPoly x = c(1 / k) * (one + e * c(k - 1));
  const EpsPoly y = c(1 / k) * (one - e);
  const EpsPoly y2 = y * y;
  const EpsPoly y3 = y2 * y;
  // One vertex in the large part: its two cycle neighbours share a part or not.
  const EpsPoly same = x * c(k - 1) * c(RationalFunction(Rational(1, 2))) * y2 *
                       (y2 * c((k - 2) * (k - 3)) + x * y * c(2 * (k - 2)));
  const EpsPoly diff = x * y2 * c((k - 1) * (k - 2)) * c(RationalFunction(Rational(1, 2))) *
                       (y2 * c((k - 3) * (k - 3) + (k - 2)) + x * y * c(k - 3));
  // No vertex in the large part.
  const EpsPoly two_same = y3 * y2 * c((k - 1) * (k - 2) * (k - 2) * (k - 3) * RationalFunction(Rational(1, 2)));
  const EpsPoly none_same =
      y3 * y2 * c((k - 1) * (k - 2) * (k - 3) * RationalFunction(Rational(1, 2)) * ((k - 3) * (k - 3) + (k - 2)));
  return c(120) * (diff + same) + c(24) * (two_same + none_same);
}

// ---------------------------------------------------------------- checks

ClaimResult count_oracle_check(int max_total, unsigned threads) {
  Stopwatch clock;
  ClaimResult c("multipartite C5 formula == brute force");
  const std::pair<PartSizes, long> anchors[] = {{PartSizes({2, 2, 2}), 24}, {PartSizes({2, 2, 2, 2}), 288}};
  for (const auto& [p, expected] : anchors) {
    const Integer brute = multipartite_c5_brute_force(p);
    if (brute != expected) c.fail("brute force " + parts_text(p), brute.get_str());
    const Integer formula = multipartite_c5_count(p);
    if (formula != brute) c.fail("formula " + parts_text(p), formula.get_str() + " vs " + brute.get_str());
    c.witness("nu(C5, K" + parts_text(p) + ")", formula.get_str());
  }
  const auto all = compositions(1, max_total, 1);
  std::vector<std::string> bad(all.size());
  parallel_for(all.size(), threads, [&](std::size_t i) {
    const Integer f = multipartite_c5_count(all[i]);
    const Integer b = multipartite_c5_brute_force(all[i]);
    if (f != b) bad[i] = f.get_str() + " vs " + b.get_str();
  });
  for (std::size_t i = 0; i < all.size(); ++i)
    if (!bad[i].empty()) c.fail(parts_text(all[i]), bad[i]);
  c.witness("compositions checked", std::to_string(all.size()));
  c.witness("largest total", std::to_string(max_total));
  c.elapsed_ms = clock.elapsed_ms();
  return c;
}

ClaimResult rebalancing_check(int max_total, unsigned threads) {
  Stopwatch clock;
  ClaimResult c("moving a vertex toward balance strictly raises nu(C5)");
  const auto all = compositions(3, max_total, 3);
  std::vector<std::string> bad(all.size());
  std::vector<long> moves(all.size(), 0);
  parallel_for(all.size(), threads, [&](std::size_t n) {
    const auto& p = all[n];
    for (int i = 0; i < p.count(); ++i)
      for (int j = 0; j < p.count(); ++j) {
        if (i == j || p.parts[static_cast<std::size_t>(i)] < p.parts[static_cast<std::size_t>(j)] + 2) continue;
        ++moves[n];
        const Integer g = move_vertex_gain(p, i, j);
        if (g <= 0 && bad[n].empty())
          bad[n] = "part " + std::to_string(i) + " -> " + std::to_string(j) + ": gain " + g.get_str();
      }
  });
  long total_moves = 0;
  for (std::size_t n = 0; n < all.size(); ++n) {
    total_moves += moves[n];
    if (!bad[n].empty()) c.fail(parts_text(all[n]), bad[n]);
  }
  c.witness("compositions", std::to_string(all.size()));
  c.witness("moves checked", std::to_string(total_moves));
  c.witness("[4,2,2] -> [3,3,2]", move_vertex_gain(PartSizes({4, 2, 2}), 0, 1).get_str());
  c.witness("[3,1,1] -> [2,2,1]", move_vertex_gain(PartSizes({3, 1, 1}), 0, 1).get_str());
  c.witness("two parts [3,1] -> [2,2] (needs k >= 3)", move_vertex_gain(PartSizes({3, 1}), 0, 1).get_str());
  c.elapsed_ms = clock.elapsed_ms();
  return c;
}

ClaimResult two_part_inequalities(int max_x1) {
  Stopwatch clock;
  ClaimResult c("x1 x2 < (x1-1)(x2+1) and x1 C(x2,2) < (x2+1) C(x1-1,2)");
  long pairs = 0;
  for (long x1 = 3; x1 <= max_x1; ++x1)
    for (long x2 = 1; x2 + 2 <= x1; ++x2) {
      ++pairs;
      const std::string at = "x1 = " + std::to_string(x1) + ", x2 = " + std::to_string(x2);
      if (!(x1 * x2 < (x1 - 1) * (x2 + 1))) c.fail(at, "first inequality");
      if (!(Integer(x1) * choose2(x2) < Integer(x2 + 1) * choose2(x1 - 1))) c.fail(at, "second inequality");
    }
  c.witness("pairs", std::to_string(pairs));
  c.elapsed_ms = clock.elapsed_ms();
  return c;
}

CertificateReport unbalanced_part_check(long k_sweep) {
  CertificateReport rep;
  rep.command = "verify claim-3.10";
  const RationalFunction k = k_var();
  const EpsPoly f = unbalanced_expansion();
  {
    Stopwatch clock;
    ClaimResult c("eps-expansion matches the displayed series");
    const RationalFunction inner2 = 1 - 6 / k + 15 / pow(k, 2) - 18 / pow(k, 3) + 8 / pow(k, 4);
    const std::array<RationalFunction, 6> displayed = {
        opt_function(),
        RationalFunction(0),
        -60 * inner2,
        60 * (1 - 8 / k + 25 / pow(k, 2) - 34 / pow(k, 3) + 16 / pow(k, 4)),
        180 * (1 / k - 5 / pow(k, 2) + 8 / pow(k, 3) - 4 / pow(k, 4)),
        -12 * (1 - 15 / pow(k, 2) + 30 / pow(k, 3) - 16 / pow(k, 4)),
    };
    if (f.degree() > 5) c.fail("degree", std::to_string(f.degree()));
    for (std::size_t d = 0; d < displayed.size(); ++d) {
      const RationalFunction got = f.coeff(d);
      c.witness("eps^" + std::to_string(d), got.to_string());
      if (got != displayed[d]) c.fail("eps^" + std::to_string(d), "differs by " + (got - displayed[d]).to_string());
    }
    // All parts equal reproduces the optimum.
    const RationalFunction y = 1 / k;
    const RationalFunction sanity =
        24 * (pow(y, 3) * k * (k - 1) / 2 * (pow(y, 2) * (k - 1) * (k - 2)) +
              pow(y, 3) * k * (k - 1) * (k - 2) / 2 * ((k - 2) * (k - 2) * pow(y, 2) + (k - 1) * pow(y, 2)));
    if (sanity != opt_function()) c.fail("balanced count", sanity.to_string());
    c.witness("balanced count == OPT", sanity == opt_function() ? "yes" : "no");
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
  }
  {
    Stopwatch clock;
    ClaimResult c("eps^2 factor >= 8/81 for integers k >= 3, equality at k = 3");
    const RationalFunction inner2 = 1 - 6 / k + 15 / pow(k, 2) - 18 / pow(k, 3) + 8 / pow(k, 4);
    record_nonneg(c, "factor - 8/81", inner2 - RationalFunction(Rational(8, 81)), 3, k_sweep);
    const Rational at3 = inner2(3);
    if (at3 != Rational(8, 81)) c.fail("factor at k = 3", symbolic::to_string(at3));
    c.witness("factor at k = 3", symbolic::to_string(at3));
    c.witness("factor", inner2.to_string());
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
  }
  return rep;
}

namespace {

// (k-1)(k-2)/k^2 and ((k-2)^2 + (k-1))/k^2: choices for the middle two
// cycle vertices when the outer two share a part or not.
RationalFunction middle_same(const RationalFunction& k) { return (k - 1) * (k - 2) / pow(k, 2); }
RationalFunction middle_diff(const RationalFunction& k) { return ((k - 2) * (k - 2) + (k - 1)) / pow(k, 2); }

// Both outer neighbours outside the two sparse parts, plus the 2/k^4
// allowance for cycles meeting the misplaced set again.
RationalFunction common_terms(const RationalFunction& k) {
  return (k - 2) / (2 * pow(k, 2)) * middle_same(k) + (k - 2) * (k - 3) / (2 * pow(k, 2)) * middle_diff(k) +
         2 / pow(k, 4);
}

CertificateReport bound_report(const std::string& command, const std::string& subject,
                               const RationalFunction& derived, const std::string& displayed_text, long k_sweep) {
  CertificateReport rep;
  rep.command = command;
  const RationalFunction displayed = symbolic::parse_rational_function(displayed_text);
  const RationalFunction k = k_var();
  {
    Stopwatch clock;
    ClaimResult c(subject + ": re-derived bound == displayed polynomial");
    c.witness("re-derived", derived.to_string());
    c.witness("displayed", displayed_text);
    if (derived != displayed) c.fail("difference", (derived - displayed).to_string());
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
  }
  {
    Stopwatch clock;
    ClaimResult c(subject + ": (OPT - 1/k^10) - bound >= 1/k^5 for integers k >= 3");
    const RationalFunction margin = opt_function() - 1 / pow(k, 10) - 1 / pow(k, 5);
    record_nonneg(c, "re-derived bound", margin - derived, 3, k_sweep);
    if (derived != displayed) {
      const auto proof = prove_nonneg_int(margin - displayed, 3, k_sweep);
      c.witness("displayed bound (reported)",
                std::string(symbolic::to_string(proof.verdict)) +
                    (proof.witness_k ? " at k = " + std::to_string(*proof.witness_k) : std::string()));
    }
    c.witness("slack at k = 3", symbolic::to_string((margin - derived)(3)));
    c.witness("slack at k = 1000", symbolic::to_string((margin - derived)(1000)));
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
  }
  return rep;
}

}  // namespace

CertificateReport sparse_vertex_check(long k_sweep) {
  const RationalFunction k = k_var();
  // Outer neighbours both in one sparse part, in the two sparse parts, in
  // one sparse part and one full part.
  const RationalFunction one_part = 2 * (1 / (2 * pow(k, 10))) * middle_same(k);
  const RationalFunction two_parts = 1 / pow(k, 10) * middle_diff(k);
  const RationalFunction mixed = 2 / pow(k, 6) * middle_diff(k);
  const RationalFunction derived = 24 * (one_part + two_parts + mixed + common_terms(k));
  return bound_report("verify claim-4.5", "sparse vertex", derived,
                      "12 - 84/k + 228/k^2 - 300/k^3 + 216/k^4 + 48/k^6 - 144/k^7 + 144/k^8 + 48/k^10 - 144/k^11 + "
                      "120/k^12",
                      k_sweep);
}

CertificateReport adjacent_pair_check(long k_sweep) {
  const RationalFunction k = k_var();
  const RationalFunction q = (pow(k, 2) + 1) / (2 * pow(k, 3));
  const RationalFunction both_low = q * q / 2 * middle_same(k);
  const RationalFunction one_low = q * (k - 2) / k * middle_diff(k);
  const RationalFunction derived = 24 * (both_low + one_low + common_terms(k));
  return bound_report("verify claim-4.7", "adjacent pair", derived,
                      "12 - 72/k + 171/k^2 - 189/k^3 + 96/k^4 + 90/k^5 + 57/k^6 - 9/k^7 + 6/k^8", k_sweep);
}

ClaimResult turan_convergence_check(const std::vector<int>& ks, int max_m) {
  Stopwatch clock;
  ClaimResult c("d(C5, T_k(km)) converges to OPT_k");
  for (int k : ks) {
    const Rational opt = opt_formula(k);
    std::vector<Rational> d;
    for (int m = 2; m <= max_m; ++m) d.push_back(turan_density_c5(k, static_cast<long>(k) * m).value);
    bool nondecreasing = true;
    bool gap_shrinks = true;
    for (std::size_t i = 1; i < d.size(); ++i) {
      if (d[i] < d[i - 1]) nondecreasing = false;
      if (abs(d[i] - opt) > abs(d[i - 1] - opt)) gap_shrinks = false;
    }
    const std::string tag = "k = " + std::to_string(k);
    c.witness(tag + " nondecreasing in m", nondecreasing ? "yes" : "no");
    c.witness(tag + " |d - OPT| nonincreasing in m", gap_shrinks ? "yes" : "no");
    if (!nondecreasing) {
      // Downgraded check: |d - OPT| <= 12/m.
      for (std::size_t i = 0; i < d.size(); ++i) {
        const int m = static_cast<int>(i) + 2;
        if (abs(d[i] - opt) > Rational(12, m))
          c.fail(tag + ", m = " + std::to_string(m), "|d - OPT| = " + symbolic::to_string(abs(d[i] - opt)));
      }
      c.witness(tag + " downgraded to", "|d - OPT| <= 12/m");
    }
    c.witness(tag + " d at m = 2", symbolic::to_string(d.front()));
    c.witness(tag + " d at m = " + std::to_string(max_m), symbolic::to_string(d.back()));
  }
  c.elapsed_ms = clock.elapsed_ms();
  return c;
}

ClaimResult turan_examples_check() {
  Stopwatch clock;
  ClaimResult c("Turan and Zykov densities");
  auto expect = [&](const std::string& label, const Rational& got, const Rational& want) {
    c.witness(label, symbolic::to_string(got));
    if (got != want) c.fail(label, symbolic::to_string(got) + " vs " + symbolic::to_string(want));
  };
  expect("OPT_3", opt_formula(3), Rational(40, 27));
  expect("OPT_4", opt_formula(4), Rational(45, 16));
  expect("d(C5, T3(6))", turan_density_c5(3, 6).value, 4);
  expect("d(C5, T5(5))", turan_density_c5(5, 5).value, 12);
  expect("Zykov limit k = 4", zykov_k5_density(4, 20).limit, 0);
  expect("Zykov limit k = 5", zykov_k5_density(5, 25).limit, Rational(24, 625));
  for (long n : {30L, 60L, 90L}) {
    const Rational d = turan_density_c5(3, n).value;
    const Rational gap = abs(d - Rational(40, 27));
    c.witness("|d(C5, T3(" + std::to_string(n) + ")) - 40/27|", symbolic::to_string(gap));
    if (gap > Rational(10, n)) c.fail("T3(" + std::to_string(n) + ")", "gap above 10/n");
  }
  const auto z = zykov_k5_density(5, 25);
  c.witness("d(K5, T5(25))", symbolic::to_string(z.exact));
  if (abs(z.exact - z.limit) > Rational(10, 25)) c.fail("T5(25)", "Zykov gap above 10/n");
  // Leading behaviour of OPT for large k.
  const RationalFunction opt = opt_function();
  c.witness("OPT leading coefficient", symbolic::to_string(opt.num().leading() / opt.den().leading()));
  c.elapsed_ms = clock.elapsed_ms();
  return c;
}

}  // namespace pentaflag::extremal
