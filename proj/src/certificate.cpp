#include "pentaflag/certificate.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pentaflag::cert {

using flag::TypedFlag;
using flag::TypeSigma;
using report::ClaimResult;
using report::CertificateReport;
using report::Stopwatch;
using symbolic::parse_rational_function;
using symbolic::prove_nonneg_int;

namespace {

Poly poly(std::string_view text) {
  const RationalFunction r = parse_rational_function(text);
  if (!r.is_polynomial()) throw std::logic_error("expected a polynomial: " + std::string(text));
  return r.num() * Poly(Rational(1) / r.den().coeff(0));
}

// ------------------------------------------------------------ transcriptions

struct Entry {
  int square;
  int index;
  const char* value;
};

constexpr Entry kSquareEntries[] = {
    {0, 0, "10*k^2 - 20*k + 10"}, {0, 1, "k^2 -2*k +1"}, {0, 3, "-k + 1"}, {0, 4, "-4*k + 4"},
    {0, 18, "1"}, {0, 19, "1"},
    {1, 18, "3*k^2 - 12*k + 12"}, {1, 29, "k^2 - 6*k + 8"}, {1, 31, "-4*k+10"}, {1, 32, "3"},
    {2, 4, "6*k^2 - 24*k + 24"}, {2, 11, "k^2 - 4*k + 4"}, {2, 17, "-k+2"}, {2, 19, "-6*k+12"},
    {2, 31, "2"}, {2, 32, "3"},
    {3, 19, "6"}, {3, 28, "-1"}, {3, 30, "2"}, {3, 31, "-4"},
    {4, 19, "6*k^2-36*k+54"}, {4, 30, "2*k^2-20*k+42"}, {4, 31, "4*k^2 - 24*k + 36"},
    {4, 32, "-24*k + 84"}, {4, 33, "120"},
};

// k = 3 listing, in its own re-indexed numbering; slot 4 is P6.
constexpr Entry kK3Entries[] = {
    {0, 0, "40"}, {0, 1, "4"}, {0, 3, "-2"}, {0, 4, "-8"}, {0, 18, "1"}, {0, 19, "1"},
    {1, 18, "3"}, {1, 27, "-1"}, {1, 28, "-2"},
    {2, 4, "6"}, {2, 11, "1"}, {2, 17, "-1"}, {2, 19, "-6"}, {2, 28, "2"},
    {3, 19, "6"}, {3, 26, "-1"}, {3, 28, "-4"},
    {4, 11, "1"}, {4, 23, "2"}, {4, 22, "-1"}, {4, 27, "-2"}, {4, 17, "1"}, {4, 19, "6"}, {4, 28, "-4"},
};
constexpr std::pair<int, int> kK3Constants[] = {{24, 1}, {25, 1}, {26, 1}, {27, 2}, {28, 4}};

// P6 as displayed, by 1-based drawing number.
constexpr std::pair<int, int> kP6Display[] = {{12, 1}, {26, 2}, {24, -1}, {30, -2}, {18, 1}, {20, 6}, {32, -4}};

struct ExpectedText {
  const char* label;
  const char* numerator;
  std::vector<int> indices;
};

const std::vector<ExpectedText>& expected_texts() {
  static const std::vector<ExpectedText> t = {
      {"C1", "60*k^7 - 720*k^6 + 3600*k^5 - 9876*k^4 + 16320*k^3 - 16440*k^2 + 9360*k - 2304",
       {0, 4, 18, 19, 31, 32, 33}},
      {"C2", "33*k^7-450*k^6+2547*k^5-7824*k^4+14214*k^3-15360*k^2+9144*k-2304", {1}},
      {"C3", "30*k^7 - 420*k^6 + 2430*k^5 - 7596*k^4 + 13980*k^3 - 15240*k^2 + 9120*k - 2304",
       {2, 5, 6, 7, 8, 9, 10, 12, 13, 14, 15, 16, 20, 21, 22, 23, 24, 25}},
      {"C4", "30*k^7 - 423*k^6 + 2457*k^5 - 7686*k^4 + 14118*k^3 - 15336*k^2 + 9144*k - 2304", {3}},
      {"C5", "35*k^7 - 468*k^6 + 2607*k^5 - 7916*k^4 + 14278*k^3 - 15367*k^2 + 9144*k - 2304", {11}},
      {"C6", "30*k^7 - 425*k^6 + 2468*k^5 - 7697*k^4 + 14098*k^3 - 15302*k^2 + 9132*k - 2304", {17}},
      {"C7", "35*k^7 - 455*k^6 + 2505*k^5 - 7644*k^4 + 13980*k^3 - 15240*k^2 + 9120*k - 2304", {26, 27}},
      {"C8",
       "(135/4)*k^7 - (895/2)*k^6 + (9967/4)*k^5 - 7631*k^4 + (27913/2)*k^3 - 15216*k^2 + 9114*k - 2304",
       {28}},
      {"C9", "50*k^7 - 610*k^6 + 3129*k^5 - 8902*k^4 + 15326*k^3 - 15956*k^2 + 9264*k - 2304", {29}},
      {"C10", "50*k^7 - 610*k^6 + 3103*k^5 - 8758*k^4 + 15050*k^3 - 15748*k^2 + 9216*k - 2304", {30}},
  };
  return t;
}

constexpr const char* kDen = "5*k^7 - 35*k^6 + 75*k^5 - 48*k^4";

PublishedTables build_tables() {
  PublishedTables t;
  t.den = poly(kDen);
  t.den_text = poly("5*k^7 -35*k^5 + 75*k^4 -48*k^3");
  const std::string den = std::string("(") + kDen + ")";
  t.z = parse_rational_function("6*(5*k^3 - 20*k^2 + 30*k - 16)/(5*k^3 - 35*k^2 + 75*k - 48)");
  t.p[0] = parse_rational_function("3*(k^5 - 8*k^4 + 22*k^3 - 24*k^2 + 8*k)/" + den);
  t.p[1] = parse_rational_function("(10*k^5 - 60*k^4 + 109*k^3 - 76*k^2 + 18*k)/" + den);
  t.p[2] = parse_rational_function("(5*k^5 - 28*k^4 + 45*k^3 - 28*k^2 + 6*k)/" + den);
  t.p[3] = parse_rational_function("(1/4)*(5*k^7 - 30*k^6 + 53*k^5 - 52*k^4 + 94*k^3 - 96*k^2 + 24*k)/" + den);
  t.p[4] = parse_rational_function("(1/4)*(15*k^5 - 60*k^4 + 78*k^3 - 40*k^2 + 8*k)/" + den);
  for (const auto& e : kSquareEntries) t.P[static_cast<std::size_t>(e.square)][e.index] = poly(e.value);

  const std::vector<int> counts = {1, 1, 1, 2, 2, 4, 6, 12};
  for (int i = 0; i < 8; ++i) t.five_cycles[static_cast<std::size_t>(26 + i)] = counts[static_cast<std::size_t>(i)];

  t.Z_generic = parse_rational_function("(k*k*k*k-10*k*k*k+35*k*k-50*k+24)/k^4");
  t.Z_K5 = parse_rational_function("(-10*k*k*k+35*k*k-50*k+24)/k^4");
  t.tight_indices = {0, 4, 18, 19, 31, 32, 33};
  t.k3_removed = {20, 24, 30, 32, 33};
  t.k3_p = {{"p1", Rational(1, 27)}, {"p2", Rational(13, 27)}, {"p3", Rational(8, 27)},
            {"p4", Rational(2, 9)},  {"p6", Rational(17, 54)}};
  for (auto& [name, v] : t.k3_p) v.canonicalize();

  for (const auto& e : expected_texts())
    t.expected_C.push_back({e.label, parse_rational_function(std::string("(") + e.numerator + ")/" + den), e.indices});

  auto q = [](long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
  };
  for (int i : {0, 4, 18, 19, 31}) t.k3_expected[i] = q(40, 27);
  t.k3_expected[1] = q(4, 27);
  t.k3_expected[3] = q(-2, 27);
  t.k3_expected[11] = q(11, 18);
  t.k3_expected[17] = q(1, 54);
  t.k3_expected[23] = q(-17, 54);
  t.k3_expected[26] = q(1, 1);
  t.k3_expected[27] = q(1, 1);
  t.k3_expected[28] = q(7, 9);
  t.k3_expected[29] = q(8, 9);

  // The k = 3 listing drops the removed classes and renumbers the rest in order.
  std::vector<int> retained;
  for (int i = 0; i < kClasses; ++i)
    if (std::find(t.k3_removed.begin(), t.k3_removed.end(), i) == t.k3_removed.end()) retained.push_back(i);
  for (const auto& e : kK3Entries)
    t.k3_listing[static_cast<std::size_t>(e.square)][retained[static_cast<std::size_t>(e.index)]] =
        poly(e.value).coeff(0);
  for (const auto& [i, c] : kK3Constants) t.k3_listing_counts[retained[static_cast<std::size_t>(i)]] = c;
  for (const auto& [one_based, c] : kP6Display) t.P6_display[one_based - 1] = c;
  for (const auto& [i, c] : t.k3_listing[4]) t.P[5][i] = Poly(c);

  t.opt = parse_rational_function("(12*k^4 - 60*k^3 + 120*k^2 - 120*k + 48)/k^4");
  t.opt_listing = parse_rational_function("-60/k + 120/k^2 - 120/k^3 + 48/k^4 + 12");
  return t;
}

// ------------------------------------------------------------------ shapes

struct Shape {
  const char* name;
  const char* text;
  long multiplier;
  std::vector<const char*> coefficients;
};

const std::array<Shape, kSquares>& shapes() {
  static const std::array<Shape, kSquares> s = {{
      {"P1", "10[[((k-1)A - B)^2]]", 10, {"k-1", "-1"}},
      {"P2", "30[[((k-2)A - B)^2]]", 30, {"k-2", "-1"}},
      {"P3", "30[[((k-2)A - B)^2]]", 30, {"k-2", "-1"}},
      {"P4", "30[[(A - B)^2]]", 30, {"1", "-1"}},
      {"P5", "30[[((k-3)A + (k-3)B - 2C)^2]]", 30, {"k-3", "k-3", "-2"}},
      {"P6", "[[(A + B - C)^2]]", 1, {"1", "1", "-1"}},
  }};
  return s;
}

std::vector<Poly> shape_coefficients(int j) {
  std::vector<Poly> out;
  for (const char* c : shapes()[static_cast<std::size_t>(j)].coefficients) out.push_back(poly(c));
  return out;
}

// ------------------------------------------------------------ class facts

const std::vector<CanonGraph>& classes5() { return graph::enumerate_graphs(5); }

int position_of(const CanonGraph& g) {
  const auto& all = classes5();
  const auto it = std::lower_bound(all.begin(), all.end(), g);
  if (it == all.end() || *it != g) throw std::logic_error("not a 5-vertex class");
  return static_cast<int>(it - all.begin());
}

struct ClassFacts {
  int c5 = 0;
  bool has_k4 = false;
  bool multipartite = false;
  bool k5 = false;
  bool p3bar_free = false;
};

const std::vector<ClassFacts>& class_facts() {
  static const std::vector<ClassFacts> facts = [] {
    std::vector<ClassFacts> f;
    const CanonGraph k5 = graph::complete_graph(5);
    const CanonGraph p3bar = graph::canonical_form(graph::path_graph(3).to_graph().complement());
    for (const auto& g : classes5()) {
      f.push_back({static_cast<int>(graph::count_five_cycles(g.to_graph())), graph::clique_number(g) >= 4,
                   graph::is_complete_multipartite(g), g == k5, graph::count_induced(p3bar, g) == 0});
    }
    return f;
  }();
  return facts;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// --------------------------------------------------------- witness search

/// Unlabelled products [[F_a F_b]]_sigma over the 34 classes, per type.
struct TypeProducts {
  TypeSigma sigma;
  std::vector<TypedFlag> flags;
  std::vector<std::vector<std::vector<Rational>>> M;  // M[a][b][class]
};

std::vector<Rational> unlabelled_vector(const flag::FlagVector& v) {
  std::vector<Rational> out(kClasses);
  for (const auto& [f, c] : v.terms()) out[static_cast<std::size_t>(position_of(f.underlying()))] = c.num().coeff(0);
  return out;
}

const std::vector<TypeProducts>& type_products() {
  static const std::vector<TypeProducts> all = [] {
    std::vector<TypeProducts> out;
    for (const auto& sigma : flag::enumerate_types(3)) {
      TypeProducts tp{sigma, flag::enumerate_flags(sigma, 4), {}};
      const std::size_t m = tp.flags.size();
      tp.M.assign(m, std::vector<std::vector<Rational>>(m));
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) {
          tp.M[a][b] = unlabelled_vector(flag::unlabel(flag::product_expand(tp.flags[a], tp.flags[b])));
          tp.M[b][a] = tp.M[a][b];
        }
      out.push_back(std::move(tp));
    }
    return out;
  }();
  return all;
}

std::vector<Poly> combine(const TypeProducts& tp, const std::vector<std::size_t>& idx, const std::vector<Poly>& coeffs,
                          const Rational& multiplier) {
  std::vector<Poly> v(kClasses);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      const Poly c = coeffs[a] * coeffs[b] * Poly(multiplier);
      const auto& row = tp.M[idx[a]][idx[b]];
      for (int x = 0; x < kClasses; ++x)
        if (row[static_cast<std::size_t>(x)] != 0) v[static_cast<std::size_t>(x)] += c * Poly(row[static_cast<std::size_t>(x)]);
    }
  return v;
}

// Which entries of square j are constrained: P6 only on K4-free classes.
bool constrained_class(int j, int cls) { return j != 5 || !class_facts()[static_cast<std::size_t>(cls)].has_k4; }
bool constrained_index(int j, int i) { return j != 5 || !PublishedTables::get().removed_at_k3(i); }

std::vector<std::string> value_multiset_of_vector(int j, const std::vector<Poly>& v) {
  std::vector<std::string> out;
  for (int c = 0; c < kClasses; ++c)
    if (constrained_class(j, c) && !v[static_cast<std::size_t>(c)].is_zero())
      out.push_back(v[static_cast<std::size_t>(c)].to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> value_multiset_of_table(int j) {
  std::vector<std::string> out;
  for (const auto& [i, p] : PublishedTables::get().P[static_cast<std::size_t>(j)])
    if (constrained_index(j, i) && !p.is_zero()) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

struct Candidate {
  std::size_t type = 0;
  std::vector<std::size_t> flags;
  std::vector<Poly> vector;
  std::size_t equivalent = 1;
  /// Values the expansion has beyond the table's nonzero entries.
  std::vector<std::string> extras;
  /// Multiplier actually used.
  Rational multiplier = 1;
};

struct CandidateSet {
  std::vector<Candidate> unique;
  std::size_t flag_choices = 0;
  bool exact = true;
  bool rescaled = false;
};

// Exact matches of the table's value multiset when any exist; otherwise the
// expansions that contain every table value plus the fewest extra terms.
CandidateSet candidates_for(int j) {
  const Shape& shape = shapes()[static_cast<std::size_t>(j)];
  const std::vector<Poly> coeffs = shape_coefficients(j);
  const auto target = value_multiset_of_table(j);
  std::array<CandidateSet, 2> sets;  // exact, near
  std::size_t best_extra = SIZE_MAX;
  std::array<std::map<std::vector<std::string>, std::size_t>, 2> seen;
  const auto& types = type_products();
  for (std::size_t t = 0; t < types.size(); ++t) {
    const std::size_t m = types[t].flags.size();
    auto consider = [&](std::vector<std::size_t> idx) {
      auto v = combine(types[t], idx, coeffs, Rational(shape.multiplier));
      const auto values = value_multiset_of_vector(j, v);
      std::vector<std::string> extras;
      if (values != target) {
        if (!std::includes(values.begin(), values.end(), target.begin(), target.end())) return;
        std::set_difference(values.begin(), values.end(), target.begin(), target.end(), std::back_inserter(extras));
        if (extras.size() > best_extra) return;
        if (extras.size() < best_extra) {
          best_extra = extras.size();
          sets[1] = {};
          seen[1].clear();
        }
      }
      const std::size_t slot = extras.empty() ? 0 : 1;
      CandidateSet& set = sets[slot];
      ++set.flag_choices;
      std::vector<std::string> key;
      for (int c = 0; c < kClasses; ++c)
        key.push_back(constrained_class(j, c) ? v[static_cast<std::size_t>(c)].to_string() : "*");
      if (auto it = seen[slot].find(key); it != seen[slot].end()) {
        ++set.unique[it->second].equivalent;
        return;
      }
      seen[slot].emplace(std::move(key), set.unique.size());
      set.unique.push_back({t, std::move(idx), std::move(v), 1, std::move(extras), Rational(shape.multiplier)});
    };
    if (coeffs.size() == 2) {
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          if (a != b) consider({a, b});
    } else {
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
          for (std::size_t c = 0; c < m; ++c)
            if (c != a && c != b) consider({a, b, c});
    }
  }
  if (!sets[0].unique.empty()) return sets[0];
  if (!sets[1].unique.empty()) {
    sets[1].exact = false;
    return sets[1];
  }
  // Last resort: the shape up to a positive constant factor.
  CandidateSet scaled;
  std::map<std::vector<std::string>, std::size_t> seen_scaled;
  const Poly first = target.empty() ? Poly() : poly(target.front());
  for (std::size_t t = 0; t < types.size() && first.degree() == 0; ++t) {
    const std::size_t m = types[t].flags.size();
    auto consider = [&](std::vector<std::size_t> idx) {
      const auto unit = combine(types[t], idx, coeffs, Rational(1));
      std::set<Rational> factors;
      for (int c = 0; c < kClasses; ++c) {
        const Poly& p = unit[static_cast<std::size_t>(c)];
        if (constrained_class(j, c) && p.degree() == 0) {
          Rational f = first.coeff(0) / p.coeff(0);
          f.canonicalize();
          if (f > 0) factors.insert(f);
        }
      }
      for (const Rational& f : factors) {
        std::vector<Poly> v = unit;
        for (auto& p : v) p *= f;
        if (value_multiset_of_vector(j, v) != target) continue;
        ++scaled.flag_choices;
        std::vector<std::string> key;
        for (int c = 0; c < kClasses; ++c)
          key.push_back(constrained_class(j, c) ? v[static_cast<std::size_t>(c)].to_string() : "*");
        if (auto it = seen_scaled.find(key); it != seen_scaled.end()) {
          ++scaled.unique[it->second].equivalent;
          continue;
        }
        seen_scaled.emplace(std::move(key), scaled.unique.size());
        scaled.unique.push_back({t, idx, std::move(v), 1, {}, f});
      }
    };
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = (coeffs.size() == 2 ? 0 : a + 1); b < m; ++b) {
        if (a == b) continue;
        if (coeffs.size() == 2) {
          consider({a, b});
          continue;
        }
        for (std::size_t c = 0; c < m; ++c)
          if (c != a && c != b) consider({a, b, c});
      }
  }
  scaled.rescaled = !scaled.unique.empty();
  return scaled;
}

using Table = std::map<int, Poly>;

// Ways to add a candidate's extra values to zero entries of the table.
std::vector<Table> repairs(int j, const Candidate& c) {
  const Table& base = PublishedTables::get().P[static_cast<std::size_t>(j)];
  if (c.extras.empty()) return {base};
  std::vector<int> zeros;
  for (int i = 0; i < kClasses; ++i)
    if (constrained_index(j, i) && PublishedTables::get().P_entry(j, i).is_zero()) zeros.push_back(i);
  std::vector<Poly> extras;
  for (const auto& text : c.extras) extras.push_back(poly(text));
  std::set<std::vector<std::pair<int, std::string>>> seen;
  std::vector<Table> out;
  std::vector<int> slot(extras.size());
  std::function<void(std::size_t)> rec = [&](std::size_t e) {
    if (e == extras.size()) {
      std::vector<std::pair<int, std::string>> key;
      for (std::size_t x = 0; x < extras.size(); ++x) key.emplace_back(slot[x], c.extras[x]);
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) return;
      Table t = base;
      for (std::size_t x = 0; x < extras.size(); ++x) t[slot[x]] = extras[x];
      out.push_back(std::move(t));
      return;
    }
    for (int z : zeros) {
      if (std::find(slot.begin(), slot.begin() + static_cast<long>(e), z) != slot.begin() + static_cast<long>(e)) continue;
      slot[e] = z;
      rec(e + 1);
    }
  };
  rec(0);
  return out;
}

Poly entry(const Table& t, int i) {
  const auto it = t.find(i);
  return it == t.end() ? Poly() : it->second;
}

std::string index_signature(int i, const std::vector<const Table*>& tables) {
  const PublishedTables& t = PublishedTables::get();
  std::ostringstream s;
  s << t.five_cycles[static_cast<std::size_t>(i)] << '|' << t.removed_at_k3(i) << '|' << t.tight(i) << '|' << (i == 33);
  for (std::size_t j = 0; j < tables.size(); ++j)
    s << '|' << (constrained_index(static_cast<int>(j), i) ? entry(*tables[j], i).to_string() : "*");
  return s.str();
}

std::string class_signature(int c, const std::vector<const std::vector<Poly>*>& vectors) {
  const ClassFacts& f = class_facts()[static_cast<std::size_t>(c)];
  std::ostringstream s;
  s << f.c5 << '|' << f.has_k4 << '|' << f.multipartite << '|' << f.k5;
  for (std::size_t j = 0; j < vectors.size(); ++j)
    s << '|' << (constrained_class(static_cast<int>(j), c) ? (*vectors[j])[static_cast<std::size_t>(c)].to_string() : "*");
  return s.str();
}

struct Grouping {
  bool feasible = false;
  Integer count = 0;
  std::array<int, kClasses> position{};
};

Grouping match(const std::vector<const std::vector<Poly>*>& vectors, const std::vector<const Table*>& tables) {
  std::map<std::string, std::pair<std::vector<int>, std::vector<int>>> groups;
  for (int i = 0; i < kClasses; ++i) groups[index_signature(i, tables)].first.push_back(i);
  for (int c = 0; c < kClasses; ++c) groups[class_signature(c, vectors)].second.push_back(c);
  Grouping g;
  g.count = 1;
  for (const auto& [sig, members] : groups) {
    if (members.first.size() != members.second.size()) return {};
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), members.first.size());
    g.count *= f;
    for (std::size_t x = 0; x < members.first.size(); ++x)
      g.position[static_cast<std::size_t>(members.first[x])] = members.second[x];
  }
  g.feasible = true;
  return g;
}

SquareWitness make_witness(int j, const Candidate& c) {
  const Shape& shape = shapes()[static_cast<std::size_t>(j)];
  const TypeProducts& tp = type_products()[c.type];
  SquareWitness w;
  w.name = shape.name;
  w.shape = shape.text;
  w.sigma = tp.sigma;
  for (std::size_t a : c.flags) w.flags.push_back(tp.flags[a]);
  w.coefficients = shape_coefficients(j);
  w.multiplier = c.multiplier;
  w.stated_multiplier = shape.multiplier;
  w.vector = c.vector;
  w.equivalent_choices = c.equivalent;
  return w;
}

std::string join_indices(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace

// ------------------------------------------------------------ PublishedTables

const PublishedTables& PublishedTables::get() {
  static const PublishedTables t = build_tables();
  return t;
}

const ExpectedCoefficient& PublishedTables::expected_at(int i) const {
  for (const auto& e : expected_C)
    if (contains(e.indices, i)) return e;
  throw std::out_of_range("no expected coefficient for index " + std::to_string(i));
}

Poly PublishedTables::P_entry(int j, int i) const {
  const auto& m = P.at(static_cast<std::size_t>(j));
  const auto it = m.find(i);
  return it == m.end() ? Poly() : it->second;
}

bool PublishedTables::removed_at_k3(int i) const { return contains(k3_removed, i); }
bool PublishedTables::tight(int i) const { return contains(tight_indices, i); }

// ------------------------------------------------------------ reconstruction

std::vector<Poly> square_vector(const TypeSigma& sigma, const std::vector<TypedFlag>& flags,
                                const std::vector<Poly>& coefficients, const Rational& multiplier) {
  if (flags.size() != coefficients.size()) throw std::invalid_argument("square_vector: size mismatch");
  std::vector<std::pair<RationalFunction, TypedFlag>> combo;
  for (std::size_t a = 0; a < flags.size(); ++a) {
    if (flags[a].type() != sigma) throw std::invalid_argument("square_vector: flag over another type");
    combo.emplace_back(RationalFunction(coefficients[a]), flags[a]);
  }
  const flag::FlagVector sq = flag::square_unlabel(combo);
  std::vector<Poly> out(kClasses);
  for (const auto& [f, c] : sq.terms()) {
    if (!c.is_polynomial()) throw std::logic_error("square_vector: non-polynomial coefficient");
    out[static_cast<std::size_t>(position_of(f.underlying()))] = c.num() * Poly(multiplier / c.den().coeff(0));
  }
  return out;
}

ReconstructionResult reconstruct_mapping() {
  Stopwatch clock;
  ReconstructionResult result;
  ClaimResult& claim = result.claim;
  claim.claim_id = "mapping: constraints (a)-(e) admit a solution";

  // (a)-(d) alone.
  const Grouping base = match({}, {});
  if (!base.feasible) {
    claim.fail("violated", "(a)-(d): C5 counts, K5, multipartite and K4 sets admit no bijection");
    claim.elapsed_ms = clock.elapsed_ms();
    return result;
  }
  claim.witness("bijections under (a)-(d)", base.count.get_str());

  std::array<CandidateSet, kSquares> cands;
  std::array<std::vector<std::vector<Table>>, kSquares> fixes;
  IndexMapping m;
  for (int j = 0; j < kSquares; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    cands[ju] = candidates_for(j);
    m.surviving_candidates[ju] = cands[ju].flag_choices;
    for (const auto& c : cands[ju].unique) fixes[ju].push_back(repairs(j, c));
    const std::string name = shapes()[ju].name;
    if (cands[ju].unique.empty()) {
      claim.fail("violated", "(e): no " + name + " witness of shape " + shapes()[ju].text +
                                 " reproduces the table values");
      claim.elapsed_ms = clock.elapsed_ms();
      return result;
    }
    std::string line = std::to_string(cands[ju].flag_choices) + " flag choices, " +
                       std::to_string(cands[ju].unique.size()) + " distinct vectors";
    if (cands[ju].rescaled)
      line += ", only with multiplier " + symbolic::to_string(cands[ju].unique[0].multiplier) + " instead of " +
              std::to_string(shapes()[ju].multiplier);
    if (!cands[ju].exact) line += ", none exact; each adds " + std::to_string(cands[ju].unique[0].extras.size()) +
                                  " term(s) missing from the table";
    claim.witness(name + " candidates", line);
  }

  // Every combination of witness vectors (and placements of terms missing
  // from the table), in a fixed order.
  std::array<std::size_t, kSquares> choice{};
  std::array<std::size_t, kSquares> fix{};
  bool have_first = false;
  Integer total = 0;
  std::function<void(int)> rec = [&](int j) {
    if (j == kSquares) {
      std::vector<const std::vector<Poly>*> vectors;
      std::vector<const Table*> tables;
      for (std::size_t x = 0; x < kSquares; ++x) {
        vectors.push_back(&cands[x].unique[choice[x]].vector);
        tables.push_back(&fixes[x][choice[x]][fix[x]]);
      }
      const Grouping g = match(vectors, tables);
      if (!g.feasible) return;
      ++m.witness_combinations;
      total += g.count;
      if (!have_first) {
        have_first = true;
        m.position = g.position;
        for (std::size_t x = 0; x < kSquares; ++x) {
          m.witnesses[x] = make_witness(static_cast<int>(x), cands[x].unique[choice[x]]);
          for (const auto& [i, v] : *tables[x])
            if (PublishedTables::get().P_entry(static_cast<int>(x), i) != v)
              m.discrepancies.push_back({m.witnesses[x].name, i, PublishedTables::get().P_entry(static_cast<int>(x), i), v});
        }
      }
      return;
    }
    const auto ju = static_cast<std::size_t>(j);
    for (std::size_t c = 0; c < cands[ju].unique.size(); ++c)
      for (std::size_t f = 0; f < fixes[ju][c].size(); ++f) {
        choice[ju] = c;
        fix[ju] = f;
        rec(j + 1);
      }
  };
  rec(0);

  if (!have_first) {
    claim.fail("violated", "(e): every witness combination conflicts with (a)-(d) or with another square");
    claim.elapsed_ms = clock.elapsed_ms();
    return result;
  }
  m.solutions = total;
  for (int i = 0; i < kClasses; ++i)
    m.classes[static_cast<std::size_t>(i)] = classes5()[static_cast<std::size_t>(m.position[static_cast<std::size_t>(i)])];

  if (auto err = validate_mapping(m)) claim.fail("validation", *err);
  for (const auto& d : m.discrepancies)
    claim.fail("(e) exact match", d.square + " expansion has " + d.derived.to_string() + " at index " +
                                      std::to_string(d.index) + " where the table has " +
                                      (d.table.is_zero() ? std::string("0") : d.table.to_string()));
  claim.witness("witness combinations", std::to_string(m.witness_combinations));
  claim.witness("solutions", m.solutions.get_str());
  claim.witness("index 33", m.classes[33].canon_key());
  claim.witness("index 31", m.classes[31].canon_key());
  claim.witness("index 32", m.classes[32].canon_key());
  for (const auto& w : m.witnesses) {
    std::string flags;
    for (const auto& f : w.flags) flags += (flags.empty() ? "" : " ") + f.serialize();
    claim.witness(w.name + " witness", w.shape + " with " + flags);
  }
  result.mapping = m;
  claim.elapsed_ms = clock.elapsed_ms();
  return result;
}

std::optional<std::string> validate_mapping(const IndexMapping& m) {
  const PublishedTables& t = PublishedTables::get();
  const auto& facts = class_facts();
  std::set<int> used;
  for (int i = 0; i < kClasses; ++i) {
    const int p = m.position[static_cast<std::size_t>(i)];
    if (p < 0 || p >= kClasses || !used.insert(p).second) return "not a bijection at index " + std::to_string(i);
    if (classes5()[static_cast<std::size_t>(p)] != m.classes[static_cast<std::size_t>(i)])
      return "class and position disagree at index " + std::to_string(i);
    const ClassFacts& f = facts[static_cast<std::size_t>(p)];
    if (f.c5 != t.five_cycles[static_cast<std::size_t>(i)]) return "(a) C5 count differs at index " + std::to_string(i);
    if (f.k5 != (i == 33)) return "(b) index 33 is not K5";
    if (f.multipartite != t.tight(i)) return "(c) tight set differs at index " + std::to_string(i);
    if (f.has_k4 != t.removed_at_k3(i)) return "(d) K4 set differs at index " + std::to_string(i);
  }
  for (int j = 0; j < kSquares; ++j) {
    const SquareWitness& w = m.witnesses[static_cast<std::size_t>(j)];
    const Shape& shape = shapes()[static_cast<std::size_t>(j)];
    if (w.name != shape.name) return "(e) witness " + std::to_string(j) + " is not " + shape.name;
    if (w.sigma.size() != 3) return "(e) " + w.name + " type is not of size 3";
    if (w.coefficients != shape_coefficients(j) || w.stated_multiplier != shape.multiplier || w.multiplier <= 0)
      return "(e) " + w.name + " does not have shape " + shape.text;
    std::set<TypedFlag> distinct(w.flags.begin(), w.flags.end());
    if (distinct.size() != w.flags.size()) return "(e) " + w.name + " repeats a flag";
    for (const auto& f : w.flags)
      if (f.order() != 4 || f.type() != w.sigma) return "(e) " + w.name + " has a flag outside F^sigma_4";
    const auto v = square_vector(w.sigma, w.flags, w.coefficients, w.multiplier);
    if (v != w.vector) return "(e) " + w.name + " vector does not match its flags";
    for (int i = 0; i < kClasses; ++i) {
      if (!constrained_index(j, i)) continue;
      Poly expected = t.P_entry(j, i);
      for (const auto& d : m.discrepancies)
        if (d.square == w.name && d.index == i && d.table == expected && expected.is_zero()) expected = d.derived;
      if (v[static_cast<std::size_t>(m.position[static_cast<std::size_t>(i)])] != expected)
        return "(e) " + w.name + " differs from the table at index " + std::to_string(i);
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ main case

namespace {

// "(num) / den" with the fixed common denominator, e.g. "9*k^2 / den".
std::string numerator_over(const RationalFunction& r, const Poly& den) {
  const RationalFunction n = r * RationalFunction(den);
  return (n.is_polynomial() ? (n.num() * Poly(Rational(1) / n.den().coeff(0))).to_string() : n.to_string()) + " / den";
}

RationalFunction zykov_limit() { return parse_rational_function("(k-1)*(k-2)*(k-3)*(k-4)/k^4"); }

}  // namespace

std::array<RationalFunction, kClasses> main_coefficients(const IndexMapping& m, SquareSource source) {
  const PublishedTables& t = PublishedTables::get();
  const RationalFunction zyk = zykov_limit();
  std::array<RationalFunction, kClasses> c;
  for (int i = 0; i < kClasses; ++i) {
    const auto pos = static_cast<std::size_t>(m.position[static_cast<std::size_t>(i)]);
    const ClassFacts& f = class_facts()[pos];
    RationalFunction v(static_cast<long>(f.c5));
    v += t.z * (f.k5 ? zyk - RationalFunction(1) : zyk);
    for (int j = 0; j < 5; ++j) {
      const Poly entry = source == SquareSource::table ? t.P_entry(j, i) : m.witnesses[static_cast<std::size_t>(j)].vector[pos];
      v += t.p[static_cast<std::size_t>(j)] * RationalFunction(entry);
    }
    c[static_cast<std::size_t>(i)] = v;
  }
  return c;
}

CertificateReport verify_main(const IndexMapping& m, long k_sweep) {
  const PublishedTables& t = PublishedTables::get();
  CertificateReport rep;
  rep.command = "verify certificate";

  {
    Stopwatch clock;
    ClaimResult c("mapping: valid");
    if (auto err = validate_mapping(m)) c.fail("violated", *err);
    c.witness("solutions", m.solutions.get_str());
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
  }

  const auto coeffs = main_coefficients(m, SquareSource::table);
  {
    Stopwatch clock;
    ClaimResult c("c_F(k) == C_i(k): identity");
    std::size_t covered = 0;
    for (const auto& e : t.expected_C) covered += e.indices.size();
    if (covered != kClasses) c.fail("coverage", std::to_string(covered) + " indices covered");
    for (int i = 0; i < kClasses; ++i) {
      const auto& e = t.expected_at(i);
      if (coeffs[static_cast<std::size_t>(i)] != e.value)
        c.fail("index " + std::to_string(i),
               "recomputed numerator over den " + numerator_over(coeffs[static_cast<std::size_t>(i)], t.den) +
                   " differs from " + e.label + " by " + numerator_over(coeffs[static_cast<std::size_t>(i)] - e.value, t.den));
    }
    for (const auto& e : t.expected_C) c.witness(e.label, "indices " + join_indices(e.indices));
    c.witness("common denominator", t.den.to_string());
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
  }

  const RationalFunction C1 = t.expected_C.front().value;
  {
    Stopwatch clock;
    ClaimResult c("C1 == OPT: identity");
    if (C1 != t.opt) c.fail("C1 - OPT", (C1 - t.opt).to_string());
    if (t.opt != t.opt_listing) c.fail("listing optimum", t.opt_listing.to_string());
    c.witness("OPT", t.opt.to_string());
    c.witness("OPT(4)", symbolic::to_string(t.opt(4)));
    if (C1 == RationalFunction(t.expected_C.front().value.num(), t.den_text))
      c.witness("denominator in the proof text", "agrees");
    else
      c.witness("denominator in the proof text", t.den_text.to_string() + " differs from the listing; listing used");
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
  }

  {
    Stopwatch clock;
    ClaimResult c("C1 - Ci >= 0 for integers k >= 4");
    for (std::size_t e = 1; e < t.expected_C.size(); ++e) {
      const auto proof = prove_nonneg_int(C1 - t.expected_C[e].value, 4, k_sweep);
      const std::string label = "C1 - " + t.expected_C[e].label;
      switch (proof.verdict) {
        case symbolic::NonnegVerdict::holds:
          c.witness(label, "holds (sweep 4.." + std::to_string(k_sweep) + ", tail bound " + proof.tail_bound.get_str() + ")");
          break;
        case symbolic::NonnegVerdict::fails_at:
          c.fail(label, "fails at k = " + std::to_string(*proof.witness_k) + ", value " +
                            symbolic::to_string(*proof.witness_value));
          break;
        case symbolic::NonnegVerdict::pole_in_range:
          c.fail(label, "pole at k = " + std::to_string(*proof.witness_k));
          break;
        case symbolic::NonnegVerdict::inconclusive:
          c.inconclusive(label, "needs sweep_max " + proof.required_sweep->get_str());
          break;
      }
    }
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
  }

  {
    Stopwatch clock;
    ClaimResult c("flag-derived certificate: C1 - c_F >= 0 for integers k >= 4");
    const auto derived = main_coefficients(m, SquareSource::flags);
    std::set<std::string> done;
    for (int i = 0; i < kClasses; ++i) {
      const RationalFunction diff = C1 - derived[static_cast<std::size_t>(i)];
      if (!done.insert(diff.to_string()).second) continue;
      const auto proof = prove_nonneg_int(diff, 4, k_sweep);
      const std::string label = "index " + std::to_string(i);
      if (proof.verdict == symbolic::NonnegVerdict::holds) continue;
      if (proof.verdict == symbolic::NonnegVerdict::inconclusive)
        c.inconclusive(label, "needs sweep_max " + proof.required_sweep->get_str());
      else
        c.fail(label, std::string(symbolic::to_string(proof.verdict)) +
                          (proof.witness_k ? " at k = " + std::to_string(*proof.witness_k) : std::string()));
    }
    std::size_t differing = 0;
    for (int i = 0; i < kClasses; ++i)
      if (derived[static_cast<std::size_t>(i)] != coeffs[static_cast<std::size_t>(i)]) {
        ++differing;
        c.witness("index " + std::to_string(i) + " differs from the table value by",
                  numerator_over(derived[static_cast<std::size_t>(i)] - coeffs[static_cast<std::size_t>(i)], t.den));
      }
    c.witness("indices differing from the table-based coefficients", std::to_string(differing));
    c.witness("max over F", C1 == derived[0] ? "C1 (attained on the tight set)" : "not C1");
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
  }

  {
    Stopwatch clock;
    ClaimResult c("den, z, p1..p5 >= 0 for integers k >= 4");
    std::vector<std::pair<std::string, RationalFunction>> items = {{"den", t.den}, {"z", t.z}};
    for (int j = 0; j < 5; ++j) items.emplace_back("p" + std::to_string(j + 1), t.p[static_cast<std::size_t>(j)]);
    for (const auto& [name, r] : items) {
      const auto proof = prove_nonneg_int(r, 4, k_sweep);
      if (proof.verdict == symbolic::NonnegVerdict::holds)
        c.witness(name, "holds");
      else if (proof.verdict == symbolic::NonnegVerdict::inconclusive)
        c.inconclusive(name, std::string(symbolic::to_string(proof.verdict)));
      else
        c.fail(name, std::string(symbolic::to_string(proof.verdict)) +
                         (proof.witness_k ? " at k = " + std::to_string(*proof.witness_k) : std::string()));
    }
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
  }

  {
    Stopwatch clock;
    ClaimResult c("Z(k): Zykov constraint entries");
    const RationalFunction zyk = zykov_limit();
    if (t.Z_generic != zyk) c.fail("Z_generic", t.Z_generic.to_string());
    if (t.Z_K5 != t.Z_generic - RationalFunction(1)) c.fail("Z_K5", t.Z_K5.to_string());
    c.witness("Z_generic", t.Z_generic.to_string());
    c.witness("Z_generic(5)", symbolic::to_string(t.Z_generic(5)));
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
  }
  return rep;
}

// ------------------------------------------------------------ k = 3

CertificateReport verify_k3(const IndexMapping& m) {
  const PublishedTables& t = PublishedTables::get();
  CertificateReport rep;
  rep.command = "verify certificate-k3";

  {
    Stopwatch clock;
    ClaimResult c("k=3 listing agrees with the general tables");
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < kClasses; ++i) {
        if (t.removed_at_k3(i)) continue;
        const Rational general = t.P_entry(j, i)(3);
        const auto it = t.k3_listing[static_cast<std::size_t>(j)].find(i);
        const Rational listed = it == t.k3_listing[static_cast<std::size_t>(j)].end() ? Rational(0) : it->second;
        if (general != listed)
          c.fail("P" + std::to_string(j + 1) + "(3) index " + std::to_string(i),
                 symbolic::to_string(listed) + " vs " + symbolic::to_string(general));
      }
    for (int i = 0; i < kClasses; ++i) {
      if (t.removed_at_k3(i)) continue;
      const auto it = t.k3_listing_counts.find(i);
      if ((it == t.k3_listing_counts.end() ? 0 : it->second) != t.five_cycles[static_cast<std::size_t>(i)])
        c.fail("C5 count index " + std::to_string(i), "listing differs");
    }
    if (t.k3_listing[4] != t.P6_display) c.fail("P6", "listing differs from the displayed P6");
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
  }

  std::array<Rational, kClasses> coeff{};
  {
    Stopwatch clock;
    ClaimResult c("k=3 coefficients reproduced");
    const std::array<Rational, 5> w = {t.k3_p.at("p1"), t.k3_p.at("p2"), t.k3_p.at("p3"), t.k3_p.at("p4"),
                                       t.k3_p.at("p6")};
    const std::array<int, 5> squares = {0, 1, 2, 3, 5};
    for (int i = 0; i < kClasses; ++i) {
      if (t.removed_at_k3(i)) continue;
      const auto pos = static_cast<std::size_t>(m.position[static_cast<std::size_t>(i)]);
      Rational v = class_facts()[pos].c5;
      for (std::size_t x = 0; x < 5; ++x)
        v += w[x] * m.witnesses[static_cast<std::size_t>(squares[x])].vector[pos](3);
      v.canonicalize();
      coeff[static_cast<std::size_t>(i)] = v;
      const auto it = t.k3_expected.find(i);
      if (it == t.k3_expected.end()) {
        if (v != 0) c.witness("unlisted index " + std::to_string(i), symbolic::to_string(v));
        continue;
      }
      if (v != it->second)
        c.fail("index " + std::to_string(i), symbolic::to_string(v) + " vs listed " + symbolic::to_string(it->second));
    }
    for (const auto& [i, v] : t.k3_expected) c.witness("index " + std::to_string(i), symbolic::to_string(v));
    c.witness("ignored (contain K4)", join_indices(t.k3_removed));
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
  }

  {
    Stopwatch clock;
    ClaimResult c("k=3 max coefficient == 40/27 on T3");
    Rational best;
    bool first = true;
    for (int i = 0; i < kClasses; ++i) {
      if (t.removed_at_k3(i)) continue;
      if (first || coeff[static_cast<std::size_t>(i)] > best) best = coeff[static_cast<std::size_t>(i)];
      first = false;
    }
    std::vector<int> argmax;
    for (int i = 0; i < kClasses; ++i)
      if (!t.removed_at_k3(i) && coeff[static_cast<std::size_t>(i)] == best) argmax.push_back(i);
    const Rational target(40, 27);
    if (best != target) c.fail("max", symbolic::to_string(best));
    if (t.opt(3) != target) c.fail("OPT(3)", symbolic::to_string(t.opt(3)));
    std::vector<int> t3;
    for (int i = 0; i < kClasses; ++i) {
      const auto& f = class_facts()[static_cast<std::size_t>(m.position[static_cast<std::size_t>(i)])];
      if (f.multipartite && !f.has_k4) t3.push_back(i);
    }
    if (argmax != t3) c.fail("argmax", join_indices(argmax) + " vs T3 " + join_indices(t3));
    c.witness("max", symbolic::to_string(best));
    c.witness("argmax indices", join_indices(argmax));
    c.witness("|T3|", std::to_string(t3.size()));
    std::string keys;
    for (int i : t3) keys += (keys.empty() ? "" : " ") + m.classes[static_cast<std::size_t>(i)].canon_key();
    c.witness("T3 graph6", keys);
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
  }
  return rep;
}

// ------------------------------------------------------------ tight set

CertificateReport tight_set_characterization(const IndexMapping& m) {
  const PublishedTables& t = PublishedTables::get();
  CertificateReport rep;
  rep.command = "verify tight-set";
  Stopwatch clock;
  ClaimResult c("tight == complete multipartite == induced-P3bar-free");
  const auto coeffs = main_coefficients(m, SquareSource::table);
  const RationalFunction C1 = t.expected_C.front().value;
  std::set<int> tight, multipartite, p3bar_free, t3;
  for (int i = 0; i < kClasses; ++i) {
    const int pos = m.position[static_cast<std::size_t>(i)];
    if (coeffs[static_cast<std::size_t>(i)] == C1) tight.insert(pos);
  }
  for (int pos = 0; pos < kClasses; ++pos) {
    const auto& f = class_facts()[static_cast<std::size_t>(pos)];
    if (f.multipartite) multipartite.insert(pos);
    if (f.p3bar_free) p3bar_free.insert(pos);
    if (f.multipartite && !f.has_k4) t3.insert(pos);
  }
  if (tight != multipartite) c.fail("tight vs multipartite", "sets differ");
  if (multipartite != p3bar_free) c.fail("multipartite vs P3bar-free", "sets differ");
  if (tight.size() != 7) c.fail("|T|", std::to_string(tight.size()));
  if (t3.size() != 5) c.fail("|T3|", std::to_string(t3.size()));
  if (!tight.contains(position_of(graph::empty_graph(5)))) c.fail("empty graph", "not tight");
  c.witness("|T|", std::to_string(tight.size()));
  c.witness("|T3|", std::to_string(t3.size()));
  std::string keys;
  for (int pos : tight) keys += (keys.empty() ? "" : " ") + classes5()[static_cast<std::size_t>(pos)].canon_key();
  c.witness("T graph6", keys);
  c.elapsed_ms = clock.elapsed_ms();
  rep.claims.push_back(c);
  return rep;
}

// ------------------------------------------------------------ finite order

CertificateReport finite_decomposition(const IndexMapping& m, int n, int k) {
  if (n < 5 || n > graph::kMaxEnumerationOrder) throw std::invalid_argument("finite_decomposition: n must be in [5, 8]");
  CertificateReport rep;
  rep.command = "verify finite-decomposition";
  Stopwatch clock;
  ClaimResult c("finite decomposition n=" + std::to_string(n) + " k=" + std::to_string(k));

  const auto coeffs = main_coefficients(m, SquareSource::flags);
  std::array<Rational, kClasses> ck{};   // by class position
  std::array<Rational, kClasses> c5{};   // by class position
  for (int i = 0; i < kClasses; ++i) {
    const auto pos = static_cast<std::size_t>(m.position[static_cast<std::size_t>(i)]);
    ck[pos] = coeffs[static_cast<std::size_t>(i)](k);
    c5[pos] = class_facts()[pos].c5;
  }
  const auto& basis = flag::enumerate_flags(TypeSigma::empty(), 5);
  std::vector<std::size_t> basis_pos;
  for (const auto& f : basis) basis_pos.push_back(static_cast<std::size_t>(position_of(f.underlying())));

  std::size_t hosts = 0, below = 0;
  Rational worst_gap;
  std::string worst_graph;
  const Rational c5_total = Rational(static_cast<long>(graph::binomial(static_cast<std::uint64_t>(n), 5)));
  for (const auto& g : graph::enumerate_graphs(n)) {
    if (graph::clique_number(g) > k) continue;
    ++hosts;
    const graph::Graph host = g.to_graph();
    const auto dens = flag::HostTable(flag::LabeledHost{host, {}}, 5).densities(basis);
    std::array<Rational, kClasses> P{};
    for (std::size_t b = 0; b < basis.size(); ++b) P[basis_pos[b]] = dens[b];

    Rational d = Rational(static_cast<long>(graph::count_five_cycles(host))) / c5_total;
    d.canonicalize();
    Rational decomposed = 0, certified = 0;
    for (int x = 0; x < kClasses; ++x) {
      decomposed += c5[static_cast<std::size_t>(x)] * P[static_cast<std::size_t>(x)];
      certified += ck[static_cast<std::size_t>(x)] * P[static_cast<std::size_t>(x)];
    }
    decomposed.canonicalize();
    certified.canonicalize();
    if (decomposed != d) c.fail("C5 decomposition", g.canon_key());

    // Each square evaluated on G equals the average over injections theta
    // of its bilinear pair-density form on (G, theta).
    for (const auto& w : m.witnesses) {
      Rational lhs = 0;
      for (int x = 0; x < kClasses; ++x) lhs += w.vector[static_cast<std::size_t>(x)](k) * P[static_cast<std::size_t>(x)];
      lhs.canonicalize();
      Rational rhs = 0;
      long injections = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int e = 0; e < n; ++e) {
            if (a == b || a == e || b == e) continue;
            ++injections;
            flag::LabeledHost lh{host, {a, b, e}};
            if (lh.type() != w.sigma) continue;
            const flag::HostTable table(lh, 1);
            for (std::size_t x = 0; x < w.flags.size(); ++x)
              for (std::size_t y = 0; y < w.flags.size(); ++y)
                rhs += w.coefficients[x](k) * w.coefficients[y](k) * table.pair_density(w.flags[x], w.flags[y]);
          }
      rhs *= w.multiplier / Rational(injections);
      rhs.canonicalize();
      if (lhs != rhs) c.fail(w.name + " embedding average", g.canon_key());
    }

    if (certified < d) {
      const Rational gap = d - certified;
      if (below == 0 || gap > worst_gap) {
        worst_gap = gap;
        worst_graph = g.canon_key();
      }
      ++below;
    }
  }
  c.witness("hosts", std::to_string(hosts));
  c.witness("hosts with sum c_F P(F,G) < d(C5,G) (reported, not asserted)", std::to_string(below));
  if (below > 0) c.witness("largest shortfall", symbolic::to_string(worst_gap) + " at " + worst_graph);
  c.elapsed_ms = clock.elapsed_ms();
  rep.claims.push_back(c);
  return rep;
}

}  // namespace pentaflag::cert
