#include "pentaflag/flag.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "pentaflag/graph6.hpp"

namespace pentaflag::flag {

using graph::detail::SmallAdjacency;
using graph::detail::adjacency_from_key;
using graph::detail::key_of;
using graph::detail::minimal_labelling;
using graph::detail::pair_bits;

namespace {

Rational binomial_q(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

void check_flag_order(int s, int ell) {
  if (s < 0 || s > kMaxTypeSize) throw std::invalid_argument("type size must be in [0, 3]");
  if (ell < s || ell > kMaxFlagOrder) throw std::invalid_argument("flag order must be in [s, 6]");
}

}  // namespace

// ------------------------------------------------------------ TypeSigma

TypeSigma TypeSigma::from_bits(int s, std::uint64_t bits) {
  if (s < 0 || s > kMaxTypeSize) throw std::invalid_argument("type size must be in [0, 3]");
  if (bits >> pair_bits(s)) throw std::invalid_argument("type bits out of range");
  TypeSigma t;
  t.s_ = s;
  t.bits_ = bits;
  return t;
}

TypeSigma TypeSigma::from_graph(const Graph& g) {
  if (g.order() > kMaxTypeSize) throw std::invalid_argument("types have at most 3 vertices");
  SmallAdjacency adj{};
  for (int v = 0; v < g.order(); ++v) adj[v] = static_cast<std::uint16_t>(g.neighbors(v));
  return from_bits(g.order(), key_of(adj, g.order()));
}

TypeSigma TypeSigma::canonical(const CanonGraph& g) { return from_graph(g.to_graph()); }

bool TypeSigma::adjacent(int i, int j) const {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  const int t = j * (j - 1) / 2 + i;
  return (bits_ >> (pair_bits(s_) - 1 - t)) & 1U;
}

Graph TypeSigma::to_graph() const {
  Graph g(s_);
  for (int j = 1; j < s_; ++j)
    for (int i = 0; i < j; ++i)
      if (adjacent(i, j)) g.add_edge(i, j);
  return g;
}

CanonGraph TypeSigma::underlying() const { return graph::canonical_form(to_graph()); }

std::vector<TypeSigma> enumerate_types(int s) {
  if (s < 0 || s > kMaxTypeSize) throw std::invalid_argument("type size must be in [0, 3]");
  std::vector<TypeSigma> out;
  for (const auto& g : graph::enumerate_graphs(s)) out.push_back(TypeSigma::canonical(g));
  return out;
}

// ------------------------------------------------------------ TypedFlag

TypedFlag flag_from_adjacency(const SmallAdjacency& adj, int n, int s) {
  const auto lab = minimal_labelling(adj, n, s);
  TypedFlag f;
  f.s_ = s;
  f.n_ = n;
  f.key_ = lab.key;
  f.adj_ = adjacency_from_key(n, lab.key);
  return f;
}

TypedFlag TypedFlag::make(const Graph& g, std::span<const int> labels) {
  const int n = g.order();
  const int s = static_cast<int>(labels.size());
  if (n > graph::kMaxCanonOrder) throw std::invalid_argument("flags have at most 10 vertices");
  if (s > kMaxTypeSize) throw std::invalid_argument("types have at most 3 vertices");
  std::vector<int> order(labels.begin(), labels.end());
  std::uint64_t seen = 0;
  for (int v : order) {
    if (v < 0 || v >= n) throw std::invalid_argument("label vertex out of range");
    if ((seen >> v) & 1U) throw std::invalid_argument("labels must be distinct");
    seen |= std::uint64_t{1} << v;
  }
  for (int v = 0; v < n; ++v)
    if (!((seen >> v) & 1U)) order.push_back(v);
  SmallAdjacency adj{};
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(order[i], order[j])) {
        adj[i] |= static_cast<std::uint16_t>(1U << j);
        adj[j] |= static_cast<std::uint16_t>(1U << i);
      }
  return flag_from_adjacency(adj, n, s);
}

TypedFlag TypedFlag::unlabelled(const CanonGraph& g) {
  SmallAdjacency adj{};
  for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
  return flag_from_adjacency(adj, g.order(), 0);
}

TypeSigma TypedFlag::type() const {
  return TypeSigma::from_bits(s_, key_ >> (pair_bits(n_) - pair_bits(s_)));
}

Graph TypedFlag::to_graph() const {
  Graph g(n_);
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i)
      if (adjacent(i, j)) g.add_edge(i, j);
  return g;
}

CanonGraph TypedFlag::underlying() const { return graph::canonical_form(to_graph()); }

std::string TypedFlag::serialize() const {
  std::string out = graph6::encode(to_graph()) + "|θ:";
  for (int i = 0; i < s_; ++i) {
    if (i) out += ',';
    out += std::to_string(i);
  }
  return out;
}

TypedFlag TypedFlag::parse(std::string_view text) {
  constexpr std::string_view sep = "|θ:";
  const auto at = text.find(sep);
  if (at == std::string_view::npos) throw std::invalid_argument("flag: missing \"|θ:\" label suffix");
  const Graph g = graph6::decode(text.substr(0, at));
  std::string_view rest = text.substr(at + sep.size());
  while (!rest.empty() && (rest.back() == '\n' || rest.back() == ' ')) rest.remove_suffix(1);
  std::vector<int> labels;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string item(rest.substr(0, comma));
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("flag: malformed label list");
    labels.push_back(std::stoi(item));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
    if (rest.empty()) throw std::invalid_argument("flag: trailing comma in label list");
  }
  return make(g, labels);
}

// ---------------------------------------------------------- LabeledHost

LabeledHost LabeledHost::from_flag(const TypedFlag& f) {
  LabeledHost h;
  h.graph = f.to_graph();
  h.labels.resize(static_cast<std::size_t>(f.type_size()));
  std::iota(h.labels.begin(), h.labels.end(), 0);
  return h;
}

TypeSigma LabeledHost::type() const { return TypeSigma::from_graph(graph.induced(labels)); }

// ------------------------------------------------------------ enumeration

const std::vector<TypedFlag>& enumerate_flags(const TypeSigma& sigma, int ell) {
  const int s = sigma.size();
  check_flag_order(s, ell);
  static std::mutex mutex;
  static std::map<std::tuple<int, std::uint64_t, int>, std::vector<TypedFlag>> cache;
  std::lock_guard lock(mutex);
  const auto key = std::make_tuple(s, sigma.bits(), ell);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  SmallAdjacency base{};
  for (int j = 1; j < s; ++j)
    for (int i = 0; i < j; ++i)
      if (sigma.adjacent(i, j)) {
        base[i] |= static_cast<std::uint16_t>(1U << j);
        base[j] |= static_cast<std::uint16_t>(1U << i);
      }
  std::vector<std::pair<int, int>> slots;
  for (int j = s; j < ell; ++j)
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);

  std::set<TypedFlag> found;
  for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
    SmallAdjacency adj = base;
    for (std::size_t t = 0; t < slots.size(); ++t)
      if ((mask >> t) & 1U) {
        auto [i, j] = slots[t];
        adj[i] |= static_cast<std::uint16_t>(1U << j);
        adj[j] |= static_cast<std::uint16_t>(1U << i);
      }
    found.insert(flag_from_adjacency(adj, ell, s));
  }
  return cache.emplace(key, std::vector<TypedFlag>(found.begin(), found.end())).first->second;
}

// ------------------------------------------------------------ HostTable

HostTable::HostTable(LabeledHost host, int max_extra) : host_(std::move(host)), max_extra_(max_extra) {
  type_ = host_.type();
  free_ = host_.free_count();
  if (free_ > 20) throw std::invalid_argument("HostTable supports at most 20 unlabelled vertices");
  const int s = type_.size();
  if (s + max_extra_ > graph::kMaxCanonOrder) throw std::invalid_argument("sub-flags have at most 10 vertices");
  std::vector<int> free_vertices;
  {
    std::uint64_t labelled = 0;
    for (int v : host_.labels) labelled |= std::uint64_t{1} << v;
    for (int v = 0; v < host_.graph.order(); ++v)
      if (!((labelled >> v) & 1U)) free_vertices.push_back(v);
  }
  keys_.assign(std::size_t{1} << free_, 0);
  std::vector<int> order(host_.labels);
  for (std::uint32_t mask = 0; mask < keys_.size(); ++mask) {
    const int m = std::popcount(mask);
    if (m > max_extra_) continue;
    order.resize(static_cast<std::size_t>(s));
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) order.push_back(free_vertices[std::countr_zero(rest)]);
    SmallAdjacency adj{};
    const int n = s + m;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (host_.graph.adjacent(order[i], order[j])) {
          adj[i] |= static_cast<std::uint16_t>(1U << j);
          adj[j] |= static_cast<std::uint16_t>(1U << i);
        }
    keys_[mask] = minimal_labelling(adj, n, s).key;
  }
}

void HostTable::check_type(const TypedFlag& f) const {
  if (f.type() != type_) throw std::invalid_argument("flag and host have different types");
  if (f.order() - f.type_size() > max_extra_) throw std::invalid_argument("flag larger than the host table allows");
  if (f.order() - f.type_size() > free_) throw std::invalid_argument("flag larger than the host");
}

Rational HostTable::density(const TypedFlag& f) const {
  check_type(f);
  const int m = f.order() - f.type_size();
  long hits = 0;
  for (std::uint32_t mask = 0; mask < keys_.size(); ++mask)
    if (std::popcount(mask) == m && keys_[mask] == f.key()) ++hits;
  Rational r = Rational(hits) / binomial_q(free_, m);
  r.canonicalize();
  return r;
}

std::vector<Rational> HostTable::densities(const std::vector<TypedFlag>& basis) const {
  std::vector<Rational> out(basis.size());
  if (basis.empty()) return out;
  for (const auto& f : basis) check_type(f);
  const int m = basis.front().order() - basis.front().type_size();
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].key(), i);
  std::vector<long> hits(basis.size(), 0);
  for (std::uint32_t mask = 0; mask < keys_.size(); ++mask) {
    if (std::popcount(mask) != m) continue;
    if (auto it = index.find(keys_[mask]); it != index.end()) ++hits[it->second];
  }
  const Rational total = binomial_q(free_, m);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out[i] = Rational(hits[i]) / total;
    out[i].canonicalize();
  }
  return out;
}

Rational HostTable::pair_density(const TypedFlag& f1, const TypedFlag& f2) const {
  check_type(f1);
  check_type(f2);
  const int m1 = f1.order() - f1.type_size();
  const int m2 = f2.order() - f2.type_size();
  if (m1 + m2 > free_) throw std::invalid_argument("pair_density: host too small for the two flags");
  std::vector<std::uint32_t> a, b;
  for (std::uint32_t mask = 0; mask < keys_.size(); ++mask) {
    const int m = std::popcount(mask);
    if (m == m1 && keys_[mask] == f1.key()) a.push_back(mask);
    if (m == m2 && keys_[mask] == f2.key()) b.push_back(mask);
  }
  long hits = 0;
  for (auto x : a)
    for (auto y : b)
      if (!(x & y)) ++hits;
  Rational r = Rational(hits) / (binomial_q(free_, m1) * binomial_q(free_ - m1, m2));
  r.canonicalize();
  return r;
}

Rational flag_density(const TypedFlag& f, const LabeledHost& g) {
  return HostTable(g, f.order() - f.type_size()).density(f);
}

Rational flag_density(const TypedFlag& f, const TypedFlag& g) { return flag_density(f, LabeledHost::from_flag(g)); }

Rational pair_density(const TypedFlag& f1, const TypedFlag& f2, const LabeledHost& g) {
  const int extra = std::max(f1.order() - f1.type_size(), f2.order() - f2.type_size());
  return HostTable(g, extra).pair_density(f1, f2);
}

Rational pair_density(const TypedFlag& f1, const TypedFlag& f2, const TypedFlag& g) {
  return pair_density(f1, f2, LabeledHost::from_flag(g));
}

// ----------------------------------------------------------- FlagVector

void FlagVector::check_basis(const TypedFlag& f) const {
  if (f.order() != ell_ || f.type() != sigma_) throw std::invalid_argument("flag outside the vector's basis");
}

RationalFunction FlagVector::operator[](const TypedFlag& f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? RationalFunction(0) : it->second;
}

void FlagVector::add(const TypedFlag& f, const RationalFunction& c) {
  check_basis(f);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FlagVector& FlagVector::operator+=(const FlagVector& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero() && (sigma_ != rhs.sigma_ || ell_ != rhs.ell_)) {
    sigma_ = rhs.sigma_;
    ell_ = rhs.ell_;
  }
  for (const auto& [f, c] : rhs.terms_) add(f, c);
  return *this;
}

FlagVector& FlagVector::operator*=(const RationalFunction& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [f, coeff] : terms_) coeff *= c;
  return *this;
}

// ------------------------------------------------- products, unlabelling

FlagVector product_expand(const TypedFlag& f1, const TypedFlag& f2) {
  if (f1.type() != f2.type()) throw std::invalid_argument("product_expand: flags have different types");
  const int s = f1.type_size();
  const int ell = f1.order() + f2.order() - s;
  check_flag_order(s, ell);
  const int extra = std::max(f1.order(), f2.order()) - s;
  FlagVector out(f1.type(), ell);
  for (const auto& f : enumerate_flags(f1.type(), ell)) {
    const Rational p = HostTable(LabeledHost::from_flag(f), extra).pair_density(f1, f2);
    if (p != 0) out.add(f, RationalFunction(p));
  }
  return out;
}

Rational unlabel_factor(const TypedFlag& f) {
  const int n = f.order();
  const int s = f.type_size();
  if (s == 0) return 1;
  const Graph h = f.to_graph();
  long hits = 0;
  long total = 0;
  std::vector<int> theta(static_cast<std::size_t>(s));
  // Enumerate injective maps [s] -> V(H) in lexicographic order.
  auto rec = [&](auto&& self, int i, std::uint32_t used) -> void {
    if (i == s) {
      ++total;
      if (TypedFlag::make(h, theta) == f) ++hits;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1U) continue;
      theta[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, used | (1U << v));
    }
  };
  rec(rec, 0, 0);
  Rational q(hits, total);
  q.canonicalize();
  return q;
}

FlagVector unlabel(const FlagVector& v) {
  FlagVector out(TypeSigma::empty(), v.order());
  for (const auto& [f, c] : v.terms())
    out.add(TypedFlag::unlabelled(f.underlying()), c * RationalFunction(unlabel_factor(f)));
  return out;
}

FlagVector square_unlabel(std::span<const std::pair<RationalFunction, TypedFlag>> combination) {
  if (combination.empty()) return {};
  const TypedFlag& first = combination.front().second;
  for (const auto& [c, f] : combination)
    if (f.type() != first.type() || f.order() != first.order())
      throw std::invalid_argument("square_unlabel: flags must share type and order");
  FlagVector sum(first.type(), 2 * first.order() - first.type_size());
  for (const auto& [ca, fa] : combination)
    for (const auto& [cb, fb] : combination) {
      const RationalFunction c = ca * cb;
      if (c.is_zero()) continue;
      sum += c * product_expand(fa, fb);
    }
  return unlabel(sum);
}

}  // namespace pentaflag::flag
