#include "pentaflag/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pentaflag/extremal.hpp"
#include "pentaflag/flag_checks.hpp"
#include "pentaflag/graph6.hpp"
#include "pentaflag/search.hpp"

namespace pentaflag::cli {

using report::CertificateReport;
using report::ClaimResult;
using report::Row;
using report::Stopwatch;
using symbolic::Integer;
using symbolic::Rational;

namespace fs = std::filesystem;

namespace {

const std::map<std::string, std::set<std::string>>& known_commands() {
  static const std::map<std::string, std::set<std::string>> m = {
      {"enumerate", {""}},
      {"verify",
       {"certificate", "certificate-k3", "tight-set", "claim-3.10", "claim-4.5", "claim-4.7", "chain-identity"}},
      {"count", {"turan", "multipartite", "zykov"}},
      {"oracle", {""}},
      {"reconstruct", {"mapping"}},
      {"report", {"all"}},
  };
  return m;
}

// Class counts on n <= 8 vertices.
constexpr std::size_t kGraphCounts[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};

std::string parts_text(const std::vector<int>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

std::string u64(std::uint64_t v) { return std::to_string(v); }

// Graph lists cached by graph6 line; a cached list is accepted only if
// every line decodes to a canonical class satisfying `ok`.
template <class Compute, class Ok>
std::vector<graph::CanonGraph> cached_graphs(const Cache& cache, const std::string& op, const std::string& args,
                                             Compute compute, Ok ok, std::ostream& warn) {
  if (auto hit = cache.load(op, args)) {
    std::vector<graph::CanonGraph> out;
    std::istringstream in(*hit);
    std::string line;
    bool good = true;
    try {
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto g = graph::canonical_form(graph6::decode(line));
        if (g.canon_key() != line || !ok(g)) {
          good = false;
          break;
        }
        out.push_back(g);
      }
    } catch (const std::exception&) {
      good = false;
    }
    if (good && std::is_sorted(out.begin(), out.end()) &&
        std::adjacent_find(out.begin(), out.end()) == out.end())
      return out;
    warn << "warning: cache entry " << cache.path_for(op, args) << " failed validation; recomputing\n";
  }
  std::vector<graph::CanonGraph> out = compute();
  std::string payload;
  for (const auto& g : out) payload += g.canon_key() + "\n";
  cache.store(op, args, payload);
  return out;
}

CertificateReport enumerate_report(const RunConfig& cfg, const Cache& cache, std::ostream& warn) {
  const int n = *cfg.n;
  CertificateReport rep;
  rep.command = "enumerate";
  Stopwatch clock;
  ClaimResult c("enumeration: " + std::to_string(n) + " vertices");
  const auto classes = cached_graphs(
      cache, "enumerate", "n=" + std::to_string(n), [&] { return graph::enumerate_graphs(n); },
      [&](const graph::CanonGraph& g) { return g.order() == n; }, warn);
  if (classes.size() != kGraphCounts[n])
    c.fail("classes", std::to_string(classes.size()) + " vs " + std::to_string(kGraphCounts[n]));
  c.witness("classes", std::to_string(classes.size()));
  std::vector<std::uint64_t> nonzero;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto g = classes[i].to_graph();
    const auto c5 = n >= 5 ? graph::count_five_cycles(g) : 0;
    if (c5) nonzero.push_back(c5);
    rep.rows.push_back(Row{{{"position", std::to_string(i)},
                            {"graph6", classes[i].canon_key()},
                            {"edges", std::to_string(classes[i].edge_count())},
                            {"clique", std::to_string(graph::clique_number(classes[i]))},
                            {"c5", u64(c5)}}});
  }
  std::sort(nonzero.begin(), nonzero.end());
  std::string ms;
  for (auto v : nonzero) ms += (ms.empty() ? "" : ",") + u64(v);
  c.witness("nonzero C5 counts", "{" + ms + "}");
  if (n == 5 && nonzero != std::vector<std::uint64_t>{1, 1, 1, 2, 2, 4, 6, 12})
    c.fail("nonzero C5 counts", "expected {1,1,1,2,2,4,6,12}");
  c.elapsed_ms = clock.elapsed_ms();
  rep.claims.push_back(c);
  return rep;
}

CertificateReport reconstruct_report(const Cache& cache) {
  const LoadedMapping lm = load_mapping(cache);
  CertificateReport rep;
  rep.command = "reconstruct mapping";
  rep.claims.push_back(lm.search_claim);
  for (int i = 0; i < cert::kClasses; ++i) {
    const auto& cls = lm.mapping.classes[static_cast<std::size_t>(i)];
    rep.rows.push_back(Row{{{"index", std::to_string(i)},
                            {"graph6", cls.canon_key()},
                            {"edges", std::to_string(cls.edge_count())},
                            {"c5", u64(graph::count_five_cycles(cls.to_graph()))}}});
  }
  return rep;
}

CertificateReport certificate_report(const RunConfig& cfg, const Cache& cache) {
  const LoadedMapping lm = load_mapping(cache);
  CertificateReport rep = cert::verify_main(lm.mapping, cfg.sweep_max);
  rep.append(cert::finite_decomposition(lm.mapping, 7, 4));
  rep.command = "verify certificate";
  return rep;
}

CertificateReport count_report(const RunConfig& cfg) {
  CertificateReport rep;
  const std::string kind = cfg.command.at(1);
  rep.command = "count " + kind;
  Stopwatch clock;
  if (kind == "multipartite") {
    const graph::PartSizes p(cfg.parts);
    ClaimResult c("multipartite C5 count");
    const auto formula = extremal::multipartite_c5_count(p);
    rep.rows.push_back(Row{{{"parts", parts_text(cfg.parts)},
                            {"nu", formula.get_str()},
                            {"provenance", std::string(extremal::to_string(extremal::Provenance::formula))}}});
    if (p.total() <= 12) {
      const auto brute = extremal::multipartite_c5_brute_force(p);
      rep.rows.push_back(Row{{{"parts", parts_text(cfg.parts)},
                              {"nu", brute.get_str()},
                              {"provenance", std::string(extremal::to_string(extremal::Provenance::brute_force))}}});
      if (brute != formula) c.fail("formula vs brute force", formula.get_str() + " vs " + brute.get_str());
    }
    c.witness("nu(C5)", formula.get_str());
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
    return rep;
  }
  const int k = *cfg.k;
  const long n = *cfg.n;
  const auto parts = graph::turan_parts(k, n);
  if (kind == "turan") {
    ClaimResult c("Turan C5 density");
    const auto formula = extremal::turan_density_c5(k, n);
    rep.rows.push_back(Row{{{"k", std::to_string(k)},
                            {"n", std::to_string(n)},
                            {"nu", extremal::multipartite_c5_count(parts).get_str()},
                            {"density", symbolic::to_string(formula.value)},
                            {"provenance", std::string(extremal::to_string(formula.provenance))}}});
    if (n <= 12) {
      const auto brute = extremal::multipartite_c5_brute_force(parts);
      Rational d(brute, Integer(static_cast<unsigned long>(graph::binomial(static_cast<std::uint64_t>(n), 5))));
      d.canonicalize();
      rep.rows.push_back(Row{{{"k", std::to_string(k)},
                              {"n", std::to_string(n)},
                              {"nu", brute.get_str()},
                              {"density", symbolic::to_string(d)},
                              {"provenance", std::string(extremal::to_string(extremal::Provenance::brute_force))}}});
      if (d != formula.value) c.fail("formula vs brute force", "densities differ");
    }
    if (k >= 2) c.witness("OPT_k", symbolic::to_string(extremal::opt_formula(k)));
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
  } else {
    ClaimResult c("Turan K5 density");
    const auto z = extremal::zykov_k5_density(k, n);
    rep.rows.push_back(Row{{{"k", std::to_string(k)},
                            {"n", std::to_string(n)},
                            {"nu_k5", extremal::multipartite_k5_count(parts).get_str()},
                            {"density", symbolic::to_string(z.exact)},
                            {"limit", symbolic::to_string(z.limit)}}});
    c.witness("limit form", "(k-1)(k-2)(k-3)(k-4)/k^4 of the C(n,5)-normalised density");
    c.witness("raw-count display", "the n^5 form lacks a 1/120 factor; not asserted");
    c.elapsed_ms = clock.elapsed_ms();
    rep.claims.push_back(c);
  }
  return rep;
}

CertificateReport oracle_report(const RunConfig& cfg, const Cache& cache, std::ostream& warn) {
  const int n = *cfg.n;
  const int r = *cfg.forbid;
  CertificateReport rep;
  rep.command = "oracle";
  Stopwatch clock;
  ClaimResult c("max nu(C5) over K" + std::to_string(r) + "-free graphs on " + std::to_string(n) + " vertices");
  const auto classes = cached_graphs(
      cache, "clique-free", "n=" + std::to_string(n) + ",r=" + std::to_string(r),
      [&] { return search::enumerate_clique_free(n, r, cfg.threads); },
      [&](const graph::CanonGraph& g) { return g.order() == n && graph::clique_number(g) < r; }, warn);
  search::ExtremalRecord rec;
  rec.n = n;
  rec.r = r;
  rec.classes_scanned = classes.size();
  std::vector<std::uint64_t> counts(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    counts[i] = graph::count_five_cycles(classes[i].to_graph());
    rec.max_count = std::max(rec.max_count, counts[i]);
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (counts[i] == rec.max_count) rec.argmax.push_back(classes[i]);
  std::uint64_t turan_count = 0;
  if (r >= 2) {
    const auto turan = graph::turan_graph(r - 1, n);
    turan_count = graph::count_five_cycles(turan.to_graph());
    rec.is_turan_among_argmax = std::find(rec.argmax.begin(), rec.argmax.end(), turan) != rec.argmax.end();
    rec.turan_unique = rec.is_turan_among_argmax && rec.argmax.size() == 1;
    c.witness("Turan graph", turan.canon_key() + " with " + u64(turan_count) + " five-cycles");
    if (rec.max_count < turan_count) c.fail("max", "below the Turan count");
  }
  c.witness("classes scanned", std::to_string(rec.classes_scanned));
  c.witness("max", u64(rec.max_count));
  c.witness("maximisers", std::to_string(rec.argmax.size()));
  c.witness("Turan among maximisers (reported)", rec.is_turan_among_argmax ? "yes" : "no");
  c.witness("Turan unique maximiser (reported)", rec.turan_unique ? "yes" : "no");
  c.elapsed_ms = clock.elapsed_ms();
  rep.claims.push_back(c);
  rep.rows.push_back(Row{{{"n", std::to_string(n)},
                          {"forbid", std::to_string(r)},
                          {"max_count", u64(rec.max_count)},
                          {"argmax", std::to_string(rec.argmax.size())},
                          {"is_turan_among_argmax", rec.is_turan_among_argmax ? "true" : "false"},
                          {"classes_scanned", std::to_string(rec.classes_scanned)}}});
  if (cfg.emit_graph6)
    for (const auto& g : rec.argmax) rep.rows.push_back(Row{{{"graph6", g.canon_key()}}});
  return rep;
}

CertificateReport chain_report(const RunConfig& cfg) {
  CertificateReport rep;
  rep.command = "verify chain-identity";
  rep.claims.push_back(flag::chain_identity({}, cfg.threads));
  rep.claims.push_back(flag::pair_defect_decay({6, 9, 12, 15}, cfg.threads));
  return rep;
}

CertificateReport unbalanced_report(const RunConfig& cfg) {
  CertificateReport rep = extremal::unbalanced_part_check(cfg.sweep_max);
  rep.claims.push_back(extremal::rebalancing_check(12, cfg.threads));
  rep.claims.push_back(extremal::two_part_inequalities(50));
  return rep;
}

CertificateReport report_all(const RunConfig& cfg, const Cache& cache, std::ostream& warn) {
  CertificateReport rep;
  rep.command = "report all";
  RunConfig sub = cfg;
  sub.n = 5;
  rep.append(enumerate_report(sub, cache, warn));
  rep.rows.clear();
  const LoadedMapping lm = load_mapping(cache);
  rep.claims.push_back(lm.search_claim);
  rep.append(cert::verify_main(lm.mapping, cfg.sweep_max));
  rep.append(cert::finite_decomposition(lm.mapping, 7, 4));
  rep.append(cert::verify_k3(lm.mapping));
  rep.append(cert::tight_set_characterization(lm.mapping));
  rep.claims.push_back(extremal::count_oracle_check(10, cfg.threads));
  rep.claims.push_back(extremal::turan_examples_check());
  rep.claims.push_back(extremal::turan_convergence_check());
  rep.append(unbalanced_report(cfg));
  rep.append(extremal::sparse_vertex_check(cfg.sweep_max));
  rep.append(extremal::adjacent_pair_check(cfg.sweep_max));
  rep.append(search::finite_shadow(cfg.with_n8 ? 8 : 7, cfg.threads));
  rep.claims.push_back(search::extremal_monotonicity(7, 6, cfg.threads));
  rep.append(chain_report(cfg));
  return rep;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 15U];
  return s;
}

}  // namespace

// ---------------------------------------------------------------- config

std::string RunConfig::command_name() const {
  std::string s;
  for (const auto& part : command) s += (s.empty() ? "" : " ") + part;
  return s;
}

void RunConfig::validate() const {
  if (command.empty()) throw UsageError("no command given");
  const auto it = known_commands().find(command[0]);
  if (it == known_commands().end()) throw UsageError("unknown command: " + command[0]);
  const std::string sub = command.size() > 1 ? command[1] : "";
  if (!it->second.contains(sub)) throw UsageError("unknown command: " + command_name());
  if (threads > 1024) throw UsageError("--threads must be at most 1024");
  if (sweep_max < 4) throw UsageError("--k-max must be at least 4");
  const std::string& c = command[0];
  if (c == "enumerate") {
    if (!n) throw UsageError("enumerate needs --n");
    if (*n < 0 || *n > 8) throw UsageError("--n must be in [0, 8]");
  } else if (c == "oracle") {
    if (!n || !forbid) throw UsageError("oracle needs --n and --forbid");
    if (*n < 1 || *n > 8) throw UsageError("--n must be in [1, 8]");
    if (*forbid < 2 || *forbid > 9) throw UsageError("--forbid must be in [2, 9]");
  } else if (c == "count") {
    if (sub == "multipartite") {
      if (parts.empty()) throw UsageError("count multipartite needs --parts");
      long total = 0;
      for (int p : parts) {
        if (p < 1) throw UsageError("part sizes must be positive");
        total += p;
      }
      if (total > 1000000) throw UsageError("part sizes must total at most 10^6");
    } else {
      if (!k || !n) throw UsageError("count " + sub + " needs --k and --n");
      if (*k < 1 || *k > 1000) throw UsageError("--k must be in [1, 1000]");
      if (*n < 5 || *n > 1000000) throw UsageError("--n must be in [5, 10^6]");
    }
  }
}

std::optional<fs::path> default_cache_dir() {
  if (const char* env = std::getenv("PENTAFLAG_CACHE_DIR"); env && *env) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "pentaflag";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "pentaflag";
  return std::nullopt;
}

// ---------------------------------------------------------------- cache

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Cache::Cache(std::optional<fs::path> dir, std::ostream& warn) : dir_(std::move(dir)), warn_(&warn) {}

fs::path Cache::path_for(std::string_view operation, std::string_view arguments) const {
  std::string key(kModuleVersion);
  key += '\n';
  key += operation;
  key += '\n';
  key += arguments;
  return *dir_ / (std::string(operation) + "-" + hex64(fnv1a64(key)) + ".json");
}

std::optional<std::string> Cache::load(std::string_view operation, std::string_view arguments) const {
  if (!dir_) return std::nullopt;
  const fs::path path = path_for(operation, arguments);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const auto j = nlohmann::json::parse(buf.str());
    if (j.at("schema").get<int>() == 1 && j.at("module_version").get<std::string>() == kModuleVersion &&
        j.at("operation").get<std::string>() == operation && j.at("arguments").get<std::string>() == arguments)
      return j.at("payload").get<std::string>();
  } catch (const nlohmann::json::exception&) {
  }
  *warn_ << "warning: ignoring corrupt cache entry " << path << "; recomputing\n";
  return std::nullopt;
}

void Cache::store(std::string_view operation, std::string_view arguments, const std::string& payload) const {
  if (!dir_) return;
  try {
    fs::create_directories(*dir_);
    const fs::path path = path_for(operation, arguments);
    const fs::path tmp = path.string() + ".tmp";
    nlohmann::json j;
    j["schema"] = 1;
    j["module_version"] = kModuleVersion;
    j["operation"] = operation;
    j["arguments"] = arguments;
    j["payload"] = payload;
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << j.dump();
      if (!out) throw fs::filesystem_error("write failed", tmp, std::make_error_code(std::errc::io_error));
    }
    fs::rename(tmp, path);
  } catch (const std::exception& e) {
    *warn_ << "warning: could not write cache entry: " << e.what() << "\n";
  }
}

LoadedMapping load_mapping(const Cache& cache) {
  if (auto hit = cache.load("mapping", "reconstruct")) {
    if (auto cached = cert::mapping_from_json(*hit)) {
      if (!cert::validate_mapping(cached->mapping)) return {std::move(cached->mapping), std::move(cached->search_claim), true};
    }
    *cache.warn_stream() << "warning: cached mapping failed validation; recomputing\n";
  }
  auto result = cert::reconstruct_mapping();
  if (!result.mapping) throw std::runtime_error("mapping reconstruction found no solution: " + result.claim.claim_id);
  cache.store("mapping", "reconstruct", cert::mapping_to_json(*result.mapping, result.claim));
  return {std::move(*result.mapping), std::move(result.claim), false};
}

// ---------------------------------------------------------------- dispatch

CertificateReport run(const RunConfig& cfg, std::ostream& warn) {
  cfg.validate();
  const Cache cache(cfg.cache_dir, warn);
  const std::string& c = cfg.command[0];
  const std::string sub = cfg.command.size() > 1 ? cfg.command[1] : "";
  if (c == "enumerate") return enumerate_report(cfg, cache, warn);
  if (c == "oracle") return oracle_report(cfg, cache, warn);
  if (c == "count") return count_report(cfg);
  if (c == "reconstruct") return reconstruct_report(cache);
  if (c == "report") return report_all(cfg, cache, warn);
  if (sub == "certificate") return certificate_report(cfg, cache);
  if (sub == "certificate-k3") return cert::verify_k3(load_mapping(cache).mapping);
  if (sub == "tight-set") return cert::tight_set_characterization(load_mapping(cache).mapping);
  if (sub == "claim-3.10") return unbalanced_report(cfg);
  if (sub == "claim-4.5") return extremal::sparse_vertex_check(cfg.sweep_max);
  if (sub == "claim-4.7") return extremal::adjacent_pair_check(cfg.sweep_max);
  return chain_report(cfg);
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  CertificateReport rep;
  try {
    rep = run(cfg, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  rep.command = cfg.command_name();
  out << (cfg.format == Format::json ? rep.to_json() + "\n" : rep.to_text());
  return rep.all_pass() ? kExitPass : kExitFail;
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the C5-density certificate for K_{k+1}-free graphs", "pentaflag"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string format = "text";
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", cache_dir, "Cache directory (default: $PENTAFLAG_CACHE_DIR, then XDG)");
  app.add_flag("--no-cache", no_cache, "Do not read or write the cache");
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

  auto* enumerate = app.add_subcommand("enumerate", "List the graph classes on n vertices");
  enumerate->add_option("--n", cfg.n, "Order")->required();

  std::string verify_target;
  auto* verify = app.add_subcommand("verify", "Run one verification");
  verify->add_option("target", verify_target, "What to verify")
      ->required()
      ->check(CLI::IsMember(known_commands().at("verify")));
  verify->add_option("--k-max", cfg.sweep_max, "Largest k of the exact sweep");

  std::string count_kind;
  std::string parts;
  auto* count = app.add_subcommand("count", "Closed-form counts in multipartite graphs");
  count->add_option("kind", count_kind, "turan, multipartite or zykov")
      ->required()
      ->check(CLI::IsMember(known_commands().at("count")));
  count->add_option("--k", cfg.k, "Number of parts");
  count->add_option("--n", cfg.n, "Order");
  count->add_option("--parts", parts, "Comma-separated part sizes");

  std::string emit;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive maximum of nu(C5) over K_r-free graphs");
  oracle->add_option("--n", cfg.n, "Order (at most 8)")->required();
  oracle->add_option("--forbid", cfg.forbid, "Forbidden clique size r")->required();
  oracle->add_option("--emit", emit, "Also list the maximisers")->check(CLI::IsMember({"graph6"}));

  std::string what;
  auto* reconstruct = app.add_subcommand("reconstruct", "Recover the table order and the square witnesses");
  reconstruct->add_option("what", what, "mapping")->required()->check(CLI::IsMember({"mapping"}));

  std::string all;
  auto* report_cmd = app.add_subcommand("report", "Run every verification");
  report_cmd->add_option("what", all, "all")->required()->check(CLI::IsMember({"all"}));
  report_cmd->add_option("--k-max", cfg.sweep_max, "Largest k of the exact sweeps");
  report_cmd->add_flag("--with-n8", cfg.with_n8, "Include order 8 in the exhaustive density check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  cfg.format = format == "json" ? Format::json : Format::text;
  if (!no_cache) cfg.cache_dir = cache_dir ? std::optional<fs::path>(*cache_dir) : default_cache_dir();
  cfg.emit_graph6 = !emit.empty();
  if (enumerate->parsed()) cfg.command = {"enumerate"};
  if (verify->parsed()) cfg.command = {"verify", verify_target};
  if (count->parsed()) {
    cfg.command = {"count", count_kind};
    if (!parts.empty()) {
      std::stringstream ss(parts);
      std::string item;
      try {
        while (std::getline(ss, item, ',')) cfg.parts.push_back(std::stoi(item));
      } catch (const std::exception&) {
        err << "error: --parts must be comma-separated integers\n";
        return kExitUsage;
      }
    }
  }
  if (oracle->parsed()) cfg.command = {"oracle"};
  if (reconstruct->parsed()) cfg.command = {"reconstruct", what};
  if (report_cmd->parsed()) cfg.command = {"report", all};
  return dispatch(cfg, out, err);
}

}  // namespace pentaflag::cli
