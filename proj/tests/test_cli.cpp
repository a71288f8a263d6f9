#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pentaflag/cli.hpp"

using namespace pentaflag;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::main_with_args(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("pentaflag-test-" + name);
  fs::remove_all(dir);
  return dir;
}

std::string without_timing(const std::string& json) {
  return report::CertificateReport::from_json(json).to_json(false);
}

std::vector<report::Status> verdicts(const std::string& json) {
  std::vector<report::Status> v;
  for (const auto& c : report::CertificateReport::from_json(json).claims) v.push_back(c.status);
  return v;
}

}  // namespace

TEST_CASE("count multipartite") {
  const auto r = run({"--no-cache", "--format", "json", "count", "multipartite", "--parts", "2,2,2"});
  CHECK(r.code == 0);
  const auto rep = report::CertificateReport::from_json(r.out);
  REQUIRE_FALSE(rep.rows.empty());
  CHECK(rep.rows[0].cells[1] == std::pair<std::string, std::string>{"nu", "24"});
}

TEST_CASE("oracle emits the Turan graph") {
  const auto r = run({"--no-cache", "oracle", "--n", "6", "--forbid", "4", "--emit", "graph6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("E]~o") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "claim-9.9"}).code == 2);
  CHECK(run({"enumerate", "--n", "11"}).code == 2);
  CHECK(run({"count", "turan", "--k", "3"}).code == 2);
  CHECK(run({"count", "multipartite", "--parts", "2,x"}).code == 2);
  CHECK(run({"count", "multipartite", "--parts", "2,0"}).code == 2);
  CHECK(run({"--format", "xml", "enumerate", "--n", "3"}).code == 2);

  cli::RunConfig cfg;
  cfg.command = {"oracle"};
  CHECK_THROWS_AS(cfg.validate(), cli::UsageError);
}

TEST_CASE("failing verdicts exit with 1") {
  CHECK(run({"--no-cache", "verify", "claim-4.7", "--k-max", "50"}).code == 1);
  CHECK(run({"--no-cache", "verify", "claim-4.5", "--k-max", "50"}).code == 0);
}

TEST_CASE("identical configuration gives identical JSON modulo timing") {
  const std::vector<std::string> args = {"--no-cache", "--format", "json", "enumerate", "--n", "5"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(without_timing(a.out) == without_timing(b.out));
  CHECK(a.out.find("\"elapsed_ms\"") != std::string::npos);
}

TEST_CASE("text output is rendered from the same report") {
  const auto text = run({"--no-cache", "enumerate", "--n", "4"});
  const auto json = run({"--no-cache", "--format", "json", "enumerate", "--n", "4"});
  CHECK(text.out == report::CertificateReport::from_json(json.out).to_text());
}

TEST_CASE("cache hit and miss give the same verdicts") {
  const fs::path dir = fresh_dir("hit-miss");
  const std::vector<std::string> args = {"--cache-dir", dir.string(), "--format", "json", "verify", "tight-set"};
  const auto miss = run(args);
  REQUIRE(fs::exists(dir));
  const auto hit = run(args);
  CHECK(miss.code == hit.code);
  CHECK(without_timing(miss.out) == without_timing(hit.out));
  CHECK(hit.err.empty());

  const auto oracle_miss = run({"--cache-dir", dir.string(), "--format", "json", "oracle", "--n", "6", "--forbid", "3"});
  const auto oracle_hit = run({"--cache-dir", dir.string(), "--format", "json", "oracle", "--n", "6", "--forbid", "3"});
  CHECK(without_timing(oracle_miss.out) == without_timing(oracle_hit.out));
  fs::remove_all(dir);
}

TEST_CASE("corrupt cache entries are recomputed with a warning") {
  const fs::path dir = fresh_dir("corrupt");
  const std::vector<std::string> args = {"--cache-dir", dir.string(), "--format", "json", "enumerate", "--n", "5"};
  const auto clean = run(args);
  int corrupted = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ofstream(entry.path(), std::ios::trunc) << "{\"schema\": 1, \"payload\": ";
    ++corrupted;
  }
  REQUIRE(corrupted == 1);
  const auto again = run(args);
  CHECK(again.code == clean.code);
  CHECK(without_timing(again.out) == without_timing(clean.out));
  CHECK(again.err.find("warning") != std::string::npos);

  // A well-formed entry whose payload lists a wrong class is also rejected.
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ifstream in(entry.path());
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    const auto at = text.find("D~{");
    REQUIRE(at != std::string::npos);
    text.replace(at, 3, "D~w");
    std::ofstream(entry.path(), std::ios::trunc) << text;
  }
  const auto tampered = run(args);
  CHECK(without_timing(tampered.out) == without_timing(clean.out));
  CHECK(tampered.err.find("failed validation") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("cache keys depend on operation and arguments") {
  std::ostringstream sink;
  const cli::Cache cache(fs::path("/tmp/x"), sink);
  CHECK(cache.path_for("enumerate", "n=5") != cache.path_for("enumerate", "n=6"));
  CHECK(cache.path_for("enumerate", "n=5") != cache.path_for("clique-free", "n=5"));
  CHECK(cache.path_for("enumerate", "n=5") == cache.path_for("enumerate", "n=5"));
  CHECK(cli::fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(cli::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}
