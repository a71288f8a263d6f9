#pragma once

// Verdicts with witnesses, shared by every verification entry point.

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace pentaflag::report {

enum class Status { pass, fail, inconclusive };

std::string_view to_string(Status s);

struct Witness {
  std::string name;
  std::string value;
};

struct ClaimResult {
  ClaimResult() = default;
  explicit ClaimResult(std::string id) : claim_id(std::move(id)) {}

  std::string claim_id;
  Status status = Status::pass;
  std::vector<Witness> witnesses;
  double elapsed_ms = 0;

  void witness(std::string name, std::string value) { witnesses.push_back({std::move(name), std::move(value)}); }
  /// Downgrades to fail (never upgrades) and records why.
  void fail(std::string name, std::string value);
  void inconclusive(std::string name, std::string value);
  bool passed() const { return status == Status::pass; }
};

/// A table row for count-style commands: ordered (column, value) pairs.
struct Row {
  std::vector<std::pair<std::string, std::string>> cells;
};

struct CertificateReport {
  std::string command;
  std::vector<ClaimResult> claims;
  std::vector<Row> rows;

  bool all_pass() const;
  void append(const CertificateReport& other);

  /// {"schema": 1, "command": ..., "claims": [...], "rows": [...]}.
  /// With include_timing = false the elapsed_ms fields are omitted so two
  /// runs can be compared byte for byte.
  std::string to_json(bool include_timing = true, int indent = 2) const;
  /// Inverse of to_json(); throws std::invalid_argument on malformed input.
  static CertificateReport from_json(std::string_view text);
  /// Rendered from to_json(), never from the report fields directly.
  std::string to_text() const;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace pentaflag::report
