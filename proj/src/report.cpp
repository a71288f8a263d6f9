#include "pentaflag/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pentaflag::report {

using nlohmann::ordered_json;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      return "inconclusive";
  }
  return "fail";
}

void ClaimResult::fail(std::string name, std::string value) {
  status = Status::fail;
  witness(std::move(name), std::move(value));
}

void ClaimResult::inconclusive(std::string name, std::string value) {
  if (status == Status::pass) status = Status::inconclusive;
  witness(std::move(name), std::move(value));
}

bool CertificateReport::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.passed(); });
}

void CertificateReport::append(const CertificateReport& other) {
  claims.insert(claims.end(), other.claims.begin(), other.claims.end());
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

std::string CertificateReport::to_json(bool include_timing, int indent) const {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  j["claims"] = ordered_json::array();
  for (const auto& c : claims) {
    ordered_json cj;
    cj["claim_id"] = c.claim_id;
    cj["status"] = std::string(to_string(c.status));
    cj["witnesses"] = ordered_json::array();
    for (const auto& w : c.witnesses) cj["witnesses"].push_back({{"name", w.name}, {"value", w.value}});
    if (include_timing) cj["elapsed_ms"] = c.elapsed_ms;
    j["claims"].push_back(std::move(cj));
  }
  j["rows"] = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json rj = ordered_json::object();
    for (const auto& [k, v] : r.cells) rj[k] = v;
    j["rows"].push_back(std::move(rj));
  }
  j["all_pass"] = all_pass();
  return j.dump(indent);
}

CertificateReport CertificateReport::from_json(std::string_view text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    if (j.at("schema").get<int>() != 1) throw std::invalid_argument("unsupported report schema");
    CertificateReport rep;
    rep.command = j.at("command").get<std::string>();
    for (const auto& cj : j.at("claims")) {
      ClaimResult c(cj.at("claim_id").get<std::string>());
      const auto status = cj.at("status").get<std::string>();
      c.status = status == "pass" ? Status::pass : status == "fail" ? Status::fail : Status::inconclusive;
      for (const auto& w : cj.at("witnesses")) c.witness(w.at("name").get<std::string>(), w.at("value").get<std::string>());
      if (cj.contains("elapsed_ms")) c.elapsed_ms = cj["elapsed_ms"].get<double>();
      rep.claims.push_back(std::move(c));
    }
    for (const auto& rj : j.at("rows")) {
      Row r;
      for (const auto& [k, v] : rj.items()) r.cells.emplace_back(k, v.get<std::string>());
      rep.rows.push_back(std::move(r));
    }
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string CertificateReport::to_text() const {
  const ordered_json j = ordered_json::parse(to_json(true, -1));
  std::ostringstream out;
  out << "command: " << j["command"].get<std::string>() << "\n";
  for (const auto& c : j["claims"]) {
    std::string status = c["status"].get<std::string>();
    std::transform(status.begin(), status.end(), status.begin(), [](unsigned char ch) { return std::toupper(ch); });
    out << "[" << status << "] " << c["claim_id"].get<std::string>();
    if (c.contains("elapsed_ms")) out << "  (" << static_cast<long>(c["elapsed_ms"].get<double>()) << " ms)";
    out << "\n";
    for (const auto& w : c["witnesses"])
      out << "    " << w["name"].get<std::string>() << ": " << w["value"].get<std::string>() << "\n";
  }
  if (!j["rows"].empty()) {
    // Aligned table over the union of columns, in first-seen order.
    std::vector<std::string> columns;
    for (const auto& r : j["rows"])
      for (const auto& [k, v] : r.items())
        if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    std::vector<std::size_t> width(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      width[c] = columns[c].size();
      for (const auto& r : j["rows"])
        if (r.contains(columns[c])) width[c] = std::max(width[c], r[columns[c]].get<std::string>().size());
    }
    auto emit = [&](auto&& cell) {
      for (std::size_t c = 0; c < columns.size(); ++c) {
        const std::string v = cell(c);
        out << v << std::string(width[c] - v.size() + 2, ' ');
      }
      out << "\n";
    };
    emit([&](std::size_t c) { return columns[c]; });
    for (const auto& r : j["rows"])
      emit([&](std::size_t c) { return r.contains(columns[c]) ? r[columns[c]].get<std::string>() : std::string(); });
  }
  out << (j["all_pass"].get<bool>() ? "ALL PASS" : "NOT ALL PASS") << "\n";
  return out.str();
}

}  // namespace pentaflag::report
