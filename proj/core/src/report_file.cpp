#include "rinfty/report_file.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>
#include <openssl/evp.h>

#include <json.hpp>

#ifndef RINFTY_VERSION
#define RINFTY_VERSION "0.0.0"
#endif

namespace rinfty {

std::string tool_version() { return RINFTY_VERSION; }

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::string out;
  for (unsigned int i = 0; i < len; ++i) out += fmt::format("{:02x}", md[i]);
  return out;
}

std::size_t ReportDoc::failure_count() const {
  return std::accumulate(checks.begin(), checks.end(), std::size_t{0},
                         [](std::size_t n, const CheckReport& c) { return n + c.failures.size(); });
}

namespace {

struct MuEntry {
  int order, m, n;
  std::string input, value;
};

std::vector<MuEntry> mu_entries(const LambdaSeries<PolyMap>& mu) {
  std::vector<MuEntry> out;
  for (const auto& [q, map] : mu.coefficients()) {
    for (auto [m, n] : map.support()) {
      const PolyMap c = map.component(m, n);
      for (const auto& [in, v] : c.table()) out.push_back({q, m, n, word_to_string(*map.basis(), in), v.to_string()});
    }
  }
  return out;
}

}  // namespace

std::string render_text(const ReportDoc& doc) {
  std::string out;
  out += fmt::format("rinfty {}\n", tool_version());
  out += fmt::format("command: {}\n", doc.command);
  out += fmt::format("input sha256: {}\n", doc.input_digest);
  out += fmt::format("policy: {}\n", describe(doc.policy));
  for (const auto& c : doc.checks) {
    out += fmt::format("\n[{}] {}  cases={} failures={}  ({})\n", c.passed() ? "PASS" : "FAIL", c.check, c.cases,
                       c.failures.size(), describe(c.policy));
    for (const auto& note : c.notes) out += "  note: " + note + "\n";
    for (const auto& w : c.failures) out += fmt::format("  witness: {} | {} | {}\n", w.where, w.input, w.value);
  }
  if (doc.mu) {
    out += "\nmu (lambda order, component m->n, input -> value):\n";
    for (const auto& e : mu_entries(*doc.mu))
      out += fmt::format("  lambda^{} ({},{})  {} -> {}\n", e.order, e.m, e.n, e.input, e.value);
  }
  const std::size_t failed = std::count_if(doc.checks.begin(), doc.checks.end(), [](const auto& c) { return !c.passed(); });
  out += fmt::format("\nsummary: status={} checks={} failed_checks={} witnesses={}\n", doc.passed() ? "pass" : "fail",
                     doc.checks.size(), failed, doc.failure_count());
  return out;
}

std::string render_machine(const ReportDoc& doc) {
  using json = nlohmann::ordered_json;
  auto policy = [](const TruncationPolicy& p) {
    return json{{"maxWeight", p.max_weight}, {"maxLambda", p.max_lambda}, {"maxArity", p.max_arity}};
  };
  json j;
  j["toolVersion"] = tool_version();
  j["command"] = doc.command;
  j["inputDigest"] = "sha256:" + doc.input_digest;
  j["policy"] = policy(doc.policy);
  j["checks"] = json::array();
  for (const auto& c : doc.checks) {
    json w = json::array();
    for (const auto& f : c.failures) w.push_back({{"component", f.where}, {"word", f.input}, {"value", f.value}});
    j["checks"].push_back({{"check", c.check},
                           {"status", c.passed() ? "pass" : "fail"},
                           {"policy", policy(c.policy)},
                           {"cases", c.cases},
                           {"notes", c.notes},
                           {"witnesses", std::move(w)}});
  }
  if (doc.mu) {
    json mu = json::array();
    for (const auto& e : mu_entries(*doc.mu))
      mu.push_back({{"lambdaOrder", e.order}, {"m", e.m}, {"n", e.n}, {"input", e.input}, {"value", e.value}});
    j["mu"] = std::move(mu);
  }
  std::size_t failed = 0;
  for (const auto& c : doc.checks) failed += c.passed() ? 0 : 1;
  j["summary"] = {{"status", doc.passed() ? "pass" : "fail"},
                  {"checks", doc.checks.size()},
                  {"failedChecks", failed},
                  {"witnesses", doc.failure_count()}};
  return j.dump(2) + "\n";
}

}  // namespace rinfty
