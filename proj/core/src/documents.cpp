#include <chrono>
#include <ctime>
#include <sstream>

#include <json.hpp>

#include "pelletlab/errors.hpp"
#include "pelletlab/pellet.hpp"
#include "pelletlab/protonum.hpp"
#include "pelletlab/version.hpp"

namespace pelletlab {

namespace {

using nlohmann::json;

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json parse_document(std::string_view text, const char* what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw DomainError(std::string(what) + ": not well-formed JSON");
  }
  return doc;
}

}  // namespace

std::string sweep_report_to_json(const SweepReport& report) {
  json config;
  config["field"] = report.field.to_string();
  config["modulus"] = report.field.modulus ? json(*report.field.modulus) : json(nullptr);
  config["max_deg"] = report.options.max_deg;
  json checks = json::array();
  for (auto c : report.options.checks) checks.push_back(sweep_check_name(c));
  config["checks"] = checks;
  config["jobs"] = report.options.jobs;
  config["budget"] = report.options.budget;
  config["mismatch_cap"] = report.options.mismatch_cap;
  config["seed"] = report.options.seed;

  json degrees = json::array();
  for (std::size_t n = 0; n < report.per_degree.size(); ++n) {
    const auto& t = report.per_degree[n];
    degrees.push_back({{"degree", n},
                       {"total", t.total},
                       {"squarefree", t.squarefree},
                       {"mu_minus", t.mu_minus},
                       {"mu_zero", t.mu_zero},
                       {"mu_plus", t.mu_plus},
                       {"mertens", t.mertens}});
  }

  json mismatches = json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back({{"degree", m.degree},
                          {"poly", m.poly},
                          {"check", m.check},
                          {"lhs", m.lhs},
                          {"rhs", m.rhs}});
  }

  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool"] = {{"name", "pelletlab"}, {"version", kVersion}};
  doc["command"] = "sweep";
  doc["config"] = config;
  doc["results"] = {{"polynomials_checked", report.polynomials_checked},
                    {"per_degree", degrees},
                    {"mismatches", mismatches},
                    {"mismatches_truncated", report.mismatches_truncated},
                    {"passed", report.passed()}};
  doc["volatile"] = {{"elapsed_seconds", report.elapsed_seconds},
                     {"generated_at_utc", utc_now()}};
  return doc.dump(2) + "\n";
}

PrimeTable PrimeTable::from_json_text(std::string_view text) {
  json doc = parse_document(text, "prime-table document");
  if (!doc.is_object() || !doc.contains("primes") || !doc["primes"].is_array()) {
    throw DomainError("prime-table document: missing 'primes' array");
  }
  std::vector<PrimeEntry> entries;
  std::size_t i = 0;
  for (const auto& item : doc["primes"]) {
    std::ostringstream where;
    where << "primes[" << i << "]";
    if (!item.is_object() || !item.contains("label") || !item.contains("nu")) {
      throw DomainError("prime-table document: " + where.str() +
                        " must be an object with 'label' and 'nu'");
    }
    if (!item["label"].is_string()) {
      throw DomainError("prime-table document: " + where.str() + ".label must be a string");
    }
    if (!item["nu"].is_number_unsigned() || item["nu"].get<std::uint64_t>() < 1) {
      throw DomainError("prime-table document: " + where.str() +
                        ".nu must be an integer >= 1");
    }
    entries.push_back({item["label"].get<std::string>(), item["nu"].get<unsigned>()});
    ++i;
  }
  return PrimeTable(std::move(entries));
}

std::string PrimeTable::to_json_text() const {
  json primes = json::array();
  for (const auto& e : entries_) {
    primes.push_back({{"label", e.label}, {"nu", e.nu}});
  }
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["primes"] = primes;
  return doc.dump(2) + "\n";
}

AbstractIdeal AbstractIdeal::from_json_text(std::string_view text) {
  json doc = parse_document(text, "ideal document");
  if (!doc.is_object() || !doc.contains("ideal") || !doc["ideal"].is_array()) {
    throw DomainError("ideal document: missing 'ideal' array");
  }
  std::vector<std::pair<std::string, unsigned>> factors;
  std::size_t i = 0;
  for (const auto& item : doc["ideal"]) {
    std::ostringstream where;
    where << "ideal[" << i << "]";
    if (!item.is_object() || !item.contains("label") || !item.contains("multiplicity")) {
      throw DomainError("ideal document: " + where.str() +
                        " must be an object with 'label' and 'multiplicity'");
    }
    if (!item["label"].is_string()) {
      throw DomainError("ideal document: " + where.str() + ".label must be a string");
    }
    if (!item["multiplicity"].is_number_unsigned() ||
        item["multiplicity"].get<std::uint64_t>() < 1) {
      throw DomainError("ideal document: " + where.str() +
                        ".multiplicity must be an integer >= 1");
    }
    factors.emplace_back(item["label"].get<std::string>(), item["multiplicity"].get<unsigned>());
    ++i;
  }
  return AbstractIdeal::from_factors(factors);
}

std::string AbstractIdeal::to_json_text() const {
  json ideal = json::array();
  for (const auto& [label, mult] : factors_) {
    ideal.push_back({{"label", label}, {"multiplicity", mult}});
  }
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["ideal"] = ideal;
  return doc.dump(2) + "\n";
}

}  // namespace pelletlab
