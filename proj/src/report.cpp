#include "d2kit/report.hpp"

#include <array>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <json.hpp>
#include <openssl/evp.h>

namespace d2kit {

void RunReport::add_fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }

void RunReport::add_check(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

void RunReport::add_verification(std::string name, const VerificationReport& report) {
  const Violation* first = report.first_failure();
  add_check(std::move(name), first == nullptr, first ? first->describe() : std::string());
}

void RunReport::add_homology(const std::string& complex, const std::vector<HomologyGroup>& groups) {
  for (std::size_t i = 0; i < groups.size(); ++i) homology.push_back({complex, i, groups[i]});
}

bool RunReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string RunReport::render_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["inputs_digest"] = inputs_digest;
  nlohmann::ordered_json facts_json = nlohmann::ordered_json::object();
  for (const auto& [k, v] : facts) facts_json[k] = v;
  j["facts"] = std::move(facts_json);
  nlohmann::ordered_json checks_json = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks_json);
  nlohmann::ordered_json homology_json = nlohmann::ordered_json::array();
  for (const auto& row : homology) {
    nlohmann::ordered_json torsion = nlohmann::ordered_json::array();
    for (const BigInt& t : row.group.torsion) torsion.push_back(to_decimal(t));
    homology_json.push_back({{"complex", row.complex},
                             {"degree", row.degree},
                             {"free_rank", row.group.free_rank},
                             {"torsion", std::move(torsion)},
                             {"group", to_string(row.group)}});
  }
  j["homology"] = std::move(homology_json);
  j["exit_code"] = exit_code;
  return j.dump(2) + "\n";
}

std::string RunReport::render_text() const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  out << "inputs: sha256 " << inputs_digest << "\n";
  for (const auto& [k, v] : facts) out << k << ": " << v << "\n";
  for (const auto& c : checks) {
    out << (c.passed ? "[pass] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  for (const auto& row : homology) out << "H_" << row.degree << "(" << row.complex << ") = " << to_string(row.group) << "\n";
  out << "exit: " << exit_code << "\n";
  return out.str();
}

std::string RunReport::render(std::string_view format) const {
  return format == "json" ? render_json() : render_text();
}

std::string sha256_hex(std::string_view data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &length) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xf]);
  }
  return hex;
}

std::string digest_inputs(const std::vector<std::string>& inputs) {
  std::string framed;
  for (const auto& s : inputs) {
    framed += std::to_string(s.size());
    framed.push_back(':');
    framed += s;
  }
  return sha256_hex(framed);
}

}  // namespace d2kit
