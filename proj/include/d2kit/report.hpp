#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "d2kit/chain_complex.hpp"
#include "d2kit/homology.hpp"

namespace d2kit {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct HomologyRow {
  std::string complex;
  std::size_t degree = 0;
  HomologyGroup group;
};

/// Outcome of one CLI run. Rendering is deterministic: wall-clock time is
/// kept out of both renderings and reported separately.
struct RunReport {
  std::string command;
  std::string inputs_digest;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<CheckResult> checks;
  std::vector<HomologyRow> homology;
  int exit_code = 0;
  double elapsed_seconds = 0.0;

  void add_fact(std::string key, std::string value);
  void add_check(std::string name, bool passed, std::string detail = {});
  /// One check named `name`; its detail is the first violation, if any.
  void add_verification(std::string name, const VerificationReport& report);
  void add_homology(const std::string& complex, const std::vector<HomologyGroup>& groups);
  bool all_passed() const;

  std::string render_json() const;
  std::string render_text() const;
  std::string render(std::string_view format) const;
};

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

/// SHA-256 over the inputs, each prefixed by its length, in order.
std::string digest_inputs(const std::vector<std::string>& inputs);

}  // namespace d2kit
