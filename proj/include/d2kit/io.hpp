#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "d2kit/chain_map.hpp"
#include "d2kit/realization.hpp"

namespace d2kit {

/// Interchange document that is not valid JSON or does not match the schema.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Interchange files are single JSON documents. Every file embeds its group:
// a tabular group as presentation, element words, generator images and the
// product table; a symbolic one as its generator names. Group-ring entries
// are arrays of {"coefficient", "word"} with coefficients as decimal strings
// and words in presentation syntax.

std::string write_complex_json(const ChainComplex& c, const std::vector<std::string>& symbolic_generators = {});
ChainComplex read_complex_json(std::string_view text);

std::string write_certificate_json(const EquivalenceCertificate& e);
EquivalenceCertificate read_certificate_json(std::string_view text);

std::string write_realized_json(const RealizedThreeComplex& y);
RealizedThreeComplex read_realized_json(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace d2kit
