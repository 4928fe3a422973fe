#include "d2kit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "d2kit/errors.hpp"
#include "d2kit/group_table.hpp"
#include "d2kit/presentation.hpp"

namespace d2kit {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kVersion = 1;
constexpr const char* kComplexFormat = "d2kit.chain_complex";
constexpr const char* kCertificateFormat = "d2kit.equivalence_certificate";
constexpr const char* kRealizedFormat = "d2kit.realized_complex";

// Ring context shared by every matrix of one document.
struct Ring {
  GroupHandle group;
  std::vector<std::string> generators;
};

Ring ring_of(const GroupHandle& group, const std::vector<std::string>& symbolic_generators) {
  if (group) return {group, group->presentation().generators};
  return {nullptr, symbolic_generators};
}

Json group_json(const Ring& ring) {
  Json j;
  if (!ring.group) {
    j["flavor"] = "symbolic";
    j["generators"] = ring.generators;
    return j;
  }
  const FiniteGroupTable& t = *ring.group;
  j["flavor"] = "tabular";
  j["presentation"] = to_string(t.presentation());
  j["order"] = t.order();
  Json elements = Json::array();
  for (const GroupWord& w : t.element_words()) elements.push_back(to_string(w, ring.generators));
  j["elements"] = std::move(elements);
  j["generator_images"] = t.generator_images();
  j["product"] = t.product_table();
  return j;
}

Json element_json(const GroupRingElement& e, const Ring& ring) {
  Json terms = Json::array();
  if (e.is_symbolic()) {
    for (const auto& [w, c] : e.symbolic_terms()) {
      terms.push_back({{"coefficient", to_decimal(c)}, {"word", to_string(w, ring.generators)}});
    }
  } else {
    for (const auto& [g, c] : e.tabular_terms()) {
      terms.push_back({{"coefficient", to_decimal(c)}, {"word", to_string(ring.group->word(g), ring.generators)}});
    }
  }
  return terms;
}

Json matrix_json(const GroupRingMatrix& m, const Ring& ring) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_json(m(r, c), ring));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json matrices_json(const std::vector<GroupRingMatrix>& ms, const Ring& ring) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(matrix_json(m, ring));
  return out;
}

Json complex_body_json(const ChainComplex& c, const Ring& ring) {
  Json j;
  j["ranks"] = c.ranks();
  j["boundaries"] = matrices_json(c.boundaries(), ring);
  if (c.augmentation()) {
    Json values = Json::array();
    for (const BigInt& v : *c.augmentation()) values.push_back(to_decimal(v));
    j["augmentation"] = std::move(values);
  } else {
    j["augmentation"] = nullptr;
  }
  return j;
}

Json document(const char* format, const Ring& ring) {
  Json j;
  j["format"] = format;
  j["version"] = kVersion;
  j["group"] = group_json(ring);
  return j;
}

// ---- reading ----

[[noreturn]] void bad(const std::string& what) { throw FormatError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t natural(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    bad(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Json parse_document(std::string_view content, const char* format) {
  Json j;
  try {
    j = Json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (text(field(j, "format"), "format") != format) bad(std::string("expected a ") + format + " document");
  if (!field(j, "version").is_number_integer() || field(j, "version").get<int>() != kVersion) {
    bad("unsupported document version");
  }
  return j;
}

Ring read_group(const Json& j) {
  const std::string flavor = text(field(j, "flavor"), "group flavor");
  Ring ring;
  if (flavor == "symbolic") {
    const Json& gens = field(j, "generators");
    if (!gens.is_array()) bad("generators must be an array");
    for (const Json& g : gens) ring.generators.push_back(text(g, "generator name"));
    return ring;
  }
  if (flavor != "tabular") bad("group flavor must be 'symbolic' or 'tabular'");
  try {
    GroupPresentation p = parse_presentation(text(field(j, "presentation"), "presentation"));
    const std::size_t order = natural(field(j, "order"), "order");
    std::vector<GroupWord> words;
    for (const Json& w : field(j, "elements")) words.push_back(parse_word(text(w, "element word"), p.generators));
    std::vector<ElementIndex> images;
    for (const Json& g : field(j, "generator_images")) images.push_back(static_cast<ElementIndex>(natural(g, "image")));
    std::vector<std::vector<ElementIndex>> product;
    for (const Json& row : field(j, "product")) {
      if (!row.is_array()) bad("product rows must be arrays");
      std::vector<ElementIndex> r;
      for (const Json& v : row) r.push_back(static_cast<ElementIndex>(natural(v, "product entry")));
      product.push_back(std::move(r));
    }
    if (product.size() != order) bad("product table size differs from order");
    ring.generators = p.generators;
    ring.group = std::make_shared<const FiniteGroupTable>(std::move(p), std::move(product), std::move(images),
                                                          std::move(words));
  } catch (const ParseError& e) {
    bad(std::string("group: ") + e.what());
  } catch (const std::invalid_argument& e) {
    bad(std::string("group: ") + e.what());
  }
  return ring;
}

GroupRingElement read_element(const Json& j, const Ring& ring) {
  if (!j.is_array()) bad("group-ring element must be an array of terms");
  GroupRingElement out = GroupRingElement::zero(ring.group);
  for (const Json& term : j) {
    BigInt c;
    GroupWord w;
    try {
      c = parse_decimal(text(field(term, "coefficient"), "coefficient"));
      w = parse_word(text(field(term, "word"), "word"), ring.generators);
    } catch (const ParseError& e) {
      bad(std::string("term word: ") + e.what());
    } catch (const std::invalid_argument& e) {
      bad(std::string("term: ") + e.what());
    }
    if (ring.group) {
      out += GroupRingElement::element(ring.group, evaluate_word(*ring.group, w), c);
    } else {
      out += GroupRingElement::word(w, c);
    }
  }
  return out;
}

GroupRingMatrix read_matrix(const Json& j, const Ring& ring) {
  const std::size_t rows = natural(field(j, "rows"), "rows");
  const std::size_t cols = natural(field(j, "cols"), "cols");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows) bad("matrix entries do not match row count");
  GroupRingMatrix m(rows, cols, ring.group);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!entries[r].is_array() || entries[r].size() != cols) bad("matrix entries do not match column count");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, read_element(entries[r][c], ring));
  }
  return m;
}

std::vector<GroupRingMatrix> read_matrices(const Json& j, const Ring& ring) {
  if (!j.is_array()) bad("expected an array of matrices");
  std::vector<GroupRingMatrix> out;
  for (const Json& m : j) out.push_back(read_matrix(m, ring));
  return out;
}

ChainComplex read_complex_body(const Json& j, const Ring& ring) {
  std::vector<std::size_t> ranks;
  for (const Json& r : field(j, "ranks")) ranks.push_back(natural(r, "rank"));
  auto boundaries = read_matrices(field(j, "boundaries"), ring);
  std::optional<std::vector<BigInt>> augmentation;
  if (j.contains("augmentation") && !j.at("augmentation").is_null()) {
    std::vector<BigInt> values;
    try {
      for (const Json& v : j.at("augmentation")) values.push_back(parse_decimal(text(v, "augmentation value")));
    } catch (const std::invalid_argument& e) {
      bad(std::string("augmentation: ") + e.what());
    }
    augmentation = std::move(values);
  }
  try {
    return ChainComplex(ring.group, std::move(ranks), std::move(boundaries), std::move(augmentation));
  } catch (const DimensionMismatch& e) {
    bad(std::string("complex: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(1) + "\n"; }

}  // namespace

std::string write_complex_json(const ChainComplex& c, const std::vector<std::string>& symbolic_generators) {
  const Ring ring = ring_of(c.group(), symbolic_generators);
  Json j = document(kComplexFormat, ring);
  j["complex"] = complex_body_json(c, ring);
  return dump(j);
}

ChainComplex read_complex_json(std::string_view content) {
  const Json j = parse_document(content, kComplexFormat);
  const Ring ring = read_group(field(j, "group"));
  return read_complex_body(field(j, "complex"), ring);
}

std::string write_certificate_json(const EquivalenceCertificate& e) {
  const Ring ring = ring_of(e.forward.source.group(), {});
  Json j = document(kCertificateFormat, ring);
  j["source"] = complex_body_json(e.forward.source, ring);
  j["target"] = complex_body_json(e.forward.target, ring);
  j["forward"] = matrices_json(e.forward.maps, ring);
  j["backward"] = matrices_json(e.backward.maps, ring);
  j["homotopy_source"] = matrices_json(e.homotopy_source, ring);
  j["homotopy_target"] = matrices_json(e.homotopy_target, ring);
  return dump(j);
}

EquivalenceCertificate read_certificate_json(std::string_view content) {
  const Json j = parse_document(content, kCertificateFormat);
  const Ring ring = read_group(field(j, "group"));
  const ChainComplex source = read_complex_body(field(j, "source"), ring);
  const ChainComplex target = read_complex_body(field(j, "target"), ring);
  EquivalenceCertificate e;
  e.forward = ChainMapCert{source, target, read_matrices(field(j, "forward"), ring)};
  e.backward = ChainMapCert{target, source, read_matrices(field(j, "backward"), ring)};
  e.homotopy_source = read_matrices(field(j, "homotopy_source"), ring);
  e.homotopy_target = read_matrices(field(j, "homotopy_target"), ring);
  return e;
}

std::string write_realized_json(const RealizedThreeComplex& y) {
  const Ring ring = ring_of(y.complex.group(), {});
  Json j = document(kRealizedFormat, ring);
  j["complex"] = complex_body_json(y.complex, ring);
  Json vectors = Json::array();
  for (const auto& v : y.attaching_vectors) {
    Json column = Json::array();
    for (const auto& e : v) column.push_back(element_json(e, ring));
    vectors.push_back(std::move(column));
  }
  j["attaching_vectors"] = std::move(vectors);
  return dump(j);
}

RealizedThreeComplex read_realized_json(std::string_view content) {
  const Json j = parse_document(content, kRealizedFormat);
  const Ring ring = read_group(field(j, "group"));
  RealizedThreeComplex y{read_complex_body(field(j, "complex"), ring), {}};
  const Json& vectors = field(j, "attaching_vectors");
  if (!vectors.is_array()) bad("attaching_vectors must be an array");
  for (const Json& v : vectors) {
    if (!v.is_array()) bad("attaching vector must be an array");
    std::vector<GroupRingElement> column;
    for (const Json& e : v) column.push_back(read_element(e, ring));
    y.attaching_vectors.push_back(std::move(column));
  }
  return y;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace d2kit
