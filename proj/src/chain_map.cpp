#include "d2kit/chain_map.hpp"

#include <string>

#include "d2kit/errors.hpp"

namespace d2kit {

namespace {

std::string dims(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

void check_shapes(const ChainMapCert& m, const char* name) {
  if (m.source.top_degree() != m.target.top_degree()) {
    throw DimensionMismatch(std::string(name) + ": source and target have different top degrees");
  }
  if (m.maps.size() != m.source.top_degree() + 1) {
    throw DimensionMismatch(std::string(name) + ": expected one map per degree");
  }
  for (std::size_t i = 0; i < m.maps.size(); ++i) {
    if (m.maps[i].rows() != m.target.rank(i) || m.maps[i].cols() != m.source.rank(i)) {
      throw DimensionMismatch(std::string(name) + ": map in degree " + std::to_string(i) + " is " +
                              dims(m.maps[i].rows(), m.maps[i].cols()) + ", expected " +
                              dims(m.target.rank(i), m.source.rank(i)));
    }
  }
}

void check_homotopy_shapes(const ChainComplex& c, const std::vector<GroupRingMatrix>& h, const char* name) {
  if (h.size() != c.top_degree()) throw DimensionMismatch(std::string(name) + ": expected one homotopy per degree below the top");
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i].rows() != c.rank(i + 1) || h[i].cols() != c.rank(i)) {
      throw DimensionMismatch(std::string(name) + ": homotopy in degree " + std::to_string(i) + " is " +
                              dims(h[i].rows(), h[i].cols()) + ", expected " + dims(c.rank(i + 1), c.rank(i)));
    }
  }
}

void record_nonzero(VerificationReport& report, const GroupRingMatrix& diff, const std::string& check,
                    std::size_t degree) {
  for (std::size_t r = 0; r < diff.rows(); ++r)
    for (std::size_t c = 0; c < diff.cols(); ++c)
      if (!diff(r, c).is_zero()) report.violations.push_back({check, degree, r, c, "entries differ"});
}

VerificationReport verify_chain_map_named(const ChainMapCert& m, const std::string& name) {
  check_shapes(m, name.c_str());
  VerificationReport report;
  for (std::size_t i = 1; i <= m.source.top_degree(); ++i) {
    const GroupRingMatrix lhs = compose(m.target.boundary(i), m.maps[i]);
    const GroupRingMatrix rhs = compose(m.maps[i - 1], m.source.boundary(i));
    record_nonzero(report, lhs - rhs, name + " square d∘phi = phi∘d", i);
  }
  if (m.source.augmentation() && m.target.augmentation()) {
    const auto pushed = augment_columns(*m.target.augmentation(), m.maps[0]);
    const auto& expected = *m.source.augmentation();
    for (std::size_t j = 0; j < pushed.size(); ++j) {
      if (pushed[j] != expected[j]) {
        report.violations.push_back({name + " augmentation", 0, 0, j,
                                     "maps to " + to_decimal(pushed[j]) + ", expected " + to_decimal(expected[j])});
      }
    }
  }
  return report;
}

VerificationReport verify_homotopy(const ChainComplex& c, const std::vector<GroupRingMatrix>& composite,
                                   const std::vector<GroupRingMatrix>& h, const std::string& name) {
  check_homotopy_shapes(c, h, name.c_str());
  VerificationReport report;
  const auto dh = homotopy_boundary(c, h);
  for (std::size_t i = 0; i <= c.top_degree(); ++i) {
    const GroupRingMatrix lhs = composite[i] - GroupRingMatrix::identity(c.rank(i), c.group());
    record_nonzero(report, lhs - dh[i], name + " identity (round trip - 1 = dh + hd)", i);
  }
  return report;
}

}  // namespace

ChainMapCert identity_map(const ChainComplex& c) {
  ChainMapCert m{c, c, {}};
  for (std::size_t i = 0; i <= c.top_degree(); ++i) m.maps.push_back(GroupRingMatrix::identity(c.rank(i), c.group()));
  return m;
}

ChainMapCert zero_map(const ChainComplex& source, const ChainComplex& target) {
  ChainMapCert m{source, target, {}};
  for (std::size_t i = 0; i <= source.top_degree(); ++i) {
    m.maps.emplace_back(target.rank(i), source.rank(i), source.group());
  }
  return m;
}

std::vector<GroupRingMatrix> zero_homotopy(const ChainComplex& c) {
  std::vector<GroupRingMatrix> h;
  for (std::size_t i = 0; i < c.top_degree(); ++i) h.emplace_back(c.rank(i + 1), c.rank(i), c.group());
  return h;
}

EquivalenceCertificate identity_certificate(const ChainComplex& c) {
  return {identity_map(c), identity_map(c), zero_homotopy(c), zero_homotopy(c)};
}

VerificationReport verify_chain_map(const ChainMapCert& m) { return verify_chain_map_named(m, "chain map"); }

ChainMapCert compose(const ChainMapCert& g, const ChainMapCert& f) {
  check_shapes(f, "compose");
  check_shapes(g, "compose");
  if (f.target.ranks() != g.source.ranks()) throw DimensionMismatch("compose: chain maps do not meet");
  ChainMapCert out{f.source, g.target, {}};
  for (std::size_t i = 0; i < f.maps.size(); ++i) out.maps.push_back(compose(g.maps[i], f.maps[i]));
  return out;
}

std::vector<GroupRingMatrix> homotopy_boundary(const ChainComplex& c, const std::vector<GroupRingMatrix>& h) {
  check_homotopy_shapes(c, h, "homotopy");
  std::vector<GroupRingMatrix> out;
  for (std::size_t i = 0; i <= c.top_degree(); ++i) {
    GroupRingMatrix acc(c.rank(i), c.rank(i), c.group());
    if (i < c.top_degree()) acc += compose(c.boundary(i + 1), h[i]);
    if (i > 0) acc += compose(h[i - 1], c.boundary(i));
    out.push_back(std::move(acc));
  }
  return out;
}

VerificationReport verify_equivalence(const EquivalenceCertificate& e) {
  const ChainMapCert& f = e.forward;
  const ChainMapCert& g = e.backward;
  check_shapes(f, "forward");
  check_shapes(g, "backward");
  if (!(f.source == g.target) || !(f.target == g.source)) {
    throw DimensionMismatch("forward and backward maps do not run between the same pair of complexes");
  }

  VerificationReport report = verify_chain_map_named(f, "forward");
  report.append(verify_chain_map_named(g, "backward"));

  std::vector<GroupRingMatrix> gf;
  std::vector<GroupRingMatrix> fg;
  for (std::size_t i = 0; i < f.maps.size(); ++i) {
    gf.push_back(compose(g.maps[i], f.maps[i]));
    fg.push_back(compose(f.maps[i], g.maps[i]));
  }
  report.append(verify_homotopy(f.source, gf, e.homotopy_source, "homotopy_source"));
  report.append(verify_homotopy(f.target, fg, e.homotopy_target, "homotopy_target"));
  return report;
}

}  // namespace d2kit
