// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_harness.hpp"
#include "d2kit/fox.hpp"
#include "d2kit/homology.hpp"
#include "d2kit/realization.hpp"
#include "d2kit/smith.hpp"
#include "oracles.hpp"

using namespace d2kit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) note << "first failure: " << what << "; ";
    passed = passed && ok;
  }
};

Outcome fox_fundamental_formula() {
  Outcome out;
  std::mt19937_64 rng(1001);
  std::vector<std::pair<GroupWord, std::size_t>> words;
  for (int i = 0; i < 100; ++i) {
    const std::size_t gens = 1 + static_cast<std::size_t>(i % 3);
    words.emplace_back(oracle::random_reduced_word(rng, gens, 20), gens);
  }
  const auto start = Clock::now();
  for (const auto& [w, gens] : words) {
    GroupRingElement sum = GroupRingElement::zero(nullptr);
    for (std::size_t i = 0; i < gens; ++i) {
      sum += fox_derivative(w, i, gens) * (GroupRingElement::word(GroupWord::generator(static_cast<std::uint32_t>(i))) -
                                           GroupRingElement::word(GroupWord()));
    }
    out.require(sum == GroupRingElement::word(w) - GroupRingElement::word(GroupWord()),
                "formula fails for word of length " + std::to_string(w.length()));
  }
  const double t = seconds_since(start);
  out.require(t < 1.0, "took too long");
  out.note << "100 words, " << t << "s";
  return out;
}

Outcome cayley_complexes_verify() {
  Outcome out;
  const auto start = Clock::now();
  for (const auto& entry : oracle::corpus()) {
    const auto report = verify_two_complex(oracle::cayley_of(entry.text));
    out.require(report.passed(), entry.name);
    out.require(report.homology.size() == 3 && report.homology[0].is_integers() && report.homology[1].is_zero(),
                entry.name + " H0/H1");
  }
  const double t = seconds_since(start);
  out.require(t < 5.0, "took too long");
  out.note << oracle::corpus().size() << " presentations, " << t << "s";
  return out;
}

Outcome cyclic_h2() {
  Outcome out;
  for (int n = 2; n <= 6; ++n) {
    const auto c = oracle::cayley_of("<x | x^" + std::to_string(n) + ">");
    const auto h2 = homology(c, 2);
    const std::size_t expected = oracle::betti_number(c, 2);
    out.require(expected == static_cast<std::size_t>(n - 1), "oracle rank for n=" + std::to_string(n));
    out.require(h2 == HomologyGroup{expected, {}}, "H2 for n=" + std::to_string(n) + " is " + to_string(h2));
  }
  out.note << "n = 2..6";
  return out;
}

Outcome todd_coxeter_orders() {
  Outcome out;
  double worst = 0;
  auto check = [&](const std::string& text, const auto& concrete) {
    const auto start = Clock::now();
    const auto t = oracle::table_of(text);
    const double elapsed = seconds_since(start);
    worst = std::max(worst, elapsed);
    out.require(t->order() == concrete.elements().size(), text + " order");
    out.require(oracle::table_matches(*t, concrete), text + " table");
    out.require(elapsed < 1.0, text + " took too long");
  };
  for (int n = 2; n <= 6; ++n) check("<x | x^" + std::to_string(n) + ">", oracle::cyclic_permutations(n));
  check("<x, y | x^2, y^3, x*y*x*y>", oracle::symmetric3());
  check("<x, y | x^2*y^-2, y^-1*x*y*x>", oracle::quaternion_units());
  out.note << "slowest " << worst << "s";
  return out;
}

Outcome smith_random() {
  Outcome out;
  std::mt19937_64 rng(1005);
  std::uniform_int_distribution<std::size_t> dim(1, 30);
  std::vector<IntegerMatrix> inputs;
  for (int i = 0; i < 500; ++i) inputs.push_back(oracle::random_matrix(rng, dim(rng), dim(rng), 10));
  std::vector<SmithDecomposition> results;
  const auto start = Clock::now();
  for (const auto& a : inputs) results.push_back(smith_normal_form(a));
  const double t = seconds_since(start);
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const auto& s = results[k];
    out.require(s.U * inputs[k] * s.V == s.D, "UAV = D");
    const auto du = oracle::rational_determinant(s.U), dv = oracle::rational_determinant(s.V);
    out.require((du == 1 || du == -1) && (dv == 1 || dv == -1), "unimodular");
    for (std::size_t r = 0; r < s.D.rows(); ++r) {
      for (std::size_t c = 0; c < s.D.cols(); ++c) {
        if (r != c) out.require(s.D(r, c) == 0, "diagonal");
      }
    }
    for (std::size_t i = 0; i < s.rank; ++i) out.require(s.D(i, i) > 0, "positive factors");
    for (std::size_t i = 1; i < s.rank; ++i) out.require(s.D(i, i) % s.D(i - 1, i - 1) == 0, "divisibility");
    out.require(s.rank == oracle::rational_rank(inputs[k]), "rank");
  }
  out.require(t < 5.0, "took too long");
  out.note << "500 matrices, " << t << "s";
  return out;
}

std::vector<GroupRingMatrix*> mutable_matrices(EquivalenceCertificate& e) {
  std::vector<GroupRingMatrix*> out;
  for (auto* list : {&e.forward.maps, &e.backward.maps, &e.homotopy_source, &e.homotopy_target}) {
    for (auto& m : *list) {
      if (m.rows() > 0 && m.cols() > 0) out.push_back(&m);
    }
  }
  return out;
}

Outcome a_prime_certificates() {
  Outcome out;
  std::vector<EquivalenceCertificate> certificates;
  for (const auto& entry : oracle::corpus()) {
    const AlgebraicTwoComplex a(oracle::cayley_of(entry.text));
    for (std::size_t r = 0; r <= 5; ++r) {
      auto ap = build_A_prime(a, r);
      out.require(verify_equivalence(ap.inclusion).passed(), entry.name + " extra rank " + std::to_string(r));
      certificates.push_back(std::move(ap.inclusion));
    }
  }
  std::mt19937_64 rng(1006);
  std::size_t rejected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto e = certificates[std::uniform_int_distribution<std::size_t>(0, certificates.size() - 1)(rng)];
    auto targets = mutable_matrices(e);
    GroupRingMatrix& m = *targets[std::uniform_int_distribution<std::size_t>(0, targets.size() - 1)(rng)];
    const std::size_t r = std::uniform_int_distribution<std::size_t>(0, m.rows() - 1)(rng);
    const std::size_t c = std::uniform_int_distribution<std::size_t>(0, m.cols() - 1)(rng);
    const auto g = static_cast<ElementIndex>(std::uniform_int_distribution<std::size_t>(0, m.group()->order() - 1)(rng));
    int delta = std::uniform_int_distribution<int>(-3, 2)(rng);
    if (delta >= 0) ++delta;
    m.set(r, c, m(r, c) + GroupRingElement::element(m.group(), g, delta));
    if (!verify_equivalence(e).passed()) ++rejected;
  }
  out.require(rejected == 100, std::to_string(rejected) + "/100 mutations rejected");
  out.note << certificates.size() << " certificates, " << rejected << "/100 mutations rejected";
  return out;
}

Outcome realization_round_trip() {
  Outcome out;
  double worst = 0;
  for (const auto& entry : oracle::corpus()) {
    const auto start = Clock::now();
    const AlgebraicTwoComplex a(oracle::cayley_of(entry.text));
    const auto plan = make_stabilization_plan(a, a, 0);
    const auto result = realize(plan, identity_certificate(stabilized_source(plan).complex()));
    out.require(result.report.passed(), entry.name + " verify_realization");
    const auto hy = homology_all(result.realized.complex);
    const auto ha = homology_all(a.complex());
    out.require(hy.size() == 4 && hy[0] == ha[0] && hy[1] == ha[1] && hy[2] == ha[2], entry.name + " H0..H2");
    out.require(hy.size() == 4 && hy[3].is_zero(), entry.name + " H3");
    const auto d2 = result.realized.complex.boundary(2);
    for (const auto& v : result.realized.attaching_vectors) {
      GroupRingMatrix column(v.size(), 1, a.group());
      for (std::size_t i = 0; i < v.size(); ++i) column.set(i, 0, v[i]);
      out.require(compose(d2, column).is_zero(), entry.name + " attaching vector outside ker d2");
    }
    const double t = seconds_since(start);
    worst = std::max(worst, t);
    out.require(t < 10.0, entry.name + " took too long");
  }
  out.note << "slowest " << worst << "s";
  return out;
}

Outcome cli_determinism() {
  Outcome out;
  cli::Scratch s("acceptance");
  const std::string corpus = D2KIT_CORPUS;
  std::size_t compared = 0;
  // Each command runs twice; its --out file and its stdout must match byte for byte.
  auto twice = [&](const std::string& label, const std::string& args_before_out) {
    for (const char* format : {"text", "json"}) {
      std::string outputs[2], reports[2];
      for (int run = 0; run < 2; ++run) {
        const std::string out_file = label + "_" + format + std::to_string(run) + ".out";
        const std::string report = label + "_" + format + std::to_string(run) + ".report";
        const int code = s.run(args_before_out + " --format " + format + " --out " + cli::quote(s.path(out_file)), report);
        out.require(code == 0, label + " exit " + std::to_string(code));
        outputs[run] = s.read(out_file);
        reports[run] = s.read(report);
      }
      out.require(outputs[0] == outputs[1], label + " output differs");
      out.require(reports[0] == reports[1], label + " report differs");
      ++compared;
    }
  };
  const std::string s3 = cli::quote(corpus + "/s3.pres");
  twice("cayley", "cayley " + s3);
  const std::string complex = cli::quote(s.path("cayley_text0.out"));
  twice("verify", "verify " + complex);
  twice("homology", "homology " + complex);
  twice("realize", "realize " + s3 + " " + complex + " --search --extra-rank 1 --cert-out " +
                       cli::quote(s.path("realize_cert.json")));
  twice("cert-verify", "cert-verify " + cli::quote(s.path("realize_cert.json")));
  out.note << compared << " command/format pairs";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Fox fundamental formula on random reduced words", fox_fundamental_formula},
      {"Cayley complexes of the corpus are algebraic 2-complexes", cayley_complexes_verify},
      {"H2 of <x | x^n> is free of rank n-1", cyclic_h2},
      {"Todd-Coxeter orders match brute-force groups", todd_coxeter_orders},
      {"Smith normal form on random integer matrices", smith_random},
      {"A' certificates verify and reject mutations", a_prime_certificates},
      {"Realization round trip through the own Cayley complex", realization_round_trip},
      {"CLI outputs are byte-identical across runs", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.note << "exception: " << e.what();
    }
    std::printf("%s criterion %zu: %s (%s)\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.note.str().c_str());
    std::fflush(stdout);
    if (!o.passed) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
