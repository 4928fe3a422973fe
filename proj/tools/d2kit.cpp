// d2kit command-line front end. Reports go to stdout (or --out for the
// checking commands); wall-clock time goes to stderr so that reports and
// output files are byte-for-byte reproducible.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "d2kit/errors.hpp"
#include "d2kit/fox.hpp"
#include "d2kit/group_table.hpp"
#include "d2kit/homology.hpp"
#include "d2kit/io.hpp"
#include "d2kit/presentation.hpp"
#include "d2kit/realization.hpp"
#include "d2kit/report.hpp"
#include "d2kit/solve.hpp"

namespace {

using namespace d2kit;

enum ExitCode : int {
  kPass = 0,
  kUsage = 2,
  kExhausted = 3,
  kVerificationFailed = 4,
  kNoCertificate = 5,
};

// Ends a command early with a failing check and the given exit code.
struct Abort {
  int code;
  std::string check;
  std::string detail;
};

struct Options {
  std::string format = "text";
  std::string out;
  std::string cert_out;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::optional<std::size_t> degree;
  std::size_t extra_rank = 0;
  bool search = false;
  std::string presentation_file;
  std::string complex_file;
  std::string cert_file;
};

std::string load(const std::string& path) {
  try {
    return read_text_file(path);
  } catch (const std::exception& e) {
    throw Abort{kUsage, "read input", e.what()};
  }
}

void save(const std::string& path, const std::string& content) {
  try {
    write_text_file(path, content);
  } catch (const std::exception& e) {
    throw Abort{kUsage, "write output", e.what()};
  }
}

GroupPresentation parse_input_presentation(const std::string& text) {
  try {
    return parse_presentation(text);
  } catch (const ParseError& e) {
    throw Abort{kUsage, "parse presentation", e.what()};
  }
}

GroupHandle enumerate(const GroupPresentation& p, std::size_t max_cosets) {
  try {
    return std::make_shared<const FiniteGroupTable>(todd_coxeter(p, max_cosets));
  } catch (const EnumerationExhausted& e) {
    throw Abort{kExhausted, "coset enumeration", e.what()};
  }
}

ChainComplex parse_input_complex(const std::string& text) {
  try {
    return read_complex_json(text);
  } catch (const FormatError& e) {
    throw Abort{kUsage, "parse complex", e.what()};
  }
}

std::string ranks_string(const ChainComplex& c) {
  std::string s;
  for (std::size_t r : c.ranks()) s += (s.empty() ? "" : " ") + std::to_string(r);
  return s;
}

int verdict(const RunReport& report) { return report.all_passed() ? kPass : kVerificationFailed; }

// Verifies a complex and tabulates its homology; 2-complexes additionally
// get the augmentation, H_0 = Z and H_1 = 0 checks.
void check_complex(RunReport& report, const std::string& label, const ChainComplex& c) {
  if (c.top_degree() == 2) {
    const TwoComplexReport r = verify_two_complex(c);
    report.add_verification(label + " is an algebraic 2-complex", r.checks);
    report.add_homology(label, r.homology);
    return;
  }
  const VerificationReport r = verify_complex(c);
  report.add_verification(label + " is a chain complex", r);
  if (r.passed() && c.group()) report.add_homology(label, homology_all(c));
}

void cmd_cayley(const Options& o, RunReport& report) {
  const std::string text = load(o.presentation_file);
  report.inputs_digest = digest_inputs({text, std::to_string(o.max_cosets)});
  const GroupPresentation p = parse_input_presentation(text);
  report.add_fact("presentation", to_string(p));
  const GroupHandle g = enumerate(p, o.max_cosets);
  report.add_fact("group order", std::to_string(g->order()));
  const ChainComplex c = cayley_complex(p, g);
  report.add_fact("ranks", ranks_string(c));
  check_complex(report, "Cayley complex", c);
  if (!o.out.empty()) save(o.out, write_complex_json(c));
}

void cmd_verify(const Options& o, RunReport& report) {
  const std::string text = load(o.complex_file);
  report.inputs_digest = digest_inputs({text});
  const ChainComplex c = parse_input_complex(text);
  report.add_fact("ranks", ranks_string(c));
  check_complex(report, "complex", c);
}

void cmd_homology(const Options& o, RunReport& report) {
  const std::string text = load(o.complex_file);
  report.inputs_digest = digest_inputs({text, o.degree ? std::to_string(*o.degree) : "all"});
  const ChainComplex c = parse_input_complex(text);
  if (!c.group()) throw Abort{kUsage, "homology", "homology needs a tabular complex"};
  const VerificationReport r = verify_complex(c);
  report.add_verification("complex is a chain complex", r);
  if (!r.passed()) return;
  if (o.degree) {
    if (*o.degree > c.top_degree()) {
      throw Abort{kUsage, "homology", "degree " + std::to_string(*o.degree) + " exceeds top degree " +
                                          std::to_string(c.top_degree())};
    }
    report.homology.push_back({"complex", *o.degree, homology(c, *o.degree)});
  } else {
    report.add_homology("complex", homology_all(c));
  }
}

void cmd_cert_verify(const Options& o, RunReport& report) {
  const std::string text = load(o.cert_file);
  report.inputs_digest = digest_inputs({text});
  EquivalenceCertificate e;
  try {
    e = read_certificate_json(text);
  } catch (const FormatError& err) {
    throw Abort{kUsage, "parse certificate", err.what()};
  }
  report.add_fact("source ranks", ranks_string(e.forward.source));
  report.add_fact("target ranks", ranks_string(e.forward.target));
  try {
    report.add_verification("chain homotopy equivalence", verify_equivalence(e));
  } catch (const DimensionMismatch& err) {
    report.add_check("chain homotopy equivalence", false, err.what());
  }
}

// The presentation must present the group of A with matching generators:
// its relators hold in A's table and both groups have the same order, so
// the generator assignment is an isomorphism.
void check_same_group(const GroupPresentation& p, const FiniteGroupTable& enumerated, const FiniteGroupTable& a_group) {
  const auto fail = [](const std::string& why) {
    throw Abort{kVerificationFailed, "presentation presents the group of A", why};
  };
  if (p.generator_count() != a_group.presentation().generator_count()) fail("generator counts differ");
  if (enumerated.order() != a_group.order()) fail("group orders differ");
  for (const GroupWord& r : p.relators) {
    if (evaluate_word(a_group, r) != 0) fail("relator " + to_string(r, p.generators) + " is not trivial in A's group");
  }
}

void cmd_realize(const Options& o, RunReport& report) {
  if (o.cert_file.empty() && !o.search) throw Abort{kUsage, "certificate", "give a certificate file or --search"};
  const std::string p_text = load(o.presentation_file);
  const std::string a_text = load(o.complex_file);
  const std::string cert_text = o.cert_file.empty() ? std::string() : load(o.cert_file);
  report.inputs_digest =
      digest_inputs({p_text, a_text, cert_text, std::to_string(o.extra_rank), o.search ? "search" : "file",
                     std::to_string(o.max_cosets)});

  const GroupPresentation p = parse_input_presentation(p_text);
  const GroupHandle enumerated = enumerate(p, o.max_cosets);
  const ChainComplex a_complex = parse_input_complex(a_text);
  if (!a_complex.group()) throw Abort{kUsage, "parse complex", "A must be over a tabular group"};
  if (a_complex.top_degree() != 2) throw Abort{kVerificationFailed, "A has length 2", "top degree " +
                                                                                          std::to_string(a_complex.top_degree())};
  check_same_group(p, *enumerated, *a_complex.group());
  report.add_fact("group order", std::to_string(enumerated->order()));

  const AlgebraicTwoComplex a(a_complex);
  const AlgebraicTwoComplex c(cayley_complex(p, a_complex.group()));
  const TwoComplexReport a_report = verify_two_complex(a.complex());
  report.add_verification("A is an algebraic 2-complex", a_report.checks);
  report.add_homology("A", a_report.homology);
  if (!a_report.passed()) return;

  const StabilizationPlan plan = make_stabilization_plan(a, c, o.extra_rank);
  report.add_fact("rank C", std::to_string(plan.rank_C));
  report.add_fact("rank S", std::to_string(plan.rank_S));
  report.add_fact("rank Q", std::to_string(plan.rank_Q));

  EquivalenceCertificate stable;
  if (!o.cert_file.empty()) {
    try {
      stable = read_certificate_json(cert_text);
    } catch (const FormatError& err) {
      throw Abort{kUsage, "parse certificate", err.what()};
    }
  } else {
    auto found = find_equivalence(stabilized_source(plan).complex(), stabilized_presentation(plan).complex());
    if (!found) throw Abort{kNoCertificate, "certificate search", "no equivalence within search bounds"};
    stable = std::move(*found);
    report.add_fact("certificate", "found by search");
  }

  RealizationResult result;
  try {
    result = realize(plan, stable);
  } catch (const CertificateRejected& err) {
    throw Abort{kVerificationFailed, "stable equivalence certificate", err.what()};
  } catch (const DimensionMismatch& err) {
    throw Abort{kVerificationFailed, "stable equivalence certificate", err.what()};
  }
  report.add_check("stable equivalence certificate", true);
  report.add_fact("ranks of C(Y)", ranks_string(result.realized.complex));
  report.add_verification("realization", result.report);
  if (result.report.passed()) report.add_homology("C(Y)", homology_all(result.realized.complex));
  if (!o.out.empty()) save(o.out, write_realized_json(result.realized));
  if (!o.cert_out.empty()) save(o.cert_out, write_certificate_json(result.certificate));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley complexes, algebraic 2-complexes and their realization"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out, "Output file");
  };

  auto* cayley = app.add_subcommand("cayley", "Build and verify the Cayley complex of a finite presentation");
  cayley->add_option("presentation", o.presentation_file, "Presentation file")->required();
  cayley->add_option("--max-cosets", o.max_cosets, "Coset table limit");
  add_common(cayley);

  auto* verify = app.add_subcommand("verify", "Verify a chain complex file");
  verify->add_option("complex", o.complex_file, "Complex file")->required();
  add_common(verify);

  auto* homology_cmd = app.add_subcommand("homology", "Homology of a chain complex file");
  homology_cmd->add_option("complex", o.complex_file, "Complex file")->required();
  homology_cmd->add_option("--degree", o.degree, "Single degree");
  add_common(homology_cmd);

  auto* cert = app.add_subcommand("cert-verify", "Verify a chain homotopy equivalence certificate");
  cert->add_option("certificate", o.cert_file, "Certificate file")->required();
  add_common(cert);

  auto* realize_cmd = app.add_subcommand("realize", "Realize an algebraic 2-complex by a 3-complex");
  realize_cmd->add_option("presentation", o.presentation_file, "Presentation file")->required();
  realize_cmd->add_option("complex", o.complex_file, "Complex file for A")->required();
  realize_cmd->add_option("certificate", o.cert_file, "Stable equivalence certificate");
  realize_cmd->add_option("--extra-rank", o.extra_rank, "Rank of the free stabilizer Q");
  realize_cmd->add_flag("--search", o.search, "Search for the stable equivalence");
  realize_cmd->add_option("--max-cosets", o.max_cosets, "Coset table limit");
  realize_cmd->add_option("--cert-out", o.cert_out, "Write the certificate A' -> C(Y)");
  add_common(realize_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  CLI::App* sub = app.get_subcommands().front();
  report.command = sub->get_name();
  const bool report_to_file = sub != cayley && sub != realize_cmd && !o.out.empty();
  try {
    if (sub == cayley) cmd_cayley(o, report);
    else if (sub == verify) cmd_verify(o, report);
    else if (sub == homology_cmd) cmd_homology(o, report);
    else if (sub == cert) cmd_cert_verify(o, report);
    else cmd_realize(o, report);
    report.exit_code = verdict(report);
  } catch (const Abort& a) {
    report.add_check(a.check, false, a.detail);
    report.exit_code = a.code;
  } catch (const std::exception& e) {
    report.add_check("internal", false, e.what());
    report.exit_code = kVerificationFailed;
  }

  const std::string rendered = report.render(o.format);
  std::cout << rendered;
  if (report_to_file) {
    try {
      write_text_file(o.out, rendered);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return kUsage;
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::fprintf(stderr, "elapsed: %.3fs\n", seconds);
  return report.exit_code;
}
