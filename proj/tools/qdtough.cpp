// qdtough command-line interface.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qdtough/certifier.hpp"
#include "qdtough/config.hpp"
#include "qdtough/error.hpp"
#include "qdtough/extremal.hpp"
#include "qdtough/family.hpp"
#include "qdtough/io.hpp"
#include "qdtough/lemmas.hpp"
#include "qdtough/report.hpp"
#include "qdtough/spectral.hpp"
#include "qdtough/toughness.hpp"

namespace {

using namespace qdtough;

constexpr int kExitOk = 0;
constexpr int kExitProperty = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct Options {
  RunConfig run;
  std::string out;
  std::string file;
  std::string variant = "tau";
  std::string t_text;
  std::string theorem;
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> t_int;
  std::size_t s = 0;
  std::vector<std::size_t> parts;
  std::optional<std::size_t> p;
  std::string emit = "g6";
  std::string write_graph;
  std::optional<std::size_t> n;
  std::optional<std::size_t> n_min;
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> delta;
  std::optional<std::size_t> cases;
  std::string lemma;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + opt.out);
  f << text;
}

void require_json(const Options& opt, const char* command) {
  if (opt.run.format != "json") {
    throw Error(ErrorKind::InvalidArgument, std::string("table format is only available for sweep, not ") + command);
  }
}

int run_spectra(const Options& opt) {
  require_json(opt, "spectra");
  const Graph g = read_graph(opt.file);
  emit(opt, report::dump(report::spectra_document(summarize(g, opt.run.perron()))));
  return kExitOk;
}

int run_toughness(const Options& opt) {
  require_json(opt, "toughness");
  const Graph g = read_graph(opt.file);
  if (opt.variant != "tau" && opt.variant != "tau-prime") {
    throw Error(ErrorKind::InvalidArgument, "variant must be tau or tau-prime");
  }
  if (!opt.t_text.empty()) {
    const Rational t = parse_rational(opt.t_text);
    const auto variant = opt.variant == "tau" ? ToughnessVariant::Tau : ToughnessVariant::TauPrime;
    const auto result = is_t_tough(g, t, variant, opt.run.oracle());
    emit(opt, report::dump(report::t_tough_document(result, t, variant)));
    return kExitOk;
  }
  emit(opt, report::dump(report::toughness_document(toughness_exact(g, opt.run.oracle()), g.order())));
  return kExitOk;
}

std::int64_t theorem_param(Theorem theorem, const Options& opt) {
  switch (theorem) {
    case Theorem::OneTough:
      if (opt.q || opt.t_int) throw Error(ErrorKind::InvalidArgument, "theorem 1.1 takes no --q or --t");
      return 1;
    case Theorem::OrderA:
      if (!opt.t_int || opt.q) throw Error(ErrorKind::InvalidArgument, "theorem 1.3a needs --t (and no --q)");
      return *opt.t_int;
    case Theorem::Fractional:
    case Theorem::OrderB:
      if (!opt.q || opt.t_int) throw Error(ErrorKind::InvalidArgument, "this theorem needs --q (and no --t)");
      return *opt.q;
  }
  return 1;
}

int run_certify(const Options& opt) {
  require_json(opt, "certify");
  const Graph g = read_graph(opt.file);
  const Theorem theorem = parse_theorem(opt.theorem);
  CertOutcome outcome = certify(g, theorem, theorem_param(theorem, opt), opt.run.cert());
  if (outcome.verdict == Verdict::Certified && g.order() <= opt.run.oracle_cap) {
    outcome.oracle_crosscheck = is_t_tough(g, outcome.t, ToughnessVariant::TauPrime, opt.run.oracle()).tough;
  }
  emit(opt, report::dump(report::certificate_document(outcome)));
  return outcome.oracle_crosscheck == false ? kExitProperty : kExitOk;
}

int run_extremal(const Options& opt) {
  require_json(opt, "extremal");
  if (opt.emit != "g6" && opt.emit != "edges") throw Error(ErrorKind::InvalidArgument, "--emit must be g6 or edges");
  const ExtremalSpec spec(opt.s, opt.parts, opt.p);
  const Graph g = build_family(spec);
  const GraphFormat format = opt.emit == "g6" ? GraphFormat::Graph6 : GraphFormat::EdgeList;
  const std::string encoded = serialize_graph(g, format);
  if (!opt.write_graph.empty()) {
    std::ofstream f(opt.write_graph, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + opt.write_graph);
    f << encoded;
  }
  emit(opt, report::dump(report::extremal_document(spec, opt.emit, encoded)));
  return kExitOk;
}

int run_compare(const Options& opt) {
  require_json(opt, "compare");
  if (!opt.p) throw Error(ErrorKind::InvalidArgument, "compare needs --p");
  const auto record = compare_families(opt.s, opt.parts, *opt.p, opt.run.strict_margin, opt.run.perron());
  emit(opt, report::dump(report::comparison_document(record)));
  const bool violated = record.premises_hold && (record.difference < -opt.run.strict_margin ||
                                                 (!record.identical && !record.strict));
  return violated ? kExitProperty : kExitOk;
}

SweepConfig sweep_config(const Options& opt) {
  SweepConfig config;
  config.theorem = parse_theorem(opt.theorem);
  switch (config.theorem) {
    case Theorem::OneTough:
      config.param = 1;
      config.n_min = config.n_max = 22;
      break;
    case Theorem::Fractional:
      config.param = opt.q.value_or(2);
      config.n_min = config.n_max = 20;
      break;
    case Theorem::OrderA:
      config.param = opt.t_int.value_or(2);
      config.n_min = 12;
      config.n_max = 20;
      break;
    case Theorem::OrderB:
      config.param = opt.q.value_or(1);
      config.n_min = config.n_max = 18;
      break;
  }
  if (opt.n) config.n_min = config.n_max = *opt.n;
  if (opt.n_min) config.n_min = *opt.n_min;
  if (opt.n_max) config.n_max = *opt.n_max;
  if (opt.delta) config.delta = *opt.delta;
  if (config.n_min > config.n_max) throw Error(ErrorKind::InvalidArgument, "--n-min exceeds --n-max");
  if (config.n_min < 3) throw Error(ErrorKind::InvalidArgument, "sweep orders must be at least 3");
  config.seed = opt.run.seed;
  config.count = opt.run.count;
  config.oracle_cap = opt.run.oracle_cap;
  config.workers = opt.run.workers;
  config.cert = opt.run.cert();
  return config;
}

int run_sweep(const Options& opt) {
  const SweepReport rep = falsify_sweep(sweep_config(opt));
  emit(opt, opt.run.format == "table" ? report::sweep_table(rep) : report::dump(report::sweep_document(rep)));
  return rep.sound() ? kExitOk : kExitProperty;
}

int run_lemmas(const Options& opt) {
  require_json(opt, "verify-lemmas");
  LemmaSuiteOptions suite;
  suite.seed = opt.run.seed;
  if (opt.cases) suite.cases = *opt.cases;
  std::vector<std::string> names = opt.lemma.empty() ? lemma_names() : std::vector<std::string>{opt.lemma};
  std::vector<LemmaCheck> checks;
  for (const auto& name : names) {
    auto part = verify_lemma(name, suite);
    checks.insert(checks.end(), part.begin(), part.end());
  }
  const auto doc = report::lemmas_document(checks, opt.run.seed);
  emit(opt, report::dump(doc));
  return doc["passed"].get<bool>() ? kExitOk : kExitProperty;
}

int exit_code(const Error& e) {
  return e.kind() == ErrorKind::NumericFailure ? kExitNumeric : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Toughness certification from distance signless Laplacian spectra"};
  app.require_subcommand(1);

  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--out", opt.out, "Write the document to FILE instead of stdout");
    cmd->add_option("--format", opt.run.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--residual-tol", opt.run.residual_tol, "Eigensolver relative residual tolerance");
    cmd->add_option("--strict-margin", opt.run.strict_margin, "Margin for strict spectral comparisons");
    cmd->add_option("--band", opt.run.verdict_band, "Inconclusive band around the threshold");
    cmd->add_option("--cap", opt.run.oracle_cap, "Largest order handed to the toughness oracle");
  };

  auto* spectra = app.add_subcommand("spectra", "Distance signless Laplacian summary of a graph");
  spectra->add_option("file", opt.file, "graph6 or edge-list file")->required();
  add_common(spectra);

  auto* tough = app.add_subcommand("toughness", "Exact toughness by cut enumeration");
  tough->add_option("file", opt.file, "graph6 or edge-list file")->required();
  tough->add_option("--variant", opt.variant, "tau or tau-prime (with --t)")->check(CLI::IsMember({"tau", "tau-prime"}));
  tough->add_option("--t", opt.t_text, "Decide t-toughness for t = NUM/DEN");
  add_common(tough);

  auto* cert = app.add_subcommand("certify", "Spectral toughness certificate");
  cert->add_option("file", opt.file, "graph6 or edge-list file")->required();
  cert->add_option("--theorem", opt.theorem, "1.1, 1.2, 1.3a or 1.3b")->required();
  cert->add_option("--q", opt.q, "Integer q with t = 1/q");
  cert->add_option("--t", opt.t_int, "Integer toughness target");
  add_common(cert);

  auto* extremal = app.add_subcommand("extremal", "Build K_s v (K_n1 + ... + K_nc)");
  extremal->add_option("--s", opt.s, "Hub clique size")->required();
  extremal->add_option("--parts", opt.parts, "Part sizes")->required()->delimiter(',');
  extremal->add_option("--p", opt.p, "Common small-part size");
  extremal->add_option("--emit", opt.emit, "g6 or edges")->check(CLI::IsMember({"g6", "edges"}));
  extremal->add_option("--write", opt.write_graph, "Also write the bare graph to FILE");
  add_common(extremal);

  auto* compare = app.add_subcommand("compare", "Compare a family against the balanced extremal member");
  compare->add_option("--s", opt.s, "Hub clique size")->required();
  compare->add_option("--parts", opt.parts, "Part sizes")->required()->delimiter(',');
  compare->add_option("--p", opt.p, "Small-part size")->required();
  add_common(compare);

  auto* sweep = app.add_subcommand("sweep", "Seeded falsification sweep for one theorem");
  sweep->add_option("--theorem", opt.theorem, "1.1, 1.2, 1.3a or 1.3b")->required();
  sweep->add_option("--seed", opt.run.seed, "Master seed");
  sweep->add_option("--count", opt.run.count, "Number of instances");
  sweep->add_option("--q", opt.q, "Integer q with t = 1/q");
  sweep->add_option("--t", opt.t_int, "Integer toughness target");
  sweep->add_option("--n", opt.n, "Fixed order");
  sweep->add_option("--n-min", opt.n_min, "Smallest order");
  sweep->add_option("--n-max", opt.n_max, "Largest order");
  sweep->add_option("--delta", opt.delta, "Minimum degree of the anchor family");
  sweep->add_option("--workers", opt.run.workers, "Worker threads");
  add_common(sweep);

  auto* lemmas = app.add_subcommand("verify-lemmas", "Run the spectral property suite");
  lemmas->add_option("--lemma", opt.lemma, "One of 2.1, 2.2, 2.3, 2.4, 2.5, 3.1")
      ->check(CLI::IsMember(lemma_names()));
  lemmas->add_option("--seed", opt.run.seed, "Master seed");
  lemmas->add_option("--cases", opt.cases, "Random instances per randomized property");
  add_common(lemmas);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    opt.run.validate();
    if (spectra->parsed()) return run_spectra(opt);
    if (tough->parsed()) return run_toughness(opt);
    if (cert->parsed()) return run_certify(opt);
    if (extremal->parsed()) return run_extremal(opt);
    if (compare->parsed()) return run_compare(opt);
    if (sweep->parsed()) return run_sweep(opt);
    if (lemmas->parsed()) return run_lemmas(opt);
  } catch (const Error& e) {
    std::cerr << "qdtough: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "qdtough: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
