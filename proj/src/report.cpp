#include "qdtough/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "qdtough/io.hpp"

namespace qdtough::report {

double round12(double value) {
  if (!std::isfinite(value)) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

namespace {

json witness_json(const std::optional<CutWitness>& w) {
  if (!w) return nullptr;
  return {{"cut", w->cut}, {"components", w->components}, {"ratio", w->ratio.to_string()}};
}

json rounded(const std::vector<double>& values) {
  json out = json::array();
  for (double v : values) out.push_back(round12(v));
  return out;
}

}  // namespace

json spectra_document(const SpectralSummary& s) {
  json doc;
  doc["schema"] = "qdtough.spectra/1";
  doc["n"] = s.order;
  doc["m"] = s.size;
  doc["eta1"] = round12(s.eta1);
  doc["perron"] = rounded(s.perron);
  doc["transmissions"] = s.transmissions;
  doc["wiener"] = s.wiener;
  doc["transmission_regular"] = s.transmission_regular;
  doc["regular_k"] = s.regular_k ? json(*s.regular_k) : json(nullptr);
  doc["wiener_bound"] = round12(s.bounds.wiener_bound);
  doc["size_bound"] = round12(s.bounds.size_bound);
  doc["iterations"] = s.iterations;
  doc["relative_residual"] = round12(s.relative_residual);
  return doc;
}

json toughness_document(const ToughnessReport& r, std::size_t n) {
  json doc;
  doc["schema"] = "qdtough.toughness/1";
  doc["n"] = n;
  doc["tau"] = r.tau.to_string();
  doc["tau_prime"] = r.tau_prime.to_string();
  doc["tau_witness"] = witness_json(r.tau_witness);
  doc["tau_prime_witness"] = witness_json(r.tau_prime_witness);
  doc["subsets_examined"] = r.subsets_examined;
  return doc;
}

json t_tough_document(const TToughResult& r, const Rational& t, ToughnessVariant variant) {
  json doc;
  doc["schema"] = "qdtough.t-tough/1";
  doc["t"] = t.to_string();
  doc["variant"] = to_string(variant);
  doc["tough"] = r.tough;
  doc["violation"] = witness_json(r.violation);
  doc["subsets_examined"] = r.subsets_examined;
  return doc;
}

json certificate_document(const CertOutcome& o) {
  json doc;
  doc["schema"] = "qdtough.certificate/1";
  doc["theorem"] = theorem_label(o.theorem);
  doc["verdict"] = to_string(o.verdict);
  doc["t"] = o.t.to_string();
  doc["n"] = o.n;
  doc["m"] = o.m;
  doc["min_degree"] = o.min_degree;
  doc["eta1"] = round12(o.eta1_graph);
  const bool evaluated = o.verdict != Verdict::PreconditionFailed;
  doc["threshold"] = evaluated ? json(round12(o.threshold)) : json(nullptr);
  doc["margin"] = evaluated ? json(round12(o.margin)) : json(nullptr);
  doc["band"] = evaluated ? json(round12(o.band)) : json(nullptr);
  doc["preconditions"] = o.precondition_log;
  doc["diagnostics"] = o.diagnostics;
  if (o.edge_bound) {
    doc["edge_bound"] = {{"m_must_exceed", o.edge_bound->bound.to_string()}, {"satisfied", o.edge_bound->satisfied}};
  } else {
    doc["edge_bound"] = nullptr;
  }
  doc["oracle_crosscheck"] = o.oracle_crosscheck ? json(*o.oracle_crosscheck) : json(nullptr);
  return doc;
}

json extremal_document(const ExtremalSpec& spec, const std::string& emitted_format, const std::string& encoded) {
  json doc;
  doc["schema"] = "qdtough.extremal/1";
  doc["family"] = spec.to_string();
  doc["s"] = spec.hub();
  doc["parts"] = spec.parts();
  doc["n"] = spec.order();
  doc["m"] = spec.edge_count();
  doc["min_degree"] = spec.min_degree();
  doc["format"] = emitted_format;
  doc["graph"] = encoded;
  return doc;
}

json comparison_document(const ComparisonRecord& r) {
  json doc;
  doc["schema"] = "qdtough.compare/1";
  doc["given"] = {{"family", r.given.to_string()}, {"s", r.given.hub()}, {"parts", r.given.parts()}};
  doc["extremal"] = {{"family", r.extremal.to_string()}, {"s", r.extremal.hub()}, {"parts", r.extremal.parts()}};
  doc["p"] = r.given.p() ? json(*r.given.p()) : json(nullptr);
  doc["eta1_given"] = round12(r.eta1_given);
  doc["eta1_extremal"] = round12(r.eta1_extremal);
  doc["difference"] = round12(r.difference);
  doc["identical"] = r.identical;
  doc["strict"] = r.strict;
  doc["premises_hold"] = r.premises_hold;
  doc["informational"] = !r.premises_hold;
  doc["premise_notes"] = r.premise_notes;
  return doc;
}

json sweep_document(const SweepReport& r) {
  json doc;
  doc["schema"] = "qdtough.sweep/1";
  doc["theorem"] = theorem_label(r.config.theorem);
  doc["param"] = r.config.param;
  doc["t"] = guaranteed_toughness(r.config.theorem, r.config.param).to_string();
  doc["n_min"] = r.config.n_min;
  doc["n_max"] = r.config.n_max;
  doc["seed"] = r.config.seed;
  doc["count"] = r.config.count;
  doc["oracle_cap"] = r.config.oracle_cap;
  doc["summary"] = {{"certified", r.certified},
                    {"extremal_exception", r.extremal_exceptions},
                    {"inconclusive", r.inconclusive},
                    {"precondition_failed", r.precondition_failed},
                    {"oracle_checked", r.oracle_checked},
                    {"tau_prime_violations", r.tau_prime_violations},
                    {"tau_violations", r.tau_violations},
                    {"extremal_certified", r.extremal_certified},
                    {"sound", r.sound()}};
  json rows = json::array();
  for (const auto& inst : r.instances) {
    json row;
    row["index"] = inst.index;
    row["generator"] = inst.generator;
    row["n"] = inst.n;
    row["m"] = inst.m;
    row["graph6"] = inst.graph6;
    row["verdict"] = to_string(inst.verdict);
    row["eta1"] = round12(inst.eta1);
    row["threshold"] = inst.verdict == Verdict::PreconditionFailed ? json(nullptr) : json(round12(inst.threshold));
    row["extremal"] = inst.extremal;
    row["tau_prime_tough"] = inst.tau_prime_tough ? json(*inst.tau_prime_tough) : json(nullptr);
    row["tau_tough"] = inst.tau_tough ? json(*inst.tau_tough) : json(nullptr);
    row["edge_bound_satisfied"] = inst.edge_bound_satisfied ? json(*inst.edge_bound_satisfied) : json(nullptr);
    rows.push_back(std::move(row));
  }
  doc["instances"] = std::move(rows);
  return doc;
}

json lemmas_document(const std::vector<LemmaCheck>& checks, std::uint64_t seed) {
  json doc;
  doc["schema"] = "qdtough.lemmas/1";
  doc["seed"] = seed;
  bool all = true;
  json items = json::array();
  for (const auto& c : checks) {
    all = all && c.passed;
    items.push_back({{"lemma", c.lemma},
                     {"property", c.property},
                     {"passed", c.passed},
                     {"cases", c.cases},
                     {"failures", c.failures},
                     {"worst", round12(c.worst)},
                     {"failure_details", c.failure_details}});
  }
  doc["checks"] = std::move(items);
  doc["passed"] = all;
  return doc;
}

std::string sweep_table(const SweepReport& r) {
  auto opt = [](const std::optional<bool>& b) -> std::string { return b ? (*b ? "1" : "0") : "-"; };
  std::ostringstream os;
  os.precision(12);
  os << "index\tgenerator\tn\tm\tverdict\teta1\tthreshold\textremal\ttau_prime_tough\ttau_tough\tgraph6\n";
  for (const auto& inst : r.instances) {
    os << inst.index << '\t' << inst.generator << '\t' << inst.n << '\t' << inst.m << '\t' << to_string(inst.verdict)
       << '\t' << inst.eta1 << '\t';
    if (inst.verdict == Verdict::PreconditionFailed) os << '-';
    else os << inst.threshold;
    os << '\t' << (inst.extremal ? 1 : 0) << '\t' << opt(inst.tau_prime_tough) << '\t' << opt(inst.tau_tough) << '\t'
       << inst.graph6 << '\n';
  }
  return os.str();
}

std::string dump(const json& document) { return document.dump(2) + "\n"; }

}  // namespace qdtough::report
