#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "qdtough/certifier.hpp"
#include "qdtough/error.hpp"
#include "qdtough/family.hpp"
#include "qdtough/io.hpp"
#include "qdtough/random.hpp"

namespace qdtough {

namespace {

// The graph each theorem singles out, or a tight case where it has none.
Graph anchor_graph(const SweepConfig& config, std::size_t n) {
  switch (config.theorem) {
    case Theorem::OneTough:
    case Theorem::OrderB:
      return build_family(ExtremalSpec::min_degree_family(n, config.delta));
    case Theorem::Fractional:
      return build_family(ExtremalSpec::fractional_family(n, static_cast<std::size_t>(config.param)));
    case Theorem::OrderA: {
      // K_n minus a star leaving vertex 0 with degree t.
      Graph g = complete_graph(n);
      const auto t = static_cast<std::size_t>(std::max<std::int64_t>(config.param, 1));
      for (Vertex v = static_cast<Vertex>(t + 1); v < n; ++v) g.remove_edge(0, v);
      return g;
    }
  }
  return complete_graph(n);
}

std::pair<std::size_t, std::size_t> planted_degree_range(const SweepConfig& config, std::size_t n) {
  switch (config.theorem) {
    case Theorem::OneTough:
    case Theorem::OrderB: return {config.delta, config.delta};
    case Theorem::Fractional: return {1, 3};
    case Theorem::OrderA: {
      const auto t = static_cast<std::size_t>(std::max<std::int64_t>(config.param, 1));
      return {std::min(t, n - 2), n - 2};
    }
  }
  return {1, n - 1};
}

void add_random_edges(Graph& g, std::size_t count, Rng& rng) {
  std::vector<Edge> missing;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) missing.emplace_back(u, v);
  rng.shuffle(missing);
  for (std::size_t i = 0; i < std::min(count, missing.size()); ++i) g.add_edge(missing[i].first, missing[i].second);
}

void remove_random_edges(Graph& g, std::size_t count, Rng& rng) {
  for (std::size_t i = 0; i < count; ++i) {
    const auto e = random_removable_edge(g, rng);
    if (!e) return;
    g.remove_edge(e->first, e->second);
  }
}

// Rewires v to exactly `degree` random neighbours.
void set_degree(Graph& g, Vertex v, std::size_t degree, Rng& rng) {
  std::vector<Vertex> others;
  for (Vertex w = 0; w < g.order(); ++w)
    if (w != v) others.push_back(w);
  rng.shuffle(others);
  for (std::size_t k = degree; k < others.size(); ++k) g.remove_edge(v, others[k]);
  for (std::size_t k = 0; k < degree; ++k) g.add_edge(v, others[k]);
}

bool degree_pinned(const SweepConfig& config) {
  return config.theorem == Theorem::OneTough || config.theorem == Theorem::OrderB;
}

Graph planted(const SweepConfig& config, std::size_t n, Rng& rng) {
  Graph g = complete_graph(n);
  const auto [lo, hi] = planted_degree_range(config, n);
  const std::size_t low_count = static_cast<std::size_t>(rng.between(1, 3));
  for (std::size_t i = 0; i < low_count; ++i) {
    const auto target = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
    set_degree(g, static_cast<Vertex>(rng.below(n)), target, rng);
  }
  if (!is_connected(g)) return complete_graph(n);
  remove_random_edges(g, static_cast<std::size_t>(rng.below(n / 3 + 1)), rng);
  return g;
}

// K_n minus random edges; theorems whose order bound depends on the minimum
// degree also get one vertex pinned to that degree.
Graph dense(const SweepConfig& config, std::size_t n, Rng& rng) {
  Graph g = complete_graph(n);
  remove_random_edges(g, static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(n))), rng);
  if (degree_pinned(config) && g.min_degree() > config.delta) {
    Graph pinned = g;
    set_degree(pinned, static_cast<Vertex>(rng.below(n)), config.delta, rng);
    if (is_connected(pinned)) return pinned;
  }
  return g;
}

}  // namespace

Graph sweep_instance(const SweepConfig& config, std::size_t index, std::string* generator_name) {
  Rng rng(Rng::derive(config.seed, index));
  const auto n = static_cast<std::size_t>(
      rng.between(static_cast<std::int64_t>(config.n_min), static_cast<std::int64_t>(config.n_max)));
  const std::uint64_t pick = rng.below(100);
  std::string name;
  Graph g;
  if (pick < 10) {
    name = "anchor";
    g = anchor_graph(config, n);
  } else if (pick < 25) {
    name = "anchor+edges";
    g = anchor_graph(config, n);
    add_random_edges(g, static_cast<std::size_t>(rng.between(1, 3)), rng);
  } else if (pick < 35) {
    name = "anchor-edges";
    g = anchor_graph(config, n);
    remove_random_edges(g, static_cast<std::size_t>(rng.between(1, 2)), rng);
  } else if (pick < 65) {
    name = "planted";
    g = planted(config, n, rng);
  } else if (pick < 90) {
    name = "dense";
    g = dense(config, n, rng);
  } else {
    name = "random";
    g = random_tree_plus(n, 0.6 + 0.38 * rng.unit(), rng);
  }
  if (generator_name) *generator_name = name;
  return g.relabeled(random_permutation(n, rng));
}

SweepReport falsify_sweep(const SweepConfig& config) {
  if (config.n_min < 2 || config.n_max < config.n_min) throw Error(ErrorKind::InvalidArgument, "invalid order range");
  SweepReport report;
  report.config = config;
  report.instances.resize(config.count);
  const Rational t = guaranteed_toughness(config.theorem, config.param);
  OracleOptions oracle;
  oracle.max_order = config.oracle_cap;

  auto run_one = [&](std::size_t i) {
    SweepInstance& inst = report.instances[i];
    inst.index = i;
    const Graph g = sweep_instance(config, i, &inst.generator);
    inst.n = g.order();
    inst.m = g.size();
    inst.graph6 = to_graph6(g);
    const CertOutcome out = certify(g, config.theorem, config.param, config.cert);
    inst.verdict = out.verdict;
    inst.eta1 = out.eta1_graph;
    inst.threshold = out.threshold;
    if (config.theorem == Theorem::OneTough && g.min_degree() >= 1 && g.order() > 2 * g.min_degree()) {
      inst.extremal = recognize_family(g, ExtremalSpec::min_degree_family(g.order(), g.min_degree()));
    } else if (config.theorem == Theorem::Fractional && g.order() >= static_cast<std::size_t>(config.param) + 2) {
      inst.extremal = recognize_family(g, ExtremalSpec::fractional_family(g.order(), static_cast<std::size_t>(config.param)));
    }
    if (out.edge_bound) inst.edge_bound_satisfied = out.edge_bound->satisfied;
    if (out.verdict == Verdict::Certified && g.order() <= config.oracle_cap) {
      inst.tau_prime_tough = is_t_tough(g, t, ToughnessVariant::TauPrime, oracle).tough;
      inst.tau_tough = is_t_tough(g, t, ToughnessVariant::Tau, oracle).tough;
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(config.workers, config.count));
  if (workers == 1) {
    for (std::size_t i = 0; i < config.count; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = next++; i < config.count; i = next++) run_one(i);
          } catch (...) {
            errors[w] = std::current_exception();
            next = config.count;
          }
        });
      }
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (const auto& inst : report.instances) {
    switch (inst.verdict) {
      case Verdict::Certified: ++report.certified; break;
      case Verdict::ExtremalException: ++report.extremal_exceptions; break;
      case Verdict::Inconclusive: ++report.inconclusive; break;
      case Verdict::PreconditionFailed: ++report.precondition_failed; break;
    }
    if (inst.extremal && inst.verdict == Verdict::Certified) ++report.extremal_certified;
    if (inst.tau_prime_tough) {
      ++report.oracle_checked;
      if (!*inst.tau_prime_tough) ++report.tau_prime_violations;
      if (!*inst.tau_tough) ++report.tau_violations;
    }
  }
  return report;
}

}  // namespace qdtough
