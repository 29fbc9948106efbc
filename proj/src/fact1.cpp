#include "hyperclique/fact1.hpp"

#include <algorithm>

#include <omp.h>

#include "hyperclique/errors.hpp"
#include "hyperclique/extraction.hpp"
#include "hyperclique/rng.hpp"
#include "hyperclique/subsets.hpp"

namespace hyperclique {

namespace {

void check_args(int k, int n) {
  if (k < 2) throw InputError("Fact 1 trials need k >= 2");
  if (n < 1 || n > 20) throw InputError("Fact 1 trials need 1 <= n <= 20");
}

void tally(Fact1Stats& s, std::uint64_t index, const Fact1Outcome& o) {
  ++s.trials;
  if (o.hypotheses_hold) ++s.hypotheses_held;
  if (o.conclusion_holds) ++s.conclusions_held;
  if (o.hypotheses_hold && !o.conclusion_holds) {
    ++s.counterexamples;
    if (!s.first_counterexample || index < *s.first_counterexample) s.first_counterexample = index;
  }
}

void merge(Fact1Stats& into, const Fact1Stats& part) {
  into.trials += part.trials;
  into.hypotheses_held += part.hypotheses_held;
  into.conclusions_held += part.conclusions_held;
  into.counterexamples += part.counterexamples;
  if (part.first_counterexample &&
      (!into.first_counterexample || *part.first_counterexample < *into.first_counterexample))
    into.first_counterexample = part.first_counterexample;
}

Fact1Outcome run_trial(int k, int n, std::uint64_t seed, std::uint64_t index) {
  Fact1Instance inst = sample_fact1_instance(k, n, seed, index);
  return check_fact1(inst.h, inst.sets);
}

}  // namespace

Fact1Instance sample_fact1_instance(int k, int n, std::uint64_t seed, std::uint64_t index) {
  check_args(k, n);
  Rng rng = Rng::for_task(seed, index);
  const int mode = static_cast<int>(rng.below(4));  // 0,1 planted; 2 planted minus an edge; 3 random
  const double q = 0.1 + 0.5 * rng.unit();
  std::vector<VertexSet> sets(static_cast<std::size_t>(k + 1));
  for (VertexSet& s : sets)
    for (int v = 0; v < n; ++v)
      if (rng.chance(q)) s.insert(v);

  std::vector<VertexSet> leave_out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    VertexSet u;
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (j != i) u |= sets[j];
    leave_out.push_back(u);
  }

  const double p = mode == 3 ? 0.5 + 0.5 * rng.unit() : 0.3 * rng.unit();
  std::vector<VertexSet> edges, planted;
  for (const VertexSet& e : lex_subsets(n, k)) {
    const bool forced = mode != 3 && std::any_of(leave_out.begin(), leave_out.end(),
                                                 [&](const VertexSet& u) { return e.subset_of(u); });
    if (forced) planted.push_back(e);
    if (forced || rng.chance(p)) edges.push_back(e);
  }
  if (mode == 2 && !planted.empty()) {
    const VertexSet drop = planted[rng.below(planted.size())];
    edges.erase(std::find(edges.begin(), edges.end(), drop));
  }
  return {Hypergraph(k, n, std::move(edges)), std::move(sets)};
}

Fact1Stats fact1_trials_serial(int k, int n, std::uint64_t trials, std::uint64_t seed) {
  check_args(k, n);
  Fact1Stats s;
  for (std::uint64_t t = 0; t < trials; ++t) tally(s, t, run_trial(k, n, seed, t));
  return s;
}

Fact1Stats fact1_trials(int k, int n, std::uint64_t trials, std::uint64_t seed, int threads) {
  check_args(k, n);
  Fact1Stats total;
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nt)
  {
    Fact1Stats local;
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t)
      tally(local, static_cast<std::uint64_t>(t), run_trial(k, n, seed, static_cast<std::uint64_t>(t)));
#pragma omp critical
    merge(total, local);
  }
  return total;
}

}  // namespace hyperclique
