#include "hyperclique/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperclique/bounds.hpp"
#include "hyperclique/certificate_io.hpp"
#include "hyperclique/cliques.hpp"
#include "hyperclique/errors.hpp"
#include "hyperclique/extraction.hpp"
#include "hyperclique/fact1.hpp"
#include "hyperclique/hypergraph.hpp"
#include "hyperclique/layered_tree.hpp"
#include "hyperclique/search.hpp"

namespace hyperclique::cli {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string hex64(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("failed writing " + path);
}

/// Digest of the input file bytes.
std::string digest_of(std::string_view bytes) { return "fnv1a64:" + hex64(fnv1a64(bytes)); }

json report(const std::string& command, const std::string& digest, json results, json verdicts, Clock::time_point t0) {
  json doc;
  doc["schema_version"] = 1;
  doc["command"] = command;
  doc["input_digest"] = digest;
  doc["results"] = std::move(results);
  doc["verdicts"] = std::move(verdicts);
  doc["wall_time_s"] = std::chrono::duration<double>(Clock::now() - t0).count();
  return doc;
}

std::string sizes_text(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  Clock::time_point t0 = Clock::now();
};

int cmd_spectrum(Context& cx, const std::string& path, bool as_json) {
  const std::string text = read_file(path);
  Hypergraph h = parse_hypergraph(text);
  SpectrumReport s = clique_spectrum(h);
  const std::vector<int> distinct = s.distinct_desc();
  if (as_json) {
    json wit = json::object();
    for (int size : distinct) wit[std::to_string(size)] = vertex_set_to_json(s.witnesses.at(size));
    json results = {{"k", h.k()}, {"n", h.n()}, {"sizes", distinct}, {"distinct_sizes", s.distinct_sizes},
                    {"clique_count", s.sizes.size()}, {"witnesses", wit}};
    cx.out << report("spectrum", digest_of(text), results, json::object(), cx.t0).dump(2) << '\n';
    return kExitOk;
  }
  cx.out << "sizes " << sizes_text(distinct) << '\n';
  cx.out << "distinct " << s.distinct_sizes << '\n';
  cx.out << "maximal cliques " << s.sizes.size() << '\n';
  for (int size : distinct) cx.out << "  size " << size << ": " << s.witnesses.at(size).to_string() << '\n';
  return kExitOk;
}

int cmd_cliques(Context& cx, const std::string& path, bool as_json) {
  const std::string text = read_file(path);
  Hypergraph h = parse_hypergraph(text);
  std::vector<VertexSet> all = enumerate_maximal_cliques(h);
  if (as_json) {
    json list = json::array();
    for (const VertexSet& c : all) list.push_back(vertex_set_to_json(c));
    json results = {{"k", h.k()}, {"n", h.n()}, {"count", all.size()}, {"cliques", list}};
    cx.out << report("cliques", digest_of(text), results, json::object(), cx.t0).dump(2) << '\n';
    return kExitOk;
  }
  for (const VertexSet& c : all) cx.out << c.to_string() << '\n';
  return kExitOk;
}

int cmd_extract(Context& cx, const std::string& path, std::optional<int> c, const std::optional<std::string>& json_out) {
  const std::string text = read_file(path);
  Hypergraph h = parse_hypergraph(text);
  ExtractionResult res = extract_tree(h, c);
  CertificateReport rep = validate_certificate(res, h);
  cx.out << "k " << h.k() << " n " << h.n() << " C " << res.chain.C << '\n';
  cx.out << "tree " << res.tree.size() << " nodes, (" << res.params.k << ", " << res.params.C << ")-layered\n";
  for (int i = 0; i < res.tree.size(); ++i)
    cx.out << "  x_" << i << " parent " << res.tree.parent(i) << " X " << res.chain.cliques[i].to_string() << " A "
           << res.chain.A[i].to_string() << " B " << res.chain.B[i].to_string() << '\n';
  for (const CheckResult& chk : rep.checks) {
    cx.out << (chk.passed ? "  pass " : "  FAIL ") << chk.name << '\n';
    for (const std::string& v : chk.violations) cx.out << "    " << v << '\n';
  }
  cx.out << (rep.ok() ? "certificate ok" : "certificate INVALID") << '\n';
  if (json_out) {
    json doc = certificate_to_json(res, rep);
    doc["command"] = "extract-tree";
    doc["input_digest"] = digest_of(text);
    doc["wall_time_s"] = std::chrono::duration<double>(Clock::now() - cx.t0).count();
    write_file(*json_out, doc.dump(2) + "\n");
  }
  return rep.ok() ? kExitOk : kExitFailed;
}

int cmd_validate_tree(Context& cx, const std::string& path, int k, std::uint64_t c) {
  OrderedTree t = parse_tree(read_file(path));
  std::vector<LayeredViolation> v = validate_layered(t, LayeredParams{k, c});
  if (v.empty()) {
    cx.out << "ok: " << t.size() << "-vertex tree is (" << k << ", " << c << ")-layered\n";
    return kExitOk;
  }
  for (const LayeredViolation& x : v) cx.out << "violation " << x.message << '\n';
  return kExitFailed;
}

int cmd_max_tree(Context& cx, int k, std::uint64_t c, const std::optional<std::string>& emit) {
  MaxSize m = max_layered_size(LayeredParams{k, c});
  cx.out << "max (" << k << ", " << c << ")-layered tree size " << m.value.to_string() << '\n';
  if (!emit) return kExitOk;
  std::optional<OrderedTree> t;
  if (k == 1) {
    if (c >= 20) throw CapacityError("the maximum (1," + std::to_string(c) + ")-layered tree is too large to emit");
    std::vector<int> parents((std::size_t{1} << c) + 1, 0);
    parents[0] = -1;
    t.emplace(parents);
  } else {
    t.emplace(build_greedy_max_tree(c));
  }
  if (!is_layered(*t, LayeredParams{k, c})) throw InvariantBreach("emitted tree fails validation");
  write_file(*emit, serialize_tree(*t));
  cx.out << "wrote " << t->size() << " vertices to " << *emit << '\n';
  return kExitOk;
}

struct SearchArgs {
  int n = 0, k = 0;
  bool exhaustive = false, hillclimb = false;
  std::optional<std::uint64_t> iters, restarts, shards, shard;
  std::uint64_t seed = 0;
  std::optional<std::string> checkpoint;
};

void print_moon_moser(Context& cx, int n, int g, bool& violated) {
  MoonMoserReport mm = check_moon_moser(n, g);
  cx.out << "upper bound n - floor(log2 n) = " << mm.upper << (mm.upper_ok ? " holds" : " VIOLATED") << '\n';
  if (mm.lower)
    cx.out << "lower bound n - log2 n - 2 log2 log2 n = " << std::setprecision(6) << *mm.lower
           << (*mm.lower_ok ? " holds" : " not met") << '\n';
  violated = violated || !mm.upper_ok;
}

int cmd_search(Context& cx, const SearchArgs& a) {
  if (a.hillclimb) {
    if (!a.iters || !a.restarts) throw InputError("--hillclimb needs --iters and --restarts");
    if (a.checkpoint || a.shards) throw InputError("--checkpoint and --shards apply to --exhaustive only");
    HillClimbResult r = hill_climb_g(a.n, a.k, *a.iters, a.seed, *a.restarts);
    cx.out << "hill-climb n " << a.n << " k " << a.k << " best " << r.best << '\n';
    cx.out << serialize_hypergraph(r.witness);
    return kExitOk;
  }
  if (a.iters || a.restarts) throw InputError("--iters and --restarts need --hillclimb");
  if (a.shard && !a.shards) throw InputError("--shard needs --shards");

  SearchResult best;
  std::string scope = "all edge sets";
  if (a.checkpoint) {
    const std::uint64_t shards = a.shards.value_or(std::max<std::uint64_t>(1, required_shards(a.n, a.k)));
    CheckpointRun run = exhaustive_g_checkpointed(a.n, a.k, *a.checkpoint, shards, a.shard);
    cx.out << "checkpoint " << *a.checkpoint << ": " << run.shards_done << "/" << run.shards_total << " shards\n";
    if (!run.complete()) {
      cx.out << "partial best " << run.best.g << " at edge-set index " << run.best.witness_index << '\n';
      return kExitOk;
    }
    best = run.best;
  } else if (a.shards && a.shard) {
    best = exhaustive_g(a.n, a.k, ShardSpec{*a.shards, *a.shard});
    const ShardRange r = shard_range(a.n, a.k, *a.shards, *a.shard);
    scope = "shard " + std::to_string(*a.shard) + "/" + std::to_string(*a.shards) + " [" + std::to_string(r.lo) + ", " +
            std::to_string(r.hi) + ")";
  } else if (a.shards) {
    best = SearchResult{0, 0};
    for (std::uint64_t i = 0; i < *a.shards; ++i) best = merge(best, exhaustive_g(a.n, a.k, ShardSpec{*a.shards, i}));
  } else {
    best = exhaustive_g(a.n, a.k);
  }
  cx.out << "exhaustive n " << a.n << " k " << a.k << " (" << scope << ") g " << best.g << '\n';
  cx.out << "witness edge-set index " << best.witness_index << '\n';
  cx.out << serialize_hypergraph(best.witness(a.n, a.k));
  bool violated = false;
  if (a.k == 2 && scope == "all edge sets") print_moon_moser(cx, a.n, best.g, violated);
  return violated ? kExitFailed : kExitOk;
}

int cmd_bound(Context& cx, std::uint64_t k, std::uint64_t c, const std::optional<std::string>& variant) {
  std::vector<N0Variant> variants;
  if (!variant || *variant == "claim23") variants.push_back(N0Variant::claim23);
  if (!variant || *variant == "claim24") variants.push_back(N0Variant::claim24_literal);
  for (N0Variant v : variants) {
    TowerInt b = N0_upper_bound(k, TowerInt(c), v);
    cx.out << "N0(" << k << ", " << c << ") " << to_string(v) << " <= " << b.to_string()
           << (b.is_exact() ? " (exact)" : " (enclosure)") << '\n';
  }
  if (k == 2 && c < 63) {
    TowerInt a = a_sequence(c, std::uint64_t{1} << c);
    cx.out << "exact maximum a_{2^C} = " << a.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_fstar(Context& cx, const std::string& literal) {
  TowerInt n = parse_tower_literal(literal);
  const std::uint64_t ls = log_star(add(n, TowerInt(1)));
  const double f3 = f3_lower_bound(n);
  const std::uint64_t mc = min_C_for(n);
  const bool holds = static_cast<double>(mc) >= f3;
  cx.out << "n " << literal << " = " << n.to_string() << '\n';
  cx.out << "log*(n+1) " << ls << '\n';
  cx.out << "f3 lower bound log2(log*(n+1)) - 1 = " << std::setprecision(6) << f3 << '\n';
  cx.out << "min C with n - C <= a_{2^C}: " << mc << '\n';
  cx.out << "min_C >= f3 lower bound: " << (holds ? "holds" : "VIOLATED") << '\n';
  return holds ? kExitOk : kExitFailed;
}

int cmd_fact1(Context& cx, int k, int n, std::uint64_t trials, std::uint64_t seed) {
  Fact1Stats s = fact1_trials(k, n, trials, seed);
  cx.out << "trials " << s.trials << " hypotheses held " << s.hypotheses_held << " conclusions held "
         << s.conclusions_held << '\n';
  cx.out << "counterexamples " << s.counterexamples;
  if (s.first_counterexample) cx.out << " (first at trial " << *s.first_counterexample << ")";
  cx.out << '\n';
  return s.counterexamples == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal clique spectra of uniform hypergraphs and layered trees", "hyperclique"};
  app.require_subcommand(1);
  Context cx{out, err};
  std::function<int()> action;

  std::string path;
  bool as_json = false;
  auto* spectrum = app.add_subcommand("spectrum", "Distinct maximal clique sizes");
  spectrum->add_option("path", path, "hypergraph file")->required();
  spectrum->add_flag("--json", as_json, "print a JSON report");
  spectrum->callback([&] { action = [&] { return cmd_spectrum(cx, path, as_json); }; });

  auto* cliques = app.add_subcommand("cliques", "List every maximal clique");
  cliques->add_option("path", path, "hypergraph file")->required();
  cliques->add_flag("--json", as_json, "print a JSON report");
  cliques->callback([&] { action = [&] { return cmd_cliques(cx, path, as_json); }; });

  std::optional<int> c_opt;
  std::optional<std::string> json_out;
  auto* extract = app.add_subcommand("extract-tree", "Build and validate the layered tree of a hypergraph");
  extract->add_option("path", path, "hypergraph file")->required();
  extract->add_option("--C", c_opt, "slack C (default n - distinct sizes)")->check(CLI::NonNegativeNumber);
  extract->add_option("--json", json_out, "write the certificate here");
  extract->callback([&] { action = [&] { return cmd_extract(cx, path, c_opt, json_out); }; });

  int k = 0;
  std::uint64_t c = 0;
  auto* vtree = app.add_subcommand("validate-tree", "Check the layered conditions on a tree file");
  vtree->add_option("path", path, "tree file")->required();
  vtree->add_option("--k", k, "depth bound")->required()->check(CLI::PositiveNumber);
  vtree->add_option("--C", c, "degree offset")->required();
  vtree->callback([&] { action = [&] { return cmd_validate_tree(cx, path, k, c); }; });

  std::optional<std::string> emit;
  auto* mtree = app.add_subcommand("max-tree", "Maximum layered tree size, optionally emitted");
  mtree->add_option("--k", k, "depth bound")->required()->check(CLI::IsMember({1, 2}));
  mtree->add_option("--C", c, "degree offset")->required();
  mtree->add_option("--emit", emit, "write the tree here");
  mtree->callback([&] { action = [&] { return cmd_max_tree(cx, k, c, emit); }; });

  SearchArgs sa;
  auto* search = app.add_subcommand("search-g", "Compute g(n,k) by exhaustive scan or hill climbing");
  search->add_option("--n", sa.n, "vertex count")->required();
  search->add_option("--k", sa.k, "uniformity")->required();
  auto* ex = search->add_flag("--exhaustive", sa.exhaustive, "scan every edge set (default)");
  auto* hc = search->add_flag("--hillclimb", sa.hillclimb, "local search");
  ex->excludes(hc);
  search->add_option("--iters", sa.iters, "hill-climb iterations per restart");
  search->add_option("--restarts", sa.restarts, "hill-climb restarts");
  search->add_option("--seed", sa.seed, "64-bit seed");
  search->add_option("--checkpoint", sa.checkpoint, "resumable checkpoint file");
  search->add_option("--shards", sa.shards, "number of shards");
  search->add_option("--shard", sa.shard, "run only this shard");
  search->callback([&] { action = [&] { return cmd_search(cx, sa); }; });

  std::uint64_t bk = 0;
  std::optional<std::string> variant;
  auto* bound = app.add_subcommand("bound", "Recursive upper bound on layered tree size");
  bound->add_option("--k", bk, "depth bound")->required()->check(CLI::PositiveNumber);
  bound->add_option("--C", c, "degree offset")->required();
  bound->add_option("--variant", variant, "claim23 or claim24 (default both)")->check(CLI::IsMember({"claim23", "claim24"}));
  bound->callback([&] { action = [&] { return cmd_bound(cx, bk, c, variant); }; });

  std::string literal;
  auto* fstar = app.add_subcommand("fstar", "log*, the C lower bound and the smallest admissible C for n");
  fstar->add_option("--n", literal, "decimal or 2^2^...^d")->required();
  fstar->callback([&] { action = [&] { return cmd_fstar(cx, literal); }; });

  int fk = 0, fn = 0;
  std::uint64_t trials = 0, seed = 0;
  auto* fact1 = app.add_subcommand("check-fact1", "Randomized trials of the leave-one-out completeness property");
  fact1->add_option("--k", fk, "uniformity")->required();
  fact1->add_option("--n", fn, "vertex count")->required();
  fact1->add_option("--trials", trials, "number of trials")->required();
  fact1->add_option("--seed", seed, "64-bit seed")->required();
  fact1->callback([&] { action = [&] { return cmd_fact1(cx, fk, fn, trials, seed); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace hyperclique::cli
