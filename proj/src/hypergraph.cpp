#include "hyperclique/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hyperclique/errors.hpp"
#include "hyperclique/subsets.hpp"

namespace hyperclique {

Hypergraph::Hypergraph(int k, int n, std::vector<VertexSet> edges) : k_(k), n_(n), edges_(std::move(edges)) {
  if (k_ < 2) throw InputError("uniformity k must be at least 2, got " + std::to_string(k_));
  if (n_ < 1 || n_ > kMaxVertices)
    throw InputError("vertex count n must be in [1, " + std::to_string(kMaxVertices) + "], got " +
                     std::to_string(n_));
  const VertexSet all = vertices();
  for (const VertexSet& e : edges_) {
    if (e.size() != k_) throw InputError("edge " + e.to_string() + " does not have exactly k members");
    if (!e.subset_of(all)) throw InputError("edge " + e.to_string() + " has a vertex outside [0, n-1]");
  }
  std::sort(edges_.begin(), edges_.end(), [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw InputError("duplicate edge " + dup->to_string());
  build_links();
}

void Hypergraph::build_links() {
  const std::uint64_t slots = binom(n_, k_ - 1);
  dense_ = slots <= kDenseLinkLimit;
  if (dense_) dense_links_.assign(static_cast<std::size_t>(slots), VertexSet{});
  for (const VertexSet& e : edges_) {
    e.for_each([&](Vertex w) {
      VertexSet t = e.without(w);
      if (dense_)
        dense_links_[colex_rank(t)].insert(w);
      else
        sparse_links_[t].insert(w);
    });
  }
}

Hypergraph Hypergraph::complete(int k, int n) {
  if (n < 1 || n > kMaxVertices) throw InputError("vertex count out of range");
  return Hypergraph(k, n, lex_subsets(n, k));
}

Hypergraph Hypergraph::from_edge_index(int k, int n, std::uint64_t index) {
  if (n < 1 || n > kMaxVertices) throw InputError("vertex count out of range");
  const std::uint64_t slots = binom(n, k);
  if (slots < 64 && (index >> slots) != 0) throw InputError("edge-set index exceeds 2^binom(n,k)");
  if (slots > 64) throw InputError("edge-set indices need binom(n,k) <= 64");
  std::vector<VertexSet> all = lex_subsets(n, k);
  std::vector<VertexSet> chosen;
  for (std::size_t j = 0; j < all.size(); ++j)
    if ((index >> j) & 1U) chosen.push_back(all[j]);
  return Hypergraph(k, n, std::move(chosen));
}

bool Hypergraph::has_edge(const VertexSet& e) const {
  if (e.size() != k_ || !e.subset_of(vertices())) return false;
  Vertex w = e.first();
  return link(e.without(w)).contains(w);
}

VertexSet Hypergraph::link(const VertexSet& t) const {
  if (dense_) return dense_links_[colex_rank(t)];
  auto it = sparse_links_.find(t);
  return it == sparse_links_.end() ? VertexSet{} : it->second;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view tok, long long& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  int k = 0, n = 0;
  bool have_header = false;
  std::vector<VertexSet> edges;
  std::unordered_map<VertexSet, int, VertexSetHash> edge_lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    if (is_blank(line)) {
      if (eol == text.size()) break;
      continue;
    }

    if (!have_header) {
      std::size_t sp = line.find(' ');
      long long kk = 0, nn = 0;
      if (sp == std::string_view::npos || !parse_int(line.substr(0, sp), kk) ||
          !parse_int(line.substr(sp + 1), nn) || line.substr(0, sp).front() == '-' ||
          line.substr(sp + 1).front() == '-')
        throw ParseError(line_no, "malformed header, expected \"k n\"");
      if (kk < 2) throw ParseError(line_no, "uniformity k must be at least 2");
      if (nn < 1 || nn > kMaxVertices)
        throw ParseError(line_no, "vertex count must be in [1, " + std::to_string(kMaxVertices) + "]");
      k = static_cast<int>(kk);
      n = static_cast<int>(nn);
      have_header = true;
      continue;
    }

    auto toks = split_ws(line);
    if (static_cast<int>(toks.size()) != k)
      throw ParseError(line_no, "edge has " + std::to_string(toks.size()) + " vertices, expected k = " +
                                    std::to_string(k));
    VertexSet e;
    for (auto tok : toks) {
      long long v = 0;
      if (!parse_int(tok, v)) throw ParseError(line_no, "not a base-10 vertex id: " + std::string(tok));
      if (v < 0 || v >= n) throw ParseError(line_no, "vertex " + std::string(tok) + " out of range [0, n-1]");
      if (e.contains(static_cast<Vertex>(v))) throw ParseError(line_no, "repeated vertex " + std::string(tok));
      e.insert(static_cast<Vertex>(v));
    }
    auto [it, fresh] = edge_lines.emplace(e, line_no);
    if (!fresh)
      throw ParseError(line_no, "duplicate edge (first seen on line " + std::to_string(it->second) + ")");
    edges.push_back(e);
    if (eol == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing \"k n\" header");
  return Hypergraph(k, n, std::move(edges));
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << h.k() << ' ' << h.n() << '\n';
  for (const VertexSet& e : h.edges()) {
    bool first = true;
    e.for_each([&](Vertex v) {
      if (!first) out << ' ';
      out << v;
      first = false;
    });
    out << '\n';
  }
  return out.str();
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

}  // namespace hyperclique
