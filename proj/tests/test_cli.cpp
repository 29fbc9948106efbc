#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "hyperclique/cli.hpp"

using namespace hyperclique;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("hyperclique_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

nlohmann::json without_time(std::string text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  doc.erase("wall_time_s");
  return doc;
}

}  // namespace

TEST_CASE("cli spectrum and cliques") {
  const std::string hg = write_temp("edge.hg", "3 4\n0 1 2\n");
  Outcome r = run({"spectrum", hg});
  CHECK(r.code == 0);
  CHECK(r.out.find("sizes [3,2]") != std::string::npos);
  CHECK(r.out.find("distinct 2") != std::string::npos);

  Outcome j1 = run({"spectrum", hg, "--json"}), j2 = run({"spectrum", hg, "--json"});
  CHECK(j1.code == 0);
  nlohmann::json doc = nlohmann::json::parse(j1.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["command"] == "spectrum");
  CHECK(doc["results"]["sizes"] == nlohmann::json({3, 2}));
  CHECK(doc.contains("input_digest"));
  CHECK(without_time(j1.out) == without_time(j2.out));
  CHECK(without_time(j1.out).dump() == without_time(j2.out).dump());

  r = run({"cliques", hg});
  CHECK(r.code == 0);
  CHECK(r.out == "{0,1,2}\n{0,3}\n{1,3}\n{2,3}\n");
  CHECK(nlohmann::json::parse(run({"cliques", hg, "--json"}).out)["results"]["count"] == 4);
}

TEST_CASE("cli extract-tree") {
  const std::string hg = write_temp("edge2.hg", "3 4\n0 1 2\n");
  const std::string out = (std::filesystem::temp_directory_path() / "hyperclique_cli_cert.json").string();
  Outcome r = run({"extract-tree", hg, "--json", out});
  CHECK(r.code == 0);
  std::ifstream in(out);
  nlohmann::json cert = nlohmann::json::parse(in);
  for (const char* f : {"k", "n", "C", "cliques", "parents", "A", "B", "paths", "checks"}) CHECK(cert.contains(f));
  CHECK(cert["C"] == 2);
  CHECK(cert["parents"] == nlohmann::json({-1, 0}));
  CHECK(run({"extract-tree", hg, "--C", "5"}).code == 0);
  CHECK(run({"extract-tree", hg, "--C", "1"}).code == 2);
  CHECK(run({"extract-tree", write_temp("edgeless.hg", "3 3\n"), "--C", "1"}).code == 2);
}

TEST_CASE("cli trees") {
  const std::string star = write_temp("star.tree", "4\n0\n0\n0\n");
  Outcome r = run({"validate-tree", star, "--k", "2", "--C", "0"});
  CHECK(r.code == 1);
  CHECK(r.out.find("violation") != std::string::npos);
  CHECK(run({"validate-tree", star, "--k", "1", "--C", "2"}).code == 0);
  CHECK(run({"validate-tree", star, "--k", "2"}).code == 2);
  CHECK(run({"validate-tree", write_temp("bad.tree", "3\n0\n5\n"), "--k", "2", "--C", "0"}).code == 2);

  const std::string emitted = (std::filesystem::temp_directory_path() / "hyperclique_cli_max.tree").string();
  r = run({"max-tree", "--k", "2", "--C", "1", "--emit", emitted});
  CHECK(r.code == 0);
  CHECK(r.out.find("69") != std::string::npos);
  CHECK(run({"validate-tree", emitted, "--k", "2", "--C", "1"}).code == 0);
  CHECK(run({"max-tree", "--k", "1", "--C", "3"}).out.find("size 9") != std::string::npos);
  CHECK(run({"max-tree", "--k", "3", "--C", "0"}).code == 2);
  CHECK(run({"max-tree", "--k", "2", "--C", "3", "--emit", emitted}).code == 2);
}

TEST_CASE("cli search-g") {
  Outcome r = run({"search-g", "--n", "4", "--k", "2", "--exhaustive"});
  CHECK(r.code == 0);
  CHECK(r.out.find(" g 2") != std::string::npos);
  CHECK(run({"search-g", "--n", "8", "--k", "2"}).code == 2);
  CHECK(run({"search-g", "--n", "5", "--k", "3", "--hillclimb"}).code == 2);
  CHECK(run({"search-g", "--n", "5", "--k", "3", "--hillclimb", "--exhaustive"}).code == 2);
  Outcome h1 = run({"search-g", "--n", "6", "--k", "2", "--hillclimb", "--iters", "50", "--restarts", "2", "--seed", "9"});
  Outcome h2 = run({"search-g", "--n", "6", "--k", "2", "--hillclimb", "--iters", "50", "--restarts", "2", "--seed", "9"});
  CHECK(h1.code == 0);
  CHECK(h1.out == h2.out);
  CHECK(run({"search-g", "--n", "5", "--k", "3", "--shards", "4", "--shard", "3"}).code == 0);
  CHECK(run({"search-g", "--n", "5", "--k", "3", "--shard", "3"}).code == 2);

  const std::string ck = (std::filesystem::temp_directory_path() / "hyperclique_cli_ck.json").string();
  std::filesystem::remove(ck);
  r = run({"search-g", "--n", "5", "--k", "3", "--shards", "2", "--shard", "0", "--checkpoint", ck});
  CHECK(r.out.find("1/2 shards") != std::string::npos);
  r = run({"search-g", "--n", "5", "--k", "3", "--shards", "2", "--checkpoint", ck});
  CHECK(r.out.find("2/2 shards") != std::string::npos);
  CHECK(r.out.find(" g 3") != std::string::npos);
  std::filesystem::remove(ck);
}

TEST_CASE("cli bounds and fact 1") {
  Outcome r = run({"bound", "--k", "2", "--C", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("claim23 <= 10") != std::string::npos);
  CHECK(r.out.find("claim24 <= 258") != std::string::npos);
  CHECK(run({"bound", "--k", "2", "--C", "0", "--variant", "claim24"}).out.find("claim23") == std::string::npos);
  CHECK(run({"bound", "--k", "2", "--C", "0", "--variant", "other"}).code == 2);

  CHECK(run({"fstar", "--n", "15"}).code == 0);
  CHECK(run({"fstar", "--n", "2^2^16"}).code == 0);
  CHECK(run({"fstar", "--n", "3"}).code == 1);
  CHECK(run({"fstar", "--n", "two"}).code == 2);
  CHECK(run({"fstar", "--n", "0"}).code == 2);

  r = run({"check-fact1", "--k", "3", "--n", "7", "--trials", "500", "--seed", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("counterexamples 0") != std::string::npos);
  CHECK(run({"check-fact1", "--k", "1", "--n", "7", "--trials", "5", "--seed", "4"}).code == 2);
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"spectrum", "/nonexistent/x.hg"}).code == 2);
  CHECK(run({"spectrum", write_temp("bad.hg", "3 4\n0 1\n")}).code == 2);
  CHECK(run({"spectrum", write_temp("ok.hg", "2 2\n"), "--bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
