#include <doctest.h>

#include <doily/gen.hpp>
#include <doily/io.hpp>
#include <doily/jsonio.hpp>
#include <doily/recognition.hpp>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

using namespace doily;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("doily_cli_" + std::to_string(getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

fs::path write_file(const char* name, const std::string& text) {
  fs::path p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p;
}

RunResult run_cli(const std::string& args) {
  fs::path out = scratch_dir() / "stdout.txt";
  fs::path err = scratch_dir() / "stderr.txt";
  std::string cmd = std::string(DOILY_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                    err.string();
  int rc = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  res.out = slurp(out);
  res.err = slurp(err);
  return res;
}

std::string edge_text(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace

TEST_CASE("detect answers yes, no and error through exit codes") {
  auto net = write_file("net.edges", "6 6\n0 1\n1 2\n2 0\n0 3\n1 4\n2 5\n");
  auto yes = run_cli("detect -i " + net.string());
  CHECK(yes.exit_code == 0);
  json j = json::parse(yes.out);
  CHECK(j.at("found") == true);
  CHECK(j.at("step") == "small-search");
  CHECK(j.at("vertices") == json::array({0, 1, 2, 3, 4, 5}));

  auto text = run_cli("detect -i " + net.string() + " --output text");
  CHECK(text.exit_code == 0);
  CHECK(text.out == "doily found (6 vertices, step small-search): 0 1 2 3 4 5\n");

  auto iso = write_file("iso.edges", "2 0\n");
  auto no = run_cli("detect -i " + iso.string() + " --output text");
  CHECK(no.exit_code == 1);
  CHECK(no.out == "no doily\n");

  auto loop = write_file("loop.edges", "2 1\n0 0\n");
  auto bad = run_cli("detect -i " + loop.string());
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("self-loop") != std::string::npos);

  auto missing = run_cli("detect -i " + (scratch_dir() / "absent.edges").string());
  CHECK(missing.exit_code == 2);

  auto conflict = run_cli("detect -i " + net.string() + " --deterministic --threads 2");
  CHECK(conflict.exit_code == 2);
  CHECK(conflict.err.find("--deterministic") != std::string::npos);

  CHECK(run_cli("detect --no-such-flag").exit_code == 2);
}

TEST_CASE("detect accepts stdin and graph6 input") {
  auto net = write_file("net.edges", "6 6\n0 1\n1 2\n2 0\n0 3\n1 4\n2 5\n");
  auto piped = run_cli("detect -i - < " + net.string());
  CHECK(piped.exit_code == 0);

  auto k4 = write_file("k4.g6", "C~\n");
  auto miss = run_cli("detect -i " + k4.string() + " --format graph6");
  CHECK(miss.exit_code == 1);
}

TEST_CASE("oracle subcommand mirrors the exhaustive report") {
  auto net = write_file("net.edges", "6 6\n0 1\n1 2\n2 0\n0 3\n1 4\n2 5\n");
  auto yes = run_cli("oracle -i " + net.string() + " --output text");
  CHECK(yes.exit_code == 0);
  CHECK(yes.out == "doily exists, minimum size 6\n");

  auto all = run_cli("oracle -i " + net.string() + " --all");
  CHECK(all.exit_code == 0);
  json j = json::parse(all.out);
  CHECK(j.at("count") == 1);
  CHECK(j.at("min_doilies").size() == 1);

  std::ostringstream nine;
  nine << "9 9\n";
  for (int i = 0; i < 9; ++i) nine << i << " " << (i + 1) % 9 << "\n";
  auto c9 = write_file("c9.edges", nine.str());
  CHECK(run_cli("oracle -i " + c9.string()).exit_code == 1);

  auto big = write_file("big.edges", "30 0\n");
  auto guarded = run_cli("oracle -i " + big.string());
  CHECK(guarded.exit_code == 2);
  CHECK(guarded.err.find("guard") != std::string::npos);
  // A raised limit admits the graph; beyond the hard cap it still refuses.
  CHECK(run_cli("oracle -i " + big.string() + " --oracle-limit 40").exit_code == 1);
  auto huge = write_file("huge.edges", "31 0\n");
  CHECK(run_cli("oracle -i " + huge.string() + " --oracle-limit 40").exit_code == 2);
}

TEST_CASE("gen gnp emits exactly the library graph") {
  auto got = run_cli("gen gnp --n 10 --p 0.3 --seed 7");
  CHECK(got.exit_code == 0);
  CHECK(got.out == edge_text(gnp(10, 0.3, 7)));
  CHECK(run_cli("gen gnp --n -1 --p 0.3 --seed 7").exit_code == 2);
}

TEST_CASE("gen planted output is detectable") {
  auto got = run_cli("gen planted --cycle-length 8 --tufts 0 3 5 --extra 4 --p 0.4 --seed 11");
  CHECK(got.exit_code == 0);
  CHECK(got.out == edge_text(planted_doily(8, {0, 3, 5}, 4, 0.4, 11).graph));

  auto planted = write_file("planted.edges", got.out);
  CHECK(run_cli("detect -i " + planted.string()).exit_code == 0);
}

TEST_CASE("gen netsub lists profiles and emits members") {
  auto listed = run_cli("gen netsub --max-n 7 --list");
  CHECK(listed.exit_code == 0);
  CHECK(listed.out ==
        "0 6 1 1 1 1 1 1\n"
        "1 7 1 1 1 1 1 2\n"
        "2 7 1 1 1 1 2 1\n");

  auto first = run_cli("gen netsub --max-n 7 --index 0");
  CHECK(first.exit_code == 0);
  std::istringstream in(first.out);
  Graph g = read_edge_list(in);
  CHECK(g.vertex_count() == 6);
  CHECK(is_doily(g).has_value());

  CHECK(run_cli("gen netsub --max-n 7 --index 3").exit_code == 2);
  CHECK(run_cli("gen netsub --max-n 5 --list").exit_code == 2);
}

TEST_CASE("probe consumes certificates straight from detect") {
  // Base doily plus two major vertices 12 and 13.
  std::vector<Edge> edges;
  for (int i = 0; i < 9; ++i) edges.emplace_back(i, (i + 1) % 9);
  edges.emplace_back(9, 0);
  edges.emplace_back(10, 3);
  edges.emplace_back(11, 6);
  for (Vertex h : {7, 1, 4}) edges.emplace_back(12, h);
  for (Vertex h : {7, 2, 5}) edges.emplace_back(13, h);
  Graph g = Graph::from_edge_list(14, edges);
  auto graph_file = write_file("majors.edges", edge_text(g));

  auto cert = find_doily_upto(planted_doily(9, {0, 3, 6}, 0, 0.0, 1).graph, 12);
  REQUIRE(cert.has_value());
  auto cert_file = write_file("cert.json", certificate_json(&*cert));

  auto full = run_cli("probe -i " + graph_file.string() + " --certificate " + cert_file.string());
  CHECK(full.exit_code == 0);
  json rep = json::parse(full.out);
  CHECK(rep.at("profiles").size() == 2);
  CHECK(rep.at("relations").size() == 1);

  auto one = run_cli("probe -i " + graph_file.string() + " --certificate " + cert_file.string() +
                     " --vertex 13");
  CHECK(one.exit_code == 0);
  CHECK(json::parse(one.out).at("class") == "major");

  auto pair = run_cli("probe -i " + graph_file.string() + " --certificate " + cert_file.string() +
                      " --pair 12 13");
  CHECK(pair.exit_code == 0);
  CHECK(json::parse(pair.out).at("relations").is_array());

  // Probing a vertex of the doily itself is a usage error.
  auto on_k = run_cli("probe -i " + graph_file.string() + " --certificate " + cert_file.string() +
                      " --vertex 3");
  CHECK(on_k.exit_code == 2);

  // The detect output doubles as a certificate file.
  auto net = write_file("net.edges", "6 6\n0 1\n1 2\n2 0\n0 3\n1 4\n2 5\n");
  auto detected = run_cli("detect -i " + net.string());
  REQUIRE(detected.exit_code == 0);
  auto raw = write_file("raw_cert.json", detected.out);
  auto round = run_cli("probe -i " + net.string() + " --certificate " + raw.string());
  CHECK(round.exit_code == 0);
  CHECK(json::parse(round.out).at("profiles").empty());

  // A certificate for the wrong graph is rejected.
  auto mismatch = run_cli("probe -i " + net.string() + " --certificate " + cert_file.string());
  CHECK(mismatch.exit_code == 2);
}

TEST_CASE("bench prints stream counters") {
  std::ostringstream nine;
  nine << "9 9\n";
  for (int i = 0; i < 9; ++i) nine << i << " " << (i + 1) % 9 << "\n";
  auto c9 = write_file("c9.edges", nine.str());
  auto got = run_cli("bench -i " + c9.string());
  CHECK(got.exit_code == 0);
  json j = json::parse(got.out);
  CHECK(j.at("triples") == 9 * 8 * 7);
  CHECK(j.at("pairs_emitted") == 0);
  CHECK(j.at("doilies_found") == 0);
}

TEST_CASE("quick selftest passes end to end") {
  auto got = run_cli("selftest --quick --output json");
  CHECK(got.exit_code == 0);
  json j = json::parse(got.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 11);
  for (const auto& r : j) CHECK(r.at("passed") == true);
}
