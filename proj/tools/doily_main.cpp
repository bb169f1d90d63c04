// Command-line surface: detect / oracle / gen / probe / bench / selftest.
// Exit codes: 0 = found (or success), 1 = not found (or failed criteria),
// 2 = error.  Existence answers are carried by the exit code so the tool
// composes in shell pipelines.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "doily/detector.hpp"
#include "doily/frame.hpp"
#include "doily/gen.hpp"
#include "doily/io.hpp"
#include "doily/jsonio.hpp"
#include "doily/probes.hpp"
#include "doily/recognition.hpp"
#include "doily/selftest.hpp"

namespace {

constexpr int exit_found = 0;
constexpr int exit_not_found = 1;
constexpr int exit_error = 2;

struct CommonOpts {
  std::string input = "-";
  std::string format = "edgelist";
  std::string output = "json";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_output = true) {
  cmd->add_option("-i,--input", opts.input, "input file, or - for standard input");
  cmd->add_option("--format", opts.format, "input format")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  if (with_output)
    cmd->add_option("--output", opts.output, "output style")
        ->check(CLI::IsMember({"json", "text"}));
}

doily::Graph load_graph(const CommonOpts& opts) {
  doily::GraphFormat format = doily::parse_format(opts.format);
  if (opts.input == "-") return doily::read_graph(std::cin, format);
  std::ifstream in(opts.input, std::ios::binary);
  if (!in) throw doily::ParseError("cannot open input: " + opts.input);
  return doily::read_graph(in, format);
}

int env_threads() {
  const char* env = std::getenv("DOILY_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n >= 1 ? n : 1;
}

int cmd_detect(const CommonOpts& opts, bool deterministic, int threads_flag) {
  int threads = threads_flag > 0 ? threads_flag : env_threads();
  if (deterministic && threads > 1) {
    std::cerr << "error: --deterministic forbids --threads > 1\n";
    return exit_error;
  }
  if (deterministic) threads = 1;
  doily::Graph g = load_graph(opts);
  doily::DetectorOutcome outcome = doily::run_full(g, {.threads = threads});
  if (opts.output == "json") {
    std::cout << doily::detector_json(outcome);
  } else if (outcome.found()) {
    std::cout << "doily found (" << outcome.certificate->size() << " vertices, step "
              << doily::step_name(outcome.step) << "):";
    for (doily::Vertex v : outcome.certificate->vertex_list()) std::cout << ' ' << v;
    std::cout << '\n';
  } else {
    std::cout << "no doily\n";
  }
  return outcome.found() ? exit_found : exit_not_found;
}

int cmd_oracle(const CommonOpts& opts, int guard, bool all) {
  doily::Graph g = load_graph(opts);
  doily::OracleReport report = doily::oracle_report(g, all, guard);
  if (opts.output == "json") {
    std::cout << doily::oracle_json(report);
  } else if (report.exists) {
    std::cout << "doily exists, minimum size " << *report.min_size;
    if (report.min_doilies) std::cout << ", " << report.min_doilies->size() << " minimum doilies";
    std::cout << '\n';
  } else {
    std::cout << "no doily\n";
  }
  return report.exists ? exit_found : exit_not_found;
}

int cmd_probe(const CommonOpts& opts, const std::string& cert_path, int vertex,
              std::vector<int> pair) {
  doily::Graph g = load_graph(opts);
  std::ifstream in(cert_path, std::ios::binary);
  if (!in) throw doily::ParseError("cannot open certificate: " + cert_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  doily::DoilyCertificate k = doily::certificate_from_json(buf.str(), g);
  if (vertex >= 0)
    std::cout << doily::profile_json(doily::attachment_profile(g, k, vertex));
  else if (pair.size() == 2)
    std::cout << doily::relation_json(doily::pair_relation(g, k, pair[0], pair[1]));
  else
    std::cout << doily::probe_report_json(g, k);
  return exit_found;
}

int cmd_bench(const CommonOpts& opts) {
  doily::Graph g = load_graph(opts);
  doily::CandidateStream stream(g);
  doily::BenchReport report;
  doily::DetectStats stats;
  while (auto pair = stream.next()) {
    ++report.candidates_tried;
    if (doily::detect_from_candidate(*pair, &stats)) ++report.doilies_found;
  }
  report.stream = stream.stats();
  report.bfs_calls = stats.bfs_calls;
  std::cout << doily::bench_json(report);
  return exit_found;
}

int cmd_selftest(bool quick, const std::string& output) {
  doily::AcceptanceOptions options;
  options.quick = quick;
  if (output == "text") options.log = &std::cout;
  std::vector<doily::CriterionResult> results = doily::run_acceptance(options);
  if (output == "json") std::cout << doily::acceptance_json(results);
  return doily::all_passed(results) ? exit_found : exit_not_found;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"induced net subdivision (doily) detector"};
  app.require_subcommand(1);

  CommonOpts detect_opts;
  bool deterministic = false;
  int threads_flag = 0;
  CLI::App* detect = app.add_subcommand("detect", "decide whether the graph contains a doily");
  add_common(detect, detect_opts);
  detect->add_flag("--deterministic", deterministic, "force the sequential pipeline");
  detect->add_option("--threads", threads_flag, "candidate-stream workers (default $DOILY_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  CommonOpts oracle_opts;
  int guard = 22;
  bool oracle_all = false;
  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive ground-truth answer (small graphs)");
  add_common(oracle, oracle_opts);
  oracle->add_option("--oracle-limit", guard, "largest vertex count the oracle accepts");
  oracle->add_flag("--all", oracle_all, "enumerate all minimum doilies");

  CLI::App* gen = app.add_subcommand("gen", "emit a generator instance as an edge list");
  gen->require_subcommand(1);
  int gnp_n = 0;
  double gnp_p = 0.0;
  std::uint32_t gnp_seed = 0;
  CLI::App* gen_gnp = gen->add_subcommand("gnp", "Erdos-Renyi G(n, p)");
  gen_gnp->add_option("--n", gnp_n, "vertex count")->required();
  gen_gnp->add_option("--p", gnp_p, "edge probability")->required();
  gen_gnp->add_option("--seed", gnp_seed, "PRNG seed")->required();

  int pl_cycle = 0, pl_extra = 0;
  double pl_p = 0.0;
  std::uint32_t pl_seed = 0;
  std::vector<int> pl_tufts;
  CLI::App* gen_planted = gen->add_subcommand("planted", "doily plus random background");
  gen_planted->add_option("--cycle-length", pl_cycle, "planted cycle length")->required();
  gen_planted->add_option("--tufts", pl_tufts, "three attach positions on the cycle")
      ->expected(3)
      ->required();
  gen_planted->add_option("--extra", pl_extra, "background vertex count");
  gen_planted->add_option("--p", pl_p, "background edge probability");
  gen_planted->add_option("--seed", pl_seed, "PRNG seed");

  int ns_max = 0, ns_index = -1;
  bool ns_list = false;
  CLI::App* gen_netsub = gen->add_subcommand("netsub", "net subdivisions up to a size");
  gen_netsub->add_option("--max-n", ns_max, "largest vertex count")->required();
  gen_netsub->add_option("--index", ns_index, "emit the profile at this position");
  gen_netsub->add_flag("--list", ns_list, "list profiles instead of emitting a graph");

  CommonOpts probe_opts;
  std::string cert_path;
  int probe_vertex = -1;
  std::vector<int> probe_pair;
  CLI::App* probe = app.add_subcommand("probe", "attachment profiles and relations for a certificate");
  add_common(probe, probe_opts, /*with_output=*/false);
  probe->add_option("--certificate", cert_path, "certificate JSON from detect/oracle")->required();
  probe->add_option("--vertex", probe_vertex, "profile a single vertex");
  probe->add_option("--pair", probe_pair, "relation of two major vertices")->expected(2);

  CommonOpts bench_opts;
  CLI::App* bench = app.add_subcommand("bench", "exhaust the candidate stream and report counters");
  add_common(bench, bench_opts, /*with_output=*/false);

  bool quick = false;
  std::string selftest_output = "text";
  CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_flag("--quick", quick, "reduced scales");
  selftest->add_option("--output", selftest_output, "output style")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_error;
  }

  try {
    if (detect->parsed()) return cmd_detect(detect_opts, deterministic, threads_flag);
    if (oracle->parsed()) return cmd_oracle(oracle_opts, guard, oracle_all);
    if (gen->parsed()) {
      if (gen_gnp->parsed()) {
        doily::write_edge_list(std::cout, doily::gnp(gnp_n, gnp_p, gnp_seed));
        return exit_found;
      }
      if (gen_planted->parsed()) {
        if (pl_tufts.size() != 3) throw std::invalid_argument("--tufts needs three positions");
        doily::PlantedDoily inst = doily::planted_doily(
            pl_cycle, {pl_tufts[0], pl_tufts[1], pl_tufts[2]}, pl_extra, pl_p, pl_seed);
        doily::write_edge_list(std::cout, inst.graph);
        return exit_found;
      }
      std::vector<doily::SubdivisionProfile> profiles = doily::net_subdivision_profiles_upto(ns_max);
      if (ns_list) {
        for (size_t i = 0; i < profiles.size(); ++i) {
          std::cout << i << ' ' << profiles[i].vertex_count();
          for (const auto& [d, c] : profiles[i].arms) std::cout << ' ' << d << ' ' << c;
          std::cout << '\n';
        }
        return exit_found;
      }
      if (ns_index < 0 || ns_index >= static_cast<int>(profiles.size()))
        throw std::invalid_argument("netsub: pass --list or a valid --index");
      doily::write_edge_list(std::cout, doily::build_net_subdivision(profiles[static_cast<size_t>(ns_index)]));
      return exit_found;
    }
    if (probe->parsed()) return cmd_probe(probe_opts, cert_path, probe_vertex, probe_pair);
    if (bench->parsed()) return cmd_bench(bench_opts);
    return cmd_selftest(quick, selftest_output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
}
