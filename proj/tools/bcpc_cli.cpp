#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcpc/abenum.hpp"
#include "bcpc/community.hpp"
#include "bcpc/gen.hpp"
#include "bcpc/mbag.hpp"
#include "bcpc/oracle.hpp"
#include "bcpc/pbcpc.hpp"

namespace {

using namespace bcpc;

const std::vector<std::string> kAlgos = {"mbag", "pbcpc", "pbcpc-plus",
                                         "ab",   "ab-m",  "ab-p"};

CommunityResult run_algo(const std::string& tag, const BipartiteGraph& g,
                         int alpha, int beta) {
  if (tag == "mbag") return detect_mbag(g, alpha, beta);
  if (tag == "pbcpc") return detect_pbcpc(g, alpha, beta);
  if (tag == "pbcpc-plus") return detect_pbcpc_plus(g, alpha, beta);
  if (tag == "ab") return detect_ab(g, alpha, beta);
  if (tag == "ab-m") return detect_ab_m(g, alpha, beta);
  if (tag == "ab-p") return detect_ab_p(g, alpha, beta);
  throw std::invalid_argument("unknown algorithm '" + tag + "'");
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

std::string render_communities(const std::vector<std::vector<Biclique>>& parts) {
  std::ostringstream out;
  write_communities(out, parts);
  return out.str();
}

// Raw label pairs, same comment and arity rules as the graph loader.
std::vector<std::pair<long long, long long>> read_raw_edges(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<std::pair<long long, long long>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '%' || line[start] == '#') continue;
    std::istringstream fields(line);
    long long a = 0, b = 0;
    std::string rest;
    if (!(fields >> a >> b) || (fields >> rest) || a < 0 || b < 0)
      throw ParseError("expected two non-negative integers", line_no);
    edges.emplace_back(a, b);
  }
  return edges;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::vector<std::string> parse_str_list(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

int cmd_detect(const std::string& input, const std::string& output,
               const std::string& algo, int alpha, int beta, bool swap_sides,
               const std::string& stats_path, const std::string& dump_path,
               bool count_only) {
  BipartiteGraph g = load_edge_list_file(input, swap_sides);
  if (count_only) {
    std::cout << count_ab(g, alpha, beta) << "\n";
    return 0;
  }
  if (output.empty()) throw std::invalid_argument("detect needs --output");
  CommunityResult result = run_algo(algo, g, alpha, beta);
  auto out = open_out(output);
  write_communities(out, result.communities());
  if (!stats_path.empty()) {
    auto stats_out = open_out(stats_path);
    write_stats(stats_out, result.stats);
  }
  if (!dump_path.empty()) {
    auto dump_out = open_out(dump_path);
    write_bicliques(dump_out, result.bicliques);
  }
  return 0;
}

int cmd_verify(const std::string& input, int alpha, int beta,
               const std::string& expect_path) {
  BipartiteGraph g = load_edge_list_file(input, false);
  std::vector<std::vector<Biclique>> reference;
  try {
    reference = oracle_bcpc(g, alpha, beta);
  } catch (const OracleLimitError& e) {
    std::cerr << "refused: " << e.what() << "\n"
              << "hint: the verifier is for desk-scale inputs; shrink the graph "
                 "or sample it with 'gen --kind sample'\n";
    return 2;
  }

  bool pass = true;
  std::vector<CommunityResult> runs;
  for (const std::string& tag : kAlgos) {
    runs.push_back(run_algo(tag, g, alpha, beta));
    bool same = runs.back().communities() == reference;
    std::cout << "partition " << tag << (same ? ": ok" : ": MISMATCH") << "\n";
    pass = pass && same;
  }

  const RunStats& pb = runs[1].stats;        // pbcpc
  const RunStats& pbp = runs[2].stats;       // pbcpc-plus
  bool counts = pb.n_biclique >= pb.pbcpc && pb.pbcpc >= pbp.pbcpc_plus &&
                pbp.pbcpc_plus >= pbp.bcpc;
  std::cout << "counts n_biclique=" << pb.n_biclique << " pbcpc=" << pb.pbcpc
            << " pbcpc_plus=" << pbp.pbcpc_plus << " bcpc=" << pbp.bcpc
            << (counts ? ": ok" : ": MISMATCH") << "\n";
  pass = pass && counts;

  std::uint64_t nodes_ab = runs[3].stats.tree_nodes;
  std::uint64_t nodes_m = runs[4].stats.tree_nodes;
  std::uint64_t nodes_p = runs[5].stats.tree_nodes;
  bool nodes = nodes_p <= nodes_m && nodes_m <= nodes_ab;
  std::cout << "tree_nodes ab=" << nodes_ab << " ab-m=" << nodes_m
            << " ab-p=" << nodes_p << (nodes ? ": ok" : ": MISMATCH") << "\n";
  pass = pass && nodes;

  if (!expect_path.empty()) {
    std::ifstream expect(expect_path);
    if (!expect) throw std::runtime_error("cannot open '" + expect_path + "'");
    std::istringstream got(render_communities(reference));
    std::string want_line, got_line;
    std::size_t line_no = 0;
    bool same = true;
    while (true) {
      bool has_want = static_cast<bool>(std::getline(expect, want_line));
      bool has_got = static_cast<bool>(std::getline(got, got_line));
      ++line_no;
      if (!has_want && !has_got) break;
      if (!has_want || !has_got || want_line != got_line) {
        std::cout << "expected file diverges at community " << line_no << ":\n"
                  << "  expected: " << (has_want ? want_line : "<end>") << "\n"
                  << "  computed: " << (has_got ? got_line : "<end>") << "\n";
        same = false;
        break;
      }
    }
    std::cout << "expected file" << (same ? ": ok" : ": MISMATCH") << "\n";
    pass = pass && same;
  }

  std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int cmd_gen(const std::string& kind, std::uint64_t seed, const std::string& out_path,
            int nu, int nv, double p, int blocks, int size, int overlap,
            const std::string& input, double frac) {
  auto out = open_out(out_path);
  if (kind == "random") {
    for (auto [u, v] : gen_random_edges(nu, nv, p, seed)) out << u << ' ' << v << '\n';
  } else if (kind == "blocks") {
    for (auto [u, v] : gen_block_chain_edges(blocks, size, overlap))
      out << u << ' ' << v << '\n';
  } else if (kind == "sample") {
    if (input.empty()) throw std::invalid_argument("sample needs --input");
    for (auto [u, v] : sample_edges(read_raw_edges(input), frac, seed))
      out << u << ' ' << v << '\n';
  } else {
    throw std::invalid_argument("unknown kind '" + kind + "'");
  }
  return 0;
}

int cmd_bench(const std::string& input, const std::string& alphas,
              const std::string& betas, const std::string& algos,
              const std::string& out_path) {
  BipartiteGraph g = load_edge_list_file(input, false);
  auto out = open_out(out_path);
  out << "algo,alpha,beta,wall_ms,tree_nodes,bcpc,n_biclique,filtered,pbcpc,"
         "pbcpc_plus,adjacency_tests,unions\n";
  for (const std::string& tag : parse_str_list(algos)) {
    for (int alpha : parse_int_list(alphas)) {
      for (int beta : parse_int_list(betas)) {
        CommunityResult r = run_algo(tag, g, alpha, beta);
        const RunStats& s = r.stats;
        out << tag << ',' << alpha << ',' << beta << ',' << s.wall_ms << ','
            << s.tree_nodes << ',' << s.bcpc << ',' << s.n_biclique << ','
            << s.filtered << ',' << s.pbcpc << ',' << s.pbcpc_plus << ','
            << s.adjacency_tests << ',' << s.unions << '\n';
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biclique percolation community detection on bipartite graphs"};
  app.require_subcommand(1);

  // detect
  std::string in_path, out_path, algo = "ab-p", stats_path, dump_path;
  int alpha = 1, beta = 1;
  bool swap_sides = false, count_only = false;
  CLI::App* detect = app.add_subcommand("detect", "Run one detection algorithm");
  detect->add_option("--input", in_path)->required();
  detect->add_option("--output", out_path);
  detect->add_option("--algo", algo)->check(CLI::IsMember(kAlgos));
  detect->add_option("--alpha", alpha)->check(CLI::PositiveNumber);
  detect->add_option("--beta", beta)->check(CLI::PositiveNumber);
  detect->add_flag("--swap-sides", swap_sides);
  detect->add_option("--stats", stats_path);
  detect->add_option("--dump-bicliques", dump_path);
  detect->add_flag("--count-ab", count_only,
                   "Print the (alpha,beta)-biclique count and skip detection");

  // verify
  std::string verify_in, expect_path;
  int v_alpha = 1, v_beta = 1;
  CLI::App* verify =
      app.add_subcommand("verify", "Cross-check all algorithms against brute force");
  verify->add_option("--input", verify_in)->required();
  verify->add_option("--alpha", v_alpha)->check(CLI::PositiveNumber);
  verify->add_option("--beta", v_beta)->check(CLI::PositiveNumber);
  verify->add_option("--expect", expect_path,
                     "Community file to compare against the reference partition");

  // gen
  std::string kind, gen_out, gen_in;
  std::uint64_t seed = 0;
  int nu = 8, nv = 8, blocks = 2, size = 3, overlap = 1;
  double p = 0.3, frac = 1.0;
  CLI::App* gen = app.add_subcommand("gen", "Generate or sample edge lists");
  gen->add_option("--kind", kind)->required()->check(CLI::IsMember({"random", "blocks", "sample"}));
  gen->add_option("--seed", seed);
  gen->add_option("--out", gen_out)->required();
  gen->add_option("--nu", nu);
  gen->add_option("--nv", nv);
  gen->add_option("--p", p);
  gen->add_option("--blocks", blocks);
  gen->add_option("--size", size);
  gen->add_option("--overlap", overlap);
  gen->add_option("--input", gen_in);
  gen->add_option("--frac", frac);

  // bench
  std::string bench_in, bench_out, alphas = "2", betas = "2", algos_list = "mbag,ab-p";
  CLI::App* bench = app.add_subcommand("bench", "Run a grid of detections, CSV out");
  bench->add_option("--input", bench_in)->required();
  bench->add_option("--alphas", alphas);
  bench->add_option("--betas", betas);
  bench->add_option("--algos", algos_list);
  bench->add_option("--out", bench_out)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (detect->parsed())
      return cmd_detect(in_path, out_path, algo, alpha, beta, swap_sides,
                        stats_path, dump_path, count_only);
    if (verify->parsed()) return cmd_verify(verify_in, v_alpha, v_beta, expect_path);
    if (gen->parsed())
      return cmd_gen(kind, seed, gen_out, nu, nv, p, blocks, size, overlap,
                     gen_in, frac);
    if (bench->parsed())
      return cmd_bench(bench_in, alphas, betas, algos_list, bench_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
