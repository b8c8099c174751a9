#include "joindet/commands.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "joindet/cycle_oracle.hpp"
#include "joindet/digraph.hpp"
#include "joindet/graph_io.hpp"
#include "joindet/int_matrix.hpp"
#include "joindet/join_algebra.hpp"
#include "joindet/pairs.hpp"
#include "joindet/random_graphs.hpp"

namespace joindet {

namespace {

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Digraph materialize_chain(const Digraph& g, unsigned long long joins,
                          int arity) {
  Digraph acc = g;
  for (unsigned long long i = 0; i < joins; ++i) acc = j_join(acc, g, arity);
  return acc;
}

unsigned long long binom(int n, int k) {
  unsigned long long acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

long long elapsed_micros(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void run_verify(int arity, int samples, unsigned long long seed,
                std::ostream& out) {
  if (samples < 1) throw std::invalid_argument("--samples must be >= 1");

  const std::vector<ModPair> table = enumerate_pairs(arity);
  if (table.size() != binom(2 * arity, arity))
    throw VerificationFailure("pair table size is not C(2j, j)");
  if (!(table.front() == ModPair{}))
    throw VerificationFailure("pair table does not start at (empty, empty)");
  for (const ModPair& p : table) {
    if (!is_allowable(p.handles, arity, p.removals))
      throw VerificationFailure("enumerated pair is not allowable");
    if (!(conjugate_pair(conjugate_pair(p)) == p))
      throw VerificationFailure("conjugation is not an involution");
  }
  const IntMatrix e = build_sign_matrix(arity);
  if (!(mat_mul(e, e) == IntMatrix::identity(table.size())))
    throw VerificationFailure("sign matrix squared is not the identity");
  out << "pair table: ok (" << table.size() << " pairs)\n";

  auto fail = [&](const char* what, int sample) {
    throw VerificationFailure(std::string(what) + " failed at sample " +
                              std::to_string(sample) + " (seed " +
                              std::to_string(seed) + ")");
  };

  std::mt19937_64 rng(seed);
  int small_samples = 0;
  for (int s = 1; s <= samples; ++s) {
    const Digraph g =
        random_digraph(rng, 2 * arity + random_int(rng, 0, 4), 400);
    const Digraph h =
        random_digraph(rng, 2 * arity + random_int(rng, 0, 4), 400);
    const Digraph joined = j_join(g, h, arity, true);

    const mpz_class direct = graph_det(joined);
    if (decompose_join_det(g, h, arity) != direct) fail("decomposition sum", s);
    if (join_det_via_phi(g, h, arity) != direct)
      fail("sandwich determinant", s);

    const IntMatrix pg = phi(g, arity);
    const IntMatrix ph = phi(h, arity);
    const IntMatrix pj = phi(joined, arity);
    if (!(pj == sandwich_product(pg, e, ph))) fail("homomorphism", s);
    if (!(mat_mul(e, pj) == mat_mul(mat_mul(e, pg), mat_mul(e, ph))))
      fail("monoid form", s);

    if (!(parse_graph(serialize_graph(g)) == g)) fail("round trip", s);

    if (g.order() <= 8) {
      ++small_samples;
      const mpz_class d = graph_det(g);
      if (det_permutations(g) != d || det_cycle_covers(g) != d)
        fail("oracle agreement", s);
    }

    const unsigned long long n = rng() % 4;
    if (!(sandwich_power(pg, e, n + 1) ==
          sandwich_product(sandwich_power(pg, e, n), e, pg)))
      fail("sandwich power step", s);
  }
  out << "decomposition: ok (" << samples << " samples)\n";
  out << "homomorphism and monoid form: ok (" << samples << " samples)\n";
  out << "serialize round trip: ok (" << samples << " samples)\n";
  out << "small-order oracles: ok (" << small_samples << " samples)\n";
  out << "sandwich powers: ok (" << samples << " samples)\n";
  out << "verify: ok\n";
}

void run_bench(int arity, long long t_max, const Digraph& g,
               std::ostream& out) {
  if (t_max < 1) throw std::invalid_argument("-t must be >= 1");
  std::vector<long long> sizes;
  for (long long t = 1; t < t_max; t *= 2) sizes.push_back(t);
  sizes.push_back(t_max);

  out << "t,naive_micros,transfer_micros,det\n";
  for (const long long t : sizes) {
    const Digraph whole = materialize_chain(g, t - 1, arity);
    const auto naive_start = std::chrono::steady_clock::now();
    const mpz_class naive = graph_det(whole);
    const long long naive_us = elapsed_micros(naive_start);

    const std::vector<Digraph> copies(static_cast<std::size_t>(t), g);
    const auto transfer_start = std::chrono::steady_clock::now();
    const mpz_class transfer = chain_det(copies, arity);
    const long long transfer_us = elapsed_micros(transfer_start);

    if (naive != transfer)
      throw VerificationFailure("bench determinant mismatch at t=" +
                                std::to_string(t));
    out << t << ',' << naive_us << ',' << transfer_us << ','
        << transfer.get_str() << '\n';
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Exact determinant algebra for chained digraph joins",
               "joindet"};
  app.require_subcommand(1);

  int arity = 1;
  std::string file_a;
  std::string file_b;
  std::string out_path;
  std::vector<std::string> files;
  unsigned long long copies = 0;
  long klass = 0;
  long long bench_t = 1;
  int workers = 1;
  int samples = 25;
  unsigned long long seed = 12345;
  bool as_json = false;
  bool strict = false;
  bool naive = false;

  CLI::App* det = app.add_subcommand("det", "Adjacency determinant of a graph file");
  det->add_option("file", file_a, "graph file")->required();

  CLI::App* join = app.add_subcommand("join", "Join two graphs and print the result");
  join->add_option("-j,--arity", arity, "join arity")->required();
  join->add_option("file1", file_a, "left graph file")->required();
  join->add_option("file2", file_b, "right graph file")->required();
  join->add_option("-o,--output", out_path, "write the joined graph here instead of stdout");
  join->add_flag("--strict", strict, "require both operands to have order >= 2*arity");

  CLI::App* phi_cmd = app.add_subcommand("phi", "Matrix of all modified determinants");
  phi_cmd->add_option("-j,--arity", arity, "join arity")->required();
  phi_cmd->add_option("file", file_a, "graph file")->required();
  phi_cmd->add_flag("--json", as_json, "emit JSON instead of plain rows");
  phi_cmd->add_option("--workers", workers, "threads for the matrix entries");

  CLI::App* chain = app.add_subcommand("chain", "Determinant of a left-to-right chain of joins");
  chain->add_option("-j,--arity", arity, "join arity")->required();
  chain->add_option("files", files, "graph files, joined in order")->required();

  CLI::App* power = app.add_subcommand("power", "Determinant of n joins of a graph with itself");
  power->add_option("-j,--arity", arity, "join arity")->required();
  power->add_option("-n,--joins", copies, "number of joins")->required();
  power->add_option("file", file_a, "graph file")->required();
  power->add_flag("--naive", naive,
                  "also materialize the chain and cross-check "
                  "(needs (n+1)*order <= 1000)");

  CLI::App* classify_cmd = app.add_subcommand("classify", "Class of a graph under the join algebra");
  classify_cmd->add_option("-j,--arity", arity, "join arity")->required();
  classify_cmd->add_option("file", file_a, "graph file")->required();

  CLI::App* enum_pairs = app.add_subcommand("enum-pairs", "List the allowable modification pairs");
  enum_pairs->add_option("-j,--arity", arity, "join arity")->required();

  CLI::App* mk_id = app.add_subcommand("make-identity", "Canonical identity-class representative");
  mk_id->add_option("-j,--arity", arity, "join arity")->required();

  CLI::App* mk_n = app.add_subcommand("make-nclass", "Canonical n-class representative");
  mk_n->add_option("-j,--arity", arity, "join arity")->required();
  mk_n->add_option("-n,--nclass", klass, "class index")->required();

  CLI::App* verify = app.add_subcommand("verify", "Randomized invariant suite");
  verify->add_option("-j,--arity", arity, "join arity")->required();
  verify->add_option("--samples", samples, "random graph pairs to draw");
  verify->add_option("--seed", seed, "random seed");

  CLI::App* bench = app.add_subcommand("bench", "Transfer-matrix vs naive chain timings, CSV");
  bench->add_option("-j,--arity", arity, "join arity")->required();
  bench->add_option("-t,--max-copies", bench_t, "largest chain length")->required();
  bench->add_option("file", file_a, "graph file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (app.got_subcommand(det)) {
      out << graph_det(load_graph_file(file_a)).get_str() << '\n';
    } else if (app.got_subcommand(join)) {
      const Digraph joined = j_join(load_graph_file(file_a),
                                    load_graph_file(file_b), arity, strict);
      const std::string text = serialize_graph(joined);
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream sink(out_path, std::ios::binary);
        if (!sink) throw std::runtime_error("cannot write file: " + out_path);
        sink << text;
      }
    } else if (app.got_subcommand(phi_cmd)) {
      const IntMatrix m = phi(load_graph_file(file_a), arity, workers);
      if (as_json)
        out << to_json(m) << '\n';
      else
        out << to_text(m);
    } else if (app.got_subcommand(chain)) {
      std::vector<Digraph> graphs;
      graphs.reserve(files.size());
      for (const std::string& f : files) graphs.push_back(load_graph_file(f));
      out << chain_det(graphs, arity).get_str() << '\n';
    } else if (app.got_subcommand(power)) {
      const Digraph g = load_graph_file(file_a);
      const mpz_class fast = nfold_det(g, copies, arity);
      if (naive) {
        const unsigned long long total_order =
            (copies + 1) * static_cast<unsigned long long>(g.order());
        if (total_order > 1000)
          throw std::invalid_argument(
              "--naive materializes the chain; (n+1)*order must stay <= 1000");
        const mpz_class direct =
            graph_det(materialize_chain(g, copies, arity));
        if (direct != fast)
          throw VerificationFailure(
              "power: transfer and naive determinants disagree (" +
              fast.get_str() + " vs " + direct.get_str() + ")");
      }
      out << fast.get_str() << '\n';
    } else if (app.got_subcommand(classify_cmd)) {
      out << classify(load_graph_file(file_a), arity).to_string() << '\n';
    } else if (app.got_subcommand(enum_pairs)) {
      for (const ModPair& p : enumerate_pairs(arity))
        out << format_pair(p) << ' ' << format_pair_sign(p) << '\n';
    } else if (app.got_subcommand(mk_id)) {
      out << serialize_graph(make_identity(arity));
    } else if (app.got_subcommand(mk_n)) {
      out << serialize_graph(make_n_class(klass, arity));
    } else if (app.got_subcommand(verify)) {
      run_verify(arity, samples, seed, out);
    } else if (app.got_subcommand(bench)) {
      run_bench(arity, bench_t, load_graph_file(file_a), out);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const VerificationFailure& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace joindet
