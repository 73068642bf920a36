// Command-line front end: sampling, operator application, tree and chain
// simulation, and the statistical verification suites.
//
// Exit codes: 0 success, 1 statistical failure (verify), 2 usage or
// domain error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "pdcf/chains.hpp"
#include "pdcf/io.hpp"
#include "pdcf/operators.hpp"
#include "pdcf/rectree.hpp"
#include "pdcf/samplers.hpp"
#include "pdcf/stickmc.hpp"
#include "pdcf/suites.hpp"

namespace {

using namespace pdcf;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PD_DEFAULT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("PD_DEFAULT_SEED is not a valid seed");
    }
  }
  return 0;
}

// Runs f(replica, stream) for replica = 0..n-1 over `jobs` threads; the
// per-replica streams make the result independent of the thread count.
template <typename F>
void run_replicas(std::size_t n, unsigned jobs, std::uint64_t seed, F&& f) {
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    for (std::size_t r = 0; r < n; ++r) {
      RngStream g(seed, r);
      f(r, g);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t r = next.fetch_add(1);
        if (r >= n) return;
        RngStream g(seed, r);
        f(r, g);
      }
    });
  for (auto& t : pool) t.join();
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open output file: " + path);
  return file;
}

std::string rgs_csv(const SetPartition& p) {
  std::string s;
  for (int v : restricted_growth(p)) {
    if (!s.empty()) s += ',';
    s += std::to_string(v + 1);
  }
  return s;
}

void write_histogram(const std::string& path, const std::vector<double>& vals,
                     int bins, double lo, double hi) {
  std::ofstream os(path);
  if (!os) throw std::invalid_argument("cannot open histogram file: " + path);
  std::vector<std::size_t> counts(bins, 0);
  for (double v : vals) {
    int b = static_cast<int>((v - lo) / (hi - lo) * bins);
    b = std::min(std::max(b, 0), bins - 1);
    counts[b] += 1;
  }
  os << "bin_lo,bin_hi,count\n";
  for (int b = 0; b < bins; ++b)
    os << lo + (hi - lo) * b / bins << ',' << lo + (hi - lo) * (b + 1) / bins
       << ',' << counts[b] << '\n';
}

struct SampleArgs {
  double alpha = 0.5, theta = 0.5;
  std::string method = "stick";
  std::size_t samples = 1;
  int n = 100;
  double trunc_eps = 1e-8;
  std::size_t max_atoms = 100000;
  std::optional<std::uint64_t> seed;
  std::string format = "csv";
  std::string out;
  std::string hist_out;
  int emit_hist = 0;
  unsigned jobs = 1;
};

int cmd_sample(const SampleArgs& a) {
  const Params params(a.alpha, a.theta);
  const Truncation trunc{a.trunc_eps, a.max_atoms};
  const std::uint64_t seed = resolve_seed(a.seed);
  const bool mass_method = a.method == "stick" || a.method == "subordinator";

  std::vector<MassPartition> mass(mass_method ? a.samples : 0, MassPartition());
  std::vector<std::string> lines(a.samples);
  std::vector<double> hist_vals(a.samples, 0.0);

  run_replicas(a.samples, a.jobs, seed, [&](std::size_t r, RngStream& g) {
    if (a.method == "stick") {
      mass[r] = pd_sample(params, trunc, g);
      if (a.format == "json") lines[r] = to_json(mass[r]).dump();
      hist_vals[r] = mass[r].atom(0);
    } else if (a.method == "subordinator") {
      const SubordinatorResult s = subordinator_pd(params, trunc, g);
      mass[r] = s.partition;
      if (a.format == "json") lines[r] = to_json(s).dump();
      hist_vals[r] = s.partition.atom(0);
    } else if (a.method == "crp" || a.method == "branching") {
      const SetPartition p = a.method == "crp" ? crp_sample(params, a.n, g)
                                               : branching_sample(params, a.n, g);
      lines[r] = a.format == "json" ? to_json(p).dump() : rgs_csv(p);
      hist_vals[r] = static_cast<double>(p.blocks.size());
    } else {
      throw std::invalid_argument("unknown method: " + a.method);
    }
  });

  std::ofstream file;
  std::ostream& os = open_out(file, a.out);
  if (mass_method && a.format == "csv") {
    write_mass_partition_csv(os, mass);
  } else {
    if (!mass_method && a.format == "csv") os << "block_of_label\n";
    for (const auto& l : lines) os << l << '\n';
  }

  if (a.emit_hist > 0) {
    const std::string path =
        a.hist_out.empty() ? (a.out.empty() ? "hist.csv" : a.out + ".hist.csv")
                           : a.hist_out;
    if (mass_method)
      write_histogram(path, hist_vals, a.emit_hist, 0.0, 1.0);
    else
      write_histogram(path, hist_vals, a.emit_hist, 0.5,
                      *std::max_element(hist_vals.begin(), hist_vals.end()) + 0.5);
  }
  return 0;
}

struct OpArgs {
  std::string input;
  double alpha = 0.5, theta = 0.5;
  std::optional<std::uint64_t> seed;
  bool emit_witness = false;
  std::string out;
  std::string witness_out;
  double trunc_eps = 1e-8;
  std::size_t max_atoms = 100000;
  unsigned jobs = 1;
};

int cmd_op(const OpArgs& a, bool is_frag) {
  std::ifstream in(a.input);
  if (!in) throw std::invalid_argument("cannot open input file: " + a.input);
  const std::vector<MassPartition> rows = read_mass_partition_csv(in);
  const Truncation trunc{a.trunc_eps, a.max_atoms};
  const std::uint64_t seed = resolve_seed(a.seed);
  const Params params = is_frag ? Params(a.alpha, 1.0 - a.alpha)
                                : Params(a.alpha, a.theta);

  std::vector<MassPartition> out_rows(rows.size(), MassPartition());
  std::vector<std::string> witnesses(rows.size());
  run_replicas(rows.size(), a.jobs, seed, [&](std::size_t r, RngStream& g) {
    if (is_frag) {
      FragResult res = frag(a.alpha, rows[r], g, trunc);
      out_rows[r] = std::move(res.partition);
      if (a.emit_witness) witnesses[r] = to_json(res.witness).dump();
    } else {
      CoagResult res = coag(params, rows[r], g);
      out_rows[r] = std::move(res.partition);
      if (a.emit_witness) witnesses[r] = to_json(res.witness).dump();
    }
  });

  std::ofstream file;
  std::ostream& os = open_out(file, a.out);
  write_mass_partition_csv(os, out_rows);

  if (a.emit_witness) {
    const std::string path = a.witness_out.empty()
                                 ? (a.out.empty() ? "witnesses.jsonl"
                                                  : a.out + ".witnesses.jsonl")
                                 : a.witness_out;
    std::ofstream wos(path);
    if (!wos) throw std::invalid_argument("cannot open witness file: " + path);
    for (const auto& w : witnesses) wos << w << '\n';
  }
  return 0;
}

struct TreeArgs {
  double alpha = 0.5, theta = 0.5;
  int n = 100;
  std::optional<std::uint64_t> seed;
  std::string emit = "dot";
  int strip_depth = 0;
  std::string out;
};

int cmd_tree(const TreeArgs& a) {
  const Params params(a.alpha, a.theta);
  if (a.strip_depth >= a.n)
    throw std::invalid_argument("strip depth must be smaller than n");
  RngStream g(resolve_seed(a.seed), 0);
  const RecursiveTree t = grow(params, a.n, g);
  std::ofstream file;
  std::ostream& os = open_out(file, a.out);
  if (a.emit == "dot")
    write_tree_dot(os, t);
  else if (a.emit == "parents")
    write_tree_parents_csv(os, t);
  else if (a.emit == "partitions")
    write_tree_partitions_csv(os, t, a.strip_depth);
  else
    throw std::invalid_argument("unknown emit format: " + a.emit);
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  double alpha = 0.5, theta = 0.5;
  std::size_t samples = 100000;
  std::optional<std::uint64_t> seed;
  double level = 0.001;
  double beta = 0.6;
  int tree_n = 10000;
  int tree_replicas = 2000;
  int urn_steps = 10000;
  int urn_replicas = 10000;
  std::string report;
};

int cmd_verify(const VerifyArgs& a) {
  SuiteOptions opt;
  opt.params = Params(a.alpha, a.theta);
  opt.seed = resolve_seed(a.seed);
  opt.samples = a.samples;
  opt.level = a.level;
  opt.pitman_beta = a.beta;
  opt.tree_size = a.tree_n;
  opt.tree_replicas = a.tree_replicas;
  opt.urn_steps = a.urn_steps;
  opt.urn_replicas = a.urn_replicas;

  const SuiteReport rep = run_suite(a.suite, opt);
  for (const auto& t : rep.tests) {
    std::ostringstream line;
    line << (t.pass ? "PASS" : "FAIL") << "  " << t.name
         << "  stat=" << t.statistic << "  p=" << t.p_value
         << "  n=" << t.n_samples;
    std::cout << line.str() << '\n';
  }
  std::cout << (rep.pass ? "SUITE PASS" : "SUITE FAIL") << "  " << rep.suite
            << "  alpha=" << opt.params.alpha << "  theta=" << opt.params.theta
            << "  seed=" << opt.seed << '\n';
  if (!a.report.empty()) {
    std::ofstream os(a.report);
    if (!os) throw std::invalid_argument("cannot open report file: " + a.report);
    os << to_json(rep).dump(2) << '\n';
  }
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-parameter Poisson-Dirichlet simulation and verification toolkit"};
  app.require_subcommand(1);

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "Draw PD samples or partitions");
  sample->add_option("--alpha", sa.alpha);
  sample->add_option("--theta", sa.theta);
  sample->add_option("--method", sa.method)
      ->check(CLI::IsMember({"stick", "crp", "subordinator", "branching"}));
  sample->add_option("--samples", sa.samples);
  sample->add_option("--n", sa.n, "label count for crp/branching");
  sample->add_option("--trunc-eps", sa.trunc_eps);
  sample->add_option("--max-atoms", sa.max_atoms);
  sample->add_option("--seed", [&sa](const std::vector<std::string>& v) {
    sa.seed = std::stoull(v.at(0));
    return true;
  }, "master seed (PD_DEFAULT_SEED when absent)");
  sample->add_option("--format", sa.format)->check(CLI::IsMember({"csv", "json"}));
  sample->add_option("--out", sa.out);
  sample->add_option("--emit-hist", sa.emit_hist, "histogram bin count");
  sample->add_option("--hist-out", sa.hist_out);
  sample->add_option("--jobs", sa.jobs);

  OpArgs fa, ca;
  auto* fragc = app.add_subcommand("frag", "Apply the fragmentation operator rowwise");
  fragc->add_option("--input", fa.input)->required();
  fragc->add_option("--alpha", fa.alpha);
  fragc->add_option("--seed", [&fa](const std::vector<std::string>& v) {
    fa.seed = std::stoull(v.at(0));
    return true;
  }, "");
  fragc->add_flag("--emit-witness", fa.emit_witness);
  fragc->add_option("--out", fa.out);
  fragc->add_option("--witness-out", fa.witness_out);
  fragc->add_option("--trunc-eps", fa.trunc_eps);
  fragc->add_option("--max-atoms", fa.max_atoms);
  fragc->add_option("--jobs", fa.jobs);

  auto* coagc = app.add_subcommand("coag", "Apply the coagulation operator rowwise");
  coagc->add_option("--input", ca.input)->required();
  coagc->add_option("--alpha", ca.alpha);
  coagc->add_option("--theta", ca.theta);
  coagc->add_option("--seed", [&ca](const std::vector<std::string>& v) {
    ca.seed = std::stoull(v.at(0));
    return true;
  }, "");
  coagc->add_flag("--emit-witness", ca.emit_witness);
  coagc->add_option("--out", ca.out);
  coagc->add_option("--witness-out", ca.witness_out);
  coagc->add_option("--jobs", ca.jobs);

  TreeArgs ta;
  auto* tree = app.add_subcommand("tree", "Grow a recursive tree and emit it");
  tree->add_option("--alpha", ta.alpha);
  tree->add_option("--theta", ta.theta);
  tree->add_option("--n", ta.n);
  tree->add_option("--seed", [&ta](const std::vector<std::string>& v) {
    ta.seed = std::stoull(v.at(0));
    return true;
  }, "");
  tree->add_option("--emit", ta.emit)
      ->check(CLI::IsMember({"dot", "parents", "partitions"}));
  tree->add_option("--strip-depth", ta.strip_depth);
  tree->add_option("--out", ta.out);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a statistical verification suite");
  verify->add_option("--suite", va.suite);
  verify->add_option("--alpha", va.alpha);
  verify->add_option("--theta", va.theta);
  verify->add_option("--samples", va.samples);
  verify->add_option("--seed", [&va](const std::vector<std::string>& v) {
    va.seed = std::stoull(v.at(0));
    return true;
  }, "");
  verify->add_option("--alpha-level", va.level);
  verify->add_option("--beta", va.beta, "Pitman duality second index");
  verify->add_option("--tree-n", va.tree_n);
  verify->add_option("--tree-replicas", va.tree_replicas);
  verify->add_option("--urn-steps", va.urn_steps);
  verify->add_option("--urn-replicas", va.urn_replicas);
  verify->add_option("--report", va.report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sample->parsed()) return cmd_sample(sa);
    if (fragc->parsed()) return cmd_op(fa, true);
    if (coagc->parsed()) return cmd_op(ca, false);
    if (tree->parsed()) return cmd_tree(ta);
    if (verify->parsed()) return cmd_verify(va);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
