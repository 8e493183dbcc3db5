// ksec: reproduction commands for the knapsack secretary bounds, LP and
// simulations. Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "ksec/analysis.hpp"
#include "ksec/lp.hpp"
#include "ksec/montecarlo.hpp"
#include "ksec/probability.hpp"
#include "ksec/serialization.hpp"

namespace {

using namespace ksec;

struct RunConfig {
  std::string format = "csv";
  std::string out;
  std::vector<int> ks;
  int n = 6;
  int B = 2;
  double c = kInvE;
  std::optional<double> alpha;
  std::vector<double> alphas;
  double epsilon = 1e-3;
  long trials = 10000;
  std::uint64_t seed = 1;
  int workers = 0;
  std::string algorithm = "extended";
  std::string instance = "UniformRandom";
  std::string sizes;
  bool checkLemmas = false;
};

struct UsageError : Error {
  using Error::Error;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw UsageError("cannot open output file: " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

bool emit_rows(const RunConfig& cfg, const std::vector<ReproductionRow>& rows) {
  Output out(cfg.out);
  bool ok = true;
  for (const ReproductionRow& r : rows) ok = ok && r.report.pass();
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const ReproductionRow& r : rows)
      arr.push_back({{"name", r.name},
                     {"k_or_y", r.index},
                     {"computed", r.report.value},
                     {"paper_value", r.report.paperTarget ? Json(*r.report.paperTarget) : Json(nullptr)},
                     {"abs_err", r.report.abs_error()},
                     {"pass", r.report.pass()}});
    out.stream() << arr.dump(2) << '\n';
  } else {
    write_reproduction_csv(out.stream(), rows);
  }
  return ok;
}

bool run_lp(const RunConfig& cfg) {
  if (cfg.ks.empty()) throw UsageError("lp needs at least one --k");
  for (int k : cfg.ks)
    if (k < 1 || k > kSolverBatchCap) throw UsageError("--k must lie in [1, 5000] for lp");
  const std::vector<ConvergenceRow> rows = convergence_report(cfg.ks);
  bool ok = true;
  for (const ConvergenceRow& r : rows) ok = ok && *r.primalOpt <= r.dualObj * (1.0 + 1e-9);
  Output out(cfg.out);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const ConvergenceRow& r : rows) {
      const LpSolution sol = solve(build_primal(r.k));
      Json j{{"k", r.k}, {"primal", *r.primalOpt}, {"dual", r.dualObj}, {"scale", r.scale}, {"tau", r.tau}};
      j["solution"] = to_json(sol);
      arr.push_back(std::move(j));
    }
    out.stream() << arr.dump(2) << '\n';
  } else {
    write_convergence_csv(out.stream(), rows);
  }
  return ok;
}

bool run_lp_dual(const RunConfig& cfg) {
  if (cfg.ks.empty()) throw UsageError("lp-dual needs at least one --k");
  for (int k : cfg.ks)
    if (k < 2 || k > 1'000'000) throw UsageError("--k must lie in [2, 1000000] for lp-dual");
  Output out(cfg.out);
  Json arr = Json::array();
  std::ostream& os = out.stream();
  if (cfg.format == "csv") os << "k,tau,dual_alpha,dual_beta,dual,scale\n" << std::setprecision(12);
  for (int k : cfg.ks) {
    const DualCertificate cert = dual_certificate(k);
    if (cfg.format == "json") {
      arr.push_back({{"k", k},
                     {"tau", cert.tau},
                     {"dualAlpha", cert.dualAlpha},
                     {"dualBeta", cert.dualBeta},
                     {"dual", dual_objective(cert)},
                     {"scale", cert.scale},
                     {"x", cert.x},
                     {"y", cert.y}});
    } else {
      os << k << ',' << cert.tau << ',' << cert.dualAlpha << ',' << cert.dualBeta << ',' << dual_objective(cert) << ','
         << cert.scale << '\n';
    }
  }
  if (cfg.format == "json") os << arr.dump(2) << '\n';
  return true;
}

Instance simulation_instance(const RunConfig& cfg) {
  InstanceParams p;
  p.kind = parse_instance_kind(cfg.instance);
  p.n = cfg.n;
  p.capacity = cfg.B;
  p.epsilon = cfg.epsilon;
  p.alpha = cfg.alpha.value_or(1.0);
  p.seed = cfg.seed;
  return make_instance(p);
}

bool run_simulate(const RunConfig& cfg) {
  AlgorithmSpec spec{parse_algorithm_kind(cfg.algorithm), cfg.c, cfg.alpha.value_or(1.0)};
  if (cfg.alpha && spec.kind != AlgorithmKind::Boosted) throw UsageError("--alpha applies to the boosted algorithm only");
  const EstimateReport report = estimate(spec, simulation_instance(cfg), cfg.trials, cfg.seed, cfg.workers);
  Output out(cfg.out);
  if (cfg.format == "json")
    out.stream() << to_json(report).dump(2) << '\n';
  else
    write_estimate_csv(out.stream(), report);
  return true;
}

Instance enumeration_instance(const RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kEnumerationCap) throw UsageError("--n must lie in [1, 9] for enumerate");
  if (!cfg.sizes.empty() && static_cast<int>(cfg.sizes.size()) != cfg.n)
    throw UsageError("--sizes needs one letter (s or l) per item");
  Rng rng(stream_seed(cfg.seed, 0, 0));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  std::vector<double> values;
  for (int i = 0; i < cfg.n; ++i) values.push_back(0.01 + unit(rng));
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<ItemSpec> specs;
  for (int i = 0; i < cfg.n; ++i) {
    bool small = coin(rng);
    if (!cfg.sizes.empty()) {
      const char ch = cfg.sizes[static_cast<std::size_t>(i)];
      if (ch != 's' && ch != 'l') throw UsageError("--sizes letters must be s or l");
      small = ch == 's';
    }
    specs.push_back({values[static_cast<std::size_t>(i)], small ? 1 : cfg.B, false});
  }
  return Instance(cfg.B, std::move(specs));
}

bool run_enumerate(const RunConfig& cfg) {
  const Instance inst = enumeration_instance(cfg);
  const ProbabilityTable table = enumerate_exact(inst, cfg.c, cfg.alpha, cfg.workers);
  Output out(cfg.out);
  bool ok = true;
  if (cfg.checkLemmas) {
    const IdentityReport report = structural_identity_check(table, inst);
    ok = report.ok();
    if (cfg.format == "json")
      out.stream() << Json{{"instance", to_json(inst)}, {"identities", to_json(report)}}.dump(2) << '\n';
    else
      out.stream() << report.summary() << '\n';
    return ok;
  }
  if (cfg.format == "json") {
    out.stream() << Json{{"instance", to_json(inst)}, {"table", to_json(table)}}.dump(2) << '\n';
  } else {
    std::ostream& os = out.stream();
    os << "item,value,size,position,num,den\n";
    for (const Item& it : inst.items())
      for (int j = 1; j <= inst.capacity(); ++j) {
        const Fraction f = table.p(it.id, j).reduced();
        os << it.id << ',' << exact_real(it.value) << ',' << it.size << ',' << j << ',' << f.num << ',' << f.den << '\n';
      }
  }
  return ok;
}

bool run_sweep(const RunConfig& cfg) {
  if (cfg.alphas.empty()) throw UsageError("sweep-alpha needs at least one --alpha");
  const std::vector<SweepRow> rows =
      sweep_alpha(parse_instance_kind(cfg.instance), cfg.alphas, cfg.n, cfg.trials, cfg.seed, cfg.epsilon, cfg.workers);
  Output out(cfg.out);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const SweepRow& r : rows) arr.push_back({{"alpha", r.alpha}, {"report", to_json(r.report)}});
    out.stream() << arr.dump(2) << '\n';
  } else {
    write_sweep_csv(out.stream(), rows);
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Knapsack secretary bounds, exact probabilities, LP and simulations"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out, "output file (default stdout)");
  };
  auto sim = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "number of items")->check(CLI::PositiveNumber);
    sub->add_option("--trials", cfg.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "master seed");
    sub->add_option("--instance", cfg.instance, "instance kind");
    sub->add_option("--eps", cfg.epsilon, "instance epsilon");
    sub->add_option("--workers", cfg.workers, "worker threads (0 = all)");
  };

  auto* table1 = app.add_subcommand("reproduce-table1", "column bound on theta_{j,k} for k = 3..10");
  common(table1);
  auto* appendix = app.add_subcommand("reproduce-appendix", "theta_y table at c = 0.26888 and the final ratio");
  common(appendix);

  auto* lp = app.add_subcommand("lp", "solve the primal LP and compare with the dual certificate");
  common(lp);
  lp->add_option("--k", cfg.ks, "number of batches (repeatable)")->required();

  auto* lpDual = app.add_subcommand("lp-dual", "closed-form dual certificate");
  common(lpDual);
  lpDual->add_option("--k", cfg.ks, "number of batches (repeatable)")->required();

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate for one algorithm and instance");
  common(simulate);
  sim(simulate);
  simulate->add_option("--alg", cfg.algorithm, "extended, boosted, classic or mixed-ordinal");
  simulate->add_option("--B", cfg.B, "capacity")->check(CLI::Range(2, 1 << 20));
  simulate->add_option("--c", cfg.c, "sample fraction")->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--alpha", cfg.alpha, "boosting factor");

  auto* enumerate = app.add_subcommand("enumerate", "exact probabilities over all n! arrival orders");
  common(enumerate);
  enumerate->add_option("--n", cfg.n, "number of items")->required();
  enumerate->add_option("--B", cfg.B, "capacity")->check(CLI::Range(2, 64));
  enumerate->add_option("--c", cfg.c, "sample fraction")->check(CLI::Range(0.0, 1.0));
  enumerate->add_option("--alpha", cfg.alpha, "boosting factor");
  enumerate->add_option("--sizes", cfg.sizes, "one letter per value rank position: s small, l large");
  enumerate->add_option("--seed", cfg.seed, "seed for item values");
  enumerate->add_option("--workers", cfg.workers, "worker threads (0 = all)");
  enumerate->add_flag("--check-lemmas", cfg.checkLemmas, "verify the structural identities exactly");

  auto* sweep = app.add_subcommand("sweep-alpha", "boosted algorithm over a grid of alpha");
  common(sweep);
  sim(sweep);
  sweep->add_option("--alpha", cfg.alphas, "boosting factor (repeatable)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    bool ok = true;
    if (*table1) ok = emit_rows(cfg, reproduce_table1());
    else if (*appendix) ok = emit_rows(cfg, reproduce_appendix());
    else if (*lp) ok = run_lp(cfg);
    else if (*lpDual) ok = run_lp_dual(cfg);
    else if (*simulate) ok = run_simulate(cfg);
    else if (*enumerate) ok = run_enumerate(cfg);
    else if (*sweep) ok = run_sweep(cfg);
    return ok ? 0 : 1;
  } catch (const ksec::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
