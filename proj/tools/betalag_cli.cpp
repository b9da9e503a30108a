#include "betalag/checks.hpp"
#include "betalag/kernels.hpp"
#include "betalag/rmt.hpp"
#include "betalag/semigroup.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BETA_INTERTWINE_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 20260823ull;
}

std::string load_config(const std::string& path) {
  if (path.empty()) return betalag::default_config_json();
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<double> parse_point(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
  return v;
}

void print_csv_row(const std::vector<double>& y) {
  for (size_t i = 0; i < y.size(); ++i)
    std::printf(i + 1 < y.size() ? "%.17g," : "%.17g\n", y[i]);
}

int run_verify(const std::string& id, const std::string& config_path,
               bool quick, std::uint64_t seed) {
  betalag::CheckOptions opt;
  opt.seed = seed;
  opt.quick = quick;
  std::string cfg = load_config(config_path);

  if (id == "registry") {
    bool ok = true;
    for (const auto& [identity, check] : betalag::identity_registry()) {
      bool found = false;
      for (const auto& known : betalag::check_ids())
        if (known == check) found = true;
      std::printf("%s -> %s%s\n", identity.c_str(), check.c_str(),
                  found ? "" : "  [MISSING CHECK]");
      ok = ok && found;
    }
    return ok ? 0 : 1;
  }

  std::vector<std::string> ids;
  if (id == "all")
    ids = betalag::check_ids();
  else
    ids.push_back(id);

  bool all_pass = true;
  for (const std::string& cid : ids) {
    for (const betalag::CheckReport& r : betalag::run_check(cid, cfg, opt)) {
      std::puts(betalag::to_json_line(r).c_str());
      all_pass = all_pass && r.pass;
    }
  }
  return all_pass ? 0 : 1;
}

int run_sample(const std::string& kernel, const std::string& x_str,
               double theta, double alpha, int n, double t, double step,
               long count, std::uint64_t seed) {
  betalag::RngStream rng(seed, 0);
  std::vector<double> x = x_str.empty() ? std::vector<double>{}
                                        : parse_point(x_str);
  if (kernel == "sde-path") {
    betalag::GeneratorSpec spec{betalag::GeneratorKind::Laguerre, theta, alpha,
                                static_cast<int>(x.size())};
    auto path = betalag::simulate_sde_path(spec, x, step, t, rng);
    std::printf("t");
    for (size_t i = 1; i <= x.size(); ++i) std::printf(",x%zu", i);
    std::printf("\n");
    for (const auto& [tt, state] : path) {
      std::printf("%.17g,", tt);
      print_csv_row(state);
    }
    return 0;
  }

  const int out_dim = kernel == "dixon-anderson" || kernel == "composed"
                          ? static_cast<int>(x.size()) - 1
                          : (kernel == "laguerre-ensemble"
                                 ? n
                                 : static_cast<int>(x.size()));
  for (int i = 1; i <= out_dim; ++i)
    std::printf(i < out_dim ? "y%d," : "y%d\n", i);
  betalag::KernelParams p{theta, alpha,
                          kernel == "composed"
                              ? static_cast<int>(x.size()) - 1
                              : static_cast<int>(x.size())};
  for (long i = 0; i < count; ++i) {
    std::vector<double> y;
    if (kernel == "dixon-anderson")
      y = betalag::sample_dixon_anderson(x, theta, rng);
    else if (kernel == "lambda")
      y = betalag::sample_lambda(x, p, rng);
    else if (kernel == "composed")
      y = betalag::sample_composed(x, p, rng);
    else if (kernel == "laguerre-ensemble")
      y = betalag::laguerre_ensemble_sample(n, theta, alpha, rng);
    else
      throw CLI::ValidationError("kernel", "unknown kernel " + kernel);
    print_csv_row(y);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness and samplers for beta-Laguerre kernel "
               "intertwinings"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed_flag;
  std::string config_path;

  auto* verify = app.add_subcommand(
      "verify", "run a named identity check (or 'all', or 'registry')");
  std::string check_id;
  bool quick = false;
  verify->add_option("check", check_id, "check id, 'all', or 'registry'")
      ->required();
  verify->add_flag("--quick", quick, "deterministic subset only (no MC)");
  verify->add_option("--config", config_path, "grid config JSON file");
  verify->add_option("--seed", seed_flag, "RNG seed (beats env)");

  auto* sample = app.add_subcommand("sample", "draw kernel/ensemble samples");
  std::string kernel, x_str;
  double theta = 1.0, alpha = 0.0, t = 0.5, step = 1e-3;
  int n = 1;
  long count = 1;
  sample
      ->add_option("kernel", kernel,
                   "dixon-anderson | lambda | composed | laguerre-ensemble | "
                   "sde-path")
      ->required();
  sample->add_option("--x", x_str, "chamber point, comma separated (or --x0)");
  sample->add_option("--x0", x_str, "initial state for sde-path");
  sample->add_option("--theta", theta, "theta = beta/2");
  sample->add_option("--alpha", alpha, "alpha parameter");
  sample->add_option("--N", n, "dimension (laguerre-ensemble)");
  sample->add_option("--t", t, "time horizon (sde-path)");
  sample->add_option("--step", step, "time step (sde-path)");
  sample->add_option("--count", count, "number of samples");
  sample->add_option("--seed", seed_flag, "RNG seed (beats env)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::uint64_t seed = resolve_seed(seed_flag);
    if (verify->parsed())
      return run_verify(check_id, config_path, quick, seed);
    return run_sample(kernel, x_str, theta, alpha, n, t, step, count, seed);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
