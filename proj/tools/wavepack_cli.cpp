#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using wavepack::cli::RunConfig;

namespace {

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--basis", c.basis, "sf, hermite or mt")->check(CLI::IsMember({"sf", "hermite", "mt"}));
  sub->add_option("--alpha", c.alpha, "Gaussian width parameter, > 0");
  sub->add_option("--x0", c.x0, "packet centre");
  sub->add_option("--omega", c.omega, "carrier frequency");
  sub->add_option("--epsilon", c.epsilon, "coefficient threshold, default 1e-20");
  sub->add_option("--lambda", c.lambda, "stretched Fourier half-width (overrides lambda_optimal)");
  sub->add_option("--nmin", c.n_min, "first index");
  sub->add_option("--nmax", c.n_max, "last index");
  sub->add_option("--method", c.method, "fft, closed-form, oracle or estimate")
      ->check(CLI::IsMember({"fft", "closed-form", "oracle", "estimate"}));
  sub->add_option("--fft-size", c.fft_size, "transform length (N for sf, M for mt)");
  sub->add_option("--figure", c.figure, "figure recipe id (compare only)");
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "output file, stdout when omitted");
  sub->add_flag("--allow-flagged", c.allow_flagged, "emit flagged rows instead of failing");
  sub->add_flag("--describe", c.describe, "print the resolved configuration and exit");
  sub->add_flag("--extended", c.extended, "binary128 samples and transforms for fft methods");
  sub->add_option("--calib-c", c.calib_c, "constant C in the MT count prediction");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expansion coefficients of Gaussian wave packets"};
  app.require_subcommand(1);
  RunConfig cfg;
  for (const char* name : {"coeffs", "estimate", "predict", "compare"}) {
    auto* sub = app.add_subcommand(name);
    add_common(sub, cfg);
    sub->callback([&cfg, name] { cfg.command = name; });
  }
  app.get_subcommand("coeffs")->description("coefficients by fft, closed form or oracle");
  app.get_subcommand("estimate")->description("asymptotic estimates with envelopes");
  app.get_subcommand("predict")->description("predicted peak index and count");
  app.get_subcommand("compare")->description("counts and peaks across all bases, or a figure recipe");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return wavepack::cli::kUsage;
  }
  return wavepack::cli::run(cfg, std::cout, std::cerr);
}
