#include <iostream>

#include <CLI11.hpp>

#include "kcon/denoise.hpp"
#include "kcon/version.hpp"
#include "commands.hpp"

using namespace kcon::cli;

namespace {

void add_bank_flags(CLI::App* cmd, BankOptions& bank) {
  cmd->add_option("--bank", bank.kernel_names,
                  "Kernel names (built-ins: haar, db2..db8); default haar,db2,db3,db4")
      ->delimiter(',');
  cmd->add_option("--bank-file", bank.bank_file,
                  "Plain-text bank table: name followed by lowpass coefficients per line");
  cmd->add_flag("--include-ll", bank.include_ll, "Include LL planes in the statistics");
}

void add_raw_flags(CLI::App* cmd, RawDims& raw) {
  cmd->add_option("--raw-height", raw.height, "Height for raw float32 inputs");
  cmd->add_option("--raw-width", raw.width, "Width for raw float32 inputs");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wavelet-subband kurtosis analysis, verification, and denoising"};
  app.set_version_flag("--version", kcon::kToolVersion);
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* cmd_a = app.add_subcommand("analyze", "Per-subband kurtosis reports for images");
  cmd_a->add_option("inputs", analyze.inputs, "Image files or directories")->required();
  add_bank_flags(cmd_a, analyze.bank);
  add_raw_flags(cmd_a, analyze.raw);
  cmd_a->add_option("--format", analyze.format, "json (stdout) or csv (to --output)");
  cmd_a->add_option("--output", analyze.output, "CSV output path (one row per subband)");
  cmd_a->add_option("--summary-csv", analyze.summary_csv,
                    "Box-plot summary CSV (q1/median/q3/whiskers)");
  cmd_a->add_option("--seed", analyze.seed, "Seed recorded in the report envelope");

  VerifyOptions verify;
  auto* cmd_v = app.add_subcommand("verify", "Monte-Carlo checks of the GSM projection-kurtosis lemmas");
  cmd_v->add_option("--lemma", verify.lemma, "1 (constant projection kurtosis) or 2 (kurtosis vs SNR)")
      ->required();
  cmd_v->add_option("--spec", verify.spec_path, "GSM spec JSON file")->required();
  cmd_v->add_option("--samples", verify.samples, "Sample count (default 1000000)");
  cmd_v->add_option("--directions", verify.directions, "Projection direction count (default 10)");
  cmd_v->add_option("--seed", verify.seed, "RNG seed")->required();
  cmd_v->add_option("--tolerance", verify.tolerance,
                    "Pass tolerance (default 0.05 absolute for lemma 1, 0.10 relative for lemma 2)");

  NoiseOptions noise;
  auto* cmd_n = app.add_subcommand("noise", "Wavelet-MAD noise sigma estimates, one JSON line per image");
  cmd_n->add_option("inputs", noise.inputs, "Image files or directories")->required();
  add_raw_flags(cmd_n, noise.raw);
  cmd_n->add_option("--seed", noise.seed, "Seed recorded for reproducibility bookkeeping");

  DenoiseOptions denoise;
  auto* cmd_d = app.add_subcommand("denoise", "Gradient descent on fidelity + lambda * KC loss");
  cmd_d->add_option("input", denoise.input, "Noisy input image")->required();
  cmd_d->add_option("--ground-truth", denoise.ground_truth, "Clean reference for SNR/PSNR reporting");
  cmd_d->add_option("--output", denoise.output, "Final image path (.pgm or raw float32)");
  cmd_d->add_option("--trace", denoise.trace, "Per-iteration CSV trace path");
  add_bank_flags(cmd_d, denoise.bank);
  add_raw_flags(cmd_d, denoise.raw);
  cmd_d->add_option("--lambda-kc", denoise.lambda_kc, "KC loss weight (default 1)");
  cmd_d->add_option("--step-size", denoise.step_size, "Gradient step (default 0.01)");
  cmd_d->add_option("--max-iters", denoise.max_iters, "Iteration count (default 400)");
  cmd_d->add_option("--fidelity-weight", denoise.fidelity_weight,
                    "Weight of the mean((x - noisy)^2) anchor (default 1)");
  cmd_d->add_option("--log-every", denoise.log_every, "Trace logging stride (default 10)");
  cmd_d->add_option("--seed", denoise.seed, "Seed recorded in the report envelope");

  LossOptions loss;
  auto* cmd_l = app.add_subcommand("loss", "KC loss value, argmax/argmin subbands, optional gradient dump");
  cmd_l->add_option("input", loss.input, "Input image")->required();
  add_bank_flags(cmd_l, loss.bank);
  add_raw_flags(cmd_l, loss.raw);
  cmd_l->add_option("--dump-grad", loss.dump_grad, "Write the pixel-space gradient as raw float32");
  cmd_l->add_option("--seed", loss.seed, "Seed recorded in the report envelope");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;  // usage problems are configuration errors
  }

  try {
    if (cmd_a->parsed()) return cmd_analyze(analyze, std::cout, std::cerr);
    if (cmd_v->parsed()) return cmd_verify(verify, std::cout, std::cerr);
    if (cmd_n->parsed()) return cmd_noise(noise, std::cout, std::cerr);
    if (cmd_d->parsed()) return cmd_denoise(denoise, std::cout, std::cerr);
    if (cmd_l->parsed()) return cmd_loss(loss, std::cout, std::cerr);
  } catch (const kcon::DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const kcon::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
