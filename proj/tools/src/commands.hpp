#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace kcon::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitPartialFailure = 2;
inline constexpr int kExitToleranceFailure = 3;
inline constexpr int kExitDivergence = 4;

struct BankOptions {
  std::vector<std::string> kernel_names;  // empty: default bank
  std::string bank_file;                  // overrides kernel_names when set
  bool include_ll = false;
};

struct RawDims {
  int height = 0;  // both > 0 enables raw-f32 loading for non-.pgm inputs
  int width = 0;
};

struct AnalyzeOptions {
  std::vector<std::string> inputs;  // files or directories
  BankOptions bank;
  RawDims raw;
  std::string format = "json";  // json | csv
  std::string output;           // required for csv
  std::string summary_csv;      // optional box-plot CSV
  std::uint64_t seed = 0;
};

struct VerifyOptions {
  int lemma = 1;
  std::string spec_path;
  int samples = 1000000;
  int directions = 10;
  std::uint64_t seed = 0;
  double tolerance = 0.0;  // 0: per-lemma default (0.05 absolute / 0.10 relative)
};

struct NoiseOptions {
  std::vector<std::string> inputs;
  RawDims raw;
  std::uint64_t seed = 0;
};

struct DenoiseOptions {
  std::string input;
  std::string ground_truth;
  std::string output;  // final image; .pgm or raw f32 by extension
  std::string trace;   // CSV trace path
  BankOptions bank;
  RawDims raw;
  double lambda_kc = 1.0;
  double step_size = 1e-2;
  int max_iters = 400;
  double fidelity_weight = 1.0;
  int log_every = 10;
  std::uint64_t seed = 0;
};

struct LossOptions {
  std::string input;
  BankOptions bank;
  RawDims raw;
  std::string dump_grad;  // raw-f32 gradient dump path
  std::uint64_t seed = 0;
};

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_noise(const NoiseOptions& opt, std::ostream& out, std::ostream& err);
int cmd_denoise(const DenoiseOptions& opt, std::ostream& out, std::ostream& err);
int cmd_loss(const LossOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace kcon::cli
