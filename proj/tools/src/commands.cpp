#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kcon/denoise.hpp"
#include "kcon/gsm.hpp"
#include "kcon/kc.hpp"
#include "kcon/stats.hpp"
#include "gsm_spec_json.hpp"
#include "serialize.hpp"

namespace fs = std::filesystem;

namespace kcon::cli {

namespace {

FilterBank resolve_bank(const BankOptions& opt) {
  if (!opt.bank_file.empty()) return load_bank_file(opt.bank_file, opt.include_ll);
  if (opt.kernel_names.empty()) {
    FilterBank bank = default_bank();
    bank.include_ll = opt.include_ll;
    return bank;
  }
  return make_bank(opt.kernel_names, opt.include_ll);
}

bool has_suffix(const std::string& s, const std::string& suffix) {
  if (s.size() < suffix.size()) return false;
  return std::equal(suffix.rbegin(), suffix.rend(), s.rbegin(),
                    [](char a, char b) { return std::tolower(a) == std::tolower(b); });
}

Image load_input(const std::string& path, const RawDims& raw) {
  if (has_suffix(path, ".pgm")) return load_pgm(path);
  if (raw.height > 0 && raw.width > 0) return load_raw_f32(path, raw.height, raw.width);
  throw InvalidArgumentError("cannot infer format of '" + path +
                             "': use a .pgm file or pass --raw-height/--raw-width");
}

// Directories expand to their regular files, sorted; plain paths pass through.
std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<std::string> files;
  for (const auto& input : inputs) {
    std::error_code ec;
    if (fs::is_directory(input, ec)) {
      std::vector<std::string> entries;
      for (const auto& entry : fs::directory_iterator(input, ec))
        if (entry.is_regular_file()) entries.push_back(entry.path().string());
      std::sort(entries.begin(), entries.end());
      files.insert(files.end(), entries.begin(), entries.end());
    } else {
      files.push_back(input);
    }
  }
  return files;
}

void write_file_or_throw(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

void save_image_by_extension(const Image& img, const std::string& path) {
  if (has_suffix(path, ".pgm"))
    save_pgm(img, path);
  else
    save_raw_f32(img, path);
}

Json denoise_summary_json(const DenoiseTrace& trace, bool diverged, int diverged_iteration,
                          const Image* noisy, const Image* ground_truth) {
  Json payload = Json::object();
  payload.set("diverged", Json::boolean(diverged));
  if (diverged) payload.set("diverged_at_iteration", Json::integer(diverged_iteration));
  payload.set("logged_points", Json::integer(static_cast<long long>(trace.points.size())));
  if (!trace.points.empty()) {
    const TracePoint& first = trace.points.front();
    const TracePoint& last = trace.points.back();
    payload.set("iterations", Json::integer(last.iteration));
    payload.set("initial_objective", Json::real(first.objective));
    payload.set("final_objective", Json::real(last.objective));
    payload.set("initial_deviation", Json::real(first.deviation));
    payload.set("final_deviation", Json::real(last.deviation));
  }
  if (!diverged && ground_truth != nullptr && noisy != nullptr) {
    const double peak = dynamic_peak(*ground_truth);
    payload.set("psnr_noisy_db", Json::real(psnr(*noisy, *ground_truth, peak)));
    payload.set("psnr_final_db", Json::real(psnr(trace.final_image, *ground_truth, peak)));
  }
  return payload;
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.format != "json" && opt.format != "csv") {
    err << "error: --format must be json or csv\n";
    return kExitConfigError;
  }
  if (opt.format == "csv" && opt.output.empty()) {
    err << "error: --format csv requires --output\n";
    return kExitConfigError;
  }
  const std::vector<std::string> files = expand_inputs(opt.inputs);
  if (files.empty()) {
    err << "error: no input files\n";
    return kExitConfigError;
  }
  const FilterBank bank = resolve_bank(opt.bank);

  std::vector<std::pair<std::string, KurtosisReport>> reports;
  std::vector<std::pair<std::string, std::string>> skipped;
  for (const auto& path : files) {
    try {
      reports.emplace_back(path, kc_report(load_input(path, opt.raw), bank));
    } catch (const Error& e) {
      skipped.emplace_back(path, e.what());
    }
  }
  if (reports.empty()) {
    err << "error: every input failed analysis\n";
    for (const auto& [path, msg] : skipped) err << "  " << path << ": " << msg << "\n";
    return kExitConfigError;
  }

  if (opt.format == "csv") {
    std::ostringstream csv;
    write_subband_csv(csv, reports);
    write_file_or_throw(opt.output, csv.str());
  } else {
    Json images = Json::array();
    std::vector<double> deviations;
    for (const auto& [path, report] : reports) {
      Json one = Json::object();
      one.set("path", Json::str(path));
      one.set("report", report_json(report));
      images.push(std::move(one));
      deviations.push_back(report.deviation);
    }
    Json payload = Json::object();
    payload.set("images", std::move(images));
    if (deviations.size() > 1) {
      double sum = 0.0;
      for (double d : deviations) sum += d;
      Json summary = Json::object();
      summary.set("image_count", Json::integer(static_cast<long long>(deviations.size())));
      summary.set("mean_deviation", Json::real(sum / static_cast<double>(deviations.size())));
      summary.set("median_deviation", Json::real(median(deviations)));
      summary.set("q1", Json::real(quantile(deviations, 0.25)));
      summary.set("q3", Json::real(quantile(deviations, 0.75)));
      summary.set("box", box_json(box_stats(deviations)));
      payload.set("summary", std::move(summary));
    }
    Json skipped_json = Json::array();
    for (const auto& [path, msg] : skipped) {
      Json one = Json::object();
      one.set("path", Json::str(path));
      one.set("error", Json::str(msg));
      skipped_json.push(std::move(one));
    }
    payload.set("skipped", std::move(skipped_json));
    out << envelope("analyze", files, opt.seed, std::move(payload)).dump() << "\n";
  }

  if (!opt.summary_csv.empty()) {
    std::ostringstream csv;
    write_summary_csv(csv, reports);
    write_file_or_throw(opt.summary_csv, csv.str());
  }
  return skipped.empty() ? kExitOk : kExitPartialFailure;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.lemma != 1 && opt.lemma != 2) {
    err << "error: --lemma must be 1 or 2\n";
    return kExitConfigError;
  }
  const GsmSpec spec = load_gsm_spec(opt.spec_path);
  bool pass = false;
  Json payload;
  if (opt.lemma == 1) {
    const double tol = opt.tolerance > 0.0 ? opt.tolerance : 0.05;
    const Lemma1Record rec = verify_lemma1(spec, opt.samples, opt.directions, opt.seed, tol);
    pass = rec.pass;
    payload = lemma1_json(rec);
  } else {
    const double tol = opt.tolerance > 0.0 ? opt.tolerance : 0.10;
    const Lemma2Record rec = verify_lemma2(spec, opt.samples, opt.directions, opt.seed, tol);
    pass = rec.pass;
    payload = lemma2_json(rec);
  }
  out << envelope("verify", {opt.spec_path}, opt.seed, std::move(payload)).dump() << "\n";
  return pass ? kExitOk : kExitToleranceFailure;
}

int cmd_noise(const NoiseOptions& opt, std::ostream& out, std::ostream& err) {
  const std::vector<std::string> files = expand_inputs(opt.inputs);
  if (files.empty()) {
    err << "error: no input files\n";
    return kExitConfigError;
  }
  std::size_t failures = 0;
  for (const auto& path : files) {
    try {
      const NoiseEstimate est = estimate_noise_sigma(load_input(path, opt.raw));
      out << noise_json(path, est).dump() << "\n";
    } catch (const Error& e) {
      err << "error: " << path << ": " << e.what() << "\n";
      ++failures;
    }
  }
  if (failures == 0) return kExitOk;
  return failures == files.size() ? kExitConfigError : kExitPartialFailure;
}

int cmd_denoise(const DenoiseOptions& opt, std::ostream& out, std::ostream& err) {
  const Image noisy = load_input(opt.input, opt.raw);
  Image ground_truth;
  const bool has_gt = !opt.ground_truth.empty();
  if (has_gt) ground_truth = load_input(opt.ground_truth, opt.raw);

  DenoiseConfig cfg;
  cfg.bank = resolve_bank(opt.bank);
  cfg.lambda_kc = opt.lambda_kc;
  cfg.step_size = opt.step_size;
  cfg.max_iters = opt.max_iters;
  cfg.fidelity_weight = opt.fidelity_weight;
  cfg.log_every = opt.log_every;
  cfg.seed = opt.seed;

  std::vector<std::string> inputs{opt.input};
  if (has_gt) inputs.push_back(opt.ground_truth);

  try {
    const DenoiseTrace trace = denoise(noisy, cfg, has_gt ? &ground_truth : nullptr);
    if (!opt.output.empty()) save_image_by_extension(trace.final_image, opt.output);
    if (!opt.trace.empty()) {
      std::ostringstream csv;
      write_trace_csv(csv, trace);
      write_file_or_throw(opt.trace, csv.str());
    }
    Json payload = denoise_summary_json(trace, false, 0, &noisy, has_gt ? &ground_truth : nullptr);
    out << envelope("denoise", inputs, opt.seed, std::move(payload)).dump() << "\n";
    return kExitOk;
  } catch (const DivergenceError& e) {
    if (!opt.trace.empty()) {
      std::ostringstream csv;
      write_trace_csv(csv, e.partial);
      write_file_or_throw(opt.trace, csv.str());
    }
    Json payload = denoise_summary_json(e.partial, true, e.iteration, nullptr, nullptr);
    out << envelope("denoise", inputs, opt.seed, std::move(payload)).dump() << "\n";
    err << "error: " << e.what() << "\n";
    return kExitDivergence;
  }
}

int cmd_loss(const LossOptions& opt, std::ostream& out, std::ostream& err) {
  (void)err;
  const Image img = load_input(opt.input, opt.raw);
  const FilterBank bank = resolve_bank(opt.bank);
  const LossGrad lg = kc_loss(img, bank);
  if (!opt.dump_grad.empty()) save_raw_f32(lg.gradient, opt.dump_grad);

  Json payload = Json::object();
  payload.set("loss", Json::real(lg.loss));
  payload.set("argmax_subband", Json::str(lg.argmax_subband));
  payload.set("argmin_subband", Json::str(lg.argmin_subband));
  payload.set("gradient_file", opt.dump_grad.empty() ? Json::null() : Json::str(opt.dump_grad));
  out << envelope("loss", {opt.input}, opt.seed, std::move(payload)).dump() << "\n";
  return kExitOk;
}

}  // namespace kcon::cli
