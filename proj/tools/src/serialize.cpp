#include "serialize.hpp"

#include "kcon/version.hpp"

namespace kcon::cli {

Json envelope(const std::string& command, const std::vector<std::string>& inputs,
              std::uint64_t seed, Json payload) {
  Json in = Json::array();
  for (const auto& p : inputs) in.push(Json::str(p));
  Json env = Json::object();
  env.set("tool_version", Json::str(kToolVersion));
  env.set("command", Json::str(command));
  env.set("inputs", std::move(in));
  env.set("seed", Json::integer(static_cast<long long>(seed)));
  env.set("payload", std::move(payload));
  return env;
}

Json report_json(const KurtosisReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json one = Json::object();
    one.set("kernel", Json::str(e.kernel));
    one.set("plane", Json::str(e.plane));
    one.set("kurtosis", Json::real(e.kurtosis));
    entries.push(std::move(one));
  }
  Json excluded = Json::array();
  for (const auto& id : report.excluded_subbands) excluded.push(Json::str(id));
  Json j = Json::object();
  j.set("entries", std::move(entries));
  j.set("max_kurtosis", Json::real(report.max_kurtosis));
  j.set("min_kurtosis", Json::real(report.min_kurtosis));
  j.set("deviation", Json::real(report.deviation));
  j.set("q1", Json::real(report.q1));
  j.set("median", Json::real(report.median));
  j.set("q3", Json::real(report.q3));
  j.set("excluded_subbands", std::move(excluded));
  return j;
}

Json box_json(const BoxStats& box) {
  Json j = Json::object();
  j.set("q1", Json::real(box.q1));
  j.set("median", Json::real(box.median));
  j.set("q3", Json::real(box.q3));
  j.set("whisker_low", Json::real(box.whisker_low));
  j.set("whisker_high", Json::real(box.whisker_high));
  return j;
}

Json lemma1_json(const Lemma1Record& rec) {
  Json dirs = Json::array();
  for (double k : rec.direction_kurtosis) dirs.push(Json::real(k));
  Json j = Json::object();
  j.set("lemma", Json::integer(1));
  j.set("theory", Json::real(rec.theory));
  j.set("direction_kurtosis", std::move(dirs));
  j.set("max_abs_error", Json::real(rec.max_abs_error));
  j.set("spread", Json::real(rec.spread));
  j.set("tolerance", Json::real(rec.tolerance));
  j.set("pass", Json::boolean(rec.pass));
  j.set("n_samples", Json::integer(rec.n_samples));
  j.set("n_directions", Json::integer(rec.n_directions));
  return j;
}

Json lemma2_json(const Lemma2Record& rec) {
  Json dirs = Json::array();
  for (double k : rec.direction_kurtosis) dirs.push(Json::real(k));
  Json j = Json::object();
  j.set("lemma", Json::integer(2));
  j.set("snr", Json::real(rec.snr));
  j.set("clean_theory", Json::real(rec.clean_theory));
  j.set("predicted_kurtosis", Json::real(rec.predicted_kurtosis));
  j.set("direction_kurtosis", std::move(dirs));
  j.set("empirical_kurtosis", Json::real(rec.empirical_kurtosis));
  j.set("abs_error", Json::real(rec.abs_error));
  j.set("relative_error", Json::real(rec.relative_error));
  j.set("tolerance", Json::real(rec.tolerance));
  j.set("pass", Json::boolean(rec.pass));
  j.set("n_samples", Json::integer(rec.n_samples));
  j.set("n_directions", Json::integer(rec.n_directions));
  return j;
}

Json noise_json(const std::string& path, const NoiseEstimate& est) {
  Json j = Json::object();
  j.set("path", Json::str(path));
  j.set("sigma", Json::real(est.sigma));
  j.set("kernel", Json::str(est.kernel_used));
  j.set("subband", Json::str(est.subband_used));
  return j;
}

void write_subband_csv(std::ostream& out,
                       const std::vector<std::pair<std::string, KurtosisReport>>& reports) {
  out << "image_id,kernel,plane,kurtosis\n";
  for (const auto& [id, report] : reports)
    for (const auto& e : report.entries)
      out << id << "," << e.kernel << "," << e.plane << "," << format_real(e.kurtosis) << "\n";
}

void write_summary_csv(std::ostream& out,
                       const std::vector<std::pair<std::string, KurtosisReport>>& reports) {
  out << "scope,id,q1,median,q3,whisker_low,whisker_high\n";
  std::vector<double> deviations;
  for (const auto& [id, report] : reports) {
    std::vector<double> kappas;
    for (const auto& e : report.entries) kappas.push_back(e.kurtosis);
    const BoxStats box = box_stats(kappas);
    out << "image," << id << "," << format_real(box.q1) << "," << format_real(box.median) << ","
        << format_real(box.q3) << "," << format_real(box.whisker_low) << ","
        << format_real(box.whisker_high) << "\n";
    deviations.push_back(report.deviation);
  }
  if (deviations.size() > 1) {
    const BoxStats box = box_stats(deviations);
    out << "dataset,deviations," << format_real(box.q1) << "," << format_real(box.median) << ","
        << format_real(box.q3) << "," << format_real(box.whisker_low) << ","
        << format_real(box.whisker_high) << "\n";
  }
}

void write_trace_csv(std::ostream& out, const DenoiseTrace& trace) {
  const bool with_ref = !trace.points.empty() && trace.points.front().has_reference;
  out << "iteration,objective,kc_loss,fidelity,deviation";
  if (with_ref) out << ",snr,psnr_db";
  out << "\n";
  for (const auto& pt : trace.points) {
    out << pt.iteration << "," << format_real(pt.objective) << "," << format_real(pt.kc_loss)
        << "," << format_real(pt.fidelity) << "," << format_real(pt.deviation);
    if (with_ref) out << "," << format_real(pt.snr) << "," << format_real(pt.psnr_db);
    out << "\n";
  }
}

}  // namespace kcon::cli
