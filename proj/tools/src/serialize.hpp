#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "kcon/denoise.hpp"
#include "kcon/gsm.hpp"
#include "kcon/kc.hpp"
#include "kcon/stats.hpp"
#include "json_writer.hpp"

namespace kcon::cli {

// {"tool_version", "command", "inputs", "seed", "payload"} in that order.
Json envelope(const std::string& command, const std::vector<std::string>& inputs,
              std::uint64_t seed, Json payload);

Json report_json(const KurtosisReport& report);
Json box_json(const BoxStats& box);
Json lemma1_json(const Lemma1Record& rec);
Json lemma2_json(const Lemma2Record& rec);
Json noise_json(const std::string& path, const NoiseEstimate& est);

void write_subband_csv(std::ostream& out,
                       const std::vector<std::pair<std::string, KurtosisReport>>& reports);
void write_summary_csv(std::ostream& out,
                       const std::vector<std::pair<std::string, KurtosisReport>>& reports);
void write_trace_csv(std::ostream& out, const DenoiseTrace& trace);

}  // namespace kcon::cli
