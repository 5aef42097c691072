#pragma once

#include <string>

#include "kcon/gsm.hpp"

namespace kcon::cli {

// Schema: {"dimension": int, "mixing": {"values": [...], "probs": [...]},
//          "covariance": "identity" | [[...], ...], "noise_sigma2": number}
// Throws InvalidArgumentError on malformed content.
GsmSpec load_gsm_spec(const std::string& path);

}  // namespace kcon::cli
