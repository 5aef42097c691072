#include "gsm_spec_json.hpp"

#include <fstream>

#include <json.hpp>

namespace kcon::cli {

GsmSpec load_gsm_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open spec file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError("malformed spec JSON (" + path + "): " + e.what());
  }

  GsmSpec spec;
  try {
    spec.dimension = j.at("dimension").get<int>();
    const auto& mixing = j.at("mixing");
    spec.mixing_values = mixing.at("values").get<std::vector<double>>();
    spec.mixing_probs = mixing.at("probs").get<std::vector<double>>();
    if (j.contains("noise_sigma2")) spec.noise_sigma2 = j.at("noise_sigma2").get<double>();
    const auto& cov = j.at("covariance");
    if (cov.is_string() && cov.get<std::string>() == "identity") {
      spec.identity_covariance = true;
    } else if (cov.is_array()) {
      spec.identity_covariance = false;
      const auto rows = cov.get<std::vector<std::vector<double>>>();
      if (rows.size() != static_cast<std::size_t>(spec.dimension))
        throw InvalidArgumentError("covariance row count != dimension");
      for (const auto& row : rows) {
        if (row.size() != static_cast<std::size_t>(spec.dimension))
          throw InvalidArgumentError("covariance is not square");
        spec.covariance.insert(spec.covariance.end(), row.begin(), row.end());
      }
    } else {
      throw InvalidArgumentError("covariance must be \"identity\" or a matrix");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError("malformed spec JSON (" + path + "): " + e.what());
  }
  validate_spec(spec);
  return spec;
}

}  // namespace kcon::cli
