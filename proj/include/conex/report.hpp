#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace conex {

/// Finite-k edge/density figures for one construction at one (k, n).
struct RatioReport {
  int k = 0;
  std::string construction;
  long long n = 0;
  long long edges = 0;
  double ratio_to_half = 0.0;     // edges / (n(k-2)/2)
  double ratio_to_quarter = 0.0;  // edges / (kn/4)
  bool applicable = true;
};

/// Rows for the s-family and p-family at x = floor(k/sqrt(2)) and the broom
/// bound at d = ceil(k/2), n = 100k, per requested k. Degenerate parameter
/// combinations are flagged not-applicable instead of erroring.
std::vector<RatioReport> gamma_report(const std::vector<int>& ks);

nlohmann::ordered_json to_json(const std::vector<RatioReport>& rows);
std::string to_csv(const std::vector<RatioReport>& rows);

}  // namespace conex
