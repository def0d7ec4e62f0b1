#include "conex/report.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "conex/families.hpp"
#include "conex/formulas.hpp"

namespace conex {

namespace {

RatioReport make_row(int k, std::string name, long long n, long long edges) {
  RatioReport r;
  r.k = k;
  r.construction = std::move(name);
  r.n = n;
  r.edges = edges;
  r.ratio_to_half = static_cast<double>(edges) / (static_cast<double>(n) * (k - 2) / 2.0);
  r.ratio_to_quarter = static_cast<double>(edges) / (static_cast<double>(k) * n / 4.0);
  if (!(r.ratio_to_half > 0.0 && r.ratio_to_half <= 1.5) ||
      !(r.ratio_to_quarter > 0.0 && r.ratio_to_quarter <= 1.5))
    throw std::logic_error("ratio outside (0, 1.5]");
  return r;
}

}  // namespace

std::vector<RatioReport> gamma_report(const std::vector<int>& ks) {
  std::vector<RatioReport> rows;
  for (int k : ks) {
    long long n = 100LL * k;
    int x = static_cast<int>(std::floor(k / std::sqrt(2.0)));
    bool s_ok = k >= 3 && x >= 2 && 2 * x > k && x < k;
    long long a = s_ok ? a_x(k, x) : 0;
    if (s_ok && a >= x && n >= a + 1) {
      rows.push_back(make_row(k, "s-family x=" + std::to_string(x), n, s_family_edges(n, x, a)));
      rows.push_back(make_row(k, "p-family x=" + std::to_string(x), n, p_family_edges(n, x, a)));
    } else {
      RatioReport r;
      r.k = k;
      r.construction = "s-family";
      r.n = n;
      r.applicable = false;
      rows.push_back(r);
    }
    long long d = (k + 1) / 2;
    if (k >= d + 2 && d >= 6) {
      BroomExc b = broom_ex_c(n, k, d);
      rows.push_back(make_row(k, "broom d=" + std::to_string(d), n, b.edges));
    } else {
      RatioReport r;
      r.k = k;
      r.construction = "broom";
      r.n = n;
      r.applicable = false;
      rows.push_back(r);
    }
  }
  return rows;
}

nlohmann::ordered_json to_json(const std::vector<RatioReport>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const RatioReport& r : rows) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["construction"] = r.construction;
    j["n"] = r.n;
    j["applicable"] = r.applicable;
    if (r.applicable) {
      j["edges"] = r.edges;
      j["ratio_to_half"] = r.ratio_to_half;
      j["ratio_to_quarter"] = r.ratio_to_quarter;
    }
    arr.push_back(j);
  }
  return arr;
}

std::string to_csv(const std::vector<RatioReport>& rows) {
  std::ostringstream os;
  os << "k,construction,n,applicable,edges,ratio_to_half,ratio_to_quarter\n";
  for (const RatioReport& r : rows) {
    os << r.k << "," << r.construction << "," << r.n << "," << (r.applicable ? 1 : 0) << ",";
    if (r.applicable)
      os << r.edges << "," << r.ratio_to_half << "," << r.ratio_to_quarter;
    else
      os << ",,";
    os << "\n";
  }
  return os.str();
}

}  // namespace conex
