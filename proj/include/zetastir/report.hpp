#pragma once

// Serialization of sweep output. Exact values travel as full integer
// strings, decimals come from decimal_render (round-half-even, never
// scientific notation), and key order is fixed, so identical inputs
// produce byte-identical bytes.

#include <string>
#include <vector>

#include <json.hpp>

#include "zetastir/zeta.hpp"

namespace zetastir {

inline constexpr char kSweepCsvHeader[] = "p,N,zeta_N_decimal,abs_err,ln_abs_err,ratio_err_eN_over_N";

// Extra fractional digits for quantities that live far below 1, like the
// 1e-40-radius oracle.
inline constexpr unsigned kSmallValueExtraDigits = 30;

inline std::string sweep_csv(const std::vector<SweepRecord>& records, unsigned digits) {
  std::string out(kSweepCsvHeader);
  out += "\n";
  for (const SweepRecord& r : records) {
    Rational ln_err = log_ball(r.abs_err, pow10(-15)).center();
    out += std::to_string(r.p);
    out += ",";
    out += std::to_string(r.N);
    out += ",";
    out += decimal_render(r.zeta_n, digits);
    out += ",";
    out += decimal_render(r.abs_err, digits + kSmallValueExtraDigits);
    out += ",";
    out += decimal_render(ln_err, digits);
    out += ",";
    out += decimal_render(r.ratio, digits);
    out += "\n";
  }
  return out;
}

inline std::string sweep_json(const std::vector<SweepRecord>& records, unsigned digits) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SweepRecord& r : records) {
    nlohmann::ordered_json row;
    row["p"] = std::to_string(r.p);
    row["N"] = std::to_string(r.N);
    row["numerator"] = r.zeta_n.num().get_str();
    row["denominator"] = r.zeta_n.den().get_str();
    row["decimal"] = decimal_render(r.zeta_n, digits);
    row["oracle_mid"] = decimal_render(r.oracle.center(), digits);
    row["oracle_radius"] = decimal_render(r.oracle.radius(), digits + kSmallValueExtraDigits);
    row["abs_err"] = decimal_render(r.abs_err, digits + kSmallValueExtraDigits);
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

}  // namespace zetastir
