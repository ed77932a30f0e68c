#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "zetastir/report.hpp"

using zetastir::Rational;

TEST_CASE("csv schema and determinism") {
  auto records = zetastir::error_sweep(3, {6, 10});
  std::string a = zetastir::sweep_csv(records, 30);
  std::string b = zetastir::sweep_csv(zetastir::error_sweep(3, {6, 10}), 30);
  CHECK(a == b);
  CHECK(a.rfind("p,N,zeta_N_decimal,abs_err,ln_abs_err,ratio_err_eN_over_N\n", 0) == 0);
  CHECK(std::count(a.begin(), a.end(), '\n') == 3);
  // no scientific notation in data rows
  CHECK(a.find('e', a.find('\n')) == std::string::npos);
  CHECK(a.find('E') == std::string::npos);
  std::string row = a.substr(a.find('\n') + 1, a.find('\n', a.find('\n') + 1) - a.find('\n') - 1);
  CHECK(row.rfind("3,6,1.200559968188070914593213988344,", 0) == 0);
}

TEST_CASE("json schema golden record") {
  auto records = zetastir::error_sweep(3, {6});
  std::string got = zetastir::sweep_json(records, 12);
  std::string expect = R"([
  {
    "p": "3",
    "N": "6",
    "numerator": "240439958565795174792533020942199568891002951",
    "denominator": "200273176631631294984953081590168500000000000",
    "decimal": "1.200559968188",
    "oracle_mid": "1.202056903160",
    "oracle_radius": "0.000000000000000000000000000000000000000012",
    "abs_err": "0.001496934971523370806524173167403240072441"
  }
]
)";
  CHECK(got == expect);
}

TEST_CASE("json integers are strings, never numbers") {
  auto records = zetastir::error_sweep(2, {6, 10});
  auto parsed = nlohmann::json::parse(zetastir::sweep_json(records, 8));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 2);
  for (const auto& row : parsed) {
    for (const char* key :
         {"p", "N", "numerator", "denominator", "decimal", "oracle_mid", "oracle_radius", "abs_err"})
      CHECK(row.at(key).is_string());
    // the exact fraction survives a parse round-trip
    Rational back{mpz_class(row.at("numerator").get<std::string>()),
                  mpz_class(row.at("denominator").get<std::string>())};
    CHECK(back == zetastir::zeta_n_approx(2, std::stol(row.at("N").get<std::string>())).value);
  }
}
