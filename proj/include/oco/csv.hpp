#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oco/trace.hpp"

namespace oco {

inline constexpr std::string_view kCsvHeader =
    "run_id,learner,adversary,p,d,T,L,seed,t,regret,bound,eta,x_pnorm";

// Shortest decimal that parses back to the same double; "nan" and "inf" for non-finite values.
std::string format_double(double v);
double parse_double(std::string_view text);

struct CsvRow {
  std::string run_id;
  std::string learner;
  std::string adversary;
  double p = 0.0;
  std::size_t d = 0;
  std::size_t T = 0;
  double L = 0.0;
  std::uint64_t seed = 0;
  std::size_t t = 0;
  double regret = 0.0;
  double bound = 0.0;
  double eta = 0.0;
  double x_pnorm = 0.0;
};

CsvRow make_row(const RegretTrace& trace, const RoundRecord& rec, const std::string& run_id);
// One row per round.
std::vector<CsvRow> trace_rows(const RegretTrace& trace, const std::string& run_id);

void write_csv(std::ostream& out, std::span<const CsvRow> rows);
void write_csv_file(const std::string& path, std::span<const CsvRow> rows);
std::vector<CsvRow> read_csv(std::istream& in);

}  // namespace oco
