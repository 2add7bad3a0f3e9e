#include "oco/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "oco/errors.hpp"

namespace oco {

namespace {

template <typename Int>
Int parse_int(std::string_view text) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ContractError("bad integer field '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ContractError("bad number '" + std::string(text) + "'");
  }
  return v;
}

CsvRow make_row(const RegretTrace& trace, const RoundRecord& rec, const std::string& run_id) {
  CsvRow row;
  row.run_id = run_id;
  row.learner = trace.header.learner;
  row.adversary = trace.header.adversary;
  row.p = trace.header.spec.p;
  row.d = trace.header.spec.d;
  row.T = trace.header.T_requested;
  row.L = trace.header.spec.L;
  row.seed = trace.header.seed;
  row.t = rec.t;
  row.regret = rec.regret;
  row.bound = rec.bound;
  row.eta = rec.eta;
  row.x_pnorm = rec.x_pnorm;
  return row;
}

std::vector<CsvRow> trace_rows(const RegretTrace& trace, const std::string& run_id) {
  std::vector<CsvRow> rows;
  rows.reserve(trace.rounds.size());
  for (const auto& rec : trace.rounds) rows.push_back(make_row(trace, rec, run_id));
  return rows;
}

void write_csv(std::ostream& out, std::span<const CsvRow> rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.run_id << ',' << r.learner << ',' << r.adversary << ',' << format_double(r.p) << ','
        << r.d << ',' << r.T << ',' << format_double(r.L) << ',' << r.seed << ',' << r.t << ','
        << format_double(r.regret) << ',' << format_double(r.bound) << ','
        << format_double(r.eta) << ',' << format_double(r.x_pnorm) << '\n';
  }
}

void write_csv_file(const std::string& path, std::span<const CsvRow> rows) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_csv(out, rows);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::vector<CsvRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw ContractError("CSV header mismatch");
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 13) throw ContractError("CSV row with " + std::to_string(f.size()) + " fields");
    CsvRow r;
    r.run_id = std::string(f[0]);
    r.learner = std::string(f[1]);
    r.adversary = std::string(f[2]);
    r.p = parse_double(f[3]);
    r.d = parse_int<std::size_t>(f[4]);
    r.T = parse_int<std::size_t>(f[5]);
    r.L = parse_double(f[6]);
    r.seed = parse_int<std::uint64_t>(f[7]);
    r.t = parse_int<std::size_t>(f[8]);
    r.regret = parse_double(f[9]);
    r.bound = parse_double(f[10]);
    r.eta = parse_double(f[11]);
    r.x_pnorm = parse_double(f[12]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace oco
