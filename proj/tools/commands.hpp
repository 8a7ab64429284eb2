#pragma once

#include "json.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lpath::cli {

enum class Format { table, json, csv };

Format parse_format(const std::string& name);
std::string format_name(Format f);

// Exact values go into `payload` as decimal strings (rationals as
// {"num": ..., "den": ...}); `table` is the human-readable rendering.
struct OutputRecord {
  std::string command;
  nlohmann::json arguments = nlohmann::json::object();
  std::optional<std::uint64_t> seed;
  nlohmann::json payload = nlohmann::json::object();
  std::string table;
  std::string csv;
  bool ok = true;  // false when a requested check failed
};

nlohmann::json to_json(const OutputRecord& record, Format format);
void emit(std::ostream& out, const OutputRecord& record, Format format);

OutputRecord cmd_dist(std::size_t n, std::size_t k);
OutputRecord cmd_pgf(std::size_t n, std::size_t k);
OutputRecord cmd_stats(std::size_t n, std::size_t k);

struct SampleArgs {
  std::size_t n = 1;
  std::size_t k = 1;
  std::uint64_t count = 1000;
  std::uint64_t seed = 1;
  std::string dump_path;  // empty: no matrix dump
};
OutputRecord cmd_sample(const SampleArgs& args);

OutputRecord cmd_verify(std::size_t max_nk, bool inject_fault = false);
OutputRecord cmd_series_check(std::size_t order);

struct AsymptArgs {
  std::vector<std::size_t> n_list{10, 20, 40};
  std::vector<double> u_list{0.95, 1.05};
  bool curvature = false;
  std::size_t grid = 256;
};
OutputRecord cmd_asympt(const AsymptArgs& args);

// CSV columns n,l,probability. Writes to out_path when non-empty (IO
// failure throws std::runtime_error); the CSV text is also kept in the record.
OutputRecord cmd_plotdata(const std::vector<std::size_t>& n_list, const std::string& out_path);

// Rational helpers shared with tests.
nlohmann::json rational_to_json(const std::string& num, const std::string& den);

}  // namespace lpath::cli
