#include "commands.hpp"

#include "lpath/asymptotics.hpp"
#include "lpath/combinatorics.hpp"
#include "lpath/distribution.hpp"
#include "lpath/orientation.hpp"
#include "lpath/sampler.hpp"
#include "lpath/verify.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lpath::cli {

using nlohmann::json;

Format parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string format_name(Format f) {
  switch (f) {
    case Format::table:
      return "table";
    case Format::json:
      return "json";
    case Format::csv:
      return "csv";
  }
  return "table";
}

json rational_to_json(const std::string& num, const std::string& den) {
  return json{{"num", num}, {"den", den}};
}

namespace {

json rational(const ExactRational& q) {
  return rational_to_json(q.get_num().get_str(), q.get_den().get_str());
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void require_positive(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) {
    throw std::invalid_argument(
        "part sizes must be >= 1 (by convention K_{0,k} has one edgeless orientation, longest path 0)");
  }
}

}  // namespace

json to_json(const OutputRecord& record, Format format) {
  json j;
  j["command"] = record.command;
  j["arguments"] = record.arguments;
  j["seed"] = record.seed ? json(std::to_string(*record.seed)) : json(nullptr);
  j["format"] = format_name(format);
  j["ok"] = record.ok;
  j["payload"] = record.payload;
  return j;
}

void emit(std::ostream& out, const OutputRecord& record, Format format) {
  switch (format) {
    case Format::json:
      out << to_json(record, format).dump(2) << '\n';
      break;
    case Format::csv:
      out << (record.csv.empty() ? record.table : record.csv);
      break;
    case Format::table:
      out << record.table;
      break;
  }
}

OutputRecord cmd_dist(std::size_t n, std::size_t k) {
  require_positive(n, k);
  const auto dist = longest_path_counts(n, k);
  const auto p = pgf(dist);
  const auto mom = moments(p);

  OutputRecord rec;
  rec.command = "dist";
  rec.arguments = {{"n", n}, {"k", k}};
  json rows = json::array();
  std::ostringstream t;
  t << "K_{" << n << "," << k << "}  acyclic orientations B = " << dist.total.get_str() << "\n";
  t << "length  count  probability\n";
  for (std::size_t l = 0; l < dist.counts.size(); ++l) {
    if (dist.counts[l] == 0) continue;
    rows.push_back({{"length", l}, {"count", dist.counts[l].get_str()}, {"probability", rational(p.coefficients[l])}});
    t << l << "  " << dist.counts[l].get_str() << "  " << to_string(p.coefficients[l]) << "\n";
  }
  t << "mean = " << to_string(mom.mean) << "  (" << fmt17(to_double(mom.mean)) << ")\n";
  t << "variance = " << to_string(mom.variance) << "  (" << fmt17(to_double(mom.variance)) << ")\n";
  rec.payload = {{"total", dist.total.get_str()},
                 {"counts", rows},
                 {"mean", rational(mom.mean)},
                 {"variance", rational(mom.variance)}};
  rec.table = t.str();
  return rec;
}

OutputRecord cmd_pgf(std::size_t n, std::size_t k) {
  require_positive(n, k);
  const auto p = pgf(n, k);
  OutputRecord rec;
  rec.command = "pgf";
  rec.arguments = {{"n", n}, {"k", k}};
  json coeffs = json::array();
  std::ostringstream t;
  t << "p_{" << n << "," << k << "}(u) =";
  bool first = true;
  for (std::size_t l = 0; l < p.coefficients.size(); ++l) {
    coeffs.push_back(rational(p.coefficients[l]));
    if (p.coefficients[l] == 0) continue;
    t << (first ? " " : " + ") << "(" << to_string(p.coefficients[l]) << ")u^" << l;
    first = false;
  }
  t << "\n";
  rec.payload = {{"coefficients", coeffs}};
  rec.table = t.str();
  return rec;
}

OutputRecord cmd_stats(std::size_t n, std::size_t k) {
  require_positive(n, k);
  const auto mom = moments(longest_path_counts(n, k));
  OutputRecord rec;
  rec.command = "stats";
  rec.arguments = {{"n", n}, {"k", k}};
  const double mean = to_double(mom.mean);
  const double var = to_double(mom.variance);
  rec.payload = {{"mean", rational(mom.mean)},
                 {"variance", rational(mom.variance)},
                 {"mean_float", mean},
                 {"variance_float", var},
                 {"stddev_float", std::sqrt(var)}};
  std::ostringstream t;
  t << "mean     = " << to_string(mom.mean) << "\n         ~ " << fmt17(mean) << "\n";
  t << "variance = " << to_string(mom.variance) << "\n         ~ " << fmt17(var) << "\n";
  if (n == k) {
    const double am = mean_asymptotic().value_at(static_cast<double>(n));
    const double av = variance_asymptotic().value_at(static_cast<double>(n));
    rec.payload["mean_asymptotic"] = am;
    rec.payload["variance_asymptotic"] = av;
    t << "asymptotic mean     ~ " << fmt17(am) << "\nasymptotic variance ~ " << fmt17(av) << "\n";
  }
  rec.table = t.str();
  return rec;
}

OutputRecord cmd_sample(const SampleArgs& args) {
  require_positive(args.n, args.k);
  if (args.count == 0) throw std::invalid_argument("sample count must be >= 1");
  RandomState rng(args.seed);

  std::ofstream dump;
  if (!args.dump_path.empty()) {
    dump.open(args.dump_path);
    if (!dump) throw std::runtime_error("cannot open " + args.dump_path + " for writing");
  }
  const auto empirical = empirical_distribution(
      args.n, args.k, args.count, rng, [&](const OrientationMatrix& m) {
        if (dump.is_open()) write_matrix(dump, m);
      });
  if (dump.is_open() && !dump) throw std::runtime_error("failed writing " + args.dump_path);

  const auto exact = longest_path_counts(args.n, args.k);
  const auto props = empirical.proportions();
  OutputRecord rec;
  rec.command = "sample";
  rec.arguments = {{"n", args.n}, {"k", args.k}, {"count", args.count}};
  rec.seed = args.seed;
  json rows = json::array();
  std::ostringstream t;
  t << "K_{" << args.n << "," << args.k << "}  " << args.count << " samples, seed " << args.seed << "\n";
  t << "length  count  proportion  exact\n";
  for (std::size_t l = 0; l < empirical.counts.size(); ++l) {
    const double q = to_double(make_rational(exact.counts[l], exact.total));
    if (empirical.counts[l] == 0 && exact.counts[l] == 0) continue;
    rows.push_back({{"length", l}, {"count", empirical.counts[l]}, {"proportion", props[l]}, {"exact", q}});
    t << l << "  " << empirical.counts[l] << "  " << fmt17(props[l]) << "  " << fmt17(q) << "\n";
  }
  const double tv = total_variation(empirical, exact);
  const double ks = kolmogorov_distance(empirical, exact);
  t << "total variation = " << fmt17(tv) << "\nkolmogorov = " << fmt17(ks) << "\n";
  rec.payload = {{"histogram", rows}, {"total_variation", tv}, {"kolmogorov", ks}};
  rec.table = t.str();
  return rec;
}

namespace {

OutputRecord from_checks(const std::string& name, const std::vector<CheckResult>& checks) {
  OutputRecord rec;
  rec.command = name;
  json items = json::array();
  std::ostringstream t;
  for (const auto& c : checks) {
    items.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    t << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    rec.ok = rec.ok && c.passed;
  }
  t << (rec.ok ? "all checks passed\n" : "some checks FAILED\n");
  rec.payload = {{"checks", items}, {"passed", rec.ok}};
  rec.table = t.str();
  return rec;
}

}  // namespace

OutputRecord cmd_verify(std::size_t max_nk, bool inject_fault) {
  VerifyOptions options;
  options.max_nk = max_nk;
  if (inject_fault) {
    options.tamper = [](PathLengthDistribution& d) {
      if (d.n == 2 && d.k == 2) d.counts[2] += 1;
    };
  }
  auto rec = from_checks("verify", run_verification(options).checks);
  rec.arguments = {{"max_nk", max_nk}, {"inject_fault", inject_fault}};
  return rec;
}

OutputRecord cmd_series_check(std::size_t order) {
  auto rec = from_checks("series-check", series_checks(order));
  rec.arguments = {{"order", order}};
  return rec;
}

OutputRecord cmd_asympt(const AsymptArgs& args) {
  OutputRecord rec;
  rec.command = "asympt";
  rec.arguments = {{"n_list", args.n_list}, {"u_list", args.u_list}, {"curvature", args.curvature}};
  const auto ma = mean_asymptotic();
  const auto va = variance_asymptotic();
  const auto mq = mean_from_quasi_power();
  const auto vq = variance_from_quasi_power();

  std::ostringstream t;
  t << "mean     ~ " << fmt17(ma.leading) << " n + " << fmt17(ma.constant) << "\n";
  t << "variance ~ " << fmt17(va.leading) << " n + " << fmt17(va.constant) << "\n";
  t << "quasi-power transfer: mean ~ " << fmt17(mq.leading) << " n + " << fmt17(mq.constant)
    << ", variance ~ " << fmt17(vq.leading) << " n + " << fmt17(vq.constant) << "\n";
  rec.payload["mean_asymptotic"] = {{"leading", ma.leading}, {"constant", ma.constant}};
  rec.payload["variance_asymptotic"] = {{"leading", va.leading}, {"constant", va.constant}};
  rec.payload["mean_from_quasi_power"] = {{"leading", mq.leading}, {"constant", mq.constant}};
  rec.payload["variance_from_quasi_power"] = {{"leading", vq.leading}, {"constant", vq.constant}};

  json rows = json::array();
  t << "n  mean_exact  mean_asym  var_exact  var_asym  var_quasi_power  kolmogorov  pb_ratio";
  for (double u : args.u_list) t << "  residual(u=" << u << ")";
  t << "\n";
  for (std::size_t n : args.n_list) {
    if (n == 0) throw std::invalid_argument("n values must be positive");
    const auto dist = longest_path_counts(n, n);
    const auto mom = moments(dist);
    const double nd = static_cast<double>(n);
    json row = {{"n", n},
                {"mean_exact", to_double(mom.mean)},
                {"mean_asymptotic", ma.value_at(nd)},
                {"variance_exact", to_double(mom.variance)},
                {"variance_asymptotic", va.value_at(nd)},
                {"variance_from_quasi_power", vq.value_at(nd)},
                {"kolmogorov", kolmogorov_to_gaussian(dist)},
                {"pb_ratio", pb_diagonal_ratio(n)}};
    t << n << "  " << fmt17(row["mean_exact"]) << "  " << fmt17(row["mean_asymptotic"]) << "  "
      << fmt17(row["variance_exact"]) << "  " << fmt17(row["variance_asymptotic"]) << "  "
      << fmt17(row["variance_from_quasi_power"]) << "  " << fmt17(row["kolmogorov"]) << "  "
      << fmt17(row["pb_ratio"]);
    json residuals = json::array();
    for (double u : args.u_list) {
      if (!(u > 0.0)) throw std::invalid_argument("u values must be positive");
      const double res = quasi_power_residual(n, u);
      residuals.push_back({{"u", u}, {"residual", res}});
      t << "  " << fmt17(res);
    }
    row["quasi_power_residuals"] = residuals;
    t << "\n";
    rows.push_back(row);
  }
  rec.payload["rows"] = rows;

  if (args.curvature) {
    const double k0 = curvature(0.0, 1.0);
    const double kpi = curvature(std::numbers::pi, 1.0);
    t << "curvature(0, 1) = " << fmt17(k0) << "\ncurvature(pi, 1) = " << fmt17(kpi) << "\n";
    json certs = json::array();
    for (double u : {0.97, 1.0, 1.03}) {
      const auto rep = certify_strict_minimality(u, args.grid);
      certs.push_back({{"u", u},
                       {"grid", rep.grid_size},
                       {"min_abs_h_off_critical", rep.min_abs_h_off_critical},
                       {"abs_h_at_critical", rep.abs_h_at_critical},
                       {"back_arc_max", rep.back_arc_max},
                       {"back_arc_bound", rep.back_arc_bound},
                       {"isa", std::string(simd::isa_name(rep.isa))},
                       {"passed", rep.passed}});
      t << "minimality u=" << u << ": min|H| off critical = " << fmt17(rep.min_abs_h_off_critical)
        << ", back-arc bound = " << fmt17(rep.back_arc_bound) << " -> "
        << (rep.passed ? "certified" : "NOT certified") << "\n";
      rec.ok = rec.ok && rep.passed;
    }
    rec.payload["curvature"] = {{"theta_0", k0}, {"theta_pi", kpi}};
    rec.payload["minimality"] = certs;
  }
  rec.table = t.str();
  return rec;
}

OutputRecord cmd_plotdata(const std::vector<std::size_t>& n_list, const std::string& out_path) {
  OutputRecord rec;
  rec.command = "plot-data";
  rec.arguments = {{"n_list", n_list}, {"out", out_path}};
  std::ostringstream csv;
  csv << "n,l,probability\n";
  json rows = json::array();
  for (std::size_t n : n_list) {
    if (n == 0) throw std::invalid_argument("n values must be positive");
    const auto p = pgf(n, n);
    for (std::size_t l = 1; l < p.coefficients.size(); ++l) {
      const double prob = to_double(p.coefficients[l]);
      csv << n << ',' << l << ',' << fmt17(prob) << '\n';
      rows.push_back({{"n", n}, {"l", l}, {"probability", prob}});
    }
  }
  rec.csv = csv.str();
  rec.payload = {{"rows", rows}};
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    out << rec.csv;
    out.close();
    if (!out) throw std::runtime_error("failed writing " + out_path);
    rec.table = "wrote " + std::to_string(rows.size()) + " rows to " + out_path + "\n";
  } else {
    rec.table = rec.csv;
  }
  return rec;
}

}  // namespace lpath::cli
