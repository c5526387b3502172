#include "gsv/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gsv/conversion.hpp"
#include "gsv/errors.hpp"
#include "gsv/generate.hpp"
#include "gsv/oracle.hpp"
#include "gsv/results.hpp"
#include "gsv/version.hpp"

namespace gsv {

namespace {

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::istringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) items.push_back(item.substr(b, e - b + 1));
  }
  return items;
}

std::array<int, 3> parse_shape(const std::string& s, long lineno) {
  std::array<int, 3> shape{};
  char x1 = 0, x2 = 0;
  std::istringstream ss(s);
  if (!(ss >> shape[0] >> x1 >> shape[1] >> x2 >> shape[2]) || x1 != 'x' || x2 != 'x')
    throw ParseError("bad shape '" + s + "', expected MxPxN", lineno);
  return shape;
}

bool known_mode(const std::string& mode) {
  return mode == "conversion-independent" || mode == "conversion-complementary" ||
         mode == "oracle";
}

std::vector<GsvPair> solve(const MatrixPair& pair, const std::string& mode) {
  if (mode == "oracle") return oracle_gsv(pair).pairs;
  return gsv(pair, mode == "conversion-independent" ? Mode::Independent
                                                    : Mode::Complementary)
      .pairs;
}

}  // namespace

BenchConfig parse_bench_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config: " + path);
  BenchConfig cfg;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw ParseError("expected key = value", lineno);
      continue;
    }
    std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    std::istringstream(key) >> key;
    if (key == "shapes") {
      for (const std::string& s : split_list(value)) cfg.shapes.push_back(parse_shape(s, lineno));
    } else if (key == "conditions") {
      for (const std::string& s : split_list(value)) cfg.conditions.push_back(std::stod(s));
    } else if (key == "trials") {
      cfg.trials = std::stoi(value);
    } else if (key == "seed") {
      cfg.seed = std::stoull(value);
    } else if (key == "modes") {
      cfg.modes = split_list(value);
      for (const std::string& m : cfg.modes)
        if (!known_mode(m)) throw ParseError("unknown mode: " + m, lineno);
    } else if (key == "scalar_kind") {
      std::string v;
      std::istringstream(value) >> v;
      if (v == "real")
        cfg.scalar_kind = ScalarKind::Real;
      else if (v == "complex")
        cfg.scalar_kind = ScalarKind::Complex;
      else
        throw ParseError("scalar_kind must be real or complex", lineno);
    } else {
      throw ParseError("unknown key: " + key, lineno);
    }
  }
  if (cfg.shapes.empty()) throw InvalidInput("bench config: shapes must be non-empty");
  if (cfg.conditions.empty()) throw InvalidInput("bench config: conditions must be non-empty");
  if (cfg.trials < 1) throw InvalidInput("bench config: trials must be >= 1");
  if (cfg.modes.empty())
    cfg.modes = {"conversion-independent", "conversion-complementary", "oracle"};
  return cfg;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  struct Cell {
    std::array<int, 3> shape;
    double condition;
    size_t index;
  };
  std::vector<Cell> cells;
  for (size_t si = 0; si < config.shapes.size(); ++si)
    for (size_t ci = 0; ci < config.conditions.size(); ++ci)
      cells.push_back({config.shapes[si], config.conditions[ci],
                       si * config.conditions.size() + ci});

  const long total_trials = static_cast<long>(cells.size()) * config.trials;
  std::vector<std::vector<BenchRow>> per_trial(total_trials);

#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < total_trials; ++t) {
    const Cell& cell = cells[t / config.trials];
    const int trial = static_cast<int>(t % config.trials);

    PairGenSpec spec;
    spec.m = cell.shape[0];
    spec.p = cell.shape[1];
    spec.n = cell.shape[2];
    spec.scalar_kind = config.scalar_kind;
    spec.stacked_condition_target = cell.condition;
    spec.seed = Rng::derive_seed(config.seed, cell.index, static_cast<uint64_t>(trial));

    for (const std::string& mode : config.modes) {
      BenchRow row;
      row.m = spec.m;
      row.p = spec.p;
      row.n = spec.n;
      row.condition = cell.condition;
      row.mode = mode;
      row.trial = trial;
      try {
        GeneratedPair gen = generate_pair(spec);
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<GsvPair> computed = solve(gen.pair, mode);
        const auto t1 = std::chrono::steady_clock::now();
        row.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

        std::vector<GsvPair> got = sorted_pairs(std::move(computed));
        std::vector<GsvPair> want = sorted_pairs(gen.planted);
        std::vector<double> errs(got.size());
        for (size_t i = 0; i < got.size(); ++i)
          errs[i] = std::max(std::abs(got[i].alpha - want[i].alpha),
                             std::abs(got[i].beta - want[i].beta));
        row.max_err = *std::max_element(errs.begin(), errs.end());
        std::nth_element(errs.begin(), errs.begin() + errs.size() / 2, errs.end());
        row.median_err = errs[errs.size() / 2];
      } catch (const Error& e) {
        row.failed = true;
        row.failure = e.what();
      }
      per_trial[t].push_back(std::move(row));
    }
  }

  std::vector<BenchRow> rows;
  for (auto& group : per_trial)
    for (auto& row : group) rows.push_back(std::move(row));
  return rows;
}

void write_bench_report(const std::vector<BenchRow>& rows, const BenchConfig& config,
                        const std::string& path) {
  std::ofstream longout(path + ".long.csv");
  if (!longout) throw IoError("cannot open " + path + ".long.csv for writing");
  longout << "m,p,n,cond,mode,trial,max_err,median_err,ms\n";
  for (const BenchRow& r : rows) {
    longout << r.m << ',' << r.p << ',' << r.n << ',' << format_double(r.condition) << ','
            << r.mode << ',' << r.trial << ','
            << (r.failed ? "failed" : format_double(r.max_err)) << ','
            << (r.failed ? "failed" : format_double(r.median_err)) << ','
            << format_double(r.ms) << '\n';
  }

  // per (cell, mode) summary
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "# gsv-bench version=" << kVersion << " seed=" << config.seed << '\n';
  out << "m,p,n,cond,mode,trials,failures,median_max_err,max_max_err,median_ms\n";
  for (const auto& shape : config.shapes) {
    for (double cond : config.conditions) {
      for (const std::string& mode : config.modes) {
        std::vector<double> errs, times;
        int failures = 0;
        for (const BenchRow& r : rows) {
          if (r.m != shape[0] || r.p != shape[1] || r.n != shape[2] ||
              r.condition != cond || r.mode != mode)
            continue;
          if (r.failed) {
            ++failures;
            continue;
          }
          errs.push_back(r.max_err);
          times.push_back(r.ms);
        }
        auto median = [](std::vector<double> v) {
          if (v.empty()) return std::nan("");
          std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
          return v[v.size() / 2];
        };
        out << shape[0] << ',' << shape[1] << ',' << shape[2] << ',' << format_double(cond)
            << ',' << mode << ',' << config.trials << ',' << failures << ','
            << format_double(median(errs)) << ','
            << format_double(errs.empty() ? std::nan("")
                                          : *std::max_element(errs.begin(), errs.end()))
            << ',' << format_double(median(times)) << '\n';
      }
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace gsv
