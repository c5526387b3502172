// Command-line front end: compute | verify | gen | bench.
// Exit codes: 0 success, 1 I/O or config error, 2 invalid pair,
// 3 verification failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsv/bench.hpp"
#include "gsv/conversion.hpp"
#include "gsv/generate.hpp"
#include "gsv/kernels.hpp"
#include "gsv/matrix_market.hpp"
#include "gsv/oracle.hpp"
#include "gsv/results.hpp"
#include "gsv/version.hpp"

namespace {

using namespace gsv;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalidPair = 2;
constexpr int kExitVerifyFailed = 3;

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

MatrixPair load_pair(const std::string& a_path, const std::string& b_path) {
  return MatrixPair(read_matrix_market(a_path), read_matrix_market(b_path));
}

int cmd_compute(const std::string& a_path, const std::string& b_path,
                const std::string& mode_str, const std::string& out_path,
                const std::string& format) {
  MatrixPair pair = load_pair(a_path, b_path);
  const Mode mode = mode_from_name(mode_str);

  ResultRecord rec;
  rec.m = pair.m();
  rec.p = pair.p();
  rec.n = pair.n();
  rec.mode = mode;

  auto t0 = std::chrono::steady_clock::now();
  StackedSvdParts parts = stacked_svd_parts(pair);
  rec.timings.stacked_svd_ms = elapsed_ms(t0);

  t0 = std::chrono::steady_clock::now();
  GsvSpectrum spec = gsv_from_parts(parts, pair.m(), pair.p(), pair.n(), mode);
  rec.timings.block_sv_ms = elapsed_ms(t0);

  t0 = std::chrono::steady_clock::now();
  rec.pairs = spec.pairs;
  rec.pair_sum_residuals = spec.pair_sum_residuals;
  rec.det_residuals.resize(spec.pairs.size());
  for (size_t i = 0; i < spec.pairs.size(); ++i)
    rec.det_residuals[i] = det_residual(pair, spec.pairs[i].alpha, spec.pairs[i].beta);
  rec.stacked_condition = parts.certificate.stacked_condition();
  rec.timings.diagnostics_ms = elapsed_ms(t0);

  std::cout << "generalized singular values of {A (" << rec.m << "x" << rec.n << "), B ("
            << rec.p << "x" << rec.n << ")}, mode " << mode_name(mode) << ":\n";
  for (size_t i = 0; i < rec.pairs.size(); ++i)
    std::cout << "  " << (i + 1) << ": alpha = " << format_double(rec.pairs[i].alpha)
              << "  beta = " << format_double(rec.pairs[i].beta) << "\n";
  std::cout << "stacked condition number: " << format_double(rec.stacked_condition) << "\n";

  if (!out_path.empty())
    write_result(rec, out_path, format == "json" ? ResultFormat::Json : ResultFormat::Csv);
  return kExitOk;
}

int cmd_verify(const std::string& a_path, const std::string& b_path, double tol) {
  MatrixPair pair = load_pair(a_path, b_path);

  StackedSvdParts parts = stacked_svd_parts(pair);
  GsvSpectrum indep = gsv_from_parts(parts, pair.m(), pair.p(), pair.n(), Mode::Independent);
  GsvSpectrum compl_ = gsv_from_parts(parts, pair.m(), pair.p(), pair.n(), Mode::Complementary);
  OracleResult oracle = oracle_gsv(pair);

  auto max_gap = [](const std::vector<GsvPair>& x, const std::vector<GsvPair>& y) {
    std::vector<GsvPair> sx = sorted_pairs(x), sy = sorted_pairs(y);
    double gap = 0.0;
    for (size_t i = 0; i < sx.size(); ++i)
      gap = std::max({gap, std::abs(sx[i].alpha - sy[i].alpha),
                      std::abs(sx[i].beta - sy[i].beta)});
    return gap;
  };

  const double discrepancy =
      std::max({max_gap(indep.pairs, oracle.pairs), max_gap(compl_.pairs, oracle.pairs),
                max_gap(indep.pairs, compl_.pairs)});
  double pair_sum = 0.0;
  for (double r : indep.pair_sum_residuals) pair_sum = std::max(pair_sum, r);

  const double gram_scale =
      frobenius_norm(gram(pair.a())) + frobenius_norm(gram(pair.b()));
  double det_res = 0.0;
  for (const GsvPair& pr : compl_.pairs)
    det_res = std::max(det_res, det_residual(pair, pr.alpha, pr.beta) / gram_scale);

  const auto [ue_a, ue_b] = unitary_equivalence_residual(pair, parts);
  const double ab_scale = frobenius_norm(pair.a()) + frobenius_norm(pair.b());
  const double ue = std::max(ue_a, ue_b) / ab_scale;

  struct Check {
    const char* name;
    double value;
  } checks[] = {
      {"max pairwise discrepancy (conversion vs oracle)", discrepancy},
      {"max pair-sum residual (independent mode)", pair_sum},
      {"max scaled det residual", det_res},
      {"scaled unitary-equivalence residual", ue},
  };

  int failures = 0;
  for (const Check& c : checks) {
    const bool ok = c.value <= tol;
    std::cout << (ok ? "ok   " : "FAIL ") << c.name << " = " << format_double(c.value)
              << " (tol " << format_double(tol) << ")\n";
    if (!ok) ++failures;
  }
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

std::vector<std::pair<double, int>> parse_cluster(const std::string& s) {
  std::vector<std::pair<double, int>> cluster;
  std::istringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw InvalidInput("cluster entries must look like value:multiplicity");
    cluster.emplace_back(std::stod(item.substr(0, colon)),
                         std::stoi(item.substr(colon + 1)));
  }
  return cluster;
}

int cmd_gen(const PairGenSpec& spec, const std::string& a_out, const std::string& b_out,
            const std::string& truth_out) {
  GeneratedPair gen = generate_pair(spec);
  write_matrix_market(gen.pair.a(), a_out);
  write_matrix_market(gen.pair.b(), b_out);
  if (!truth_out.empty()) {
    std::ofstream out(truth_out);
    if (!out) throw IoError("cannot open " + truth_out + " for writing");
    out << "index,alpha,beta\n";
    for (size_t i = 0; i < gen.planted.size(); ++i)
      out << (i + 1) << ',' << format_double(gen.planted[i].alpha) << ','
          << format_double(gen.planted[i].beta) << '\n';
  }
  std::cout << "wrote " << a_out << " (" << spec.m << "x" << spec.n << "), " << b_out << " ("
            << spec.p << "x" << spec.n << ")\n";
  return kExitOk;
}

int cmd_bench(const std::string& config_path, const std::string& out_path) {
  BenchConfig cfg = parse_bench_config(config_path);
  std::vector<BenchRow> rows = run_bench(cfg);
  write_bench_report(rows, cfg, out_path);
  int failures = 0;
  for (const BenchRow& r : rows)
    if (r.failed) ++failures;
  std::cout << "bench: " << rows.size() << " rows written to " << out_path << " (+ .long.csv), "
            << failures << " failed trials\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized singular values of a matrix pair via the stacked SVD"};
  app.set_version_flag("--version", gsv::kVersion);
  app.require_subcommand(1);

  std::string a_path, b_path, out_path, format = "csv", mode = "complementary";
  double tol = 1e-8;

  auto* compute = app.add_subcommand("compute", "compute GSV pairs of {A, B}");
  compute->add_option("--a", a_path, "Matrix Market file for A")->required();
  compute->add_option("--b", b_path, "Matrix Market file for B")->required();
  compute->add_option("--mode", mode, "independent | complementary")
      ->check(CLI::IsMember({"independent", "complementary"}));
  compute->add_option("--out", out_path, "result file (see --format)");
  compute->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "cross-check conversion, oracle and identities");
  verify->add_option("--a", a_path, "Matrix Market file for A")->required();
  verify->add_option("--b", b_path, "Matrix Market file for B")->required();
  verify->add_option("--tol", tol, "acceptance tolerance (default 1e-8)");

  gsv::PairGenSpec spec;
  std::string kind = "real", cluster, a_out, b_out, truth_out;
  auto* gen = app.add_subcommand("gen", "generate a pair with planted GSVs");
  gen->add_option("--m", spec.m)->required();
  gen->add_option("--p", spec.p)->required();
  gen->add_option("--n", spec.n)->required();
  gen->add_option("--kind", kind, "real | complex")
      ->check(CLI::IsMember({"real", "complex"}));
  gen->add_option("--cond", spec.stacked_condition_target, "stacked condition target (>= 1)");
  gen->add_option("--seed", spec.seed, "generator seed");
  gen->add_option("--cluster", cluster, "planted alphas as value:mult,value:mult");
  gen->add_option("--a-out", a_out, "output path for A")->required();
  gen->add_option("--b-out", b_out, "output path for B")->required();
  gen->add_option("--truth-out", truth_out, "CSV of planted (alpha, beta)");

  std::string config_path, report_out = "bench_report.csv";
  auto* bench = app.add_subcommand("bench", "accuracy/runtime sweep against planted truth");
  bench->add_option("--config", config_path, "bench config file")->required();
  bench->add_option("--out", report_out, "report CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return cmd_compute(a_path, b_path, mode, out_path, format);
    if (verify->parsed()) return cmd_verify(a_path, b_path, tol);
    if (gen->parsed()) {
      spec.scalar_kind = kind == "complex" ? gsv::ScalarKind::Complex : gsv::ScalarKind::Real;
      if (!cluster.empty()) spec.cluster_spec = parse_cluster(cluster);
      return cmd_gen(spec, a_out, b_out, truth_out);
    }
    if (bench->parsed()) return cmd_bench(config_path, report_out);
  } catch (const gsv::NotGmp& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidPair;
  } catch (const gsv::ShapeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidPair;
  } catch (const gsv::NotPositiveDefinite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidPair;
  } catch (const gsv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitIo;
}
