#include "gsv/results.hpp"

#include <charconv>
#include <fstream>

#include <nlohmann/json.hpp>

#include "gsv/errors.hpp"

namespace gsv {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string mode_name(Mode mode) {
  return mode == Mode::Independent ? "independent" : "complementary";
}

Mode mode_from_name(const std::string& name) {
  if (name == "independent") return Mode::Independent;
  if (name == "complementary") return Mode::Complementary;
  throw InvalidInput("unknown mode: " + name);
}

namespace {

void validate(const ResultRecord& r) {
  const size_t n = static_cast<size_t>(r.n);
  if (r.pairs.size() != n || r.pair_sum_residuals.size() != n || r.det_residuals.size() != n)
    throw InvalidInput("result record: diagnostics lengths must equal n");
}

void write_csv(const ResultRecord& r, std::ostream& out) {
  out << "index,alpha,beta,pair_sum_residual,det_residual\n";
  for (size_t i = 0; i < r.pairs.size(); ++i)
    out << (i + 1) << ',' << format_double(r.pairs[i].alpha) << ','
        << format_double(r.pairs[i].beta) << ',' << format_double(r.pair_sum_residuals[i])
        << ',' << format_double(r.det_residuals[i]) << '\n';
}

void write_json(const ResultRecord& r, std::ostream& out) {
  nlohmann::ordered_json j;
  j["shape"] = {{"m", r.m}, {"p", r.p}, {"n", r.n}};
  j["mode"] = mode_name(r.mode);
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const GsvPair& pr : r.pairs) pairs.push_back({{"alpha", pr.alpha}, {"beta", pr.beta}});
  j["pairs"] = std::move(pairs);
  j["diagnostics"] = {{"pair_sum_residuals", r.pair_sum_residuals},
                      {"det_residuals", r.det_residuals},
                      {"stacked_condition", r.stacked_condition}};
  j["seed"] = r.seed;
  j["timings_ms"] = {{"stacked_svd", r.timings.stacked_svd_ms},
                     {"block_sv", r.timings.block_sv_ms},
                     {"diagnostics", r.timings.diagnostics_ms}};
  out << j.dump(2) << '\n';
}

}  // namespace

void write_result(const ResultRecord& record, const std::string& path, ResultFormat format) {
  validate(record);
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  if (format == ResultFormat::Csv)
    write_csv(record, out);
  else
    write_json(record, out);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace gsv
