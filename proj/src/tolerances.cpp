#include "gsv/tolerances.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "gsv/errors.hpp"

namespace gsv {

Tolerances Tolerances::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open tolerance file: " + path);
  Tolerances t;
  std::map<std::string, double*> fields = {
      {"svd_reconstruction_factor", &t.svd_reconstruction_factor},
      {"unitarity_factor", &t.unitarity_factor},
      {"sv_match_rel", &t.sv_match_rel},
      {"pencil_residual_factor", &t.pencil_residual_factor},
      {"pair_sum", &t.pair_sum},
      {"oracle_match", &t.oracle_match},
      {"det_membership", &t.det_membership},
      {"clamp_slack", &t.clamp_slack},
  };
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string key, eq, value;
    std::istringstream ls(line);
    if (!(ls >> key)) continue;
    auto pos = key.find('=');
    if (pos != std::string::npos) {
      value = key.substr(pos + 1);
      key.erase(pos);
      if (value.empty()) ls >> value;
    } else {
      ls >> eq >> value;
      if (eq != "=") throw ParseError("expected key = value", lineno);
    }
    auto it = fields.find(key);
    if (it == fields.end()) throw ParseError("unknown tolerance key: " + key, lineno);
    try {
      *it->second = std::stod(value);
    } catch (const std::exception&) {
      throw ParseError("bad numeric value for " + key, lineno);
    }
  }
  return t;
}

const Tolerances& Tolerances::global() {
  static Tolerances t = [] {
    if (const char* path = std::getenv("GSV_TOLERANCES"))
      return Tolerances::from_file(path);
    return Tolerances{};
  }();
  return t;
}

}  // namespace gsv
