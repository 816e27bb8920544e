#include "se3conv/layer_config.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "se3conv/errors.hpp"
#include "se3conv/text_io.hpp"

namespace se3conv {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_spaces(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }), s.end());
  return s;
}

ActivationSpec parse_activation(const std::string& raw) {
  const std::string v = strip_spaces(raw);
  ActivationSpec a;
  if (v == "none") return a;
  const std::string prefix = "relu_wt(set=";
  if (v.rfind(prefix, 0) != 0 || v.back() != ')') throw ParseError("bad activation: " + raw);
  const std::string set = v.substr(prefix.size(), v.size() - prefix.size() - 1);
  a.enabled = true;
  if (set == "ico") {
    a.set = SampleKind::finite_group;
    a.param = 60;
    return a;
  }
  const auto colon = set.find(':');
  if (colon == std::string::npos) throw ParseError("bad activation set: " + set);
  const std::string kind = set.substr(0, colon);
  a.param = static_cast<int>(parse_int(set.substr(colon + 1)));
  if (kind == "fps") {
    a.set = SampleKind::fps;
  } else if (kind == "grid") {
    a.set = SampleKind::exact_grid;
  } else {
    throw ParseError("bad activation set: " + set);
  }
  if (a.param < 1) throw ParseError("activation set size must be positive");
  return a;
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ParseError("expected true or false, got '" + v + "'");
}

}  // namespace

LayerConfig parse_layer_config(std::istream& in, const std::string& base_dir) {
  LayerConfig cfg;
  std::vector<int> radial;
  double support = 1.0;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) throw ParseError("config line " + std::to_string(lineno) + ": repeated key " + key);
    if (value.empty()) throw ParseError("config line " + std::to_string(lineno) + ": empty value");
    if (key == "kernel") {
      if (value != "gaussian" && value != "zernike") throw ParseError("kernel must be gaussian or zernike");
      cfg.kernel = value;
    } else if (key == "kernel.radial") {
      std::istringstream ss(strip_spaces(value));
      std::string item;
      while (std::getline(ss, item, ',')) radial.push_back(static_cast<int>(parse_int(item)));
    } else if (key == "kernel.support_radius") {
      support = parse_double(value);
      if (support <= 0.0) throw ParseError("support_radius must be positive");
    } else if (key == "weights.form") {
      if (value != "se3" && value != "tfn") throw ParseError("weights.form must be se3 or tfn");
      cfg.weights_form = value;
    } else if (key == "weights.file") {
      const std::filesystem::path p(value);
      cfg.weights_path = p.is_absolute() ? p.string() : (std::filesystem::path(base_dir) / p).string();
    } else if (key == "activation") {
      cfg.activation = parse_activation(value);
    } else if (key == "truncate") {
      const long t = parse_int(value);
      if (t < 0) throw ParseError("truncate must be non-negative");
      cfg.options.truncate = static_cast<int>(t);
    } else if (key == "exclude_self") {
      cfg.options.exclude_self = parse_bool(value);
    } else {
      throw ParseError("config line " + std::to_string(lineno) + ": unknown key " + key);
    }
  }
  if (radial.empty()) throw ParseError("config needs kernel.radial");
  if (cfg.weights_path.empty()) throw ParseError("config needs weights.file");
  for (int c : radial) {
    if (c < 0) throw ParseError("negative radial count");
  }
  cfg.spec = cfg.kernel == "zernike" ? zernike_basis(radial, support) : gaussian_basis(radial, support);
  cfg.spec.validate();
  return cfg;
}

LayerConfig load_layer_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_layer_config(in, dir.empty() ? "." : dir.string());
}

RotationSampleSet activation_samples(const ActivationSpec& a, std::uint64_t seed) {
  switch (a.set) {
    case SampleKind::exact_grid:
      return exact_euler_grid(a.param);
    case SampleKind::fps:
      return fps_rotations(a.param, seed);
    case SampleKind::finite_group:
      break;
  }
  return icosahedral_group();
}

}  // namespace se3conv
