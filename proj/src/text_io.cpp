#include "se3conv/text_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "se3conv/clebsch_gordan.hpp"
#include "se3conv/errors.hpp"

namespace se3conv {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty line split on whitespace, comments removed.
  bool next(std::vector<std::string>& toks) {
    std::string line;
    while (std::getline(in_, line)) {
      ++lineno_;
      if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
      toks.clear();
      std::istringstream ss(line);
      std::string t;
      while (ss >> t) toks.push_back(t);
      if (!toks.empty()) return true;
    }
    return false;
  }

  bool peek(std::vector<std::string>& toks) {
    if (!pending_) {
      std::vector<std::string> t;
      if (!next(t)) return false;
      pending_ = std::move(t);
    }
    toks = *pending_;
    return true;
  }

  bool take(std::vector<std::string>& toks) {
    if (pending_) {
      toks = std::move(*pending_);
      pending_.reset();
      return true;
    }
    return next(toks);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(lineno_) + ": " + msg);
  }

  int lineno() const { return lineno_; }

 private:
  std::istream& in_;
  int lineno_ = 0;
  std::optional<std::vector<std::string>> pending_;
};

// key=value tokens after the leading keyword.
std::map<std::string, std::string> key_values(const std::vector<std::string>& toks, std::size_t from, const LineReader& r) {
  std::map<std::string, std::string> kv;
  for (std::size_t i = from; i < toks.size(); ++i) {
    const auto eq = toks[i].find('=');
    if (eq == std::string::npos || eq == 0) r.fail("expected key=value, got '" + toks[i] + "'");
    if (!kv.emplace(toks[i].substr(0, eq), toks[i].substr(eq + 1)).second) r.fail("repeated key " + toks[i]);
  }
  return kv;
}

const std::string& require(const std::map<std::string, std::string>& kv, const std::string& key, const LineReader& r) {
  const auto it = kv.find(key);
  if (it == kv.end()) r.fail("missing " + key + "=");
  return it->second;
}

std::vector<double> read_row(LineReader& r, std::size_t expect) {
  std::vector<std::string> toks;
  if (!r.take(toks)) r.fail("unexpected end of input");
  if (toks.size() != expect) {
    r.fail("expected " + std::to_string(expect) + " values, got " + std::to_string(toks.size()));
  }
  std::vector<double> v;
  v.reserve(expect);
  for (const auto& t : toks) v.push_back(parse_double(t));
  return v;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string item;
  std::istringstream ss(s);
  while (std::getline(ss, item, ',')) out.push_back(static_cast<int>(parse_int(item)));
  if (out.empty()) throw ParseError("empty list");
  return out;
}

void write_row(std::ostream& out, const double* v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out << ' ';
    out << format_double(v[i]);
  }
  out << '\n';
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& tok) {
  double v = 0.0;
  const char* b = tok.data();
  const char* e = b + tok.size();
  if (b != e && *b == '+') ++b;
  const auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e) throw ParseError("not a number: '" + tok + "'");
  if (!std::isfinite(v)) throw ParseError("non-finite value: '" + tok + "'");
  return v;
}

long parse_int(const std::string& tok) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError("not an integer: '" + tok + "'");
  return v;
}

PointCloud read_point_cloud(std::istream& in) {
  LineReader r(in);
  PointCloud cloud;
  std::vector<std::string> toks;
  while (r.take(toks)) {
    if (toks.size() != 3) r.fail("expected 'x y z'");
    cloud.emplace_back(parse_double(toks[0]), parse_double(toks[1]), parse_double(toks[2]));
  }
  return cloud;
}

void write_point_cloud(std::ostream& out, const PointCloud& cloud) {
  for (const auto& x : cloud) write_row(out, x.data(), 3);
}

RotationSampleSet read_rotation_set(std::istream& in, const Tolerances& tol) {
  LineReader r(in);
  RotationSampleSet s;
  s.kind = SampleKind::fps;
  std::vector<std::string> toks;
  while (r.take(toks)) {
    if (toks.size() != 10) r.fail("expected 9 matrix entries and a weight");
    Mat3 m;
    for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = parse_double(toks[i]);
    s.rotations.push_back(Rotation::from_matrix(m, tol.orth));
    s.weights.push_back(parse_double(toks[9]));
  }
  s.param = static_cast<int>(s.rotations.size());
  return s;
}

void write_rotation_set(std::ostream& out, const RotationSampleSet& set) {
  for (std::size_t k = 0; k < set.size(); ++k) {
    double row[10];
    const Mat3& m = set.rotations[k].matrix();
    for (int i = 0; i < 9; ++i) row[i] = m(i / 3, i % 3);
    row[9] = set.weights[k];
    write_row(out, row, 10);
  }
}

FeatureField read_field(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> toks;
  if (!r.take(toks) || toks[0] != "FIELD") r.fail("expected FIELD header");
  std::size_t i = 1;
  std::map<std::string, std::string> kv;
  for (; i < toks.size() && toks[i] != "CHANNELS"; ++i) {
    const auto eq = toks[i].find('=');
    if (eq == std::string::npos) r.fail("expected key=value, got '" + toks[i] + "'");
    kv[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
  }
  const long n = parse_int(require(kv, "N", r));
  const long lmax = parse_int(require(kv, "LMAX", r));
  if (n < 0 || lmax < 0 || lmax > kMaxDegree) r.fail("bad N or LMAX");
  if (i == toks.size()) r.fail("missing CHANNELS");
  std::vector<int> channels(lmax + 1, -1);
  for (++i; i < toks.size(); ++i) {
    const auto colon = toks[i].find(':');
    if (colon == std::string::npos) r.fail("expected l:c, got '" + toks[i] + "'");
    const long l = parse_int(toks[i].substr(0, colon));
    const long c = parse_int(toks[i].substr(colon + 1));
    if (l < 0 || l > lmax || c < 0 || channels[l] != -1) r.fail("bad channel entry '" + toks[i] + "'");
    channels[l] = static_cast<int>(c);
  }
  for (int c : channels) {
    if (c < 0) r.fail("CHANNELS must list every degree 0..LMAX");
  }
  FeatureField f(static_cast<std::size_t>(n), channels);
  std::set<std::tuple<long, long, long>> seen;
  while (r.take(toks)) {
    if (toks.size() != 6 || toks[0] != "POINT" || toks[2] != "L" || toks[4] != "C") r.fail("expected 'POINT i L l C c'");
    const long p = parse_int(toks[1]), l = parse_int(toks[3]), c = parse_int(toks[5]);
    if (p < 0 || p >= n || l < 0 || l > lmax || c < 0 || c >= channels[l]) throw ShapeMismatch("block outside field shape");
    if (!seen.emplace(p, l, c).second) r.fail("duplicate block");
    for (int row = 0; row < 2 * l + 1; ++row) {
      const std::vector<double> v = read_row(r, 2 * l + 1);
      for (int col = 0; col < 2 * l + 1; ++col) f.at(static_cast<int>(l), p, row, col, static_cast<int>(c)) = v[col];
    }
  }
  return f;
}

void write_field(std::ostream& out, const FeatureField& f) {
  out << "FIELD N=" << f.num_points() << " LMAX=" << f.max_degree() << " CHANNELS";
  for (int l = 0; l <= f.max_degree(); ++l) out << ' ' << l << ':' << f.channels(l);
  out << '\n';
  for (std::size_t p = 0; p < f.num_points(); ++p) {
    for (int l = 0; l <= f.max_degree(); ++l) {
      for (int c = 0; c < f.channels(l); ++c) {
        out << "POINT " << p << " L " << l << " C " << c << '\n';
        for (int row = 0; row < 2 * l + 1; ++row) {
          for (int col = 0; col < 2 * l + 1; ++col) {
            if (col) out << ' ';
            out << format_double(f.at(l, p, row, col, c));
          }
          out << '\n';
        }
      }
    }
  }
}

AnyWeights read_weights(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> toks;
  if (!r.take(toks) || toks[0] != "WEIGHTS") r.fail("expected WEIGHTS header");
  const auto kv = key_values(toks, 1, r);
  const std::string form = require(kv, "form", r);
  if (form != "se3" && form != "tfn") r.fail("form must be se3 or tfn");
  const long cin = parse_int(require(kv, "cin", r));
  const long cout = parse_int(require(kv, "cout", r));
  const long lmax_out = parse_int(require(kv, "lmax_out", r));
  const std::vector<int> radial = parse_int_list(require(kv, "radial", r));
  if (cin < 1 || cout < 1 || lmax_out < 0 || lmax_out > kMaxDegree || radial.size() > kMaxDegree + 1) {
    r.fail("bad WEIGHTS dimensions");
  }
  for (int c : radial) {
    if (c < 0) r.fail("negative radial count");
  }
  const bool se3 = form == "se3";
  SE3Weights w;
  TFNWeights v;
  if (se3) {
    w = SE3Weights(cin, cout, radial, lmax_out);
  } else {
    v = TFNWeights(cin, cout, radial, lmax_out);
  }
  const int lp_max = static_cast<int>(radial.size()) - 1;
  std::set<std::tuple<long, long, long>> seen;
  bool have_bias = false;
  while (r.take(toks)) {
    if (have_bias) r.fail("BIAS must be the last block");
    if (toks[0] == "BIAS") {
      if (toks.size() != 1) r.fail("trailing tokens after BIAS");
      const std::vector<double> b = read_row(r, cout);
      if (se3) {
        w.bias() = b;
      } else {
        v.bias() = b;
      }
      have_bias = true;
      continue;
    }
    if (toks[0] != "BLOCK") r.fail("expected BLOCK or BIAS");
    const auto bk = key_values(toks, 1, r);
    if (bk.size() != (se3 ? 2u : 3u) || !bk.count("lp") || !bk.count("L") || (!se3 && !bk.count("l"))) {
      throw BlockHeaderMismatch("line " + std::to_string(r.lineno()) + ": block header does not match form=" + form);
    }
    const long lp = parse_int(bk.at("lp")), L = parse_int(bk.at("L"));
    const long l = se3 ? -1 : parse_int(bk.at("l"));
    if (lp < 0 || lp > lp_max || L < 0 || L > lmax_out) {
      throw BlockHeaderMismatch("line " + std::to_string(r.lineno()) + ": block degrees out of range");
    }
    if (!seen.emplace(l, lp, L).second) {
      throw BlockHeaderMismatch("line " + std::to_string(r.lineno()) + ": duplicate block");
    }
    std::vector<double>* dst;
    std::size_t row_len;
    if (se3) {
      dst = &w.block(static_cast<int>(lp), static_cast<int>(L));
      row_len = w.row_length(static_cast<int>(lp), static_cast<int>(L));
    } else {
      if (l < 0 || !triangle_ok(static_cast<int>(l), static_cast<int>(lp), static_cast<int>(L))) {
        throw TriangleViolation("line " + std::to_string(r.lineno()) + ": (l, lp, L) violates the triangle rule");
      }
      if (!v.has_block(static_cast<int>(l), static_cast<int>(lp), static_cast<int>(L))) {
        throw BlockHeaderMismatch("line " + std::to_string(r.lineno()) + ": block degrees out of range");
      }
      dst = &v.block(static_cast<int>(l), static_cast<int>(lp), static_cast<int>(L));
      row_len = v.row_length(static_cast<int>(l), static_cast<int>(lp));
    }
    const std::size_t rows = row_len == 0 ? 0 : dst->size() / row_len;
    for (std::size_t i = 0; i < rows; ++i) {
      const std::vector<double> row = read_row(r, row_len);
      std::copy(row.begin(), row.end(), dst->begin() + static_cast<std::ptrdiff_t>(i * row_len));
    }
  }
  if (se3) return w;
  return v;
}

namespace {

void write_weights_header(std::ostream& out, const char* form, int cin, int cout, int lmax_out, const std::vector<int>& radial) {
  out << "WEIGHTS form=" << form << " cin=" << cin << " cout=" << cout << " lmax_out=" << lmax_out << " radial=";
  for (std::size_t i = 0; i < radial.size(); ++i) out << (i ? "," : "") << radial[i];
  out << '\n';
}

void write_block_rows(std::ostream& out, const std::vector<double>& data, std::size_t row_len) {
  if (row_len == 0) return;
  for (std::size_t i = 0; i < data.size(); i += row_len) write_row(out, data.data() + i, row_len);
}

}  // namespace

void write_weights(std::ostream& out, const SE3Weights& w) {
  write_weights_header(out, "se3", w.in_channels(), w.out_channels(), w.max_out_degree(), w.radial_counts());
  for (int lp = 0; lp <= w.max_kernel_degree(); ++lp) {
    for (int L = 0; L <= w.max_out_degree(); ++L) {
      out << "BLOCK lp=" << lp << " L=" << L << '\n';
      write_block_rows(out, w.block(lp, L), w.row_length(lp, L));
    }
  }
  out << "BIAS\n";
  write_row(out, w.bias().data(), w.bias().size());
}

void write_weights(std::ostream& out, const TFNWeights& v) {
  write_weights_header(out, "tfn", v.in_channels(), v.out_channels(), v.max_out_degree(), v.radial_counts());
  for (const auto& [key, data] : v.blocks()) {
    const auto [l, lp, L] = key;
    out << "BLOCK l=" << l << " lp=" << lp << " L=" << L << '\n';
    write_block_rows(out, data, v.row_length(l, lp));
  }
  out << "BIAS\n";
  write_row(out, v.bias().data(), v.bias().size());
}

void write_matrix(std::ostream& out, const Eigen::MatrixXd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

}  // namespace

PointCloud read_point_cloud_file(const std::string& path) {
  auto in = open_input(path);
  return read_point_cloud(in);
}

FeatureField read_field_file(const std::string& path) {
  auto in = open_input(path);
  return read_field(in);
}

AnyWeights read_weights_file(const std::string& path) {
  auto in = open_input(path);
  return read_weights(in);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
  out.flush();
  if (!out) throw ParseError("write failed: " + path);
}

}  // namespace se3conv
