// Copyright 2026 The spherepot Authors
// SPDX-License-Identifier: Apache-2.0

#include "io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace spherepot {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_config(const PointConfig& config) {
  std::string out = "# sphere-config v1 n=" + std::to_string(config.dim().n()) +
                    " N=" + std::to_string(config.size()) + "\n";
  for (std::size_t i = 0; i < config.size(); ++i) {
    const auto p = config.point(i);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k > 0) out += ' ';
      out += format_double(p[k]);
    }
    out += '\n';
  }
  return out;
}

namespace {

long parse_header_field(const std::string& token, const char* key, int line_no) {
  const std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0) {
    throw ParseError("line " + std::to_string(line_no) + ": expected " + prefix + "<integer>");
  }
  long value = 0;
  const char* first = token.data() + prefix.size();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("line " + std::to_string(line_no) + ": bad value in '" + token + "'");
  }
  return value;
}

}  // namespace

PointConfig parse_config(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  long n = -1;
  long n_points = -1;
  std::vector<double> coords;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (n < 0) {
      std::istringstream header(line);
      std::string hash, magic, version, n_tok, count_tok, extra;
      if (!(header >> hash >> magic >> version >> n_tok >> count_tok) || hash != "#" ||
          magic != "sphere-config" || version != "v1" || (header >> extra)) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected '# sphere-config v1 n=<n> N=<N>'");
      }
      n = parse_header_field(n_tok, "n", line_no);
      n_points = parse_header_field(count_tok, "N", line_no);
      if (n < 2 || n > 1000) throw ParseError("header: n must lie in [2, 1000]");
      if (n_points < 2) throw ParseError("header: N must be >= 2");
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    const std::size_t before = coords.size();
    const char* cur = line.data();
    const char* end = line.data() + line.size();
    while (cur < end) {
      if (*cur == ' ') {
        ++cur;
        continue;
      }
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(cur, end, v);
      if (ec != std::errc() || (ptr < end && *ptr != ' ')) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed coordinate");
      }
      coords.push_back(v);
      cur = ptr;
    }
    if (coords.size() - before != static_cast<std::size_t>(n + 1)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(n + 1) + " coordinates, found " +
                       std::to_string(coords.size() - before));
    }
    ++rows;
  }
  if (n < 0) throw ParseError("missing '# sphere-config v1' header");
  if (rows != static_cast<std::size_t>(n_points)) {
    throw ParseError("header declares N=" + std::to_string(n_points) + " but file has " +
                     std::to_string(rows) + " points");
  }
  return PointConfig(SphereDim(static_cast<int>(n)), std::move(coords));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read error on '" + path + "'");
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp + "' for writing");
    out << contents;
    out.flush();
    if (!out) throw IoError("write error on '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw IoError("cannot rename '" + tmp + "' to '" + path + "'");
  }
}

PointConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

void save_config(const PointConfig& config, const std::string& path) {
  write_file_atomic(path, format_config(config));
}

std::string format_experiment_csv(const Experiment& exp) {
  std::string out = "n,N,restart,final_energy,finite_bound,asymptotic_bound,converged,iters\n";
  for (const ExperimentRow& r : exp.rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.n_points) + ',' +
           std::to_string(r.restart) + ',' + format_double(r.final_energy) + ',' +
           format_double(r.finite_bound) + ',' + format_double(r.asymptotic_bound) + ',' +
           (r.converged ? "1" : "0") + ',' + std::to_string(r.iterations) + '\n';
  }
  return out;
}

std::string format_experiment_svg(const Experiment& exp) {
  constexpr double kWidth = 800.0;
  constexpr double kHeight = 500.0;
  constexpr double kLeft = 90.0;
  constexpr double kRight = 30.0;
  constexpr double kTop = 40.0;
  constexpr double kBottom = 60.0;

  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  double y_lo = x_lo;
  double y_hi = -x_lo;
  for (const ExperimentRow& r : exp.rows) {
    const double x = static_cast<double>(r.n_points);
    x_lo = std::min(x_lo, x);
    x_hi = std::max(x_hi, x);
    for (double y : {r.final_energy, r.finite_bound, r.asymptotic_bound}) {
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  if (exp.rows.empty()) x_lo = x_hi = y_lo = y_hi = 0.0;
  if (x_hi == x_lo) {
    x_lo -= 1.0;
    x_hi += 1.0;
  }
  if (y_hi == y_lo) {
    y_lo -= 1.0;
    y_hi += 1.0;
  }
  const double pad = 0.05 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;
  auto sx = [&](double x) {
    return kLeft + (x - x_lo) / (x_hi - x_lo) * (kWidth - kLeft - kRight);
  };
  auto sy = [&](double y) {
    return kTop + (y_hi - y) / (y_hi - y_lo) * (kHeight - kTop - kBottom);
  };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
         "viewBox=\"0 0 800 500\">\n";
  svg += "<style>.cross{stroke:#1f4e9c;stroke-width:1.5;fill:none}"
         ".bound{stroke:#000;stroke-width:2;fill:none}"
         ".asymptotic{stroke:#999;stroke-width:1;stroke-dasharray:6 4;fill:none}"
         ".axis{stroke:#000;stroke-width:1}text{font-family:sans-serif;font-size:12px}"
         "</style>\n";
  svg += "<rect width=\"800\" height=\"500\" fill=\"#fff\"/>\n";
  svg += "<text x=\"400\" y=\"22\" text-anchor=\"middle\">Minimal " +
         std::string(exp.kind == EnergyKind::green ? "Green" : "logarithmic") +
         " energy on S^" + std::to_string(exp.n) + " versus N</text>\n";
  svg += "<line class=\"axis\" x1=\"" + num(kLeft) + "\" y1=\"" + num(kHeight - kBottom) +
         "\" x2=\"" + num(kWidth - kRight) + "\" y2=\"" + num(kHeight - kBottom) + "\"/>\n";
  svg += "<line class=\"axis\" x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" +
         num(kLeft) + "\" y2=\"" + num(kHeight - kBottom) + "\"/>\n";
  for (std::int64_t n_points : exp.n_values) {
    const double x = sx(static_cast<double>(n_points));
    svg += "<text x=\"" + num(x) + "\" y=\"" + num(kHeight - kBottom + 18) +
           "\" text-anchor=\"middle\">" + std::to_string(n_points) + "</text>\n";
  }
  for (int k = 0; k <= 4; ++k) {
    const double y = y_lo + (y_hi - y_lo) * k / 4.0;
    char label[32];
    std::snprintf(label, sizeof label, "%.4g", y);
    svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(sy(y) + 4) +
           "\" text-anchor=\"end\">" + label + "</text>\n";
  }
  svg += "<text x=\"400\" y=\"" + num(kHeight - 15) + "\" text-anchor=\"middle\">N</text>\n";

  auto polyline = [&](const char* cls, auto&& value_of) {
    std::string pts;
    std::int64_t last = -1;
    for (const ExperimentRow& r : exp.rows) {
      if (r.n_points == last) continue;
      last = r.n_points;
      if (!pts.empty()) pts += ' ';
      pts += num(sx(static_cast<double>(r.n_points))) + "," + num(sy(value_of(r)));
    }
    return "<polyline class=\"" + std::string(cls) + "\" points=\"" + pts + "\"/>\n";
  };
  svg += polyline("bound", [](const ExperimentRow& r) { return r.finite_bound; });
  svg += polyline("asymptotic", [](const ExperimentRow& r) { return r.asymptotic_bound; });
  for (const ExperimentRow& r : exp.rows) {
    const double x = sx(static_cast<double>(r.n_points));
    const double y = sy(r.final_energy);
    svg += "<path class=\"cross\" d=\"M" + num(x - 4) + " " + num(y - 4) + " L" + num(x + 4) +
           " " + num(y + 4) + " M" + num(x - 4) + " " + num(y + 4) + " L" + num(x + 4) + " " +
           num(y - 4) + "\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace spherepot
