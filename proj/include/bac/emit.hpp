#pragma once

#include "bac/fraction.hpp"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace bac {

using Json = nlohmann::json;  // ordered by key, which keeps output schema-stable

// Round to significant digits through the shortest decimal form, so JSON
// numbers honour the --precision flag while staying plain numbers.
inline double round_sig(double x, int digits) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

inline std::string format_sig(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

inline std::string format_fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

inline Json json_fractions(const std::vector<Fraction>& fs) {
  Json a = Json::array();
  for (const Fraction& f : fs) a.push_back(f.str());
  return a;
}

inline Json json_points(const std::vector<std::array<double, 2>>& pts, int digits) {
  Json a = Json::array();
  for (const auto& pt : pts)
    a.push_back(Json::array({round_sig(pt[0], digits), round_sig(pt[1], digits)}));
  return a;
}

// Atomic file emission: write a sibling temp file, then rename over the
// target.  Empty path means the provided stream.
inline void write_output(const std::string& path, const std::string& content,
                         std::ostream& fallback) {
  if (path.empty()) {
    fallback << content;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + tmp + "' for writing");
    f << content;
    if (!f.flush()) throw std::runtime_error("write to '" + tmp + "' failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
}

// Minimal SVG plotting of unit-square curves.  Mathematical coordinates
// (p right, q up) map onto a fixed canvas; styling is kept to stroke
// attributes so the files stay diff-friendly.
class SvgCanvas {
 public:
  SvgCanvas(double side = 560.0, double margin = 40.0) : side_(side), margin_(margin) {}

  double x(double p) const { return margin_ + p * side_; }
  double y(double q) const { return margin_ + (1.0 - q) * side_; }

  void polyline(const std::vector<std::array<double, 2>>& pts,
                const std::string& stroke, bool dashed = false) {
    if (pts.empty()) return;
    body_ << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1\"";
    if (dashed) body_ << " stroke-dasharray=\"6 4\"";
    body_ << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) body_ << ' ';
      body_ << format_fixed(x(pts[i][0]), 2) << ',' << format_fixed(y(pts[i][1]), 2);
    }
    body_ << "\"/>\n";
  }

  void line(double p0, double q0, double p1, double q1, const std::string& stroke,
            bool dashed = false) {
    polyline({{p0, q0}, {p1, q1}}, stroke, dashed);
  }

  void text(double p, double q, const std::string& s) {
    body_ << "  <text x=\"" << format_fixed(x(p), 2) << "\" y=\""
          << format_fixed(y(q), 2) << "\" font-size=\"11\" font-family=\"monospace\">"
          << s << "</text>\n";
  }

  std::string finish() const {
    const double w = side_ + 2 * margin_;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
        << w << "\" viewBox=\"0 0 " << w << " " << w << "\">\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

 private:
  double side_, margin_;
  std::ostringstream body_;
};

}  // namespace bac
