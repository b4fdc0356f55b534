#include "rigidroots/svg.hpp"

#include "rigidroots/words.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace rigid {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Canvas {
  double cell;
  double margin;
  long long a, b;

  double px(double x) const { return margin + cell * x; }
  double py(double y) const { return margin + cell * (static_cast<double>(b) - y); }

  std::string line(double x1, double y1, double x2, double y2, const char* cls) const {
    return "<line class=\"" + std::string(cls) + "\" x1=\"" + num(px(x1)) + "\" y1=\"" + num(py(y1)) + "\" x2=\"" +
           num(px(x2)) + "\" y2=\"" + num(py(y2)) + "\"/>\n";
  }
};

}  // namespace

std::string render_svg(const Integer& m, const Root& r) {
  require_rank(m);
  if (!is_reduced(r) || r.a < 0 || r.b < 0) throw std::domain_error("svg: " + r.str() + " is not reduced positive");
  const long long a = to_i64(r.a), b = to_i64(r.b);
  const double cell = std::clamp(600.0 / static_cast<double>(std::max(a, b)), 8.0, 60.0);
  const Canvas c{cell, 40, a, b};
  const double width = c.px(static_cast<double>(a)) + 40 + 90;
  const double height = c.py(0) + 40;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<title>s(" + r.str() + ") in W(" + m.str() + ")</title>\n";
  out += "<style>\n"
         ".v{stroke:#1f77b4;stroke-width:1}\n"
         ".h{stroke:#2ca02c;stroke-width:1}\n"
         ".d{stroke:#999;stroke-width:1}\n"
         ".seg{stroke:#d62728;stroke-width:2}\n"
         "text{font-family:sans-serif;font-size:11px}\n"
         "</style>\n";

  out += "<g id=\"grid\">\n";
  for (long long k = 0; k <= a; ++k) out += c.line(k, 0, k, b, "v");
  for (long long k = 0; k <= b; ++k) out += c.line(0, k, a, k, "h");
  for (long long k = 1; k < a + b; ++k)
    out += c.line(std::max(0LL, k - b), std::min(k, b), std::min(k, a), std::max(0LL, k - a), "d");
  out += "</g>\n";

  out += "<g id=\"segment\">\n" + c.line(0, 0, a, b, "seg") + "</g>\n";

  // Labels sit a fixed distance to the upper left of the segment.
  const double len = std::hypot(static_cast<double>(a), static_cast<double>(b));
  const double ox = -static_cast<double>(b) / len * 9, oy = -static_cast<double>(a) / len * 9;
  out += "<g id=\"crossings\">\n";
  for (const Crossing& x : crossings(r)) {
    const double t = static_cast<double>(x.k) / static_cast<double>(x.n);
    const double cx = c.px(t * a), cy = c.py(t * b);
    out += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"2\"/>";
    out += "<text x=\"" + num(cx + ox) + "\" y=\"" + num(cy - oy + 4) + "\" text-anchor=\"middle\">" + x.label +
           "</text>\n";
  }
  out += "</g>\n";

  // Unit cell legend: vertical 3, horizontal 1, anti-diagonal 2.
  const double lx = c.px(static_cast<double>(a)) + 30, ly = c.margin + 10, u = 40;
  out += "<g id=\"legend\">\n";
  out += "<line class=\"v\" x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx) + "\" y2=\"" + num(ly + u) + "\"/>\n";
  out += "<line class=\"h\" x1=\"" + num(lx) + "\" y1=\"" + num(ly + u) + "\" x2=\"" + num(lx + u) + "\" y2=\"" +
         num(ly + u) + "\"/>\n";
  out += "<line class=\"d\" x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + u) + "\" y2=\"" +
         num(ly + u) + "\"/>\n";
  out += "<text x=\"" + num(lx - 8) + "\" y=\"" + num(ly + u / 2 + 4) + "\" text-anchor=\"middle\">3</text>\n";
  out += "<text x=\"" + num(lx + u / 2) + "\" y=\"" + num(ly + u + 14) + "\" text-anchor=\"middle\">1</text>\n";
  out += "<text x=\"" + num(lx + u / 2 + 8) + "\" y=\"" + num(ly + u / 2 - 2) + "\" text-anchor=\"middle\">2</text>\n";
  out += "</g>\n</svg>\n";
  return out;
}

void emit_svg(const Integer& m, const Root& r, const std::filesystem::path& path) {
  const std::string doc = render_svg(m, r);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << doc;
  f.close();
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace rigid
