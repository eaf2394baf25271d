#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "acnet/complex_matrix.hpp"

namespace acnet {

namespace {

constexpr double kCanvas = 640.0;  // pixels along the longer side

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Frame {
  double xmin, xmax, ymin, ymax, scale;

  double px(double x) const { return (x - xmin) * scale; }
  double py(double y) const { return (ymax - y) * scale; }
  double width() const { return (xmax - xmin) * scale; }
  double height() const { return (ymax - ymin) * scale; }
};

void append_circle(std::string& svg, const Frame& f, double cx, double cy, double r,
                   const char* fill, const char* stroke, const char* cls) {
  svg += "  <circle class=\"" + std::string(cls) + "\" cx=\"" + num(f.px(cx)) + "\" cy=\"" +
         num(f.py(cy)) + "\" r=\"" + num(r * f.scale) + "\" fill=\"" + fill +
         "\" fill-opacity=\"0.2\" stroke=\"" + stroke + "\" stroke-width=\"1.5\"/>\n";
}

void append_line(std::string& svg, const Frame& f, double x1, double y1, double x2, double y2,
                 const char* stroke, double width) {
  svg += "  <line x1=\"" + num(f.px(x1)) + "\" y1=\"" + num(f.py(y1)) + "\" x2=\"" + num(f.px(x2)) +
         "\" y2=\"" + num(f.py(y2)) + "\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width) +
         "\"/>\n";
}

void append_text(std::string& svg, double x, double y, const std::string& text, const char* anchor) {
  svg += "  <text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" font-size=\"11\"" +
         " text-anchor=\"" + anchor + "\">" + text + "</text>\n";
}

}  // namespace

std::string render_spectrum_svg(const Spectrum& spectrum, ComplexFrequency s) {
  const double disk_r = s.modulus_ratio();
  const double offset = s.slope();
  const double circle_r = std::sqrt(1.0 + offset * offset);

  double xmin = std::min(1.0 - disk_r, 1.0 - circle_r);
  double xmax = std::max(1.0 + disk_r, 1.0 + circle_r);
  double ymin = std::min(-disk_r, -offset - circle_r);
  double ymax = std::max(disk_r, offset + circle_r);
  for (const auto& z : spectrum.eigenvalues) {
    xmin = std::min(xmin, z.real());
    xmax = std::max(xmax, z.real());
    ymin = std::min(ymin, z.imag());
    ymax = std::max(ymax, z.imag());
  }
  const double padx = 0.1 * (xmax - xmin);
  const double pady = 0.1 * (ymax - ymin);
  Frame f{xmin - padx, xmax + padx, ymin - pady, ymax + pady, 0.0};
  f.scale = kCanvas / std::max(f.xmax - f.xmin, f.ymax - f.ymin);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(f.width()) +
         "\" height=\"" + num(f.height()) + "\" viewBox=\"0 0 " + num(f.width()) + " " +
         num(f.height()) + "\">\n";
  svg += "  <title>Eigenvalues for s = " + format_complex(s.value()) + "</title>\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  append_circle(svg, f, 1.0, 0.0, disk_r, "#3366ff", "#1f3fbf", "disk");
  append_circle(svg, f, 1.0, offset, circle_r, "#33aa33", "#1f7a1f", "circle-upper");
  append_circle(svg, f, 1.0, -offset, circle_r, "#33aa33", "#1f7a1f", "circle-lower");

  // Axes with unit ticks.
  append_line(svg, f, f.xmin, 0.0, f.xmax, 0.0, "black", 1.0);
  if (f.xmin <= 0.0 && f.xmax >= 0.0) append_line(svg, f, 0.0, f.ymin, 0.0, f.ymax, "black", 1.0);
  const double tick = 4.0 / f.scale;
  for (double x = std::ceil(f.xmin); x <= f.xmax; x += 1.0) {
    append_line(svg, f, x, -tick, x, tick, "black", 1.0);
    append_text(svg, f.px(x), f.py(0.0) + 15.0, std::to_string(static_cast<long>(x)), "middle");
  }
  if (f.xmin <= 0.0 && f.xmax >= 0.0) {
    for (double y = std::ceil(f.ymin); y <= f.ymax; y += 1.0) {
      if (y == 0.0) continue;
      append_line(svg, f, -tick, y, tick, y, "black", 1.0);
      append_text(svg, f.px(0.0) - 6.0, f.py(y) + 4.0, std::to_string(static_cast<long>(y)), "end");
    }
  }

  // Interval [0, 2] that holds the real eigenvalues.
  svg += "  <g class=\"real-interval\">\n  ";
  append_line(svg, f, 0.0, 0.0, 2.0, 0.0, "#444444", 3.0);
  svg += "  </g>\n";

  for (const auto& z : spectrum.eigenvalues) {
    svg += "  <circle class=\"eigenvalue\" cx=\"" + num(f.px(z.real())) + "\" cy=\"" + num(f.py(z.imag())) +
           "\" r=\"4\" fill=\"red\"><title>" + format_complex(z) + "</title></circle>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace acnet
