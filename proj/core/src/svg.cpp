#include "icp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace icp {

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  // tiny negatives round to "-0.0000"; canonicalize for reproducibility
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

// diverging ramp: blue for negative, white at zero, red for positive
std::string heat_color(double t) {
  t = std::clamp(t, -1.0, 1.0);
  int r = 255, g = 255, b = 255;
  if (t >= 0) {
    g = b = static_cast<int>(std::lround(255.0 * (1.0 - t)));
  } else {
    r = g = static_cast<int>(std::lround(255.0 * (1.0 + t)));
  }
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

std::string render_svg(const PatternLayout& layout, const CellComplex* cc,
                       const SvgStyle& style) {
  const bool disk = layout.ambient == Ambient::Disk;

  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  bool any = false;
  for (const auto& c : layout.circles) {
    if (!c.placed) continue;
    any = true;
    xlo = std::min(xlo, c.cx - c.r);
    xhi = std::max(xhi, c.cx + c.r);
    ylo = std::min(ylo, c.cy - c.r);
    yhi = std::max(yhi, c.cy + c.r);
  }
  if (disk) {
    xlo = std::min(xlo, -1.0);
    xhi = std::max(xhi, 1.0);
    ylo = std::min(ylo, -1.0);
    yhi = std::max(yhi, 1.0);
  }
  if (!any && !disk) {
    xlo = ylo = 0.0;
    xhi = yhi = 1.0;
  }
  const double m = style.margin;
  const double w = (xhi - xlo) + 2 * m, h = (yhi - ylo) + 2 * m;

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
  s += num(xlo - m) + " " + num(-(yhi + m)) + " " + num(w) + " " + num(h) +
       "\">\n";
  if (!any) {
    s += "</svg>\n";
    return s;
  }

  // y is flipped so the mathematical orientation matches the picture
  auto circle = [&](double cx, double cy, double r, const std::string& extra) {
    s += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(-cy) + "\" r=\"" +
         num(r) + "\" " + extra + "/>\n";
  };
  auto line = [&](double x1, double y1, double x2, double y2) {
    s += "<line x1=\"" + num(x1) + "\" y1=\"" + num(-y1) + "\" x2=\"" +
         num(x2) + "\" y2=\"" + num(-y2) + "\" stroke=\"#888888\" stroke-width=\"" +
         num(0.5 * style.stroke_width) + "\"/>\n";
  };

  if (disk && style.disk_frame)
    circle(0, 0, 1.0,
           "fill=\"none\" stroke=\"#000000\" stroke-width=\"" +
               num(style.stroke_width) + "\"");

  if (style.triangulation && cc) {
    for (int f = 0; f < cc->n_faces(); ++f) {
      if (f == cc->infinity_face || !layout.stars[f].placed) continue;
      const auto& sp = layout.stars[f];
      const auto& cyc = cc->face_vertices[f];
      const int msz = static_cast<int>(cyc.size());
      for (int k = 0; k < msz; ++k) {
        const auto& a = layout.circles[cyc[k]];
        const auto& b = layout.circles[cyc[(k + 1) % msz]];
        if (!a.placed || !b.placed) continue;
        line(a.cx, a.cy, b.cx, b.cy);
        line(a.cx, a.cy, sp.x, sp.y);
      }
    }
  }

  double heat_scale = 0.0;
  if (!style.heat.empty())
    for (double v : style.heat)
      if (std::isfinite(v)) heat_scale = std::max(heat_scale, std::abs(v));

  for (const auto& c : layout.circles) {
    if (!c.placed) continue;
    std::string fill = "none";
    if (!style.heat.empty() && heat_scale > 0.0 &&
        c.v < static_cast<int>(style.heat.size()))
      fill = heat_color(style.heat[c.v] / heat_scale);
    circle(c.cx, c.cy, c.r,
           "fill=\"" + fill + "\" stroke=\"#000000\" stroke-width=\"" +
               num(style.stroke_width) + "\"");
  }
  s += "</svg>\n";
  return s;
}

std::string render_loglog_plot(const std::vector<double>& times,
                               const std::vector<double>& values,
                               const std::string& label) {
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
       "viewBox=\"0.0000 0.0000 480.0000 360.0000\">\n";
  std::vector<double> xs, ys;
  for (size_t i = 0; i < times.size() && i < values.size(); ++i)
    if (values[i] > 0.0 && times[i] >= 0.0) {
      xs.push_back(std::log10(1.0 + times[i]));
      ys.push_back(std::log10(values[i]));
    }
  if (xs.size() < 2) {
    s += "</svg>\n";
    return s;
  }
  const double x0 = *std::min_element(xs.begin(), xs.end());
  const double x1 = std::max(*std::max_element(xs.begin(), xs.end()), x0 + 1e-9);
  const double y0 = *std::min_element(ys.begin(), ys.end());
  const double y1 = std::max(*std::max_element(ys.begin(), ys.end()), y0 + 1e-9);
  const double L = 50, R = 460, T = 20, B = 330;
  auto px = [&](double x) { return L + (R - L) * (x - x0) / (x1 - x0); };
  auto py = [&](double y) { return B - (B - T) * (y - y0) / (y1 - y0); };

  auto num4 = [](double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return std::string(buf);
  };
  auto grid_line = [&](double ax, double ay, double bx, double by) {
    s += "<line x1=\"" + num4(ax) + "\" y1=\"" + num4(ay) + "\" x2=\"" +
         num4(bx) + "\" y2=\"" + num4(by) +
         "\" stroke=\"#cccccc\" stroke-width=\"0.5000\"/>\n";
  };
  for (int d = static_cast<int>(std::ceil(x0)); d <= std::floor(x1); ++d)
    grid_line(px(d), T, px(d), B);
  for (int d = static_cast<int>(std::ceil(y0)); d <= std::floor(y1); ++d)
    grid_line(L, py(d), R, py(d));
  s += "<rect x=\"" + num4(L) + "\" y=\"" + num4(T) + "\" width=\"" +
       num4(R - L) + "\" height=\"" + num4(B - T) +
       "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.0000\"/>\n";
  s += "<polyline fill=\"none\" stroke=\"#1f4fa0\" stroke-width=\"1.5000\" points=\"";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += " ";
    s += num4(px(xs[i])) + "," + num4(py(ys[i]));
  }
  s += "\"/>\n";
  if (!label.empty())
    s += "<text x=\"" + num4(L + 8) + "\" y=\"" + num4(T + 16) +
         "\" font-size=\"14\" font-family=\"monospace\">" + label +
         "</text>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace icp
