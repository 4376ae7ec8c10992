#include "radonsvm/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <vector>

namespace radonsvm {

namespace {

struct Box {
  double x0, x1, y0, y1;
};

// Endpoints of the segment where w.p + b = level crosses the box.
std::vector<std::array<double, 2>> clip_line(const Vec& w, double b, double level,
                                             const Box& box) {
  std::vector<std::array<double, 2>> pts;
  const double rhs = level - b;
  auto push_unique = [&](double x, double y) {
    for (const auto& p : pts)
      if (std::abs(p[0] - x) < 1e-12 && std::abs(p[1] - y) < 1e-12) return;
    pts.push_back({x, y});
  };
  if (std::abs(w[1]) > 1e-300) {
    for (double x : {box.x0, box.x1}) {
      double y = (rhs - w[0] * x) / w[1];
      if (y >= box.y0 - 1e-9 && y <= box.y1 + 1e-9) push_unique(x, y);
    }
  }
  if (std::abs(w[0]) > 1e-300) {
    for (double y : {box.y0, box.y1}) {
      double x = (rhs - w[1] * y) / w[0];
      if (x >= box.x0 - 1e-9 && x <= box.x1 + 1e-9) push_unique(x, y);
    }
  }
  if (pts.size() > 2) pts.resize(2);
  return pts;
}

}  // namespace

void plot_svg(std::ostream& out, const LabeledPointSet& d, const SvmSolution* solution,
              const Vec* radon_point) {
  validate_labeled_set(d);
  if (d.dim != 2) throw std::invalid_argument("plotting is 2-D only");

  Box box{0, 1, 0, 1};
  bool first = true;
  auto grow = [&](double x, double y) {
    if (first) {
      box = {x, x, y, y};
      first = false;
    } else {
      box.x0 = std::min(box.x0, x);
      box.x1 = std::max(box.x1, x);
      box.y0 = std::min(box.y0, y);
      box.y1 = std::max(box.y1, y);
    }
  };
  for (const Vec& p : d.points) grow(p[0], p[1]);
  if (radon_point) grow((*radon_point)[0], (*radon_point)[1]);

  double span = std::max({box.x1 - box.x0, box.y1 - box.y0, 1e-9});
  double pad = 0.05 * span;
  // Equal spans keep the aspect ratio square inside the fixed viewport.
  double cx = (box.x0 + box.x1) / 2, cy = (box.y0 + box.y1) / 2;
  box = {cx - span / 2 - pad, cx + span / 2 + pad, cy - span / 2 - pad, cy + span / 2 + pad};

  const double view = 800.0;
  double scale = view / (box.x1 - box.x0);
  auto sx = [&](double x) { return (x - box.x0) * scale; };
  auto sy = [&](double y) { return view - (y - box.y0) * scale; };

  out << std::setprecision(10);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
  out << "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

  if (solution) {
    struct LineSpec {
      double level;
      const char* dash;
      const char* color;
    };
    for (const LineSpec& ls : {LineSpec{0.0, "none", "#333333"},
                               LineSpec{1.0, "8,6", "#888888"},
                               LineSpec{-1.0, "8,6", "#888888"}}) {
      auto seg = clip_line(solution->w, solution->b, ls.level, box);
      if (seg.size() == 2) {
        out << "  <line x1=\"" << sx(seg[0][0]) << "\" y1=\"" << sy(seg[0][1]) << "\" x2=\""
            << sx(seg[1][0]) << "\" y2=\"" << sy(seg[1][1]) << "\" stroke=\"" << ls.color
            << "\" stroke-width=\"2\"";
        if (ls.dash[0] != 'n') out << " stroke-dasharray=\"" << ls.dash << "\"";
        out << "/>\n";
      }
    }
  }

  std::vector<bool> is_sv(d.size(), false);
  if (solution)
    for (std::size_t idx : solution->support_indices) is_sv[idx] = true;

  for (std::size_t i = 0; i < d.size(); ++i) {
    double x = sx(d.points[i][0]), y = sy(d.points[i][1]);
    if (is_sv[i])
      out << "  <circle cx=\"" << x << "\" cy=\"" << y
          << "\" r=\"11\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n";
    if (d.labels[i] > 0)
      out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"6\" fill=\"#1f77b4\"/>\n";
    else
      out << "  <rect x=\"" << x - 5.5 << "\" y=\"" << y - 5.5
          << "\" width=\"11\" height=\"11\" fill=\"#d62728\"/>\n";
  }

  if (radon_point) {
    double x = sx((*radon_point)[0]), y = sy((*radon_point)[1]);
    out << "  <path d=\"M " << x - 7 << " " << y << " L " << x + 7 << " " << y << " M " << x
        << " " << y - 7 << " L " << x << " " << y + 7
        << "\" stroke=\"#2ca02c\" stroke-width=\"2.5\"/>\n";
  }
  out << "</svg>\n";
}

void plot_svg_file(const std::string& path, const LabeledPointSet& d,
                   const SvmSolution* solution, const Vec* radon_point) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open plot file '" + path + "'");
  plot_svg(out, d, solution, radon_point);
}

}  // namespace radonsvm
