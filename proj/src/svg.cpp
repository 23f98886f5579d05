#include "dtk/svg.hpp"

#include <algorithm>
#include <sstream>

#include "dtk/errors.hpp"

namespace dtk {

std::string render_svg(const Instance& instance, const Network& network) {
  if (network.size() != instance.size()) {
    throw UsageError("network has " + std::to_string(network.size()) + " vertices but instance has " +
                     std::to_string(instance.size()) + " points");
  }
  std::vector<double> xs, ys;
  for (const Point& p : instance.points()) {
    xs.push_back(p.x.get_d());
    ys.push_back(-p.y.get_d());  // SVG y grows downward
  }
  auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
  auto [ymin, ymax] = std::minmax_element(ys.begin(), ys.end());
  double w = *xmax - *xmin, h = *ymax - *ymin;
  double span = std::max({w, h, 1e-9});
  double margin = 0.05 * span;
  double vx = *xmin - margin, vy = *ymin - margin;
  double vw = w + 2 * margin, vh = h + 2 * margin;
  if (w == 0) {
    vx -= span / 2;
    vw += span;
  }
  if (h == 0) {
    vy -= span / 2;
    vh += span;
  }
  const double radius = span * 0.008;
  const double stroke = span * 0.003;

  std::ostringstream out;
  out.precision(12);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\""
      << static_cast<int>(800 * vh / vw + 0.5) << "\" viewBox=\"" << vx << ' ' << vy << ' ' << vw
      << ' ' << vh << "\">\n";
  out << "<g stroke=\"#333333\" stroke-width=\"" << stroke << "\">\n";
  for (const Edge& e : network.edges()) {
    out << "<line x1=\"" << xs[e.u] << "\" y1=\"" << ys[e.u] << "\" x2=\"" << xs[e.v] << "\" y2=\""
        << ys[e.v] << "\"/>\n";
  }
  out << "</g>\n<g fill=\"#1f4e9c\">\n";
  for (Vertex v = 0; v < xs.size(); ++v) {
    out << "<circle cx=\"" << xs[v] << "\" cy=\"" << ys[v] << "\" r=\""
        << (v == instance.root() ? 2 * radius : radius) << "\""
        << (v == instance.root() ? " fill=\"#c0392b\"" : "") << "/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace dtk
