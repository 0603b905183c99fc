#include "brw/svg.hpp"

#include <cmath>
#include <ostream>
#include <vector>

namespace brw {

namespace {

constexpr double k_pi = 3.14159265358979323846;

const char* sector_color(SectorLabel l) {
  switch (l) {
    case SectorLabel::on_gamma: return "#222222";
    case SectorLabel::s12: return "#d62728";
    case SectorLabel::s23: return "#2ca02c";
    case SectorLabel::s31: return "#1f77b4";
  }
  return "#999999";
}

}  // namespace

void write_ball_svg(std::ostream& os, const CayleyBall& ball, const SvgOptions& options) {
  const int depth = options.max_depth < 0 ? ball.radius() : options.max_depth;
  const double half = options.size_px / 2.0;
  const double rim = half * 0.96;

  // BFS-tree parent: first neighbour one level down, in slot order
  const auto& pres = ball.presentation();
  std::vector<Gen> slots;
  if (pres.has_planar_order())
    slots = pres.planar_order();
  else
    for (int g = 0; g < pres.generator_count(); ++g) slots.push_back(static_cast<Gen>(g));

  const std::uint32_t n = ball.ball_size(depth);
  std::vector<double> lo(n, 0.0), hi(n, 0.0);
  lo[0] = 0.0;
  hi[0] = 2.0 * k_pi;
  // subdivide each vertex's angular interval among its outward slot edges
  for (std::uint32_t v = 0; v < n; ++v) {
    std::vector<std::uint32_t> kids;
    for (Gen g : slots) {
      auto u = ball.neighbor(v, g);
      if (u != k_no_vertex && u < n &&
          ball.distance_from_root(u) == ball.distance_from_root(v) + 1) {
        // claim u only from its first-discovered parent
        bool claimed = false;
        for (Gen h : slots) {
          auto w = ball.neighbor(u, h);
          if (w != k_no_vertex && ball.distance_from_root(w) + 1 == ball.distance_from_root(u)) {
            claimed = (w == v);
            break;
          }
        }
        if (claimed) kids.push_back(u);
      }
    }
    if (kids.empty()) continue;
    const double width = (hi[v] - lo[v]) / static_cast<double>(kids.size());
    for (std::size_t i = 0; i < kids.size(); ++i) {
      lo[kids[i]] = lo[v] + width * static_cast<double>(i);
      hi[kids[i]] = lo[kids[i]] + width;
    }
  }

  auto coord = [&](std::uint32_t v) {
    const double a = 0.5 * (lo[v] + hi[v]);
    const double r = rim * std::tanh(0.45 * ball.distance_from_root(v));
    return std::pair<double, double>{half + r * std::cos(a), half - r * std::sin(a)};
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size_px << "\" height=\""
     << options.size_px << "\" viewBox=\"0 0 " << options.size_px << ' ' << options.size_px
     << "\">\n";
  os << "<circle cx=\"" << half << "\" cy=\"" << half << "\" r=\"" << rim
     << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";

  os << "<g stroke=\"#b0b0b0\" stroke-width=\"0.5\">\n";
  for (std::uint32_t v = 0; v < n; ++v)
    for (int g = 0; g < ball.generator_count(); ++g) {
      auto u = ball.neighbor(v, static_cast<Gen>(g));
      if (u == k_no_vertex || u >= n || u < v) continue;
      auto [x1, y1] = coord(v);
      auto [x2, y2] = coord(u);
      os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
         << "\"/>\n";
    }
  os << "</g>\n";

  if (options.trace) {
    os << "<g stroke=\"#ff7f0e\" stroke-width=\"1.6\">\n";
    for (auto [a, b] : options.trace->edges) {
      auto va = ball.find(options.trace->vertex_words[a]);
      auto vb = ball.find(options.trace->vertex_words[b]);
      if (!va || !vb || *va >= n || *vb >= n) continue;
      auto [x1, y1] = coord(*va);
      auto [x2, y2] = coord(*vb);
      os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
         << "\"/>\n";
    }
    os << "</g>\n";
  }

  os << "<g stroke=\"none\">\n";
  for (std::uint32_t v = 0; v < n; ++v) {
    auto [x, y] = coord(v);
    const char* color = "#555555";
    if (options.sectors) color = sector_color(options.sectors->label[v]);
    double radius = v == 0 ? 4.0 : 1.6;
    os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << radius << "\" fill=\"" << color
       << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
}

}  // namespace brw
