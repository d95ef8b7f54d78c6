#include "kfact/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace kfact {

namespace {

// Nesting height of each arch: 1 for innermost, parents above children.
std::vector<int> arch_levels(const DualLayout& layout) {
  const int m = layout.m;
  std::vector<int> order(m), level(m + 1, 1);
  for (int i = 0; i < m; ++i) order[i] = i + 1;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return layout.r[x] - layout.l[x] < layout.r[y] - layout.l[y];
  });
  for (int i : order)
    for (int j = 1; j <= m; ++j)
      if (j != i && layout.l[j] <= layout.l[i] && layout.r[i] <= layout.r[j])
        level[j] = std::max(level[j], level[i] + 1);
  return level;
}

}  // namespace

std::string render_ascii(const DualLayout& layout, bool with_dual) {
  const int m = layout.m;
  const auto level = arch_levels(layout);
  const int height = m ? *std::max_element(level.begin() + 1, level.end()) : 0;
  const int cols = 4 * m + 1;

  std::vector<std::string> canvas(height + 1, std::string(cols, ' '));
  const auto col = [](int pos) { return 4 * pos; };

  for (int i = 1; i <= m; ++i) {
    const int row = height - level[i];
    const int cl = col(layout.l[i]), cr = col(layout.r[i]);
    canvas[row][cl] = '.';
    canvas[row][cr] = '.';
    for (int c = cl + 1; c < cr; ++c) canvas[row][c] = '_';
    for (int rr = row + 1; rr <= height; ++rr) {
      if (canvas[rr][cl] == ' ') canvas[rr][cl] = '|';
      if (canvas[rr][cr] == ' ') canvas[rr][cr] = '|';
    }
    const std::string label = std::to_string(i);
    const int mid = (cl + cr - static_cast<int>(label.size())) / 2 + 1;
    for (size_t c = 0; c < label.size(); ++c) canvas[row][mid + c] = label[c];
  }

  std::ostringstream out;
  for (const auto& row : canvas) out << row << '\n';
  for (int p = 0; p <= m; ++p) {
    const std::string label = std::to_string(p);
    out << label;
    if (p < m && label.size() < 4) out << std::string(4 - label.size(), ' ');
  }
  out << '\n';
  if (with_dual) {
    // Dual vertices sit at half-integer positions; mark each with its edge.
    std::string marks(cols, ' ');
    for (int i = 1; i <= m; ++i) {
      const std::string label = std::to_string(i);
      const int c = 4 * layout.d[i] + 2;
      for (size_t j = 0; j < label.size() && c + j < marks.size(); ++j)
        marks[c + j] = label[j];
    }
    out << marks << "   (dual vertex of each edge)\n";
  }
  return out.str();
}

std::string render_svg(const DualLayout& layout, const RootedForest& cover_forest,
                       bool with_dual) {
  const int m = layout.m;
  const auto level = arch_levels(layout);
  const int height = m ? *std::max_element(level.begin() + 1, level.end()) : 1;

  const double margin = 1.0;
  const double top = -(height / 2.0 + margin);
  const double view_w = m + 2 * margin;
  const double view_h = -top + margin;
  const int unit = 40;  // rendered pixels per baseline unit

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << static_cast<int>(unit * view_w) << "\" height=\"" << static_cast<int>(unit * view_h)
      << "\" viewBox=\"" << -margin << " " << top << " " << view_w << " " << view_h
      << "\">\n";
  out << "  <line x1=\"0\" y1=\"0\" x2=\"" << m
      << "\" y2=\"0\" stroke=\"black\" stroke-width=\"0.03\"/>\n";
  for (int p = 0; p <= m; ++p)
    out << "  <circle cx=\"" << p << "\" cy=\"0\" r=\"0.07\" fill=\"black\"/>\n";
  for (int i = 1; i <= m; ++i) {
    const double radius = (layout.r[i] - layout.l[i]) / 2.0;
    out << "  <path class=\"arch\" d=\"M " << layout.l[i] << " 0 A " << radius << " "
        << radius << " 0 0 1 " << layout.r[i]
        << " 0\" fill=\"none\" stroke=\"black\" stroke-width=\"0.04\"/>\n";
    out << "  <text x=\"" << (layout.l[i] + layout.r[i]) / 2.0 << "\" y=\"" << -radius - 0.12
        << "\" font-size=\"0.3\" text-anchor=\"middle\">" << i << "</text>\n";
  }
  if (with_dual) {
    for (int i = 1; i <= m; ++i) {
      // A dual arc joins the region inside arch i to the one just outside.
      const int parent = cover_forest.parent[i];
      const double x1 = layout.d[i] + 0.5;
      const double x2 = (parent == 0 ? m : layout.d[parent]) + 0.5;
      const double lo = std::min(x1, x2), hi = std::max(x1, x2);
      const double radius = (hi - lo) / 2.0;
      out << "  <path class=\"dual\" d=\"M " << lo << " 0 A " << radius << " " << radius
          << " 0 0 1 " << hi
          << " 0\" fill=\"none\" stroke=\"red\" stroke-width=\"0.03\" "
             "stroke-dasharray=\"0.1 0.08\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace kfact
