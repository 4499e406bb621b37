// render.cpp -- Graphviz export and ASCII cut arrays.
#include "bvtk/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bvtk/dynamics.hpp"

namespace bvtk {

namespace {

std::string node_id(int level, int index) {
  return "n" + std::to_string(level) + "_" + std::to_string(index);
}

}  // namespace

std::string to_dot(const Diagram& d) {
  std::ostringstream os;
  os << "digraph bratteli {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle, fontsize=10];\n";
  for (int n = 0; n <= d.depth(); ++n) {
    os << "  { rank=same;";
    for (int i = 0; i < d.width(n); ++i)
      os << " " << node_id(n, i) << " [label=\"" << d.at(n, i).name << "\"];";
    os << " }\n";
  }
  for (int n = 1; n <= d.depth(); ++n) {
    for (int i = 0; i < d.width(n); ++i) {
      const auto& in = d.at(n, i).in_edges;
      for (size_t p = 0; p < in.size(); ++p) {
        os << "  " << node_id(n - 1, in[p]) << " -> " << node_id(n, i) << " [label=\"" << p + 1
           << "\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

std::string ascii_array(const Diagram& d, const PathSpec& x, int rows, TimeWindow w) {
  if (rows < 1 || rows > d.depth()) throw std::invalid_argument("ascii_array: rows out of range");
  int N = d.depth();
  OrbitBounds b = orbit_bounds(x, N, d);
  TimeWindow win{std::max(w.lo, b.lo), std::min(w.hi, b.hi)};
  if (win.lo > win.hi) throw std::invalid_argument("ascii_array: empty window");

  FinitePath p = resolve(x, N, d);
  for (Dim i = 0; i < win.lo; ++i) p = step_path(p, Direction::Succ, d);
  for (Dim i = 0; i > win.lo; --i) p = step_path(p, Direction::Pred, d);

  // marks[m - win.lo] = deepest level the point is minimal into.
  std::vector<int> marks;
  for (Dim m = win.lo;; ++m) {
    int j = 0;
    while (j < rows && p.edges[j].ordinal == 1) ++j;
    marks.push_back(j);
    if (m == win.hi) break;
    p = step_path(p, Direction::Succ, d);
  }

  std::string label_pad(6, ' ');
  std::ostringstream os;
  for (int j = rows; j >= 1; --j) {
    std::string label = "j=" + std::to_string(j);
    os << label << std::string(label_pad.size() - label.size(), ' ');
    for (int mark : marks) os << (mark >= j ? '|' : '.');
    os << "\n";
  }
  os << label_pad;
  for (Dim m = win.lo; m <= win.hi; ++m) os << (m == 0 ? '^' : ' ');
  os << "\n" << label_pad << "m in [" << win.lo << ", " << win.hi << "], caret at m=0\n";
  return os.str();
}

}  // namespace bvtk
