#include "dyckal/render.hpp"

#include <algorithm>

namespace dyckal {

std::string ascii_path(const DyckPath& p) {
  auto h = p.heights();
  int top = *std::max_element(h.begin(), h.end());
  std::string out;
  for (int row = top; row >= 1; --row) {
    std::string line(static_cast<size_t>(p.steps()), ' ');
    int last = -1;
    for (int x = 0; x < p.steps(); ++x) {
      char s = p.step(x);
      // an up step occupies the row it ends on, a down step the row it starts on
      int at = s == 'u' ? h[static_cast<size_t>(x) + 1] : h[static_cast<size_t>(x)];
      if (at == row) {
        line[static_cast<size_t>(x)] = s == 'u' ? '/' : '\\';
        last = x;
      }
    }
    out += line.substr(0, static_cast<size_t>(last + 1));
    out += '\n';
  }
  return out;
}

std::string dot_hasse(const std::string& name,
                      const std::vector<std::string>& labels,
                      const std::vector<std::pair<int, int>>& cover_edges) {
  std::string out = "digraph " + name + " {\n";
  out += "  rankdir=BT;\n";
  for (const auto& l : labels) out += "  \"" + l + "\";\n";
  for (const auto& [lo, hi] : cover_edges)
    out += "  \"" + labels[static_cast<size_t>(lo)] + "\" -> \"" +
           labels[static_cast<size_t>(hi)] + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace dyckal
