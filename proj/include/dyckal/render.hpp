#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dyckal/dyck.hpp"

// Text renderings: ASCII path pictures and DOT Hasse diagrams.
namespace dyckal {

// One row per height level, top row first; '/' for up steps, '\' for down
// steps.  Deterministic, no trailing spaces, ends with a newline.
std::string ascii_path(const DyckPath& p);

// digraph with one node per label and one edge per cover (lower -> upper),
// in the given order.
std::string dot_hasse(const std::string& name,
                      const std::vector<std::string>& labels,
                      const std::vector<std::pair<int, int>>& cover_edges);

}  // namespace dyckal
