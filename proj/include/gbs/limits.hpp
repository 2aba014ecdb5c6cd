#pragma once

#include <cstddef>

namespace gbs {

struct Limits {
  int max_vertices = 24;
  int witness_depth = 8;
  long long factor_cap = 1000000000LL;
};

// Process-wide limits, initialised once from GBS_TOOLKIT_MAX_VERTICES and
// GBS_TOOLKIT_WITNESS_DEPTH.
const Limits& limits();

// Throws CapExceeded if the graph size is over the vertex cap.
void check_vertex_cap(std::size_t vertex_count);

}  // namespace gbs
