#include "gbs/limits.hpp"

#include <cstdlib>
#include <string>

#include "gbs/errors.hpp"

namespace gbs {
namespace {

int env_int(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value <= 0 || value > 1000000) return fallback;
  return static_cast<int>(value);
}

Limits load() {
  Limits l;
  l.max_vertices = env_int("GBS_TOOLKIT_MAX_VERTICES", l.max_vertices);
  l.witness_depth = env_int("GBS_TOOLKIT_WITNESS_DEPTH", l.witness_depth);
  return l;
}

}  // namespace

const Limits& limits() {
  static const Limits instance = load();
  return instance;
}

void check_vertex_cap(std::size_t vertex_count) {
  if (vertex_count > static_cast<std::size_t>(limits().max_vertices)) {
    throw CapExceeded("graph has " + std::to_string(vertex_count) +
                      " vertices; cap is " + std::to_string(limits().max_vertices));
  }
}

}  // namespace gbs
