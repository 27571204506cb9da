#include "engel/limits.hpp"

#include <cstdlib>
#include <string>

namespace engel {

std::size_t dimension_cap() {
  if (const char* env = std::getenv("ENGEL_LAB_MAX_DIM")) {
    try {
      unsigned long long v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return 20000;
}

}  // namespace engel
