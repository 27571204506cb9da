#pragma once

#include <cstddef>

namespace engel {

// Largest matrix dimension any single computation may use. ENGEL_LAB_MAX_DIM overrides 20000.
std::size_t dimension_cap();

}  // namespace engel
