#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace engel {

inline constexpr int kExitPass = 0;
inline constexpr int kExitDiscrepancy = 2;
inline constexpr int kExitResource = 70;
inline constexpr int kExitUsage = 64;

// Runs one engel-lab invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace engel
