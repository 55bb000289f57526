#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace resonance::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCrossCheck = 2;
inline constexpr int kExitParse = 64;
inline constexpr int kExitGuard = 65;

// Largest q accepted without --force: 8 for n ≤ 4, 6 for n ≤ 6; larger n
// are bounded only by the engine's matrix-size guard.
void cli_degree_guard(std::size_t n, std::size_t q_max, bool force);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace resonance::cli
