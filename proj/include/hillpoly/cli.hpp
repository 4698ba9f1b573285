#ifndef HILLPOLY_CLI_HPP
#define HILLPOLY_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hillpoly {

inline constexpr int kExitPass = 0;
inline constexpr int kExitMathFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the hillpoly tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hillpoly

#endif  // HILLPOLY_CLI_HPP
