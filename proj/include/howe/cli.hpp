#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace howe {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitFailure = 2;  // FAILED identity or oracle mismatch

// argv[0] is ignored.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace howe
