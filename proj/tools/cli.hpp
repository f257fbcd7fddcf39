#pragma once

#include <ostream>

namespace maxdom::cli {

/// Runs one `maxdom` invocation. Output is buffered and written only on success.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitVerify = 4;

}  // namespace maxdom::cli
