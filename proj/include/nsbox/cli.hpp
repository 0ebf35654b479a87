#pragma once

#include <iosfwd>

namespace nsbox::cli {

inline constexpr const char* kVersion = "0.1.0";

// Dispatches the nsbox subcommands. Returns 0 on success, 2 on usage errors,
// 3 on domain errors (the report names the originating error). Reports go to
// `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nsbox::cli
