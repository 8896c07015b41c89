#pragma once

namespace ccinull {

// Parses arguments, runs the requested sweep / distribution dump / grid
// export, and returns the process exit code:
//   0 success, 2 usage error, 3 numeric or empty-result failure, 4 I/O error.
int run_cli(int argc, const char* const* argv);

}  // namespace ccinull
