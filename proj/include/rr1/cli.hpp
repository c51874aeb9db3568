#pragma once

namespace rr1 {

/// Entry point of the command-line tool. Returns the process exit code:
/// 0 on success, 2 on usage errors, 1 on numerical or I/O failures (with a
/// machine-readable error JSON on stderr).
int run_cli(int argc, const char* const* argv);

} // namespace rr1
