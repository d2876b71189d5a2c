#pragma once

#include <ostream>

namespace qnc {

/// Command-line driver. Returns the process exit code. QASM goes to --out
/// (or `out`); the report goes to `out` when --out names a file and to `err`
/// otherwise, so stdout stays valid QASM.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace qnc
