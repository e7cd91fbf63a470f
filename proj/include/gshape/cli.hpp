#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gshape {

/// Dispatches one CLI invocation.  JSON/TSV/CSV goes to out, diagnostics to
/// err.  Returns 0 on success, 2 on domain errors (not-fourth-power-free /
/// no-match, reported as a JSON object on out), 1 on usage errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gshape
