#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vdfi::cli {

/// Runs one command. args excludes the program name. Reports go to `out`,
/// diagnostics to `err`. Returns 0 on success (including infeasible or
/// not-attained outcomes), 2 on usage or precondition errors, 1 on internal
/// failures or bound violations.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vdfi::cli
