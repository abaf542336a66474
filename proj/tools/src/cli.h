#ifndef GENSPECT_TOOLS_CLI_H_
#define GENSPECT_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace genspect::cli {

// Runs one `genspect` invocation. `args` excludes the program name. Returns
// the process exit status: 0 on success, 2 on any usage or data error.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genspect::cli

#endif  // GENSPECT_TOOLS_CLI_H_
