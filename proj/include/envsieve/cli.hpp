#pragma once

#include <string>
#include <vector>

namespace envsieve {

// Parses argv (program name stripped) and runs one subcommand of
//   envelope | verify | lemmas | moments | farey | majorant.
// Exit contract: 0 every check passed, 1 a check failed, 2 usage or
// hypothesis violation. Reports are written atomically (tmp + rename); the
// ENVSIEVE_OUT_DIR environment variable prefixes relative --out paths.
int run_cli(const std::vector<std::string>& args);

}  // namespace envsieve
