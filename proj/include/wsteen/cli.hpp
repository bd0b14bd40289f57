#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace wsteen {

/* exit codes: 0 all checks passed / output produced, 1 a check failed,
 * 2 usage or input error */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wsteen
