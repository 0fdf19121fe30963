#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropdimer {

// Exit codes: 0 success, 1 domain failure, 2 usage or parse failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropdimer
