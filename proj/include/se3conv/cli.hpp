#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace se3conv {

// Exit codes: 0 ok, 1 verification failure, 2 parse or I/O error,
// 3 triangle or block-header error, 4 shape mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace se3conv
