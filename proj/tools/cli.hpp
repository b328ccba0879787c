#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinitf::cli {

/// Runs one `spin-itf` command. Returns 0 on success, 1 on a domain error and
/// 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace spinitf::cli
