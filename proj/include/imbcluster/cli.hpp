#pragma once

#include <string>
#include <vector>

namespace imbcluster {

// Full command-line surface (gen / cluster / coreset / quantize / repro).
// args excludes argv[0]. Returns the process exit code.
int run_cli(const std::vector<std::string>& args);

}  // namespace imbcluster
