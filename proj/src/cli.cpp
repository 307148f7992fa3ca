#include "braceforge/cli.hpp"

namespace braceforge {

int run_command(const std::vector<std::string>& args) {
  (void)args;
  return 2;
}

}  // namespace braceforge
