#ifndef BRACEFORGE_CLI_HPP
#define BRACEFORGE_CLI_HPP

#include <string>
#include <vector>

namespace braceforge {

int run_command(const std::vector<std::string>& args);

}

#endif
