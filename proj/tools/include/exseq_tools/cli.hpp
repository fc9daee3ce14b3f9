#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exseq::tools {

// exit codes: 0 ok, 1 a verdict failed, 2 usage or input error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace exseq::tools
