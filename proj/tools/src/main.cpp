#include "exseq_tools/cli.hpp"

int main(int argc, char** argv) { return exseq::tools::run(argc, argv); }
