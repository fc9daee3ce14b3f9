#pragma once

#include <string>

#include "exseq_tools/io.hpp"

namespace exseq::tools {

json loci_json(const VarietySpec& s, int window);
std::string loci_ascii(const VarietySpec& s, int window);
std::string loci_svg(const VarietySpec& s, int window);

}  // namespace exseq::tools
