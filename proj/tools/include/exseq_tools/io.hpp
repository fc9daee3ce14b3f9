#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "exseq/poset.hpp"
#include "exseq/toric.hpp"
#include "exseq/variety.hpp"

namespace exseq::tools {

using json = nlohmann::json;

// malformed input; pointer is a JSON pointer into the offending document
class InputError : public std::runtime_error {
public:
    InputError(const std::string& pointer, const std::string& what)
        : std::runtime_error(pointer + ": " + what), pointer_(pointer) {}
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

json to_json(Bundle b);
json to_json(const std::vector<Bundle>& seq);
json to_json(const VarietySpec& s);
// index pairs (0-based) together with the bundles they name
json to_json(const Relation& r, const std::vector<Bundle>& labels);
json to_json(const LayerDecomposition& d);

VarietySpec spec_from_json(const json& j, const std::string& pointer = "");
std::vector<Bundle> bundles_from_json(const json& j, const std::string& pointer = "");

json read_json_file(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace exseq::tools
