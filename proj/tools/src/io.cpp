#include "exseq_tools/io.hpp"

#include <fstream>
#include <sstream>

namespace exseq::tools {

json to_json(Bundle b) { return json::array({b.i, b.j}); }

json to_json(const std::vector<Bundle>& seq) {
    json a = json::array();
    for (Bundle b : seq) a.push_back(to_json(b));
    return a;
}

json to_json(const VarietySpec& s) {
    json j;
    j["ell"] = s.ell;
    switch (s.kind) {
    case Kind::Toric:
        j["kind"] = "toric";
        j["v"] = s.v;
        j["c"] = s.c;
        j["alpha"] = s.alpha;
        j["beta"] = s.beta;
        break;
    case Kind::CotangentProj: j["kind"] = "cotangent"; break;
    case Kind::TangentProjDual: j["kind"] = "tangent_dual"; break;
    }
    j["name"] = s.name();
    return j;
}

json to_json(const Relation& r, const std::vector<Bundle>& labels) {
    json a = json::array();
    for (auto [x, y] : r.pairs()) a.push_back({{"from", x}, {"to", y}, {"pair", json::array({to_json(labels[x]), to_json(labels[y])})}});
    return a;
}

json to_json(const LayerDecomposition& d) {
    json j;
    j["twist"] = to_json(d.twist);
    j["x"] = to_json(d.x);
    j["z_free"] = to_json(d.z_free);
    j["z_residual"] = to_json(d.z_residual);
    json off = json::object();
    for (auto [k, o] : d.offsets) off[std::to_string(k)] = o;
    j["offsets"] = off;
    json layers = json::array();
    for (const Layer& l : d.layers) layers.push_back({{"index", layer_name(l.index)}, {"left", to_json(l.left)}, {"right", to_json(l.right)}});
    j["layers"] = layers;
    return j;
}

namespace {

int get_int(const json& j, const std::string& key, const std::string& pointer) {
    if (!j.contains(key)) throw InputError(pointer + "/" + key, "missing field");
    const json& v = j.at(key);
    if (!v.is_number_integer()) throw InputError(pointer + "/" + key, "expected an integer");
    return v.get<int>();
}

}  // namespace

VarietySpec spec_from_json(const json& j, const std::string& pointer) {
    if (!j.is_object()) throw InputError(pointer.empty() ? "/" : pointer, "expected an object");
    if (!j.contains("kind") || !j.at("kind").is_string()) throw InputError(pointer + "/kind", "expected a string");
    std::string kind = j.at("kind").get<std::string>();
    int ell = get_int(j, "ell", pointer);
    try {
        if (kind == "toric") {
            int v = get_int(j, "v", pointer);
            if (!j.contains("c") || !j.at("c").is_array()) throw InputError(pointer + "/c", "expected an array of integers");
            std::vector<int> c;
            for (std::size_t k = 0; k < j.at("c").size(); ++k) {
                const json& x = j.at("c")[k];
                if (!x.is_number_integer()) throw InputError(pointer + "/c/" + std::to_string(k), "expected an integer");
                c.push_back(x.get<int>());
            }
            return VarietySpec::toric(ell, v, c);
        }
        if (kind == "cotangent") return VarietySpec::cotangent(ell);
        if (kind == "tangent_dual") return VarietySpec::tangent_dual(ell);
    } catch (const std::invalid_argument& e) {
        throw InputError(pointer.empty() ? "/" : pointer, e.what());
    }
    throw InputError(pointer + "/kind", "unknown kind '" + kind + "'");
}

std::vector<Bundle> bundles_from_json(const json& j, const std::string& pointer) {
    const json* arr = &j;
    std::string base = pointer;
    if (j.is_object()) {
        if (!j.contains("bundles")) throw InputError(pointer + "/bundles", "missing field");
        arr = &j.at("bundles");
        base += "/bundles";
    }
    if (!arr->is_array()) throw InputError(base.empty() ? "/" : base, "expected an array of [i, j] pairs");
    std::vector<Bundle> out;
    for (std::size_t k = 0; k < arr->size(); ++k) {
        const json& p = (*arr)[k];
        std::string ptr = base + "/" + std::to_string(k);
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
            throw InputError(ptr, "expected [i, j] with integer entries");
        out.push_back({p[0].get<int>(), p[1].get<int>()});
    }
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("", "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("", path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace exseq::tools
