#ifndef DUALCX_IO_HPP
#define DUALCX_IO_HPP

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dualcx/builders.hpp"
#include "dualcx/delta_complex.hpp"
#include "dualcx/group_action.hpp"
#include "dualcx/homology.hpp"

namespace dualcx {

using json = nlohmann::json;  // std::map-backed: keys serialize sorted

class SchemaError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline json complex_to_json(const DeltaComplex& kx) {
    json layers = json::array();
    for (int d = 0; d <= kx.top_dim(); ++d) {
        json layer = json::array();
        for (const auto& c : kx.cells[d]) {
            json jc;
            jc["faces"] = c.faces;
            if (!c.label.empty()) jc["label"] = c.label;
            layer.push_back(jc);
        }
        layers.push_back(layer);
    }
    return json{{"cells", layers}};
}

inline DeltaComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
        throw SchemaError("complex: expected object with 'cells' array");
    DeltaComplex kx;
    int d = 0;
    for (const auto& layer : j["cells"]) {
        if (!layer.is_array()) throw SchemaError("complex: dimension layer must be an array");
        kx.cells.emplace_back();
        for (const auto& jc : layer) {
            Cell c;
            if (jc.contains("faces")) c.faces = jc["faces"].get<std::vector<int>>();
            if (jc.contains("label")) c.label = jc["label"].get<std::string>();
            kx.cells[d].push_back(std::move(c));
        }
        ++d;
    }
    kx.trim();
    return kx;
}

inline json stratification_to_json(const StratificationData& data) {
    json strata = json::array();
    for (const auto& s : data.strata) {
        json js{{"id", s.id}, {"labels", s.labels}};
        if (!s.facets.empty()) js["facets"] = s.facets;
        strata.push_back(js);
    }
    return json{{"divisors", data.divisors}, {"strata", strata}};
}

inline StratificationData stratification_from_json(const json& j) {
    if (!j.is_object() || !j.contains("divisors") || !j.contains("strata"))
        throw SchemaError("stratification: expected 'divisors' and 'strata'");
    StratificationData data;
    data.divisors = j["divisors"].get<std::vector<std::string>>();
    for (const auto& js : j["strata"]) {
        Stratum s;
        s.id = js.at("id").get<std::string>();
        s.labels = js.at("labels").get<std::vector<std::string>>();
        if (js.contains("facets"))
            s.facets = js["facets"].get<std::map<std::string, std::string>>();
        data.strata.push_back(std::move(s));
    }
    return data;
}

/// Generator spec: either a vertex-label bijection (lifted to cells by vertex
/// sets, which must be unambiguous) or an explicit per-dimension cell
/// permutation.
struct GeneratorSpec {
    std::map<std::string, std::string> vertex_labels;
    std::vector<std::vector<int>> cells;
};

struct ActionSpec {
    std::vector<GeneratorSpec> generators;
    std::size_t cap = 10000;
};

inline ActionSpec action_from_json(const json& j) {
    ActionSpec spec;
    if (!j.is_object() || !j.contains("generators"))
        throw SchemaError("action: expected 'generators'");
    for (const auto& jg : j["generators"]) {
        GeneratorSpec g;
        if (jg.contains("vertex_labels"))
            g.vertex_labels = jg["vertex_labels"].get<std::map<std::string, std::string>>();
        else if (jg.contains("cells"))
            g.cells = jg["cells"].get<std::vector<std::vector<int>>>();
        else
            throw SchemaError("action generator needs 'vertex_labels' or 'cells'");
        spec.generators.push_back(std::move(g));
    }
    if (j.contains("cap")) spec.cap = j["cap"].get<std::size_t>();
    return spec;
}

/// Lifts a vertex permutation to a cell automorphism by matching vertex sets.
inline Automorphism lift_vertex_permutation(const DeltaComplex& kx,
                                            const std::vector<int>& vperm) {
    auto vt = vertex_table(kx);
    std::vector<std::map<std::vector<int>, std::vector<int>>> by_vertices(kx.cells.size());
    for (int d = 0; d <= kx.top_dim(); ++d)
        for (int i = 0; i < static_cast<int>(kx.cells[d].size()); ++i) {
            auto key = vt[d][i];
            std::sort(key.begin(), key.end());
            by_vertices[d][key].push_back(i);
        }
    Automorphism a;
    a.perm.resize(kx.cells.size());
    a.perm[0] = vperm;
    for (int d = 1; d <= kx.top_dim(); ++d) {
        a.perm[d].resize(kx.cells[d].size());
        for (int i = 0; i < static_cast<int>(kx.cells[d].size()); ++i) {
            std::vector<int> image;
            for (int v : vt[d][i]) image.push_back(vperm[v]);
            std::sort(image.begin(), image.end());
            auto it = by_vertices[d].find(image);
            if (it == by_vertices[d].end())
                throw ActionError("vertex permutation does not map cell " +
                                  to_string(CellId{d, i}) + " to a cell");
            if (it->second.size() != 1)
                throw ActionError("vertex permutation is ambiguous at cell " +
                                  to_string(CellId{d, i}) +
                                  "; provide an explicit 'cells' permutation");
            a.perm[d][i] = it->second.front();
        }
    }
    return a;
}

inline GroupAction make_action(const DeltaComplex& kx, const ActionSpec& spec) {
    GroupAction action;
    action.complex = kx;
    action.cap = spec.cap;
    std::map<std::string, int> vertex_by_label;
    for (int i = 0; i < static_cast<int>(kx.cell_count(0)); ++i) {
        const auto& l = kx.cells[0][i].label;
        if (!l.empty()) vertex_by_label[l] = i;
    }
    for (const auto& g : spec.generators) {
        Automorphism a;
        if (!g.cells.empty()) {
            a.perm = g.cells;
            if (a.perm.size() < kx.cells.size()) a.perm.resize(kx.cells.size());
            for (int d = 0; d <= kx.top_dim(); ++d)
                if (a.perm[d].empty()) {
                    a.perm[d].resize(kx.cells[d].size());
                    std::iota(a.perm[d].begin(), a.perm[d].end(), 0);
                }
        } else {
            std::vector<int> vperm(kx.cell_count(0));
            std::iota(vperm.begin(), vperm.end(), 0);
            for (const auto& [from, to] : g.vertex_labels) {
                auto fi = vertex_by_label.find(from);
                auto ti = vertex_by_label.find(to);
                if (fi == vertex_by_label.end() || ti == vertex_by_label.end())
                    throw ActionError("unknown vertex label in action: '" + from + "' -> '" +
                                      to + "'");
                vperm[fi->second] = ti->second;
            }
            a = lift_vertex_permutation(kx, vperm);
        }
        check_automorphism(kx, a);
        action.generators.push_back(std::move(a));
    }
    return action;
}

struct BuilderSpec {
    std::string name;
    json params;
};

inline DeltaComplex run_builder(const BuilderSpec& b) {
    if (b.name == "simplex_boundary") return simplex_boundary(b.params.at("m").get<int>());
    if (b.name == "crosspolytope_boundary")
        return crosspolytope_boundary(b.params.at("n").get<int>());
    if (b.name == "point") return point_complex();
    if (b.name == "empty") return {};
    if (b.name == "sphere0") return sphere0();
    throw SchemaError("unknown builder '" + b.name + "'");
}

/// Parsed input file: exactly one complex source, optional action and
/// expected-invariant block.
struct InputDocument {
    DeltaComplex complex;
    std::optional<ActionSpec> action;
    json expected;  // null when absent
    std::string canonical_source;
};

inline InputDocument parse_input_document(const json& j) {
    if (!j.is_object()) throw SchemaError("input document must be a JSON object");
    if (!j.contains("format_version") || j["format_version"].get<std::string>() != "1")
        throw SchemaError("unsupported or missing format_version (expected \"1\")");
    int sources = static_cast<int>(j.contains("stratification")) +
                  static_cast<int>(j.contains("builder")) +
                  static_cast<int>(j.contains("complex"));
    if (sources != 1)
        throw SchemaError("exactly one of 'stratification', 'builder', 'complex' required");
    InputDocument doc;
    if (j.contains("stratification")) {
        doc.complex = from_stratification(stratification_from_json(j["stratification"]));
    } else if (j.contains("builder")) {
        BuilderSpec b;
        b.name = j["builder"].at("name").get<std::string>();
        b.params = j["builder"];
        doc.complex = run_builder(b);
    } else {
        doc.complex = complex_from_json(j["complex"]);
    }
    if (j.contains("action")) doc.action = action_from_json(j["action"]);
    if (j.contains("expected")) doc.expected = j["expected"];
    doc.canonical_source = j.dump();
    return doc;
}

inline InputDocument load_input_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SchemaError("JSON parse error in '" + path + "': " + e.what());
    }
    return parse_input_document(j);
}

/// Canonical serialization: sorted keys, two-space indent, newline-terminated.
inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

inline std::string fnv1a_digest(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

inline json homology_to_json(const HomologyResult& hr) {
    json degrees = json::array();
    for (const auto& d : hr.degrees) {
        json torsion = json::array();
        for (const auto& t : d.torsion) torsion.push_back(t.str());
        degrees.push_back(json{{"rank", d.rank}, {"torsion", torsion}});
    }
    return degrees;
}

}  // namespace dualcx

#endif
