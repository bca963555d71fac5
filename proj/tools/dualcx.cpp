// dualcx: build dual complexes from stratification data and compute their
// topological invariants (homology, fundamental group, quotients, structural
// verdicts).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dualcx/builders.hpp"
#include "dualcx/delta_complex.hpp"
#include "dualcx/fundamental_group.hpp"
#include "dualcx/group_action.hpp"
#include "dualcx/homology.hpp"
#include "dualcx/io.hpp"
#include "dualcx/recognizer.hpp"
#include "dualcx/simplicial_complex.hpp"
#include "dualcx/subdivision.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

constexpr int kExitSchema = 2;
constexpr int kExitValidation = 3;
constexpr int kExitAction = 4;
constexpr int kExitConnectivity = 5;
constexpr int kExitInconsistent = 6;

using dualcx::json;

struct ExitError {
    int code;
    std::string message;
};

json make_report(const dualcx::InputDocument& doc, const std::string& operation) {
    json rep;
    rep["input_digest"] = dualcx::fnv1a_digest(doc.canonical_source);
    rep["operation"] = operation;
    rep["tool_version"] = kToolVersion;
    return rep;
}

void emit(const json& report) { std::cout << dualcx::canonical_dump(report); }

void write_out(const std::string& path, const dualcx::DeltaComplex& kx) {
    json doc;
    doc["format_version"] = "1";
    doc["complex"] = dualcx::complex_to_json(kx);
    std::ofstream out(path);
    if (!out) throw ExitError{kExitSchema, "cannot write '" + path + "'"};
    out << dualcx::canonical_dump(doc);
}

json validation_to_json(const dualcx::ValidationReport& rep) {
    json violations = json::array();
    for (const auto& v : rep.violations) {
        json cells = json::array();
        for (auto c : v.cells) cells.push_back({{"dim", c.dim}, {"index", c.index}});
        violations.push_back({{"rule", v.rule}, {"cells", cells}, {"message", v.message}});
    }
    return json{{"ok", rep.ok}, {"violations", violations}};
}

void require_valid(const dualcx::DeltaComplex& kx) {
    auto rep = dualcx::validate(kx);
    if (!rep.ok) {
        json j = validation_to_json(rep);
        throw ExitError{kExitValidation, "complex fails validation: " + j.dump()};
    }
}

/// The `expected` block makes any input file a self-verifying test vector.
void check_expected(const dualcx::InputDocument& doc) {
    if (doc.expected.is_null()) return;
    const auto& e = doc.expected;
    if (e.contains("betti")) {
        auto want = e["betti"].get<std::vector<int>>();
        auto got = dualcx::betti(doc.complex);
        if (want != got)
            throw ExitError{kExitValidation, "expected betti mismatch"};
    }
    if (e.contains("euler")) {
        if (e["euler"].get<int>() != dualcx::euler_characteristic(doc.complex))
            throw ExitError{kExitValidation, "expected euler characteristic mismatch"};
    }
    if (e.contains("components")) {
        if (e["components"].get<int>() !=
            static_cast<int>(dualcx::components(doc.complex).size()))
            throw ExitError{kExitValidation, "expected component count mismatch"};
    }
    if (e.contains("dimension")) {
        if (e["dimension"].get<int>() != doc.complex.top_dim())
            throw ExitError{kExitValidation, "expected dimension mismatch"};
    }
}

json cell_counts_json(const dualcx::DeltaComplex& kx) {
    json counts = json::array();
    for (int d = 0; d <= kx.top_dim(); ++d)
        counts.push_back(static_cast<int>(kx.cell_count(d)));
    return counts;
}

dualcx::GroupAction action_or_fail(const dualcx::InputDocument& doc) {
    if (!doc.action) throw ExitError{kExitAction, "input has no 'action' block"};
    try {
        return dualcx::make_action(doc.complex, *doc.action);
    } catch (const dualcx::ActionError& e) {
        throw ExitError{kExitAction, e.what()};
    }
}

json verdict_to_json(const dualcx::Verdict& v) {
    json evidence = json::array();
    for (const auto& [name, result] : v.evidence)
        evidence.push_back({{"check", name}, {"result", result}});
    return json{{"level", dualcx::to_string(v.level)},
                {"dimension", v.dimension},
                {"evidence", evidence}};
}

json probe_to_json(const dualcx::FinitenessProbe& p) {
    json counts;
    for (const auto& [idx, n] : p.subgroup_counts) counts[std::to_string(idx)] = n;
    json j{{"max_index", p.max_index},
           {"subgroup_counts", counts.is_null() ? json::object() : counts},
           {"verdict", dualcx::to_string(p.verdict)}};
    json ab{{"rank", p.abelianization.rank}};
    json tors = json::array();
    for (const auto& t : p.abelianization.torsion) tors.push_back(t.str());
    ab["torsion"] = tors;
    j["abelianization"] = ab;
    if (p.order) j["order"] = static_cast<std::uint64_t>(*p.order);
    if (!p.note.empty()) j["note"] = p.note;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual complex toolkit"};
    app.require_subcommand(1);

    std::string path, path_b, out_path, coeff = "z", mode = "sphere-quotient";
    bool reduced = false, verify_18_1 = false;
    int max_index = 5, dim = -1;
    unsigned seed = 0;
    std::size_t cap_group = 10000, cap_coset = 1000000;

    auto* cmd_build = app.add_subcommand("build", "build a complex and summarize it");
    cmd_build->add_option("path", path)->required();
    cmd_build->add_option("--out", out_path);

    auto* cmd_homology = app.add_subcommand("homology", "Betti numbers and torsion");
    cmd_homology->add_option("path", path)->required();
    cmd_homology->add_option("--coeff", coeff)->check(CLI::IsMember({"q", "z"}));
    cmd_homology->add_flag("--reduced", reduced);

    auto* cmd_quotient = app.add_subcommand("quotient", "quotient by the input's group action");
    cmd_quotient->add_option("path", path)->required();
    cmd_quotient->add_option("--out", out_path);
    cmd_quotient->add_flag("--verify-18-1", verify_18_1);
    cmd_quotient->add_option("--cap-group-order", cap_group);

    auto* cmd_pi1 = app.add_subcommand("pi1", "fundamental group presentation and probes");
    cmd_pi1->add_option("path", path)->required();
    cmd_pi1->add_option("--max-index", max_index);
    cmd_pi1->add_option("--cap-coset-table", cap_coset);

    auto* cmd_check = app.add_subcommand("check", "structural verdict report");
    cmd_check->add_option("path", path)->required();
    cmd_check->add_option("--mode", mode)
        ->check(CLI::IsMember({"sphere-quotient", "cy-degeneration", "collapse"}));
    cmd_check->add_option("--dim", dim);
    cmd_check->add_option("--max-index", max_index);
    cmd_check->add_option("--cap-coset-table", cap_coset);
    cmd_check->add_option("--seed", seed);

    auto* cmd_join = app.add_subcommand("join", "join of two complexes");
    cmd_join->add_option("pathA", path)->required();
    cmd_join->add_option("pathB", path_b)->required();
    cmd_join->add_option("--out", out_path);

    auto* cmd_cone = app.add_subcommand("cone", "cone over a complex");
    cmd_cone->add_option("path", path)->required();
    cmd_cone->add_option("--out", out_path);

    auto* cmd_subdivide = app.add_subcommand("subdivide", "barycentric subdivision");
    cmd_subdivide->add_option("path", path)->required();
    cmd_subdivide->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_build->parsed()) {
            auto doc = dualcx::load_input_document(path);
            auto rep = make_report(doc, "build");
            auto vr = dualcx::validate(doc.complex);
            rep["results"]["cell_counts"] = cell_counts_json(doc.complex);
            rep["results"]["validation"] = validation_to_json(vr);
            if (!vr.ok) {
                emit(rep);
                std::cerr << "validation failed with " << vr.violations.size()
                          << " violation(s)\n";
                return kExitValidation;
            }
            check_expected(doc);
            if (!out_path.empty()) write_out(out_path, doc.complex);
            emit(rep);
            std::cerr << "ok: " << doc.complex.cell_count() << " cells, dimension "
                      << doc.complex.top_dim() << "\n";
        } else if (cmd_homology->parsed()) {
            auto doc = dualcx::load_input_document(path);
            require_valid(doc.complex);
            check_expected(doc);
            auto rep = make_report(doc, "homology");
            auto b = dualcx::betti(doc.complex);
            if (reduced && !b.empty()) b[0] -= 1;
            rep["results"]["coeff"] = coeff;
            rep["results"]["reduced"] = reduced;
            rep["results"]["betti"] = b;
            if (coeff == "z")
                rep["results"]["homology"] =
                    dualcx::homology_to_json(dualcx::integral_homology(doc.complex));
            rep["results"]["euler"] = dualcx::euler_characteristic(doc.complex);
            emit(rep);
            std::cerr << "homology computed over " << (coeff == "z" ? "Z" : "Q") << "\n";
        } else if (cmd_quotient->parsed()) {
            auto doc = dualcx::load_input_document(path);
            require_valid(doc.complex);
            check_expected(doc);
            auto action = action_or_fail(doc);
            action.cap = cap_group;
            auto rep = make_report(doc, "quotient");
            try {
                auto elements = dualcx::enumerate_elements(action);
                auto q = dualcx::quotient(action);
                rep["results"]["group_order"] = static_cast<int>(elements.size());
                rep["results"]["subdivisions_applied"] = q.subdivisions_applied;
                rep["results"]["regular"] = q.regular;
                rep["results"]["cell_counts"] = cell_counts_json(q.quotient);
                rep["results"]["homology"] =
                    dualcx::homology_to_json(dualcx::integral_homology(q.quotient));
                if (verify_18_1) {
                    auto qb = dualcx::betti(q.quotient);
                    json ranks = json::array();
                    bool all_match = true;
                    for (int i = 0; i <= action.complex.top_dim(); ++i) {
                        int inv = dualcx::invariant_rank(action, i);
                        int bi = i < static_cast<int>(qb.size()) ? qb[i] : 0;
                        ranks.push_back({{"degree", i},
                                         {"invariant_rank", inv},
                                         {"quotient_betti", bi}});
                        if (inv != bi) all_match = false;
                    }
                    rep["results"]["invariant_rank_check"] =
                        json{{"degrees", ranks}, {"all_match", all_match}};
                }
                if (!out_path.empty()) write_out(out_path, q.quotient);
                emit(rep);
                std::cerr << "quotient: " << q.quotient.cell_count() << " cells after "
                          << q.subdivisions_applied << " subdivision(s)\n";
            } catch (const dualcx::ActionError& e) {
                throw ExitError{kExitAction, e.what()};
            }
        } else if (cmd_pi1->parsed()) {
            auto doc = dualcx::load_input_document(path);
            require_valid(doc.complex);
            check_expected(doc);
            if (dualcx::components(doc.complex).size() != 1)
                throw ExitError{kExitConnectivity, "pi1 requires a connected complex"};
            auto rep = make_report(doc, "pi1");
            auto pres = dualcx::tietze_simplify(dualcx::presentation(doc.complex));
            json relators = json::array();
            for (const auto& r : pres.relators) relators.push_back(r);
            rep["results"]["presentation"] =
                json{{"generators", pres.generators}, {"relators", relators}};
            auto probe = dualcx::low_index_probe(pres, max_index, cap_coset);
            rep["results"]["probe"] = probe_to_json(probe);
            emit(rep);
            std::cerr << "pi1: " << pres.generators.size() << " generators, "
                      << pres.relators.size() << " relators, verdict "
                      << dualcx::to_string(probe.verdict) << "\n";
        } else if (cmd_check->parsed()) {
            auto doc = dualcx::load_input_document(path);
            require_valid(doc.complex);
            check_expected(doc);
            auto rep = make_report(doc, "check:" + mode);
            if (mode == "collapse") {
                auto cr = dualcx::collapses_to_point(doc.complex, seed);
                rep["results"]["collapsed_to_point"] = cr.collapsed_to_point;
                rep["results"]["steps"] = static_cast<int>(cr.steps.size());
                rep["results"]["residual_cells"] =
                    static_cast<int>(cr.residual.cell_count());
                emit(rep);
                std::cerr << (cr.collapsed_to_point ? "collapsed to a point\n"
                                                    : "did not collapse\n");
                return 0;
            }
            dualcx::ProbeOptions opt;
            opt.max_index = max_index;
            opt.coset_table_cap = cap_coset;
            dualcx::Verdict v;
            if (mode == "sphere-quotient") {
                v = dualcx::sphere_quotient_report(doc.complex, opt);
            } else {
                if (dim < 0)
                    throw ExitError{kExitSchema, "--dim is required for cy-degeneration"};
                v = dualcx::cy_degeneration_report(doc.complex, dim, opt);
            }
            rep["results"]["verdict"] = verdict_to_json(v);
            emit(rep);
            std::cerr << "verdict: " << dualcx::to_string(v.level) << "\n";
            if (v.level == dualcx::VerdictLevel::Inconsistent) return kExitInconsistent;
        } else if (cmd_join->parsed()) {
            auto a = dualcx::load_input_document(path);
            auto b = dualcx::load_input_document(path_b);
            require_valid(a.complex);
            require_valid(b.complex);
            auto joined = dualcx::join(a.complex, b.complex);
            auto rep = make_report(a, "join");
            rep["results"]["cell_counts"] = cell_counts_json(joined);
            if (!out_path.empty()) write_out(out_path, joined);
            emit(rep);
            std::cerr << "join: " << joined.cell_count() << " cells\n";
        } else if (cmd_cone->parsed()) {
            auto doc = dualcx::load_input_document(path);
            require_valid(doc.complex);
            check_expected(doc);
            auto coned = dualcx::cone(doc.complex);
            auto rep = make_report(doc, "cone");
            rep["results"]["cell_counts"] = cell_counts_json(coned);
            if (!out_path.empty()) write_out(out_path, coned);
            emit(rep);
            std::cerr << "cone: " << coned.cell_count() << " cells\n";
        } else if (cmd_subdivide->parsed()) {
            auto doc = dualcx::load_input_document(path);
            require_valid(doc.complex);
            check_expected(doc);
            auto bd = dualcx::barycentric_delta(doc.complex);
            auto rep = make_report(doc, "subdivide");
            rep["results"]["cell_counts"] = cell_counts_json(bd);
            if (!out_path.empty()) write_out(out_path, bd);
            emit(rep);
            std::cerr << "subdivision: " << bd.cell_count() << " cells\n";
        }
    } catch (const ExitError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const dualcx::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const dualcx::StratificationError& e) {
        std::cerr << "stratification error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const dualcx::ActionError& e) {
        std::cerr << "action error: " << e.what() << "\n";
        return kExitAction;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
