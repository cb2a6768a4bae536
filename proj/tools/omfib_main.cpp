#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "omfib/arrangement.hpp"
#include "omfib/fibration.hpp"
#include "omfib/geometric_lattice.hpp"
#include "omfib/homology.hpp"
#include "omfib/io.hpp"
#include "omfib/order_complex.hpp"
#include "omfib/salvetti.hpp"
#include "omfib/subdivision.hpp"

using json = nlohmann::ordered_json;
using namespace omfib;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct StageError : std::runtime_error {
    StageError(const std::string& stage, const std::string& what)
        : std::runtime_error("stage " + stage + ": " + what) {}
};

template <class F>
auto stage(const std::string& name, F&& f) {
    try {
        return f();
    } catch (const std::logic_error& ex) {  // covers std::invalid_argument
        throw StageError(name, ex.what());
    }
}

OMInput read_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    return parse_om_input(in);
}

OrientedMatroid build_om(const OMInput& input) {
    if (input.is_arrangement())
        return stage("covectors",
                     [&] { return from_arrangement(std::get<Arrangement>(input.data)).om; });
    return stage("validate", [&] {
        return OrientedMatroid::from_covectors(std::get<std::vector<SignVector>>(input.data));
    });
}

OrientedMatroid load_om(const std::string& path) { return build_om(read_input(path)); }

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

SignVector resolve_base(const OrientedMatroid& om, const std::string& token) {
    if (token.empty()) return om.tope(0);  // lexicographically smallest tope
    if (token.find_first_not_of("0123456789") == std::string::npos) {
        uint32_t t = static_cast<uint32_t>(std::stoul(token));
        if (t >= om.tope_count()) throw std::invalid_argument("tope index out of range");
        return om.tope(t);
    }
    SignVector v = SignVector::parse(token);
    if (!om.is_tope(v)) throw std::invalid_argument("'" + token + "' is not a tope");
    return v;
}

json torsion_json(const HomologyReport& h) {
    json t = json::array();
    for (const auto& [deg, coeff] : h.torsion) {
        if (coeff.fits_slong_p())
            t.push_back(json::array({deg, coeff.get_si()}));
        else
            t.push_back(json::array({deg, coeff.get_str()}));
    }
    return t;
}

json homology_json(const HomologyReport& h) {
    json j;
    j["betti"] = h.betti;
    j["torsion"] = torsion_json(h);
    j["euler"] = h.euler;
    return j;
}

json validation_json(const ValidationReport& rep) {
    json j;
    j["ok"] = rep.ok;
    j["rank"] = rep.rank;
    j["n_covectors"] = rep.n_covectors;
    j["n_topes"] = rep.n_topes;
    if (rep.violation) {
        json v;
        v["axiom"] = rep.violation->kind;
        v["witness"] = rep.violation->witness;
        j["violation"] = v;
    } else {
        j["violation"] = nullptr;
    }
    return j;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_validate(const std::string& path) {
    OMInput input = read_input(path);
    std::vector<SignVector> covectors;
    if (input.is_arrangement()) {
        try {
            covectors = from_arrangement(std::get<Arrangement>(input.data)).om.covectors();
        } catch (const std::invalid_argument& ex) {
            json j;
            j["ok"] = false;
            j["error"] = ex.what();
            print_json(j);
            return kExitCheckFailed;
        }
    } else {
        covectors = std::get<std::vector<SignVector>>(input.data);
    }
    ValidationReport rep = validate_axioms(covectors);
    print_json(validation_json(rep));
    return rep.ok ? kExitOk : kExitCheckFailed;
}

int cmd_covectors(const std::string& path, const std::string& out) {
    OrientedMatroid om = load_om(path);
    write_output(out, write_covector_file(om.covectors()));
    return kExitOk;
}

int cmd_info(const std::string& path) {
    OrientedMatroid om = load_om(path);
    GeometricLattice gl = stage("lattice", [&] { return geometric_lattice(om); });
    OSBetti os = stage("lattice", [&] { return os_betti(gl.poset); });
    json j;
    j["n"] = om.n();
    j["rank"] = om.rank();
    j["n_covectors"] = om.covector_count();
    j["n_topes"] = om.tope_count();
    j["n_flats"] = gl.flats.size();
    j["os_betti"] = os.betti;
    j["chi_projective"] = os.chi_projective;
    print_json(j);
    return kExitOk;
}

int cmd_salvetti(const std::string& path, const std::string& out) {
    OrientedMatroid om = load_om(path);
    SalvettiComplex s = stage("salvetti", [&] { return salvetti_poset(om); });
    write_output(out, write_poset_file(s.poset));
    return kExitOk;
}

int cmd_subdivide(const std::string& path, const std::string& base, const std::string& out) {
    OrientedMatroid om = load_om(path);
    SignVector b = resolve_base(om, base);
    DualSubdivision sd = stage("subdivide", [&] { return rank_subdivide_dual(om, b); });
    write_output(out, write_poset_file(sd.poset));
    return kExitOk;
}

std::string matching_text(const ProofMatchingResult& res) {
    std::ostringstream os;
    for (auto [a, b] : res.matching.pairs)
        os << "match " << res.fiber_b.elements[a] << " " << res.fiber_b.elements[b] << "\n";
    for (uint32_t c : res.critical_global) os << "crit " << c << "\n";
    return os.str();
}

int cmd_rksd(const std::string& path, const std::string& out) {
    OrientedMatroid om = load_om(path);
    SalvettiComplex s = stage("salvetti", [&] { return salvetti_poset(om); });
    SalvettiSubdivision sd = stage("rksd", [&] { return rank_subdivide_salvetti(om, s); });
    write_output(out, write_poset_file(sd.poset));
    return kExitOk;
}

int cmd_milnor(const std::string& path, const std::string& emit_matching,
               const std::string& emit_poset, const std::string& emit_facets) {
    OrientedMatroid om = load_om(path);
    SalvettiComplex s = stage("salvetti", [&] { return salvetti_poset(om); });
    SalvettiSubdivision sd = stage("rksd", [&] { return rank_subdivide_salvetti(om, s); });
    FibrationMap f = stage("fibration", [&] { return fibration(sd); });
    Subposet fiber = stage("fiber", [&] { return milnor_fiber(f); });
    HomologyReport h = stage("homology", [&] { return homology(fiber.poset); });
    OSBetti os = stage("lattice", [&] { return os_betti(geometric_lattice(om).poset); });

    json j;
    j["n"] = om.n();
    j["fiber_cells"] = fiber.elements.size();
    j["betti"] = h.betti;
    j["torsion"] = torsion_json(h);
    j["euler"] = h.euler;
    j["chi_projective"] = os.chi_projective;
    j["euler_identity_ok"] = h.euler == static_cast<long long>(om.n()) * os.chi_projective;
    print_json(j);

    if (!emit_matching.empty()) {
        ProofMatchingResult res =
            stage("matching", [&] { return proof_matching(f, CircleCell::PP, CircleCell::ZP); });
        write_output(emit_matching, matching_text(res));
    }
    if (!emit_poset.empty()) write_output(emit_poset, write_poset_file(fiber.poset));
    if (!emit_facets.empty())
        write_output(emit_facets, write_facet_file(order_complex(fiber.poset)));
    return kExitOk;
}

int cmd_homology(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    uint32_t n = 0;
    auto facets = parse_facet_file(in, &n);
    HomologyReport h = homology(complex_from_facets(n, facets));
    print_json(homology_json(h));
    return kExitOk;
}

int cmd_check(const std::string& path) {
    OrientedMatroid om = load_om(path);
    json checks = json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok, json detail = json::object()) {
        json entry;
        entry["name"] = name;
        entry["ok"] = ok;
        for (auto& [k, v] : detail.items()) entry[k] = v;
        checks.push_back(entry);
        all_ok = all_ok && ok;
    };

    SalvettiComplex s = stage("salvetti", [&] { return salvetti_poset(om); });
    GeometricLattice gl = stage("lattice", [&] { return geometric_lattice(om); });
    OSBetti os = stage("lattice", [&] { return os_betti(gl.poset); });

    HomologyReport salvetti_h = stage("homology", [&] { return homology(s.poset); });
    {
        bool ok = salvetti_h.trimmed_betti() == os.betti && salvetti_h.torsion.empty();
        json d;
        d["betti"] = salvetti_h.trimmed_betti();
        d["os_betti"] = os.betti;
        record("salvetti_complement_homology", ok, d);
    }

    SalvettiSubdivision sd = stage("rksd", [&] { return rank_subdivide_salvetti(om, s); });
    {
        HomologyReport subdivided = stage("homology", [&] { return homology(sd.poset); });
        record("subdivision_homology_invariance", subdivided == salvetti_h);
    }
    {
        bool ok = true;
        for (uint32_t b = 0; b < om.tope_count() && ok; ++b)
            ok = verify_subdivision(om, om.tope(b)).ok();
        json d;
        d["bases"] = om.tope_count();
        record("dual_subdivision_ball_checks", ok, d);
    }

    FibrationMap f = stage("fibration", [&] { return fibration(sd); });
    {
        QuasiFibrationReport rep =
            stage("quasifibration", [&] { return check_quasi_fibration(f); });
        json d;
        d["fiber_betti"] = rep.fiber[0].trimmed_betti();
        record("quasi_fibration", rep.ok(), d);
    }
    {
        bool ok = true;
        for (CircleCell a : {CircleCell::PP, CircleCell::MM})
            for (CircleCell b : {CircleCell::ZP, CircleCell::ZM})
                ok = ok && stage("matching", [&] { return proof_matching(f, a, b); }).ok();
        record("proof_matching", ok);
    }
    {
        Subposet fiber = stage("fiber", [&] { return milnor_fiber(f); });
        HomologyReport h = stage("homology", [&] { return homology(fiber.poset); });
        bool ok = h.euler == static_cast<long long>(om.n()) * os.chi_projective;
        json d;
        d["euler"] = h.euler;
        d["chi_projective"] = os.chi_projective;
        record("euler_identity", ok, d);
    }

    json j;
    j["input"] = path;
    j["checks"] = checks;
    j["ok"] = all_ok;
    print_json(j);
    return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_export(const std::string& path, const std::string& complex_name, const std::string& base,
               const std::string& out) {
    OrientedMatroid om = load_om(path);
    Poset poset;
    if (complex_name == "dual") {
        poset = om.covector_poset().dual();
    } else if (complex_name == "salvetti") {
        poset = salvetti_poset(om).poset;
    } else if (complex_name == "subdivision") {
        poset = rank_subdivide_dual(om, resolve_base(om, base)).poset;
    } else if (complex_name == "rksd") {
        SalvettiComplex s = salvetti_poset(om);
        poset = rank_subdivide_salvetti(om, s).poset;
    } else if (complex_name == "fiber") {
        SalvettiComplex s = salvetti_poset(om);
        SalvettiSubdivision sd = rank_subdivide_salvetti(om, s);
        poset = milnor_fiber(fibration(sd)).poset;
    } else {
        std::cerr << "error: --facets must be one of dual|salvetti|subdivision|rksd|fiber\n";
        return kExitUsage;
    }
    write_output(out, write_facet_file(order_complex(poset)));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial Milnor fibrations of oriented matroids"};
    app.require_subcommand(1);

    std::string input, out, base, facets_complex;
    std::string emit_matching, emit_poset, emit_facets;

    auto* validate = app.add_subcommand("validate", "check the covector axioms and simplicity");
    validate->add_option("input", input)->required();

    auto* covectors = app.add_subcommand("covectors", "emit the covector file of the input");
    covectors->add_option("input", input)->required();
    covectors->add_option("-o,--output", out);

    auto* info = app.add_subcommand("info", "summary of the oriented matroid");
    info->add_option("input", input)->required();

    auto* salvetti = app.add_subcommand("salvetti", "emit the Salvetti poset");
    salvetti->add_option("input", input)->required();
    salvetti->add_option("-o,--output", out);

    auto* subdivide =
        app.add_subcommand("subdivide", "emit the rank subdivision of the dual complex");
    subdivide->add_option("input", input)->required();
    subdivide->add_option("--base", base, "base tope (sign string or tope index)");
    subdivide->add_option("-o,--output", out);

    auto* rksd = app.add_subcommand("rksd", "emit the rank-subdivided Salvetti poset");
    rksd->add_option("input", input)->required();
    rksd->add_option("-o,--output", out);

    auto* milnor =
        app.add_subcommand("milnor", "homology report of the combinatorial Milnor fiber");
    milnor->add_option("input", input)->required();
    milnor->add_option("--emit-matching", emit_matching, "write the fiberwise matching");
    milnor->add_option("--emit-poset", emit_poset, "write the fiber poset");
    milnor->add_option("--emit-facets", emit_facets, "write the fiber order-complex facets");

    auto* check = app.add_subcommand("check", "run the structural verification suite");
    check->add_option("input", input)->required();

    auto* homology_cmd = app.add_subcommand("homology", "homology of a facet file");
    homology_cmd->add_option("input", input)->required();

    auto* export_cmd = app.add_subcommand("export", "export order-complex facets");
    export_cmd->add_option("input", input)->required();
    export_cmd->add_option("--facets", facets_complex, "dual|salvetti|subdivision|rksd|fiber")
        ->required();
    export_cmd->add_option("--base", base, "base tope for --facets subdivision");
    export_cmd->add_option("-o,--output", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(input);
        if (covectors->parsed()) return cmd_covectors(input, out);
        if (info->parsed()) return cmd_info(input);
        if (salvetti->parsed()) return cmd_salvetti(input, out);
        if (subdivide->parsed()) return cmd_subdivide(input, base, out);
        if (rksd->parsed()) return cmd_rksd(input, out);
        if (milnor->parsed()) return cmd_milnor(input, emit_matching, emit_poset, emit_facets);
        if (check->parsed()) return cmd_check(input);
        if (homology_cmd->parsed()) return cmd_homology(input);
        if (export_cmd->parsed()) return cmd_export(input, facets_complex, base, out);
    } catch (const ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
