#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "deltacurve/formsio.hpp"
#include "deltacurve/gonality.hpp"

using namespace deltacurve;

namespace {

// Exit codes are a stable contract: 0 success, 1 usage error, 2 data error,
// 3 table mismatch.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitMismatch = 3;

long level_ceiling() {
    if (const char* env = std::getenv("DELTACURVE_MAX_LEVEL")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument("DELTACURVE_MAX_LEVEL must be a positive integer");
    }
    return kDefaultLevelCeiling;
}

SubgroupDelta delta_from_spec(long level, const std::string& spec) {
    std::vector<long> gens;
    std::string tok;
    std::istringstream in(spec);
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        gens.push_back(std::stol(tok));
    }
    return closure(level, gens, level_ceiling());
}

std::string residue_list(const SubgroupDelta& d) {
    std::string s;
    for (long r : d.residues) {
        if (!s.empty()) s += " ";
        s += std::to_string(r);
    }
    return s;
}

// The +-pair notation used by the reference tables, e.g. {+-1,+-8}.
std::string pm_notation(const SubgroupDelta& d) {
    if (d.level <= 2) return "{1}";
    std::string s = "{";
    for (long r : d.residues) {
        if (r > d.level - r) continue;
        if (s.size() > 1) s += ",";
        s += "+-" + std::to_string(r);
    }
    return s + "}";
}

std::string polynomial_string(const std::vector<Int>& coeffs,
                              const std::vector<Monomial>& monomials) {
    std::string s;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        if (coeffs[i] == 0) continue;
        const Int a = abs(coeffs[i]);
        if (s.empty())
            s += (coeffs[i] < 0 ? "-" : "");
        else
            s += (coeffs[i] < 0 ? " - " : " + ");
        if (a != 1) s += to_string(a) + "*";
        s += monomial_name(monomials[i]);
    }
    return s.empty() ? "0" : s;
}

void print_invariants(const CurveInvariants& inv) {
    std::cout << "level " << inv.level << "\n";
    std::cout << "delta " << residue_list(inv.delta) << "\n";
    std::cout << "order " << inv.delta.order() << "\n";
    std::cout << "mu " << inv.mu << "\n";
    std::cout << "nu2 " << inv.nu2 << "\n";
    std::cout << "nu3 " << inv.nu3 << "\n";
    std::cout << "nu_inf " << inv.nu_inf << "\n";
    std::cout << "genus " << inv.genus << "\n";
}

int cmd_genus(long level, const std::string& spec) {
    const SubgroupDelta delta = delta_from_spec(level, spec);
    const CurveInvariants inv = curve_invariants(level, delta);
    print_invariants(inv);
    std::cout << "cusp orbits:\n";
    for (const CuspOrbitData& c : cusp_orbits(level, delta)) {
        std::cout << "  d " << c.divisor << ": orbits " << c.orbit_count << ", e "
                  << c.e_total << ", e_p1 " << c.e_p1 << ", e_p2 " << c.e_p2 << "\n";
    }
    return kExitOk;
}

int cmd_enumerate(long level) {
    const std::vector<SubgroupDelta> subs = enumerate_subgroups(level, level_ceiling());
    std::cout << "level " << level << "\n";
    std::cout << "subgroups " << subs.size() << "\n";
    for (const SubgroupDelta& d : subs) {
        const CurveInvariants inv = curve_invariants(level, d);
        const GonalityBound b = abramovich_bound(inv.mu);
        std::cout << "delta " << residue_list(d) << " | order " << d.order() << " | mu "
                  << inv.mu << " | genus " << inv.genus << " | gonality >= "
                  << b.gonality_lower_bound << "\n";
    }
    return kExitOk;
}

int cmd_classify(long level, const std::string& spec, const std::string& forms_path,
                 const std::string& mode_name) {
    const SubgroupDelta delta = delta_from_spec(level, spec);
    std::optional<CanonicalBasis> basis;
    if (!forms_path.empty()) {
        const FormsFile file = load_forms_file(forms_path);
        const BasisMode mode =
            (mode_name == "certify") ? BasisMode::certify : BasisMode::probe;
        basis = to_canonical_basis(file, mode);
    }
    const ClassificationVerdict v = classify(level, delta, basis);
    std::cout << "level " << v.level << "\n";
    std::cout << "delta " << residue_list(v.delta) << "\n";
    std::cout << "genus " << v.genus << "\n";
    std::cout << "sub_hyperelliptic " << to_string(v.sub_hyperelliptic) << "\n";
    std::cout << "hyperelliptic " << to_string(v.hyperelliptic) << "\n";
    std::cout << "trigonal " << to_string(v.trigonal) << "\n";
    std::cout << "evidence:\n";
    for (const Evidence& e : v.evidence)
        std::cout << "  [" << (e.computed ? "computed" : "asserted") << "] "
                  << to_string(e.kind) << ": " << e.detail << "\n";
    return kExitOk;
}

std::string csv_delta(const std::optional<SubgroupDelta>& d) {
    if (!d) return "-";
    std::string s;
    for (long r : d->residues) {
        if (!s.empty()) s += "-";
        s += std::to_string(r);
    }
    return s;
}

int cmd_tables(int table_id, const std::string& format) {
    const std::vector<ReproducedRow> rows = reproduce_table(table_id);
    long mismatches = 0;
    if (format == "csv") {
        std::cout << "N,delta,genus,computed_genus,marker,bound_marker,status\n";
        for (const ReproducedRow& r : rows) {
            const bool ok = r.genus_match && r.marker_consistent;
            if (!ok) ++mismatches;
            std::cout << r.row.level << "," << csv_delta(r.row.delta) << ","
                      << (r.row.genus ? std::to_string(*r.row.genus) : "-") << ","
                      << (r.computed_genus ? to_string(*r.computed_genus) : "-") << ","
                      << static_cast<int>(r.row.marker) << ","
                      << static_cast<int>(r.bound_marker) << ","
                      << (ok ? "ok" : (r.genus_match ? "marker_mismatch" : "genus_mismatch"))
                      << "\n";
        }
    } else {  // markdown
        std::cout << "| N | delta | genus | marker | computed genus | status |\n";
        std::cout << "|---|-------|-------|--------|----------------|--------|\n";
        for (const ReproducedRow& r : rows) {
            const bool ok = r.genus_match && r.marker_consistent;
            if (!ok) ++mismatches;
            std::string marker = r.row.marker == Marker::dagger
                                     ? "+"
                                     : (r.row.marker == Marker::double_dagger ? "++" : "");
            std::cout << "| " << r.row.level << " | "
                      << (r.row.delta ? pm_notation(*r.row.delta) : "-") << " | "
                      << (r.row.genus ? std::to_string(*r.row.genus) : "-") << " | " << marker
                      << " | " << (r.computed_genus ? to_string(*r.computed_genus) : "-")
                      << " | " << (ok ? "ok" : (r.genus_match ? "marker mismatch" : "genus mismatch"))
                      << " |\n";
        }
    }
    if (mismatches > 0) {
        std::cerr << "table " << table_id << ": " << mismatches << " mismatched row(s)\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_relations(const std::string& forms_path, int degree, const std::string& mode_name) {
    const FormsFile file = load_forms_file(forms_path);
    const BasisMode mode = (mode_name == "certify") ? BasisMode::certify : BasisMode::probe;
    const CanonicalBasis basis = to_canonical_basis(file, mode);
    const int g = static_cast<int>(basis.genus());

    RelationBasis rb;
    if (degree == 2) {
        rb = quadratic_relations(basis);
    } else {
        if (mode == BasisMode::certify) {
            const long need = sturm_precision(basis.mu, 3);
            if (basis.precision() < need)
                throw FormsError(FormsErrorKind::bad_value, 0,
                                 "certify mode needs precision >= " + std::to_string(need) +
                                     ", file has " + std::to_string(basis.precision()));
        }
        std::vector<Monomial> order = degree3_monomials(g);
        std::vector<QSeries> products;
        for (const Monomial& m : order)
            products.push_back(basis.forms[m[0]] * basis.forms[m[1]] * basis.forms[m[2]]);
        rb = relation_kernel(std::move(products), std::move(order));
    }
    std::cout << "level " << file.level << "\n";
    std::cout << "delta " << residue_list(file.delta) << "\n";
    std::cout << "genus " << file.genus << "\n";
    std::cout << "precision " << file.precision << "\n";
    std::cout << "mode " << (mode == BasisMode::certify ? "certify" : "probe") << "\n";
    std::cout << "degree " << degree << "\n";
    std::cout << "dimension " << rb.dimension() << "\n";
    const auto cleared = rb.cleared();
    for (const auto& v : cleared)
        std::cout << "relation " << polynomial_string(v, rb.monomial_order) << "\n";
    return kExitOk;
}

int cmd_petri(const std::string& forms_path, const std::string& mode_name) {
    const FormsFile file = load_forms_file(forms_path);
    const BasisMode mode = (mode_name == "certify") ? BasisMode::certify : BasisMode::probe;
    const CanonicalBasis basis = to_canonical_basis(file, mode);
    if (basis.genus() < 5)
        throw FormsError(FormsErrorKind::bad_value, 0,
                         "the Petri count needs genus >= 5, file has genus " +
                             std::to_string(file.genus));
    const PetriReport r = petri_test(basis);
    std::cout << "level " << file.level << "\n";
    std::cout << "delta " << residue_list(file.delta) << "\n";
    std::cout << "mode " << (r.certified ? "certify" : "probe") << "\n";
    std::cout << "genus " << r.genus << "\n";
    std::cout << "r2 " << r.r2 << "\n";
    std::cout << "r3_expected " << r.r3_expected << "\n";
    std::cout << "r3_observed " << (r.r3_observed ? std::to_string(*r.r3_observed) : "-")
              << "\n";
    std::cout << "dim_L_prime " << r.dim_L_prime << "\n";
    std::cout << "cubic_generators " << r.cubic_generators << "\n";
    std::cout << "verdict " << to_string(r.verdict) << "\n";
    if (r.plane_quintic_possible) std::cout << "plane_quintic_possible yes\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"genus and gonality of the modular curves between X_1(N) and X_0(N)"};
    app.require_subcommand(1);

    long level = 0;
    std::string delta_spec;
    std::string forms_path;
    std::string mode_name = "probe";
    int table_id = 1;
    std::string format = "md";
    int degree = 2;

    CLI::App* c_genus = app.add_subcommand("genus", "curve invariants and cusp data");
    c_genus->add_option("level", level)->required();
    c_genus->add_option("--delta", delta_spec,
                        "generators or full residue list, comma separated");

    CLI::App* c_enum = app.add_subcommand("enumerate", "all subgroups at one level");
    c_enum->add_option("level", level)->required();

    CLI::App* c_classify = app.add_subcommand("classify", "gonality classification");
    c_classify->add_option("level", level)->required();
    c_classify->add_option("--delta", delta_spec);
    c_classify->add_option("--forms", forms_path, "cusp form basis file");
    c_classify->add_option("--mode", mode_name)->check(CLI::IsMember({"probe", "certify"}));

    CLI::App* c_tables = app.add_subcommand("tables", "recompute a reference table");
    c_tables->add_option("id", table_id)->required()->check(CLI::Range(1, 3));
    c_tables->add_option("--format", format)->check(CLI::IsMember({"md", "csv"}));

    CLI::App* c_rel = app.add_subcommand("relations", "relations among form products");
    c_rel->add_option("forms", forms_path)->required();
    c_rel->add_option("--degree", degree)->check(CLI::IsMember({2, 3}));
    c_rel->add_option("--mode", mode_name)->check(CLI::IsMember({"probe", "certify"}));

    CLI::App* c_petri = app.add_subcommand("petri", "cubic generator count");
    c_petri->add_option("forms", forms_path)->required();
    c_petri->add_option("--mode", mode_name)->check(CLI::IsMember({"probe", "certify"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c_genus->parsed()) return cmd_genus(level, delta_spec);
        if (c_enum->parsed()) return cmd_enumerate(level);
        if (c_classify->parsed()) return cmd_classify(level, delta_spec, forms_path, mode_name);
        if (c_tables->parsed()) return cmd_tables(table_id, format);
        if (c_rel->parsed()) return cmd_relations(forms_path, degree, mode_name);
        if (c_petri->parsed()) return cmd_petri(forms_path, mode_name);
    } catch (const FormsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
