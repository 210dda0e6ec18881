#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "deltacurve/formsio.hpp"
#include "deltacurve/gonality.hpp"

namespace py = pybind11;
using namespace deltacurve;

namespace {

py::object py_int(const Int& v) {
    return py::module_::import("builtins").attr("int")(to_string(v));
}

py::object py_fraction(const Rat& v) {
    return py::module_::import("fractions").attr("Fraction")(to_string(v));
}

SubgroupDelta delta_of(long level, const std::vector<long>& generators) {
    return closure(level, generators);
}

py::dict invariants_dict(const CurveInvariants& inv) {
    py::dict d;
    d["level"] = inv.level;
    d["delta"] = inv.delta.residues;
    d["order"] = inv.delta.order();
    d["mu"] = py_int(inv.mu);
    d["nu2"] = py_int(inv.nu2);
    d["nu3"] = py_int(inv.nu3);
    d["nu_inf"] = py_int(inv.nu_inf);
    d["genus"] = py_int(inv.genus);
    return d;
}

py::dict forms_dict(const FormsFile& f) {
    py::dict d;
    d["level"] = f.level;
    d["delta"] = f.delta.residues;
    d["genus"] = f.genus;
    d["precision"] = f.precision;
    py::list forms;
    for (const QSeries& s : f.forms) {
        py::list row;
        for (const Rat& c : s.coeffs()) row.append(py_fraction(c));
        forms.append(row);
    }
    d["forms"] = forms;
    d["text"] = serialize_forms(f);
    return d;
}

BasisMode mode_of(const std::string& name) {
    if (name == "probe") return BasisMode::probe;
    if (name == "certify") return BasisMode::certify;
    throw std::invalid_argument("mode must be 'probe' or 'certify'");
}

py::dict relation_dict(const FormsFile& file, const RelationBasis& rb, int degree,
                       BasisMode mode) {
    py::dict d;
    d["level"] = file.level;
    d["genus"] = file.genus;
    d["precision"] = file.precision;
    d["degree"] = degree;
    d["mode"] = mode == BasisMode::certify ? "certify" : "probe";
    d["dimension"] = rb.dimension();
    py::list monos;
    for (const Monomial& m : rb.monomial_order) monos.append(monomial_name(m));
    d["monomials"] = monos;
    py::list rels;
    for (const auto& v : rb.cleared()) {
        py::list row;
        for (const Int& c : v) row.append(py_int(c));
        rels.append(row);
    }
    d["relations"] = rels;
    return d;
}

py::dict petri_dict(const PetriReport& r) {
    py::dict d;
    d["genus"] = r.genus;
    d["r2"] = r.r2;
    d["r3_expected"] = py_int(r.r3_expected);
    d["r3_observed"] = r.r3_observed ? py::cast(*r.r3_observed) : py::none();
    d["dim_L_prime"] = r.dim_L_prime;
    d["cubic_generators"] = py_int(r.cubic_generators);
    d["verdict"] = to_string(r.verdict);
    d["plane_quintic_possible"] = r.plane_quintic_possible;
    d["certified"] = r.certified;
    return d;
}

}  // namespace

PYBIND11_MODULE(deltacurve, m) {
    m.doc() = "genus and gonality of the modular curves between X_1(N) and X_0(N)";

    m.def("euler_phi", &euler_phi, py::arg("n"));
    m.def("divisors", &divisors, py::arg("n"));

    m.def(
        "closure",
        [](long level, const std::vector<long>& generators) {
            return delta_of(level, generators).residues;
        },
        py::arg("level"), py::arg("generators"),
        "smallest subgroup of (Z/NZ)* containing the generators and +-1");

    m.def(
        "enumerate_subgroups",
        [](long level) {
            py::list out;
            for (const SubgroupDelta& s : enumerate_subgroups(level)) out.append(s.residues);
            return out;
        },
        py::arg("level"));

    m.def(
        "project_pi",
        [](long level, const std::vector<long>& generators, long d) {
            const PiImage img = project_pi_d(delta_of(level, generators), d);
            return py::make_tuple(img.modulus, img.residues);
        },
        py::arg("level"), py::arg("generators"), py::arg("d"));

    m.def(
        "invariants",
        [](long level, const std::vector<long>& generators) {
            return invariants_dict(curve_invariants(level, delta_of(level, generators)));
        },
        py::arg("level"), py::arg("generators"));

    m.def(
        "genus",
        [](long level, const std::vector<long>& generators) {
            return genus_of(level, delta_of(level, generators));
        },
        py::arg("level"), py::arg("generators"));

    m.def(
        "cusp_orbits",
        [](long level, const std::vector<long>& generators) {
            py::list out;
            for (const CuspOrbitData& c : cusp_orbits(level, delta_of(level, generators))) {
                py::dict d;
                d["divisor"] = c.divisor;
                d["orbit_count"] = py_int(c.orbit_count);
                d["e_total"] = py_int(c.e_total);
                d["e_p1"] = py_int(c.e_p1);
                d["e_p2"] = py_int(c.e_p2);
                out.append(d);
            }
            return out;
        },
        py::arg("level"), py::arg("generators"));

    m.def(
        "gonality_lower_bound",
        [](long mu) { return abramovich_bound(Int(mu)).gonality_lower_bound; },
        py::arg("mu"));
    m.def(
        "rules_out_gonality", [](long mu, long d) { return rules_out_gonality(Int(mu), d); },
        py::arg("mu"), py::arg("d"));
    m.def(
        "candidate_levels",
        [](int d) {
            const auto s = candidate_levels(d);
            return std::vector<long>(s.begin(), s.end());
        },
        py::arg("d"));

    m.def(
        "table",
        [](int table_id) {
            py::list out;
            for (const TableRow& r : table_rows(table_id)) {
                py::dict d;
                d["level"] = r.level;
                d["delta"] = r.delta ? py::cast(r.delta->residues) : py::none();
                d["genus"] = r.genus ? py::cast(*r.genus) : py::none();
                d["marker"] = static_cast<int>(r.marker);
                out.append(d);
            }
            return out;
        },
        py::arg("table_id"));

    m.def(
        "reproduce_table",
        [](int table_id) {
            py::list out;
            for (const ReproducedRow& r : reproduce_table(table_id)) {
                py::dict d;
                d["level"] = r.row.level;
                d["delta"] = r.row.delta ? py::cast(r.row.delta->residues) : py::none();
                d["genus"] = r.row.genus ? py::cast(*r.row.genus) : py::none();
                d["marker"] = static_cast<int>(r.row.marker);
                d["computed_genus"] =
                    r.computed_genus ? py_int(*r.computed_genus) : py::none();
                d["bound_marker"] = static_cast<int>(r.bound_marker);
                d["genus_match"] = r.genus_match;
                d["marker_consistent"] = r.marker_consistent;
                out.append(d);
            }
            return out;
        },
        py::arg("table_id"));

    m.def(
        "classify",
        [](long level, const std::vector<long>& generators,
           const std::optional<std::string>& forms_text, const std::string& mode) {
            std::optional<CanonicalBasis> basis;
            if (forms_text)
                basis = to_canonical_basis(parse_forms(*forms_text), mode_of(mode));
            const ClassificationVerdict v =
                classify(level, delta_of(level, generators), basis);
            py::dict d;
            d["level"] = v.level;
            d["delta"] = v.delta.residues;
            d["genus"] = py_int(v.genus);
            d["sub_hyperelliptic"] = to_string(v.sub_hyperelliptic);
            d["hyperelliptic"] = to_string(v.hyperelliptic);
            d["trigonal"] = to_string(v.trigonal);
            py::list ev;
            for (const Evidence& e : v.evidence) {
                py::dict f;
                f["kind"] = to_string(e.kind);
                f["computed"] = e.computed;
                f["detail"] = e.detail;
                ev.append(f);
            }
            d["evidence"] = ev;
            return d;
        },
        py::arg("level"), py::arg("generators"), py::arg("forms_text") = py::none(),
        py::arg("mode") = "probe");

    m.def(
        "parse_forms", [](const std::string& text) { return forms_dict(parse_forms(text)); },
        py::arg("text"));
    m.def(
        "load_forms", [](const std::string& path) { return forms_dict(load_forms_file(path)); },
        py::arg("path"));
    m.def("fixtures", [] {
        py::list out;
        for (const FormsFile& f : bundled_fixtures()) out.append(forms_dict(f));
        return out;
    });

    m.def(
        "relations",
        [](const std::string& forms_text, int degree, const std::string& mode) {
            const FormsFile file = parse_forms(forms_text);
            const CanonicalBasis basis = to_canonical_basis(file, mode_of(mode));
            RelationBasis rb;
            if (degree == 2) {
                rb = quadratic_relations(basis);
            } else if (degree == 3) {
                std::vector<Monomial> order =
                    degree3_monomials(static_cast<int>(basis.genus()));
                std::vector<QSeries> products;
                for (const Monomial& mo : order)
                    products.push_back(basis.forms[mo[0]] * basis.forms[mo[1]] *
                                       basis.forms[mo[2]]);
                rb = relation_kernel(std::move(products), std::move(order));
            } else {
                throw std::invalid_argument("degree must be 2 or 3");
            }
            return relation_dict(file, rb, degree, mode_of(mode));
        },
        py::arg("forms_text"), py::arg("degree") = 2, py::arg("mode") = "probe");

    m.def(
        "hyperelliptic_test",
        [](long genus, long r2) { return std::string(to_string(hyperelliptic_test(genus, r2))); },
        py::arg("genus"), py::arg("r2"));

    m.def(
        "sturm_precision",
        [](long mu, int degree) { return sturm_precision(Int(mu), degree); }, py::arg("mu"),
        py::arg("degree"));

    m.def(
        "petri",
        [](const std::string& forms_text, const std::string& mode) {
            return petri_dict(
                petri_test(to_canonical_basis(parse_forms(forms_text), mode_of(mode))));
        },
        py::arg("forms_text"), py::arg("mode") = "probe");

    m.def(
        "petri_from_quadrics",
        [](long genus, const std::vector<std::vector<long>>& quadrics, bool certified) {
            std::vector<std::vector<Rat>> rows;
            for (const auto& q : quadrics) {
                std::vector<Rat> r(q.size());
                for (std::size_t i = 0; i < q.size(); ++i) r[i] = Rat(q[i]);
                rows.push_back(std::move(r));
            }
            return petri_dict(petri_from_quadrics(genus, rows, certified));
        },
        py::arg("genus"), py::arg("quadrics"), py::arg("certified") = false);

    m.def(
        "bundled_quadrics",
        [](long level, const std::vector<long>& generators) -> py::object {
            const auto qs = bundled_quadrics(level, delta_of(level, generators));
            if (!qs) return py::none();
            py::list out;
            for (const auto& q : *qs) {
                py::list row;
                for (const Int& c : q) row.append(py_int(c));
                out.append(row);
            }
            return out;
        },
        py::arg("level"), py::arg("generators"));

    py::register_exception<FormsError>(m, "FormsError");
}
