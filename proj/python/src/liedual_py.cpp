#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liedual/cli.hpp"
#include "liedual/groebner.hpp"
#include "liedual/hikita.hpp"
#include "liedual/orbit_scheme.hpp"
#include "liedual/partition.hpp"
#include "liedual/root_data.hpp"

namespace py = pybind11;
using namespace liedual;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
    py::module json = py::module::import("json");
    return json.attr("loads")(j.dump());
}

std::vector<int> dual_parts(const std::string& type_s,
                            const std::vector<int>& parts) {
    LieType t = parse_lie_type(type_s);
    OrbitLabel o(Partition(parts), t);
    return bvls_dual(o).partition.parts;
}

std::string dual_type(const std::string& type_s) {
    return parse_lie_type(type_s).langlands_dual().str();
}

std::vector<int> collapse_py(const std::string& family,
                             const std::vector<int>& parts) {
    return collapse(Partition(parts), family_from_char(family.at(0))).parts;
}

py::dict orbit_cartan_py(const std::string& levi_s,
                         std::optional<std::vector<std::string>> base,
                         unsigned seed) {
    LeviSpec l = parse_levi(levi_s);
    std::optional<Weight> basept;
    if (base) {
        Weight w;
        for (const auto& s : *base) w.push_back(parse_rat(s));
        basept = w;
    }
    OrbitScheme s = build_orbit_scheme(l, basept, seed);
    py::dict out;
    out["levi"] = l.str();
    out["points"] = s.points.size();
    out["dim"] = s.quotient.dim;
    out["hilbert"] = s.quotient.hilbert;
    out["socle"] = s.quotient.socle_dim;
    py::list gr;
    for (const auto& g : *s.gr_iprime.groebner_cache) gr.append(g.str());
    out["gr_basis"] = gr;
    return out;
}

py::dict flatness_py(const std::string& levi_s, std::optional<long> special_dim,
                     unsigned seed) {
    FlatnessReport r = flatness_check(parse_levi(levi_s), special_dim, seed);
    py::dict out;
    out["levi"] = r.levi.str();
    out["generic_dim"] = r.generic_dim;
    if (r.special_dim)
        out["special_dim"] = *r.special_dim;
    else
        out["special_dim"] = py::none();
    out["verdict"] = to_string(r.verdict);
    py::list wits;
    for (const auto& w : r.witness_monomials) wits.append(w.str());
    out["witnesses"] = wits;
    return out;
}

py::dict hikita_verify_py(const std::string& ambient, const std::string& m,
                          const std::string& l) {
    LieType t = parse_lie_type(ambient);
    HikitaInstance inst(t, parse_levi_body(t, m), parse_levi_body(t, l));
    DiagramReport r = diagram_check(inst, inst.default_generators());
    py::dict out;
    out["ambient"] = t.str();
    out["m"] = inst.levi_q().str();
    out["l"] = inst.levi_p().str();
    out["fixed_points"] = r.fixed_points;
    out["equal"] = r.equal;
    out["generators_checked"] = r.generators_checked;
    return out;
}

py::list weight_vectors_py(const std::string& ambient, const std::string& m,
                           const std::string& l, const std::string& s_text,
                           const std::string& g_text, const std::string& side) {
    LieType t = parse_lie_type(ambient);
    HikitaInstance inst(t, parse_levi_body(t, m), parse_levi_body(t, l));
    BElement b{"b", parse_poly(s_text, t.rank), parse_poly(g_text, t.rank)};
    WeightVector v = side == "quant" ? quant_side(inst, b) : coh_side(inst, b);
    auto names = param_names(inst);
    py::list out;
    for (std::size_t k = 0; k < v.labels.size(); ++k) {
        py::dict item;
        item["label"] = v.labels[k].one_line();
        item["entry"] = v.entries[k].str(names);
        out.append(item);
    }
    return out;
}

std::size_t census_py(const std::string& ambient, const std::string& m,
                      const std::string& l) {
    LieType t = parse_lie_type(ambient);
    HikitaInstance inst(t, parse_levi_body(t, m), parse_levi_body(t, l));
    return fixed_point_census(inst).count;
}

py::tuple run_py(const std::vector<std::string>& args) {
    auto r = liedual::cli::dispatch(args);
    return py::make_tuple(r.exit_code, json_to_py(r.report));
}

}  // namespace

PYBIND11_MODULE(_liedual, mod) {
    mod.doc() =
        "Exact-arithmetic workbench for nilpotent orbit duality, Weyl coset "
        "combinatorics, orbit-scheme ideals and Hikita-type verification.";

    mod.def("dual", &dual_parts, py::arg("type"), py::arg("partition"),
            "BVLS dual partition (transpose plus collapse in classical types)");
    mod.def("dual_type", &dual_type, py::arg("type"));
    mod.def("collapse", &collapse_py, py::arg("family"), py::arg("partition"));
    mod.def(
        "transpose",
        [](const std::vector<int>& p) { return transpose(Partition(p)).parts; },
        py::arg("partition"));
    mod.def(
        "is_orbit_partition",
        [](const std::vector<int>& p, const std::string& t) {
            return is_orbit_partition(Partition(p), parse_lie_type(t));
        },
        py::arg("partition"), py::arg("type"));
    mod.def(
        "sat_regular_levi",
        [](const std::string& l) {
            return sat_regular_levi(parse_levi(l)).partition.parts;
        },
        py::arg("levi"));
    mod.def(
        "induced_from_zero",
        [](const std::string& l) {
            return induced_from_zero(parse_levi(l)).partition.parts;
        },
        py::arg("levi"));
    mod.def(
        "a_group_trivial",
        [](const std::vector<int>& p, const std::string& f) {
            return a_group_trivial(Partition(p), family_from_char(f.at(0)));
        },
        py::arg("partition"), py::arg("family"));
    mod.def(
        "surjectivity_necessary",
        [](const std::vector<int>& p, const std::string& f) {
            return surjectivity_necessary(Partition(p), family_from_char(f.at(0)));
        },
        py::arg("partition"), py::arg("family"));
    mod.def("kim_betti", &kim_betti, py::arg("k"));
    mod.def(
        "orbit_dimension",
        [](const std::vector<int>& p, const std::string& t) {
            return orbit_dimension(Partition(p), parse_lie_type(t));
        },
        py::arg("partition"), py::arg("type"));
    mod.def(
        "weyl_order",
        [](const std::string& t) { return weyl_order(parse_lie_type(t)); },
        py::arg("type"));
    mod.def(
        "free_double_cosets",
        [](const std::string& m, const std::string& l) {
            LeviSpec ms = parse_levi(m);
            LeviSpec ls = l.find(':') != std::string::npos
                              ? parse_levi(l)
                              : parse_levi_body(ms.ambient, l);
            WeylGroup W(ms.ambient);
            std::vector<std::string> out;
            for (const auto& w : free_double_cosets(W, ms, ls))
                out.push_back(w.one_line());
            return out;
        },
        py::arg("m"), py::arg("l"));
    mod.def("orbit_cartan", &orbit_cartan_py, py::arg("levi"),
            py::arg("base") = py::none(), py::arg("seed") = 0);
    mod.def("flatness", &flatness_py, py::arg("levi"),
            py::arg("special_dim") = py::none(), py::arg("seed") = 0);
    mod.def("hikita_verify", &hikita_verify_py, py::arg("ambient"), py::arg("m"),
            py::arg("l"));
    mod.def("weight_vectors", &weight_vectors_py, py::arg("ambient"),
            py::arg("m"), py::arg("l"), py::arg("s"), py::arg("g"),
            py::arg("side") = "quant");
    mod.def("census", &census_py, py::arg("ambient"), py::arg("m"), py::arg("l"));
    mod.def("run", &run_py, py::arg("args"),
            "dispatch a CLI-style command, returns (exit_code, report)");
    mod.attr("__version__") = "0.1.0";
}
