#include "liedual/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "liedual/groebner.hpp"
#include "liedual/hikita.hpp"
#include "liedual/multipoly.hpp"
#include "liedual/orbit_scheme.hpp"
#include "liedual/partition.hpp"
#include "liedual/root_data.hpp"

namespace liedual::cli {

namespace {

using nlohmann::ordered_json;

ordered_json manifest(const std::string& verb, const std::vector<std::string>& args,
                      unsigned seed) {
    ordered_json m;
    m["schema"] = "liedual/1";
    m["tool"] = "liedual";
    m["version"] = "0.1.0";
    m["verb"] = verb;
    m["input"] = args;
    m["seed"] = seed;
    return m;
}

ordered_json partition_json(const Partition& p) {
    ordered_json arr = ordered_json::array();
    for (int v : p.parts) arr.push_back(v);
    return arr;
}

ordered_json labels_json(const std::vector<WeylElement>& labels) {
    ordered_json arr = ordered_json::array();
    for (const auto& w : labels) arr.push_back(w.one_line());
    return arr;
}

std::string tri_state(TriState t) {
    switch (t) {
        case TriState::Yes: return "yes";
        case TriState::No: return "no";
        case TriState::NotApplicable: return "not-applicable";
    }
    return "?";
}

struct CommonOpts {
    bool json = false;
    unsigned seed = 0;
    unsigned jobs = 1;
};

void add_common(CLI::App& app, CommonOpts& opts) {
    app.add_flag("--json", opts.json, "machine-readable output");
    app.add_option("--seed", opts.seed, "seed for randomized fallbacks");
    app.add_option("--jobs", opts.jobs, "parallel batch evaluation bound");
}

LieType type_for_partition(LieFamily fam, const Partition& p) {
    int size = p.size();
    switch (fam) {
        case LieFamily::A: return LieType(fam, size);
        case LieFamily::B:
            if (size % 2 == 0)
                throw std::invalid_argument("type B partitions have odd size");
            return LieType(fam, (size - 1) / 2);
        case LieFamily::C:
        case LieFamily::D:
            if (size % 2 != 0)
                throw std::invalid_argument("type C/D partitions have even size");
            return LieType(fam, size / 2);
    }
    throw std::logic_error("unreachable");
}

RunResult run_dual(const Partition& p, const std::string& type_s,
                   const std::vector<std::string>& args, const CommonOpts& opts) {
    LieFamily fam = family_from_char(type_s.at(0));
    LieType t = type_for_partition(fam, p);
    OrbitLabel o(p, t);
    OrbitLabel d = bvls_dual(o);
    ordered_json rep = manifest("dual", args, opts.seed);
    rep["type"] = t.str();
    rep["partition"] = partition_json(p);
    rep["dual_type"] = d.ambient.str();
    rep["dual_partition"] = partition_json(d.partition);
    return {0, rep};
}

ordered_json flatness_json(const FlatnessReport& fr) {
    ordered_json j;
    j["levi"] = fr.levi.str();
    j["generic_dim"] = fr.generic_dim;
    if (fr.special_dim)
        j["special_dim"] = *fr.special_dim;
    else
        j["special_dim"] = nullptr;
    j["verdict"] = to_string(fr.verdict);
    ordered_json w = ordered_json::array();
    for (const auto& m : fr.witness_monomials) w.push_back(m.str());
    j["witnesses"] = w;
    j["reason"] = fr.reason;
    return j;
}

RunResult dispatch_impl(const std::vector<std::string>& args);

RunResult run_batch(const std::string& path, const CommonOpts& opts,
                    const std::vector<std::string>& args) {
    std::ifstream in(path);
    if (!in) {
        ordered_json rep = manifest("batch", args, opts.seed);
        rep["error"] = "cannot open batch file: " + path;
        return {2, rep};
    }
    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::vector<std::string> words{std::istream_iterator<std::string>(ss),
                                       std::istream_iterator<std::string>()};
        if (!words.empty()) lines.push_back(std::move(words));
    }
    std::vector<RunResult> results(lines.size());
    unsigned jobs = std::max(1u, opts.jobs);
    std::size_t next = 0;
    while (next < lines.size()) {
        std::size_t chunk = std::min<std::size_t>(jobs, lines.size() - next);
        std::vector<std::future<RunResult>> futs;
        for (std::size_t k = 0; k < chunk; ++k)
            futs.push_back(std::async(std::launch::async, dispatch_impl,
                                      lines[next + k]));
        for (std::size_t k = 0; k < chunk; ++k) results[next + k] = futs[k].get();
        next += chunk;
    }
    ordered_json rep = manifest("batch", args, opts.seed);
    ordered_json arr = ordered_json::array();
    std::size_t failed = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        ordered_json item;
        item["line"] = i + 1;
        item["exit_code"] = results[i].exit_code;
        item["report"] = results[i].report;
        if (results[i].exit_code != 0) ++failed;
        arr.push_back(std::move(item));
    }
    rep["results"] = arr;
    rep["summary"] = {{"total", results.size()},
                      {"succeeded", results.size() - failed},
                      {"failed", failed}};
    return {0, rep};
}

RunResult dispatch_impl(const std::vector<std::string>& args) {
    CLI::App app{"exact-arithmetic workbench for nilpotent-orbit duality, "
                 "Weyl coset combinatorics and Hikita-type verification"};
    app.require_subcommand(1);
    CommonOpts opts;
    add_common(app, opts);

    std::string type_s, partition_s, levi_s, ambient_s, m_s, l_s, base_s, file_s;
    std::string generators_s = "default";
    std::optional<long> special_dim;
    std::string side_s = "right";
    bool longest = false;
    int betti_k = 0;

    auto* dual = app.add_subcommand("dual", "BVLS dual of a nilpotent orbit");
    dual->add_option("--type", type_s, "ambient family A|B|C|D")->required();
    dual->add_option("--partition", partition_s)->required();
    add_common(*dual, opts);

    auto* coll = app.add_subcommand("collapse", "B/C/D collapse of a partition");
    coll->add_option("--type", type_s)->required();
    coll->add_option("--partition", partition_s)->required();
    add_common(*coll, opts);

    auto* cosets = app.add_subcommand("cosets", "coset and double-coset enumeration");
    cosets->add_option("--m", m_s, "Levi spec, e.g. C3:gl3")->required();
    cosets->add_option("--l", l_s, "second Levi spec for double cosets");
    cosets->add_option("--side", side_s,
                       "left (cosets w W_M) or right (cosets W_M w)");
    cosets->add_flag("--longest", longest, "longest instead of shortest reps");
    add_common(*cosets, opts);

    auto* oc = app.add_subcommand("orbit-cartan", "orbit scheme, gr I' and analytics");
    oc->add_option("--levi", levi_s)->required();
    oc->add_option("--base", base_s, "comma-separated rational base point");
    oc->add_option("--special-dim", special_dim);
    add_common(*oc, opts);

    auto* flat = app.add_subcommand("flatness", "weak flatness audit");
    flat->add_option("--levi", levi_s)->required();
    flat->add_option("--special-dim", special_dim);
    add_common(*flat, opts);

    auto* hv = app.add_subcommand("hikita-verify", "two-sided weight map comparison");
    hv->add_option("--ambient", ambient_s)->required();
    hv->add_option("--m", m_s, "Levi body of the invariance side, e.g. gl3")
        ->required();
    hv->add_option("--l", l_s, "Levi body of the deformation side")->required();
    hv->add_option("--generators", generators_s, "default");
    add_common(*hv, opts);

    auto* surj = app.add_subcommand("surjectivity", "partition shape classifier");
    surj->add_option("--type", type_s)->required();
    surj->add_option("--partition", partition_s)->required();
    add_common(*surj, opts);

    auto* betti = app.add_subcommand("betti", "Betti table for (2k+1,2k+1,1)");
    betti->add_option("--k", betti_k)->required();
    add_common(*betti, opts);

    auto* census = app.add_subcommand("census", "torus fixed point census");
    census->add_option("--ambient", ambient_s)->required();
    census->add_option("--m", m_s)->required();
    census->add_option("--l", l_s)->required();
    add_common(*census, opts);

    auto* batch = app.add_subcommand("batch", "run newline-delimited commands");
    batch->add_option("--file", file_s)->required();
    add_common(*batch, opts);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        ordered_json rep = manifest("usage-error", args, opts.seed);
        rep["error"] = e.what();
        return {2, rep};
    }

    auto t0 = std::chrono::steady_clock::now();
    auto finish = [&](RunResult r) {
        auto t1 = std::chrono::steady_clock::now();
        r.report["wall_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        return r;
    };

    try {
        if (dual->parsed()) {
            Partition p = parse_partition(partition_s);
            return finish(run_dual(p, type_s, args, opts));
        }
        if (coll->parsed()) {
            Partition p = parse_partition(partition_s);
            LieFamily fam = family_from_char(type_s.at(0));
            ordered_json rep = manifest("collapse", args, opts.seed);
            rep["type"] = type_s;
            rep["partition"] = partition_json(p);
            rep["collapsed"] = partition_json(collapse(p, fam));
            return finish(RunResult{0, rep});
        }
        if (cosets->parsed()) {
            LeviSpec m = parse_levi(m_s);
            WeylGroup W(m.ambient);
            ordered_json rep = manifest("cosets", args, opts.seed);
            rep["m"] = m.str();
            if (!l_s.empty()) {
                LeviSpec l = l_s.find(':') != std::string::npos
                                 ? parse_levi(l_s)
                                 : parse_levi_body(m.ambient, l_s);
                auto free = free_double_cosets(W, m, l);
                auto censusv = free_coset_census(W, m, l);
                rep["l"] = l.str();
                rep["free_count"] = free.size();
                rep["free_reps"] = labels_json(free);
                rep["census"] = {{"by_orbit_size", censusv.by_orbit_size},
                                 {"by_sh_lo", censusv.by_sh_lo},
                                 {"by_root_condition", censusv.by_root_condition}};
            } else {
                // left = cosets w W_M, right = cosets W_M w
                CosetKind kind;
                if (side_s == "left")
                    kind = CosetKind::RightQuotient;
                else if (side_s == "right")
                    kind = CosetKind::LeftQuotient;
                else
                    throw std::invalid_argument(
                        "--side must be left or right (got '" + side_s + "')");
                auto reps = coset_reps(W, m, kind,
                                       longest ? RepChoice::Longest
                                               : RepChoice::Shortest);
                rep["side"] = side_s;
                rep["count"] = reps.size();
                rep["reps"] = labels_json(reps);
            }
            return finish(RunResult{0, rep});
        }
        if (oc->parsed()) {
            LeviSpec l = parse_levi(levi_s);
            std::optional<Weight> basept;
            if (!base_s.empty()) basept = parse_rat_vector(base_s);
            OrbitScheme scheme = build_orbit_scheme(l, basept, opts.seed);
            FlatnessReport fr = flatness_check(l, special_dim, opts.seed);
            ordered_json rep = manifest("orbit-cartan", args, opts.seed);
            rep["levi"] = l.str();
            rep["base"] = format_rat_vector(scheme.base_point);
            rep["points"] = scheme.points.size();
            rep["generic_dim"] = fr.generic_dim;
            rep["special_dim"] =
                special_dim ? ordered_json(*special_dim) : ordered_json(nullptr);
            rep["verdict"] = to_string(fr.verdict);
            ordered_json wits = ordered_json::array();
            for (const auto& w : fr.witness_monomials) wits.push_back(w.str());
            rep["witnesses"] = wits;
            rep["dim"] = scheme.quotient.dim;
            rep["hilbert"] = scheme.quotient.hilbert;
            ordered_json basis = ordered_json::array();
            for (const auto& m : scheme.quotient.monomial_basis) {
                MultiPoly f(scheme.quotient.nvars);
                f.add_term(m, Rat(1));
                basis.push_back(f.str());
            }
            rep["basis"] = basis;
            rep["socle_dim"] = scheme.quotient.socle_dim;
            rep["socle"] = scheme.quotient.socle_dim;
            ordered_json gr = ordered_json::array();
            for (const auto& g : *scheme.gr_iprime.groebner_cache)
                gr.push_back(g.str());
            rep["gr_basis"] = gr;
            return finish(RunResult{0, rep});
        }
        if (flat->parsed()) {
            LeviSpec l = parse_levi(levi_s);
            FlatnessReport fr = flatness_check(l, special_dim, opts.seed);
            ordered_json rep = manifest("flatness", args, opts.seed);
            rep.update(flatness_json(fr));
            return finish(RunResult{0, rep});
        }
        if (hv->parsed()) {
            LieType amb = parse_lie_type(ambient_s);
            LeviSpec m = parse_levi_body(amb, m_s);
            LeviSpec l = parse_levi_body(amb, l_s);
            HikitaInstance inst(amb, m, l);
            std::vector<BElement> gens;
            if (generators_s == "default") {
                gens = inst.default_generators();
            } else {
                // one generator per line: "name : s-polynomial ; g-polynomial"
                std::ifstream gin(generators_s);
                if (!gin)
                    throw std::invalid_argument("cannot open generator file: " +
                                                generators_s);
                std::string line;
                while (std::getline(gin, line)) {
                    if (line.find_first_not_of(" \t") == std::string::npos)
                        continue;
                    auto colon = line.find(':');
                    auto semi = line.find(';');
                    if (colon == std::string::npos || semi == std::string::npos ||
                        semi < colon)
                        throw std::invalid_argument(
                            "generator lines read 'name : s ; g' (got '" + line +
                            "')");
                    std::string name = line.substr(0, colon);
                    name.erase(name.find_last_not_of(" \t") + 1);
                    gens.push_back(BElement{
                        name,
                        parse_poly(line.substr(colon + 1, semi - colon - 1),
                                   amb.rank),
                        parse_poly(line.substr(semi + 1), amb.rank)});
                }
                if (gens.empty())
                    throw std::invalid_argument("generator file is empty");
            }
            DiagramReport dr = diagram_check(inst, gens);
            auto names = param_names(inst);
            ordered_json rep = manifest("hikita-verify", args, opts.seed);
            rep["instance"] = {{"ambient", amb.str()}, {"m", m.str()}, {"l", l.str()}};
            rep["fixed_points"] = dr.fixed_points;
            ordered_json per = ordered_json::array();
            for (const auto& b : gens) {
                WeightVector coh = coh_side(inst, b);
                WeightVector quant = quant_side(inst, b);
                ordered_json item;
                item["name"] = b.name;
                ordered_json cohj = ordered_json::array(),
                             quantj = ordered_json::array();
                for (std::size_t k = 0; k < coh.labels.size(); ++k)
                    cohj.push_back({{"label", coh.labels[k].one_line()},
                                    {"entry", coh.entries[k].str(names)}});
                for (std::size_t k = 0; k < quant.labels.size(); ++k)
                    quantj.push_back({{"label", quant.labels[k].one_line()},
                                      {"entry", quant.entries[k].str(names)}});
                item["coh"] = cohj;
                item["quant"] = quantj;
                bool ok = true;
                for (const auto& mm : dr.mismatches)
                    if (mm.generator == b.name) ok = false;
                item["equal"] = ok;
                per.push_back(std::move(item));
            }
            rep["per_generator"] = per;
            rep["verdict"] = dr.equal ? "equal" : "mismatch";
            return finish(RunResult{0, rep});
        }
        if (surj->parsed()) {
            Partition p = parse_partition(partition_s);
            LieFamily fam = family_from_char(type_s.at(0));
            ordered_json rep = manifest("surjectivity", args, opts.seed);
            rep["partition"] = partition_json(p);
            rep["type"] = type_s;
            ordered_json v;
            v["orbit_partition"] = is_orbit_partition_family(p, fam);
            v["a_group_trivial"] = a_group_trivial(p, fam);
            v["normal_orbit_image"] = tri_state(normal_orbit_image(p, fam));
            v["surjectivity_necessary"] = surjectivity_necessary(p, fam);
            rep["verdicts"] = v;
            return finish(RunResult{0, rep});
        }
        if (betti->parsed()) {
            ordered_json rep = manifest("betti", args, opts.seed);
            auto d = kim_betti(betti_k);
            long sum = 0;
            for (long x : d) sum += x;
            rep["k"] = betti_k;
            rep["partition"] =
                partition_json(Partition({2 * betti_k + 1, 2 * betti_k + 1, 1}));
            rep["betti"] = d;
            rep["sum"] = sum;
            return finish(RunResult{0, rep});
        }
        if (census->parsed()) {
            LieType amb = parse_lie_type(ambient_s);
            LeviSpec m = parse_levi_body(amb, m_s);
            LeviSpec l = parse_levi_body(amb, l_s);
            HikitaInstance inst(amb, m, l);
            auto c = fixed_point_census(inst);
            ordered_json rep = manifest("census", args, opts.seed);
            rep["instance"] = {{"ambient", amb.str()}, {"m", m.str()}, {"l", l.str()}};
            rep["count"] = c.count;
            rep["labels"] = labels_json(c.labels);
            return finish(RunResult{0, rep});
        }
        if (batch->parsed()) return finish(run_batch(file_s, opts, args));
    } catch (const std::invalid_argument& e) {
        ordered_json rep = manifest("usage-error", args, opts.seed);
        rep["error"] = e.what();
        return {2, rep};
    } catch (const std::exception& e) {
        ordered_json rep = manifest("internal-error", args, opts.seed);
        rep["error"] = e.what();
        return {1, rep};
    }
    ordered_json rep = manifest("usage-error", args, opts.seed);
    rep["error"] = "no subcommand";
    return {2, rep};
}

}  // namespace

RunResult dispatch(const std::vector<std::string>& args) {
    return dispatch_impl(args);
}

std::string render_table(const ordered_json& report) {
    std::ostringstream out;
    std::function<void(const ordered_json&, const std::string&)> walk =
        [&](const ordered_json& node, const std::string& prefix) {
            if (node.is_object()) {
                for (auto it = node.begin(); it != node.end(); ++it)
                    walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
            } else if (node.is_array()) {
                bool scalars = std::all_of(node.begin(), node.end(), [](const auto& x) {
                    return !x.is_structured();
                });
                if (scalars) {
                    out << prefix << ": ";
                    for (std::size_t i = 0; i < node.size(); ++i) {
                        if (i) out << ", ";
                        if (node[i].is_string())
                            out << node[i].get<std::string>();
                        else
                            out << node[i].dump();
                    }
                    out << "\n";
                } else {
                    for (std::size_t i = 0; i < node.size(); ++i)
                        walk(node[i], prefix + "[" + std::to_string(i) + "]");
                }
            } else {
                out << prefix << ": "
                    << (node.is_string() ? node.get<std::string>() : node.dump())
                    << "\n";
            }
        };
    walk(report, "");
    return out.str();
}

}  // namespace liedual::cli
