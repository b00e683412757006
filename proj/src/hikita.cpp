#include "liedual/hikita.hpp"

#include <algorithm>
#include <stdexcept>

namespace liedual {

namespace {

// la + 2 h rho_l in ambient coordinates, as polynomials in (la_1..la_d, h).
// Chart: GL block j of levi_p carries the parameter la_{j+1}; the tail is 0;
// in type A the last block is pinned to 0 (PGL normalization).
std::vector<MultiPoly> restricted_mu(const LeviSpec& p) {
    int n = p.ambient.rank;
    int d = p.character_dim();
    Weight rl = rho_levi(p);
    MultiPoly h = MultiPoly::hbar(d);
    std::vector<MultiPoly> mu;
    mu.reserve(n);
    std::vector<int> block_of(n, -1);
    for (int b = 0; b < p.num_blocks(); ++b) {
        auto [s, e] = p.block_range(b);
        for (int i = s; i < e; ++i) block_of[i] = b;
    }
    for (int i = 0; i < n; ++i) {
        MultiPoly entry = MultiPoly::zero(d);
        int b = block_of[i];
        if (b >= 0 && b < d) entry = MultiPoly::variable(d, b);
        entry = entry + h * (Rat(2) * rl[i]);
        mu.push_back(entry);
    }
    return mu;
}

std::vector<WeylElement> invert_all(std::vector<WeylElement> v) {
    for (auto& w : v) w = w.inverse();
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

HikitaInstance::HikitaInstance(const LieType& ambient, const LeviSpec& levi_q,
                               const LeviSpec& levi_p)
    : ambient_(ambient), q_(levi_q), p_(levi_p), W_(ambient) {
    if (!(q_.ambient == ambient) || !(p_.ambient == ambient))
        throw std::invalid_argument("instance Levis must share the ambient type");
    mu_ = restricted_mu(p_);
    quant_labels_ = free_double_cosets(W_, q_, p_);   // (W_M\W/W_L)^free
    coh_labels_ = invert_all(quant_labels_);          // (W_L\W/W_M)^free via i
}

bool HikitaInstance::check_invariance(const BElement& b) const {
    for (const auto& g : levi_generators(q_))
        if (!(weyl_act_poly(g, b.s) == b.s)) return false;
    return true;
}

std::vector<BElement> HikitaInstance::default_generators() const {
    std::vector<BElement> out;
    int n = ambient_.rank;
    auto gens = invariant_generators(q_);
    for (std::size_t k = 0; k < gens.size(); ++k)
        out.push_back(BElement{"s" + std::to_string(k + 1), gens[k],
                               MultiPoly::constant(n, Rat(1))});
    for (int i = 0; i < n; ++i)
        out.push_back(BElement{"g_x" + std::to_string(i + 1),
                               MultiPoly::constant(n, Rat(1)),
                               MultiPoly::variable(n, i)});
    return out;
}

WeightVector flag_fixed_restriction(const HikitaInstance& inst, const BElement& b) {
    if (!inst.levi_p().is_full_torus())
        throw std::invalid_argument("flag_fixed_restriction needs the torus Levi");
    if (!inst.check_invariance(b))
        throw std::invalid_argument("s-leg is not W_M-invariant");
    WeightVector out;
    out.labels = coset_reps(inst.weyl(), inst.levi_q(), CosetKind::RightQuotient,
                            RepChoice::Shortest);
    for (const auto& w : out.labels)
        out.entries.push_back(weyl_act_poly(w, b.s) * b.g);
    return out;
}

WeightVector coh_side(const HikitaInstance& inst, const BElement& b) {
    if (!inst.check_invariance(b))
        throw std::invalid_argument("s-leg is not W_M-invariant");
    const auto& mu = inst.restricted_point();
    WeightVector out;
    out.labels = inst.coh_labels();
    for (const auto& w : out.labels) {
        MultiPoly acted = weyl_act_poly(w, b.s) * b.g;
        out.entries.push_back(acted.substitute(mu));
    }
    return out;
}

WeightVector quant_side(const HikitaInstance& inst, const BElement& b) {
    if (!inst.check_invariance(b))
        throw std::invalid_argument("s-leg is not W_M-invariant");
    const auto& mu = inst.restricted_point();
    int d = inst.param_dim();
    // s(w(la + h rho_l), h) g(la + h rho_l, h), then h -> 2h; in the doubled
    // normalization both arguments read la + 2h rho_l and the explicit hbar
    // slot of s and g doubles.
    MultiPoly two_h = MultiPoly::hbar(d) * Rat(2);
    WeightVector out;
    out.labels = inst.quant_labels();
    for (const auto& w : out.labels) {
        // w-translate of the restricted point, coordinatewise
        WeylElement winv = w.inverse();
        std::vector<MultiPoly> moved;
        moved.reserve(mu.size());
        for (std::size_t i = 0; i < mu.size(); ++i)
            moved.push_back(mu[winv.perm[i]] * Rat(w.signs[i]));
        MultiPoly entry =
            b.s.substitute(moved, &two_h) * b.g.substitute(mu, &two_h);
        out.entries.push_back(entry);
    }
    return out;
}

DiagramReport diagram_check(const HikitaInstance& inst,
                            const std::vector<BElement>& generators) {
    DiagramReport report;
    report.fixed_points = inst.quant_labels().size();
    auto names = param_names(inst);
    for (const auto& b : generators) {
        WeightVector coh = coh_side(inst, b);
        WeightVector quant = quant_side(inst, b);
        // i([w]) = [w^{-1}]: the canonical quant rep of the inverse coset is
        // exactly the inverse of the canonical coh rep
        for (std::size_t k = 0; k < coh.labels.size(); ++k) {
            WeylElement target = coh.labels[k].inverse();
            auto it = std::lower_bound(quant.labels.begin(), quant.labels.end(),
                                       target);
            if (it == quant.labels.end() || !(*it == target))
                throw std::logic_error(
                    "label bijection failure: inverse rep not canonical");
            std::size_t pos =
                static_cast<std::size_t>(it - quant.labels.begin());
            if (!(coh.entries[k] == quant.entries[pos])) {
                report.equal = false;
                report.mismatches.push_back(
                    DiagramMismatch{b.name, coh.labels[k], quant.labels[pos],
                                    coh.entries[k].str(names),
                                    quant.entries[pos].str(names)});
            }
        }
        ++report.generators_checked;
    }
    return report;
}

FixedPointCensus fixed_point_census(const HikitaInstance& inst) {
    FixedPointCensus census;
    census.labels = inst.quant_labels();
    census.count = census.labels.size();
    if (inst.coh_labels().size() != census.count)
        throw std::logic_error("fixed point counts differ across the two sides");
    return census;
}

std::vector<std::string> param_names(const HikitaInstance& inst) {
    std::vector<std::string> names;
    for (int i = 0; i < inst.param_dim(); ++i)
        names.push_back("la" + std::to_string(i + 1));
    names.push_back("h");
    return names;
}

}  // namespace liedual
