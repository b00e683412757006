#include "liedual/orbit_scheme.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace liedual {

namespace {

Weight synthesize_base(const LeviSpec& l) {
    Weight base(l.ambient.rank, Rat(0));
    for (int b = 0; b < l.num_blocks(); ++b) {
        auto [s, e] = l.block_range(b);
        for (int i = s; i < e; ++i) base[i] = Rat(b + 1);
    }
    return base;
}

Weight random_base(const LeviSpec& l, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(1, 19);
    Weight base(l.ambient.rank, Rat(0));
    for (int b = 0; b < l.num_blocks(); ++b) {
        auto [s, e] = l.block_range(b);
        Rat v(num(rng), 7);
        for (int i = s; i < e; ++i) base[i] = v;
    }
    return base;
}

bool stabilizer_is_levi(const WeylGroup& W, const LeviSpec& l, const Weight& base) {
    unsigned long stab = 0;
    for (const auto& w : W.elements())
        if (act_on_weight(w, base) == base) ++stab;
    return stab == l.weyl_order();
}

}  // namespace

OrbitScheme build_orbit_scheme(const LeviSpec& l, const std::optional<Weight>& base,
                               unsigned seed) {
    WeylGroup W(l.ambient);
    Weight x0;
    if (base) {
        x0 = *base;
        if (static_cast<int>(x0.size()) != l.ambient.rank)
            throw std::invalid_argument("base point dimension mismatch");
        if (!stabilizer_is_levi(W, l, x0))
            throw std::invalid_argument(
                "base point is not generic: stabilizer differs from W_L");
    } else {
        x0 = synthesize_base(l);
        std::mt19937 rng(seed);
        int attempts = 0;
        while (!stabilizer_is_levi(W, l, x0)) {
            if (++attempts > 32)
                throw std::logic_error("could not synthesize a generic base point");
            x0 = random_base(l, rng);
        }
    }

    OrbitScheme scheme{l, x0, {}, {}, {}, {}};
    std::set<std::vector<Rat>> orbit;
    for (const auto& w : W.elements()) orbit.insert(act_on_weight(w, x0));
    scheme.points.assign(orbit.begin(), orbit.end());
    if (scheme.points.size() * l.weyl_order() != W.size())
        throw std::logic_error("orbit size does not match |W|/|W_L|");

    scheme.iprime = vanishing_ideal(scheme.points, l.ambient.rank);
    scheme.gr_iprime = leading_form_ideal(scheme.iprime);
    scheme.quotient = quotient_analytics(scheme.gr_iprime);
    if (scheme.quotient.dim != static_cast<long>(scheme.points.size()))
        throw std::logic_error("flat degeneration audit failed: dim mismatch");
    return scheme;
}

bool gr_membership(const OrbitScheme& scheme, const MultiPoly& monomial) {
    IdealBasis gr = scheme.gr_iprime;
    return normal_form(monomial, groebner(gr)).is_zero();
}

std::string to_string(FlatnessVerdict v) {
    switch (v) {
        case FlatnessVerdict::Flat: return "flat";
        case FlatnessVerdict::NotFlat: return "not-flat";
        case FlatnessVerdict::Undetermined: return "undetermined";
    }
    return "?";
}

FlatnessReport flatness_check(const LeviSpec& l, std::optional<long> special_dim,
                              unsigned seed) {
    FlatnessReport report;
    report.levi = l;
    report.generic_dim =
        static_cast<long>(weyl_order(l.ambient) / l.weyl_order());
    report.special_dim = special_dim;

    const bool type_a = l.ambient.family == LieFamily::A;
    const bool type_c = l.ambient.family == LieFamily::C;
    const bool structural_flat = type_a || (type_c && l.tail == 0);
    const bool structural_witness = type_c && l.tail > 0 && l.num_blocks() > 0;

    if (structural_witness) {
        // witness x_1...x_{c1+1} with c1 = sum of GL block sizes
        int c1 = 0;
        for (int b : l.gl_blocks) c1 += b;
        int n = l.ambient.rank;
        MultiPoly witness = MultiPoly::constant(n, Rat(1));
        for (int i = 0; i <= c1 && i < n; ++i)
            witness = witness * MultiPoly::variable(n, i);
        OrbitScheme scheme = build_orbit_scheme(l, std::nullopt, seed);
        if (!gr_membership(scheme, witness))
            throw std::logic_error("structural witness monomial not found in gr I'");
        report.witness_monomials.push_back(witness);
        report.verdict = FlatnessVerdict::NotFlat;
        report.reason = "witness monomial " + witness.str() + " lies in gr I'";
        if (special_dim)
            report.reason += "; special fiber dimension " +
                             std::to_string(*special_dim) + " vs generic " +
                             std::to_string(report.generic_dim);
        return report;
    }

    if (structural_flat) {
        report.verdict = FlatnessVerdict::Flat;
        report.reason =
            type_a ? "type A Levi" : "Levi of type C with GL blocks only";
        return report;
    }

    if (special_dim) {
        if (*special_dim == report.generic_dim) {
            report.verdict = FlatnessVerdict::Flat;
            report.reason = "generic and special fiber dimensions agree";
        } else if (*special_dim > report.generic_dim) {
            report.verdict = FlatnessVerdict::NotFlat;
            report.reason = "special fiber dimension " +
                            std::to_string(*special_dim) + " exceeds generic " +
                            std::to_string(report.generic_dim);
        } else {
            report.verdict = FlatnessVerdict::Undetermined;
            report.reason = "special dimension below generic: input suspect";
        }
        return report;
    }

    report.verdict = FlatnessVerdict::Undetermined;
    report.reason = "no external special dimension and no structural case";
    return report;
}

HikitaFailureReport hikita_failure_certificate(const LeviSpec& l,
                                               const std::vector<long>& betti,
                                               unsigned seed) {
    OrbitScheme scheme = build_orbit_scheme(l, std::nullopt, seed);
    HikitaFailureReport report;
    report.hilbert = scheme.quotient.hilbert;
    report.betti = betti;
    report.quotient_dim = scheme.quotient.dim;
    report.socle_dim = scheme.quotient.socle_dim;
    for (long b : betti) report.betti_sum += b;
    report.grade_mismatch = report.hilbert != betti;
    long top_betti = betti.empty() ? 0 : betti.back();
    report.socle_mismatch = report.socle_dim < top_betti;
    return report;
}

}  // namespace liedual
