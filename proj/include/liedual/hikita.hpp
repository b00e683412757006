#pragma once

#include <string>
#include <vector>

#include "liedual/multipoly.hpp"
#include "liedual/root_data.hpp"

namespace liedual {

// Element s (x) g of the big algebra C[h*,h]^{W_M} (x) C[h*,h].
struct BElement {
    std::string name;
    MultiPoly s;  // W_M-invariant
    MultiPoly g;  // unrestricted
};

// Vector of polynomials in the X(l)-coordinates and hbar, indexed by
// canonical double-coset representatives.
struct WeightVector {
    std::vector<WeylElement> labels;
    std::vector<MultiPoly> entries;  // in (la_1..la_d, h)
};

// Instance of the commutative diagram: levi_q carries W_M (the invariance
// side), levi_p carries W_L, rho_l and the deformation base X(l).
class HikitaInstance {
  public:
    HikitaInstance(const LieType& ambient, const LeviSpec& levi_q,
                   const LeviSpec& levi_p);

    const LieType& ambient() const { return ambient_; }
    const LeviSpec& levi_q() const { return q_; }
    const LeviSpec& levi_p() const { return p_; }
    const WeylGroup& weyl() const { return W_; }
    int param_dim() const { return p_.character_dim(); }

    // Coordinates of la + 2h*rho_l inside h*, as polynomials in
    // (la_1..la_d, h). The X(l) chart assigns one parameter per GL block,
    // zero on the tail; in type A the last block is pinned to zero.
    const std::vector<MultiPoly>& restricted_point() const { return mu_; }

    // Canonical minimal-length representatives.
    const std::vector<WeylElement>& coh_labels() const { return coh_labels_; }   // (W_L\W/W_M)^free
    const std::vector<WeylElement>& quant_labels() const { return quant_labels_; } // (W_M\W/W_L)^free

    bool check_invariance(const BElement& b) const;

    // W_M-invariant generators of levi_q tensor 1, plus 1 tensor x_i.
    std::vector<BElement> default_generators() const;

  private:
    LieType ambient_;
    LeviSpec q_, p_;
    WeylGroup W_;
    std::vector<MultiPoly> mu_;
    std::vector<WeylElement> coh_labels_, quant_labels_;
};

// Restriction to flag fixed points (levi_p must be the torus): entry at
// [w] in W/W_M is (w.s) g as a polynomial in (x, h).
WeightVector flag_fixed_restriction(const HikitaInstance& inst,
                                    const BElement& b);

// Cohomology side: entry at [w] in (W_L\W/W_M)^free is
// ((w.s) g)(la + 2h*rho_l, h).
WeightVector coh_side(const HikitaInstance& inst, const BElement& b);

// Quantization side: entry at [w] in (W_M\W/W_L)^free is
// s(w(la + h*rho_l), h) g(la + h*rho_l, h) followed by h -> 2h.
WeightVector quant_side(const HikitaInstance& inst, const BElement& b);

struct DiagramMismatch {
    std::string generator;
    WeylElement coh_label;
    WeylElement quant_label;
    std::string coh_entry;
    std::string quant_entry;
};

struct DiagramReport {
    bool equal = true;
    std::size_t generators_checked = 0;
    std::size_t fixed_points = 0;
    std::vector<DiagramMismatch> mismatches;
};

// Checks coh entry at [w] against quant entry at i([w]) = [w^{-1}] for every
// generator, comparing exact polynomials.
DiagramReport diagram_check(const HikitaInstance& inst,
                            const std::vector<BElement>& generators);

struct FixedPointCensus {
    std::size_t count = 0;
    std::vector<WeylElement> labels;  // quant-side canonical reps
};

FixedPointCensus fixed_point_census(const HikitaInstance& inst);

// Display names la_1.., h for WeightVector entries.
std::vector<std::string> param_names(const HikitaInstance& inst);

}  // namespace liedual
