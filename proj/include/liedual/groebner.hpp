#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liedual/multipoly.hpp"

namespace liedual {

// Ideal with an optional reduced Groebner basis cache (grevlex only).
struct IdealBasis {
    std::vector<MultiPoly> generators;
    std::optional<std::vector<MultiPoly>> groebner_cache;

    IdealBasis() = default;
    explicit IdealBasis(std::vector<MultiPoly> gens)
        : generators(std::move(gens)) {}

    int nvars() const;
};

// Reduced, monic Groebner basis under grevlex. Deterministic output order
// (ascending leading monomial).
std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& gens);

// Populates the cache if absent and returns it.
const std::vector<MultiPoly>& groebner(IdealBasis& I);

// Full normal form against a Groebner basis.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& gb);

bool ideal_member(const MultiPoly& f, IdealBasis& I);
bool ideal_equal(IdealBasis& I, IdealBasis& J);

// Ideal of top-degree forms of I. Degree compatibility of grevlex makes the
// leading forms of a Groebner basis generate gr I; the returned basis is
// again a reduced Groebner basis.
IdealBasis leading_form_ideal(IdealBasis& I);

// Vanishing ideal of distinct points by Buchberger-Moller interpolation.
// Returns the reduced Groebner basis; standard monomials count |points|.
// Points live in the x-variables only (hbar slot unused).
IdealBasis vanishing_ideal(const std::vector<std::vector<Rat>>& points,
                           int nvars);

// ";"-separated generator list, e.g. "x1^2 - 1; x2^2 - 1".
IdealBasis parse_ideal(const std::string& text, int nvars);

struct GradedQuotient {
    int nvars = 0;
    IdealBasis ideal;                     // homogeneous
    std::vector<Monomial> monomial_basis; // standard monomials
    std::vector<long> hilbert;            // graded dimensions
    long dim = 0;
    long socle_dim = 0;
};

// Monomial basis, Hilbert function and socle dimension of C[x]/I for a
// homogeneous zero-dimensional ideal. Throws if the quotient is
// infinite-dimensional. Generators must not involve hbar.
GradedQuotient quotient_analytics(IdealBasis I);

// Quotient dimension only (works for non-homogeneous zero-dimensional ideals
// as well). Throws if infinite-dimensional.
long quotient_dimension(IdealBasis& I);

}  // namespace liedual
