#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liedual/groebner.hpp"
#include "liedual/multipoly.hpp"
#include "liedual/partition.hpp"
#include "liedual/root_data.hpp"

namespace liedual {

// The Weyl orbit of a generic central element of the Levi, its vanishing
// ideal I', the leading-form ideal gr I', and quotient analytics.
struct OrbitScheme {
    LeviSpec levi;
    Weight base_point;
    std::vector<Weight> points;
    IdealBasis iprime;     // vanishing ideal of the orbit (reduced GB cached)
    IdealBasis gr_iprime;  // leading-form ideal (reduced GB cached)
    GradedQuotient quotient;
};

// Synthesizes a generic base (value j on GL block j, zeros on the tail) when
// none is given; verifies stabilizer == W_L, retrying with seeded random
// small rationals on failure.
OrbitScheme build_orbit_scheme(const LeviSpec& l,
                               const std::optional<Weight>& base = std::nullopt,
                               unsigned seed = 0);

bool gr_membership(const OrbitScheme& scheme, const MultiPoly& monomial);

enum class FlatnessVerdict { Flat, NotFlat, Undetermined };

struct FlatnessReport {
    LeviSpec levi;
    long generic_dim = 0;                    // |W| / |W_L|
    std::optional<long> special_dim;         // external input
    std::vector<MultiPoly> witness_monomials;
    FlatnessVerdict verdict = FlatnessVerdict::Undetermined;
    std::string reason;
};

std::string to_string(FlatnessVerdict v);

// Weak flatness check. Structural cases: type A and all-GL Levis in type C
// are flat; a type-C Levi with nontrivial sp tail and at least one GL block
// is not flat, witnessed by x_1...x_{c1+1} in gr I' (c1 = sum of GL blocks).
// Otherwise the verdict compares generic_dim with special_dim when provided.
FlatnessReport flatness_check(const LeviSpec& l,
                              std::optional<long> special_dim = std::nullopt,
                              unsigned seed = 0);

struct HikitaFailureReport {
    bool grade_mismatch = false;
    bool socle_mismatch = false;
    long quotient_dim = 0;
    long betti_sum = 0;
    std::vector<long> hilbert;
    std::vector<long> betti;
    long socle_dim = 0;
};

// Compares the Hilbert function of C[h]/gr I' with Springer-fiber Betti
// numbers, and the socle dimension with the top Betti number. Either mismatch
// certifies failure of the graded-algebra isomorphism.
HikitaFailureReport hikita_failure_certificate(const LeviSpec& l,
                                               const std::vector<long>& betti,
                                               unsigned seed = 0);

}  // namespace liedual
