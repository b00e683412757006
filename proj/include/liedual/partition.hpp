#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liedual/root_data.hpp"

namespace liedual {

// Weakly decreasing positive parts. Stored sorted descending.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;
    bool empty() const { return parts.empty(); }
    int multiplicity(int value) const;
    std::vector<int> distinct_values() const;  // descending

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& other) const { return parts < other.parts; }
    std::string str() const;  // "3,3,1"
};

Partition parse_partition(const std::string& s);

// Dominance order on partitions of equal size.
bool dominates(const Partition& a, const Partition& b);

Partition transpose(const Partition& p);

// Membership in P(n) / P_B(2n+1) / P_C(2n) / P_D(2n): size and multiplicity
// tests per family. Size mismatch yields false, not an error.
bool is_orbit_partition(const Partition& p, const LieType& t);
bool is_orbit_partition_family(const Partition& p, LieFamily f);

// Largest partition of the family dominated by p (size parity must match).
Partition collapse(const Partition& p, LieFamily f);

enum class VeryEvenFlag { I, II };

struct OrbitLabel {
    Partition partition;
    LieType ambient;
    std::optional<VeryEvenFlag> very_even;

    OrbitLabel(Partition p, LieType t,
               std::optional<VeryEvenFlag> flag = std::nullopt);
    std::string str() const;
};

// Barbasch-Vogan-Lusztig-Spaltenstein duality on partitions.
//   A -> A : transpose
//   C(2n) -> B(2n+1) : append a part 1, transpose, B-collapse
//   B(2n+1) -> C(2n) : transpose, remove one box from the smallest part,
//                      C-collapse
//   D -> D : transpose, D-collapse
OrbitLabel bvls_dual(const OrbitLabel& o);

// Partition of the saturation of the regular nilpotent orbit of the Levi:
// each GL block a contributes {a, a}, the tail its regular partition, padded
// with 1s; ambient collapse applied as normalization.
OrbitLabel sat_regular_levi(const LeviSpec& l);

// Partition of Ind_L^G{0} = bvls_dual(sat_regular_levi(dual Levi)).
OrbitLabel induced_from_zero(const LeviSpec& l);

// Shape criteria for trivial component-group action on Springer fiber
// cohomology:
//   C: at most one even value; odd multiplicity if present
//   B: exactly one odd value
//   D: at most two distinct odd values; odd multiplicities if exactly two
//   A: always true
bool a_group_trivial(const Partition& p, LieFamily f);

enum class TriState { Yes, No, NotApplicable };

// Shape families for which the dual orbit is an honest orbit with normal
// closure. NotApplicable when a_group_trivial fails.
TriState normal_orbit_image(const Partition& p, LieFamily f);

// Necessary shape for surjectivity of H*(flag) -> H*(Springer fiber).
bool surjectivity_necessary(const Partition& p, LieFamily f);

// Betti numbers of the Springer fiber for the partition (2k+1, 2k+1, 1):
// d_i = C(2k+1, i) + C(2k+1, i-2) for 0 <= 2i <= 2k+3.
std::vector<long> kim_betti(int k);

// Dimension of the nilpotent orbit with Jordan type p. Types B/D use the
// orthogonal formula, C the symplectic one, A the gl one.
long orbit_dimension(const Partition& p, const LieType& t);

// dim g for the matrix realization carrying the partitions: gl(n) in type A,
// so/sp of the standard representation otherwise.
long ambient_dimension(const LieType& t);
long levi_dimension(const LeviSpec& l);

// All orbit partitions of the given size in the family, ascending lex.
std::vector<Partition> enumerate_orbit_partitions(int size, LieFamily f);

}  // namespace liedual
