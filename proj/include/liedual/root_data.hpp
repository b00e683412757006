#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liedual/rational.hpp"

namespace liedual {

enum class LieFamily : char { A = 'A', B = 'B', C = 'C', D = 'D' };

LieFamily family_from_char(char c);

// Langlands dual family: B <-> C, A and D self-dual.
LieFamily dual_family(LieFamily f);

// Classical type given by family and rank n = number of epsilon-coordinates.
// Convention: A of rank n has Weyl group S_n (n coordinates, group SL_n).
struct LieType {
    LieFamily family;
    int rank;

    LieType(LieFamily f, int n);

    // Dimension of the standard representation carrying orbit partitions:
    // n (A), 2n+1 (B), 2n (C/D).
    int partition_size() const;

    LieType langlands_dual() const;

    bool operator==(const LieType&) const = default;
    std::string str() const;
};

LieType parse_lie_type(const std::string& s);  // "C3", "B4", ...

unsigned long weyl_order(const LieType& t);

using Weight = std::vector<Rat>;

// Signed permutation. perm is 0-based: position i holds image perm[i] of i.
// Point action: (w.v)[i] = signs[i] * v[perm^{-1}(i)].
struct WeylElement {
    std::vector<int> perm;
    std::vector<int> signs;  // +1/-1 per position

    WeylElement() = default;      // rank-0 placeholder
    explicit WeylElement(int n);  // identity
    WeylElement(std::vector<int> p, std::vector<int> s);

    int rank() const { return static_cast<int>(perm.size()); }
    bool is_identity() const;

    WeylElement inverse() const;
    // Composition acting on the left: (u*v).x = u.(v.x).
    WeylElement operator*(const WeylElement& other) const;

    bool operator==(const WeylElement&) const = default;
    bool operator<(const WeylElement& other) const;  // lex on signed one-line

    // Signed one-line notation, e.g. [2,-1,3].
    std::string one_line() const;
};

Weight act_on_weight(const WeylElement& w, const Weight& v);

// Levi of a classical group: GL blocks on leading coordinates, classical tail
// of the ambient family on the trailing ones. In type A the tail is always 0.
struct LeviSpec {
    LieType ambient;
    std::vector<int> gl_blocks;
    int tail = 0;

    LeviSpec() : ambient(LieFamily::A, 1), gl_blocks{1} {}  // placeholder
    LeviSpec(LieType amb, std::vector<int> blocks, int tail_rank);

    int num_blocks() const { return static_cast<int>(gl_blocks.size()); }
    // Dimension of the character space X(l): #blocks, minus 1 in type A.
    int character_dim() const;
    unsigned long weyl_order() const;

    // [begin, end) coordinate range of block b; tail occupies the rest.
    std::pair<int, int> block_range(int b) const;
    int tail_begin() const;

    bool is_full_torus() const;
    bool operator==(const LeviSpec&) const = default;
    std::string str() const;  // "C3:gl2|sp1" syntax
};

// "C3:gl3", "C3:gl1,gl1|sp1", "B4:gl2|so2", "A4:torus"
LeviSpec parse_levi(const std::string& s);
// Parses only the part after ':' against a given ambient ("gl2|sp1", "torus").
LeviSpec parse_levi_body(const LieType& ambient, const std::string& body);

std::vector<Weight> roots(const LieType& t);
std::vector<Weight> positive_roots(const LieType& t);
std::vector<Weight> coroots(const LieType& t);  // aligned with roots()
Weight coroot_of(const Weight& root);
Rat pairing(const Weight& v, const Weight& coroot);

Weight rho(const LieType& t);
Weight rho_levi(const LeviSpec& l);

// Roots of the Levi subalgebra, in ambient coordinates.
std::vector<Weight> levi_roots(const LeviSpec& l);

bool is_p_antidominant(const Weight& v, const LeviSpec& p);
bool is_l_regular(const Weight& v, const LeviSpec& p);
bool is_integral(const Weight& v, const LieType& t);

// Full Weyl group, enumerated deterministically (lex on signed one-line).
class WeylGroup {
  public:
    explicit WeylGroup(const LieType& t);

    const LieType& type() const { return type_; }
    const std::vector<WeylElement>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    // Coxeter length = number of positive roots sent to negative ones.
    int length(const WeylElement& w) const;
    std::size_t index_of(const WeylElement& w) const;

  private:
    LieType type_;
    std::vector<WeylElement> elements_;
    std::vector<int> lengths_;
};

// Simple-reflection generators of W_L (adjacent transpositions per block,
// tail generators of the ambient family).
std::vector<WeylElement> levi_generators(const LeviSpec& l);
bool levi_contains(const LeviSpec& l, const WeylElement& w);

enum class CosetKind { LeftQuotient, RightQuotient, DoubleCoset };
// LeftQuotient  = W_M \ W  (cosets W_M w)
// RightQuotient = W / W_L  (cosets w W_L)

struct CosetLabel {
    WeylElement rep;
    CosetKind kind;
};

enum class RepChoice { Shortest, Longest };

// One representative per coset of the given kind; reps minimize
// (resp. maximize) Coxeter length in their coset. Sorted lexicographically.
std::vector<WeylElement> coset_reps(const WeylGroup& W, const LeviSpec& sub,
                                    CosetKind kind, RepChoice choice);

struct DoubleCoset {
    WeylElement min_rep;           // unique minimal-length element
    std::size_t size = 0;
    bool free = false;             // size == |W_M| * |W_L|
};

// All (W_M, W_L) double cosets, sorted by min_rep.
std::vector<DoubleCoset> double_cosets(const WeylGroup& W, const LeviSpec& m,
                                       const LeviSpec& l);

// Canonical labels of the free double cosets: minimal-length representatives,
// lexicographic order.
std::vector<WeylElement> free_double_cosets(const WeylGroup& W,
                                            const LeviSpec& m,
                                            const LeviSpec& l);

// The three descriptions of Appendix-E type free-coset counting; used as a
// cross-check oracle.
struct FreeCosetCensus {
    std::size_t by_orbit_size;      // double cosets of size |W_M||W_L|
    std::size_t by_sh_lo;           // w shortest in W_M w and longest in w W_L
    std::size_t by_root_condition;  // double cosets with w^{-1}(D_M) cap D_L empty
};
FreeCosetCensus free_coset_census(const WeylGroup& W, const LeviSpec& m,
                                  const LeviSpec& l);

}  // namespace liedual
