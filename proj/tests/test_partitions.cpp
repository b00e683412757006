#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "liedual/partition.hpp"

using namespace liedual;

namespace {

// Enumeration oracle: the collapse is the dominance-largest admissible
// partition below p. Checks existence and uniqueness of the maximum.
Partition collapse_oracle(const Partition& p, LieFamily f) {
    auto all = enumerate_orbit_partitions(p.size(), f);
    std::vector<Partition> below;
    for (const auto& q : all)
        if (dominates(p, q)) below.push_back(q);
    REQUIRE(!below.empty());
    for (const auto& q : below) REQUIRE(q.parts.size() >= 1);
    auto best = below[0];
    for (const auto& q : below)
        if (dominates(q, best)) best = q;
    for (const auto& q : below) REQUIRE(dominates(best, q));
    return best;
}

}  // namespace

TEST_CASE("partition basics and parsing") {
    Partition p({1, 3, 3});
    CHECK(p.parts == std::vector<int>{3, 3, 1});
    CHECK(p.size() == 7);
    CHECK(p.multiplicity(3) == 2);
    CHECK(parse_partition("3,3,1") == p);
    CHECK_THROWS_AS(parse_partition("3,0,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
}

TEST_CASE("orbit partition membership") {
    CHECK(is_orbit_partition(Partition({3, 3, 1}), LieType(LieFamily::B, 3)));
    CHECK(is_orbit_partition(Partition({2, 2, 2}), LieType(LieFamily::C, 3)));
    CHECK_FALSE(is_orbit_partition(Partition({3, 1, 1, 1}), LieType(LieFamily::C, 3)));
    // size mismatch is false, not an error
    CHECK_FALSE(is_orbit_partition(Partition({2, 2}), LieType(LieFamily::C, 3)));
}

TEST_CASE("transpose") {
    CHECK(transpose(Partition({3, 3, 1})) == Partition({3, 2, 2}));
    CHECK(transpose(Partition({4, 2, 2, 1})) == Partition({4, 3, 1, 1}));
    CHECK(transpose(Partition({5})) == Partition({1, 1, 1, 1, 1}));
    for (const auto& p : enumerate_orbit_partitions(8, LieFamily::A))
        CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("collapse golden values") {
    CHECK(collapse(Partition({3, 2, 1}), LieFamily::C) == Partition({2, 2, 2}));
    CHECK(collapse(Partition({4, 3, 1, 1}), LieFamily::B) ==
          Partition({3, 3, 1, 1, 1}));
    CHECK(collapse(Partition({3, 3, 1}), LieFamily::B) == Partition({3, 3, 1}));
    CHECK_THROWS_AS(collapse(Partition({3, 2, 1}), LieFamily::B),
                    std::invalid_argument);
}

TEST_CASE("collapse against enumeration oracle") {
    for (LieFamily f : {LieFamily::B, LieFamily::C, LieFamily::D}) {
        for (int size : {5, 6, 7, 8, 9, 10}) {
            if (f == LieFamily::B && size % 2 == 0) continue;
            if (f != LieFamily::B && size % 2 == 1) continue;
            for (const auto& p : enumerate_orbit_partitions(size, LieFamily::A)) {
                Partition c = collapse(p, f);
                CHECK(is_orbit_partition_family(c, f));
                CHECK(dominates(p, c));
                CHECK(c == collapse_oracle(p, f));
                // idempotent, fixed exactly on admissible partitions
                CHECK(collapse(c, f) == c);
                if (is_orbit_partition_family(p, f)) CHECK(c == p);
            }
        }
    }
}

TEST_CASE("bvls duality golden triple") {
    OrbitLabel b331(Partition({3, 3, 1}), LieType(LieFamily::B, 3));
    OrbitLabel d1 = bvls_dual(b331);
    CHECK(d1.ambient == LieType(LieFamily::C, 3));
    CHECK(d1.partition == Partition({2, 2, 2}));

    OrbitLabel b322(Partition({3, 2, 2}), LieType(LieFamily::B, 3));
    OrbitLabel d2 = bvls_dual(b322);
    CHECK(d2.ambient == LieType(LieFamily::C, 3));
    CHECK(d2.partition == Partition({3, 3}));

    OrbitLabel c422(Partition({4, 2, 2}), LieType(LieFamily::C, 4));
    OrbitLabel d3 = bvls_dual(c422);
    CHECK(d3.ambient == LieType(LieFamily::B, 4));
    CHECK(d3.partition == Partition({3, 3, 1, 1, 1}));

    // involution on the golden vectors
    CHECK(bvls_dual(d1).partition == b331.partition);
    CHECK(bvls_dual(d2).partition == b322.partition);
    CHECK(bvls_dual(d3).partition == c422.partition);
}

TEST_CASE("bvls duality in type A is transpose") {
    for (const auto& p : enumerate_orbit_partitions(6, LieFamily::A)) {
        OrbitLabel o(p, LieType(LieFamily::A, 6));
        CHECK(bvls_dual(o).partition == transpose(p));
    }
}

TEST_CASE("saturation of regular-in-Levi orbits") {
    CHECK(sat_regular_levi(parse_levi("B3:gl3")).partition == Partition({3, 3, 1}));
    CHECK(sat_regular_levi(parse_levi("B3:gl2|so1")).partition ==
          Partition({3, 2, 2}));
    CHECK(sat_regular_levi(parse_levi("C4:gl2|sp2")).partition ==
          Partition({4, 2, 2}));
}

TEST_CASE("induced from zero") {
    CHECK(induced_from_zero(parse_levi("C3:gl3")).partition == Partition({2, 2, 2}));
    CHECK(induced_from_zero(parse_levi("C3:gl2|sp1")).partition ==
          Partition({3, 3}));
    CHECK(induced_from_zero(parse_levi("B4:gl2|so2")).partition ==
          Partition({3, 3, 1, 1, 1}));
}

TEST_CASE("sat_regular_levi injectivity sweep (collisions logged only)") {
    for (LieFamily fam : {LieFamily::B, LieFamily::C, LieFamily::D}) {
        for (int n = fam == LieFamily::D ? 2 : 1; n <= 4; ++n) {
            LieType t(fam, n);
            std::map<std::string, std::vector<std::string>> by_partition;
            for (int tail = 0; tail <= n; ++tail) {
                if (fam == LieFamily::D && tail == 1) continue;
                for (const auto& blocks :
                     enumerate_orbit_partitions(n - tail, LieFamily::A)) {
                    LeviSpec l(t, blocks.parts, tail);
                    by_partition[sat_regular_levi(l).partition.str()].push_back(
                        l.str());
                }
                if (tail == n) {
                    LeviSpec l(t, {}, tail);
                    by_partition[sat_regular_levi(l).partition.str()].push_back(
                        l.str());
                }
            }
            for (const auto& [part, levis] : by_partition) {
                if (levis.size() > 1) {
                    MESSAGE("collision at ", part, " from ", levis.size(), " levis");
                }
            }
        }
    }
}

TEST_CASE("component group triviality shapes") {
    CHECK_FALSE(a_group_trivial(Partition({3, 3, 1}), LieFamily::B));
    CHECK_FALSE(a_group_trivial(Partition({4, 2, 2}), LieFamily::C));
    CHECK(a_group_trivial(Partition({3, 3, 2}), LieFamily::C));
    CHECK(a_group_trivial(Partition({2, 2, 2}), LieFamily::C));
    CHECK(a_group_trivial(Partition({7}), LieFamily::B));
    // two distinct odd values need odd multiplicities in type D
    CHECK(a_group_trivial(Partition({5, 1, 1, 1}), LieFamily::D));
    CHECK_FALSE(a_group_trivial(Partition({3, 3, 1, 1}), LieFamily::D));
    CHECK(a_group_trivial(Partition({3, 3}), LieFamily::D));
}

TEST_CASE("normal closure shape families") {
    CHECK(normal_orbit_image(Partition({4, 3, 3}), LieFamily::C) == TriState::Yes);
    CHECK(normal_orbit_image(Partition({3, 2, 2}), LieFamily::B) == TriState::Yes);
    CHECK(normal_orbit_image(Partition({3, 3, 2}), LieFamily::C) == TriState::Yes);
    // precondition failure reports not-applicable
    CHECK(normal_orbit_image(Partition({3, 3, 1}), LieFamily::B) ==
          TriState::NotApplicable);
    // (3,3,1) in... C-shape with two odd values above the even part
    CHECK(normal_orbit_image(Partition({5, 5, 2}), LieFamily::C) == TriState::No);
}

TEST_CASE("surjectivity necessary shapes") {
    CHECK(surjectivity_necessary(Partition({2, 2, 2}), LieFamily::C));
    CHECK(surjectivity_necessary(Partition({2, 1, 1, 1, 1}), LieFamily::C));
    // matches the theorem's shape with a = 2 (even part 4 of odd multiplicity,
    // odd parts equal to 2a-1)
    CHECK(surjectivity_necessary(Partition({4, 3, 3}), LieFamily::C));
    CHECK_FALSE(surjectivity_necessary(Partition({6, 3, 3}), LieFamily::C));
    CHECK(surjectivity_necessary(Partition({3, 2, 2}), LieFamily::B));
    CHECK(surjectivity_necessary(Partition({7}), LieFamily::B));
    // two distinct odd values rule out the type B shape
    CHECK_FALSE(surjectivity_necessary(Partition({3, 3, 1}), LieFamily::B));
    CHECK_FALSE(surjectivity_necessary(Partition({5, 1, 1}), LieFamily::B));
    CHECK(surjectivity_necessary(Partition({2, 2, 1, 1}), LieFamily::D));
}

TEST_CASE("surjectivity shape implies trivial component group, size <= 12") {
    for (LieFamily f : {LieFamily::B, LieFamily::C, LieFamily::D}) {
        for (int size = f == LieFamily::B ? 3 : 2; size <= 12;
             size += f == LieFamily::B ? 2 : 2) {
            if (f == LieFamily::B && size % 2 == 0) continue;
            for (const auto& p : enumerate_orbit_partitions(size, f)) {
                if (surjectivity_necessary(p, f)) CHECK(a_group_trivial(p, f));
            }
        }
    }
}

TEST_CASE("orbit dimensions: golden values") {
    CHECK(orbit_dimension(Partition({2, 2, 2}), LieType(LieFamily::C, 3)) == 12);
    CHECK(orbit_dimension(Partition({3, 3}), LieType(LieFamily::C, 3)) == 14);
    CHECK(orbit_dimension(Partition({3, 3, 1, 1, 1}), LieType(LieFamily::B, 4)) ==
          22);
    // regular and zero orbits
    CHECK(orbit_dimension(Partition({6}), LieType(LieFamily::C, 3)) == 18);
    CHECK(orbit_dimension(Partition({1, 1, 1, 1, 1, 1}), LieType(LieFamily::C, 3)) ==
          0);
}

TEST_CASE("Richardson dimension oracle for induced-from-zero orbits") {
    // dim Ind_L^G {0} = dim g - dim l: an independent audit of the whole
    // transpose/collapse/padding pipeline behind the duality map
    std::vector<LieType> ambients;
    for (int n = 2; n <= 6; ++n) ambients.emplace_back(LieFamily::A, n);
    for (int n = 1; n <= 5; ++n) ambients.emplace_back(LieFamily::B, n);
    for (int n = 1; n <= 5; ++n) ambients.emplace_back(LieFamily::C, n);
    for (int n = 2; n <= 5; ++n) ambients.emplace_back(LieFamily::D, n);
    for (const auto& t : ambients) {
        for (int tail = 0; tail <= t.rank; ++tail) {
            if (t.family == LieFamily::A && tail > 0) continue;
            if (t.family == LieFamily::D && tail == 1) continue;
            std::vector<std::vector<int>> blockss;
            if (t.rank == tail) blockss.push_back({});
            for (const auto& bp :
                 enumerate_orbit_partitions(t.rank - tail, LieFamily::A))
                blockss.push_back(bp.parts);
            for (const auto& blocks : blockss) {
                LeviSpec l(t, blocks, tail);
                OrbitLabel o = induced_from_zero(l);
                long expected = ambient_dimension(t) - levi_dimension(l);
                CHECK(orbit_dimension(o.partition, t) == expected);
            }
        }
    }
}

TEST_CASE("kim betti closed formula") {
    CHECK(kim_betti(1) == std::vector<long>{1, 3, 4});
    CHECK(kim_betti(0) == std::vector<long>{1, 1});
    CHECK(kim_betti(2) == std::vector<long>{1, 5, 11, 15});
    long sum = 0;
    for (long d : kim_betti(1)) sum += d;
    CHECK(sum == 8);  // |W(C3)| / |S3|
    // total Betti number = fixed point count |W(B_{2k+1})| / |S_{2k+1}|
    for (int k = 0; k <= 8; ++k) {
        long total = 0;
        for (long d : kim_betti(k)) total += d;
        CHECK(total == (1L << (2 * k + 1)));
    }
}

TEST_CASE("very even flag handling") {
    OrbitLabel o(Partition({2, 2}), LieType(LieFamily::D, 2), VeryEvenFlag::I);
    CHECK(bvls_dual(o).partition == Partition({2, 2}));
    CHECK_THROWS_AS(OrbitLabel(Partition({3, 1}), LieType(LieFamily::D, 2),
                               VeryEvenFlag::I),
                    std::invalid_argument);
}
