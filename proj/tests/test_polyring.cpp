#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liedual/multipoly.hpp"

using namespace liedual;

namespace {

MultiPoly X(int n, int i) { return MultiPoly::variable(n, i); }

std::vector<Rat> random_point(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::vector<Rat> p(n);
    for (auto& c : p) c = rat(num(rng), 1 + (num(rng) + 6) % 3);
    return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
    int n = 2;
    MultiPoly f = (X(n, 0) + X(n, 1)) * (X(n, 0) - X(n, 1));
    CHECK(f == X(n, 0) * X(n, 0) - X(n, 1) * X(n, 1));
    CHECK(f.degree() == 2);
    CHECK((f - f).is_zero());
    CHECK(parse_poly("x1^2 - x2^2", n) == f);
    CHECK(parse_poly("(x1+x2)(x1-x2)", n) == f);
    CHECK(parse_poly("3/2 x1 - 1/2 x1 - x1", n).is_zero());
    CHECK(parse_poly("h^2", n).involves_hbar());
}

TEST_CASE("grevlex order pins x1 > ... > xn > h") {
    int n = 3;
    CHECK(grevlex_less(X(n, 1).leading_monomial(), X(n, 0).leading_monomial()));
    CHECK(grevlex_less(MultiPoly::hbar(n).leading_monomial(),
                       X(n, 2).leading_monomial()));
    // degree dominates
    CHECK(grevlex_less(X(n, 0).leading_monomial(),
                       (X(n, 2) * X(n, 2)).leading_monomial()));
    // x1*x3 vs x2^2: last differing exponent decides
    Monomial a = (X(n, 0) * X(n, 2)).leading_monomial();
    Monomial b = (X(n, 1) * X(n, 1)).leading_monomial();
    CHECK(grevlex_less(a, b));
}

TEST_CASE("substitution golden examples") {
    int n = 2;
    // substitute x -> (a, b, b, b) into x1 - x2 gives a - b
    MultiPoly f = parse_poly("x1 - x2", 4);
    std::vector<MultiPoly> images = {X(n, 0), X(n, 1), X(n, 1), X(n, 1)};
    CHECK(f.substitute(images) == X(n, 0) - X(n, 1));

    // substitute x -> la + 2h rho_l with rho_l = (0,1,0,-1), la = (a,b,b,b)
    // into x2 - x3 gives 2h
    MultiPoly g = parse_poly("x2 - x3", 4);
    MultiPoly h2 = MultiPoly::hbar(n);
    std::vector<MultiPoly> shifted = {X(n, 0), X(n, 1) + h2 * rat(2), X(n, 1),
                                      X(n, 1) - h2 * rat(2)};
    CHECK(g.substitute(shifted) == h2 * rat(2));
}

TEST_CASE("plain weyl action on polynomials") {
    int n = 3;
    WeylElement swap12({1, 0, 2}, {1, 1, 1});
    CHECK(weyl_act_poly(swap12, X(n, 0)) == X(n, 1));

    WeylElement flip1(3);
    flip1.signs[0] = -1;
    CHECK(weyl_act_poly(flip1, X(n, 0) * X(n, 0)) == X(n, 0) * X(n, 0));
    CHECK(weyl_act_poly(flip1, X(n, 0)) == -X(n, 0));

    // cycle 1 -> 2 -> 3 -> 1: x1 + 2 x2 -> x2 + 2 x3
    WeylElement cyc({1, 2, 0}, {1, 1, 1});
    CHECK(weyl_act_poly(cyc, X(n, 0) + X(n, 1) * rat(2)) ==
          X(n, 1) + X(n, 2) * rat(2));
}

TEST_CASE("action identity (w.f)(v) = f(w^-1 v) on random data") {
    std::mt19937 rng(17);
    WeylGroup W(LieType(LieFamily::C, 3));
    std::uniform_int_distribution<std::size_t> pick(0, W.size() - 1);
    MultiPoly f = parse_poly("x1^2 x3 - 2 x2 + 5 x1 x2 x3 + 7", 3);
    for (int trial = 0; trial < 30; ++trial) {
        WeylElement w = W.elements()[pick(rng)];
        std::vector<Rat> v = random_point(3, rng);
        Weight vw(v.begin(), v.end());
        Weight moved = act_on_weight(w.inverse(), vw);
        std::vector<Rat> moved_v(moved.begin(), moved.end());
        CHECK(weyl_act_poly(w, f).evaluate(v) == f.evaluate(moved_v));
    }
}

TEST_CASE("plain action is a group action on polynomials") {
    std::mt19937 rng(23);
    WeylGroup W(LieType(LieFamily::B, 3));
    std::uniform_int_distribution<std::size_t> pick(0, W.size() - 1);
    MultiPoly f = parse_poly("x1 x2 - 3 x3^2 + h x1", 3);
    for (int trial = 0; trial < 25; ++trial) {
        WeylElement u = W.elements()[pick(rng)];
        WeylElement v = W.elements()[pick(rng)];
        CHECK(weyl_act_poly(u * v, f) == weyl_act_poly(u, weyl_act_poly(v, f)));
    }
}

TEST_CASE("rho-shifted action") {
    LieType a2(LieFamily::A, 2);
    WeylElement swap12({1, 0}, {1, 1});
    // (w.s)(la, h) = s(w^{-1}(la + h rho) - h rho, h) with rho = (1/2,-1/2):
    // x1 -> x2 - h
    MultiPoly f = X(2, 0);
    MultiPoly expect = X(2, 1) - MultiPoly::hbar(2);
    CHECK(rho_shifted_act(swap12, f, a2) == expect);

    // identity acts trivially
    CHECK(rho_shifted_act(WeylElement(2), f, a2) == f);

    // at h = 0 the action degenerates to the plain one
    LieType c3(LieFamily::C, 3);
    WeylGroup W(c3);
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, W.size() - 1);
    MultiPoly g = parse_poly("x1^2 - x2 x3 + 4 x3", 3);
    std::vector<MultiPoly> kill_h = {X(3, 0), X(3, 1), X(3, 2)};
    MultiPoly zero_h = MultiPoly::zero(3);
    for (int trial = 0; trial < 10; ++trial) {
        WeylElement w = W.elements()[pick(rng)];
        MultiPoly shifted = rho_shifted_act(w, g, c3);
        CHECK(shifted.substitute(kill_h, &zero_h) ==
              weyl_act_poly(w, g).substitute(kill_h, &zero_h));
    }
}

TEST_CASE("rho-shifted action composes") {
    std::mt19937 rng(29);
    for (LieType t : {LieType(LieFamily::B, 3), LieType(LieFamily::A, 4),
                      LieType(LieFamily::D, 3)}) {
        WeylGroup W(t);
        std::uniform_int_distribution<std::size_t> pick(0, W.size() - 1);
        MultiPoly f = parse_poly("x1 x2 + x2^2 - x3", t.rank);
        for (int trial = 0; trial < 15; ++trial) {
            WeylElement u = W.elements()[pick(rng)];
            WeylElement v = W.elements()[pick(rng)];
            CHECK(rho_shifted_act(u * v, f, t) ==
                  rho_shifted_act(u, rho_shifted_act(v, f, t), t));
        }
    }
}

TEST_CASE("invariant generators per Levi") {
    {
        auto gens = invariant_generators(parse_levi("C3:gl3"));
        REQUIRE(gens.size() == 3);
        CHECK(gens[0] == parse_poly("x1 + x2 + x3", 3));
        CHECK(gens[1] == parse_poly("x1 x2 + x1 x3 + x2 x3", 3));
        CHECK(gens[2] == parse_poly("x1 x2 x3", 3));
    }
    {
        auto gens = invariant_generators(parse_levi("C3:gl1,gl1|sp1"));
        REQUIRE(gens.size() == 3);
        CHECK(gens[0] == parse_poly("x1", 3));
        CHECK(gens[1] == parse_poly("x2", 3));
        CHECK(gens[2] == parse_poly("x3^2", 3));
    }
    {
        auto gens = invariant_generators(parse_levi("B4:gl2|so2"));
        REQUIRE(gens.size() == 4);
        CHECK(gens[0] == parse_poly("x1 + x2", 4));
        CHECK(gens[1] == parse_poly("x1 x2", 4));
        CHECK(gens[2] == parse_poly("x3^2 + x4^2", 4));
        CHECK(gens[3] == parse_poly("x3^2 x4^2", 4));
    }
}

TEST_CASE("invariant generators are W_L-fixed (rank <= 5 spot sweep)") {
    for (const char* spec : {"C3:gl3", "C3:gl2|sp1", "B4:gl2|so2", "D4:gl1|so3",
                             "A5:gl2,gl3", "C5:gl2,gl1|sp2", "D5:gl2|so3"}) {
        LeviSpec l = parse_levi(spec);
        auto gens = invariant_generators(l);
        for (const auto& g : levi_generators(l))
            for (const auto& f : gens) CHECK(weyl_act_poly(g, f) == f);
    }
}

TEST_CASE("full W-invariants are fixed points") {
    WeylGroup W(LieType(LieFamily::C, 3));
    MultiPoly e1sq = parse_poly("x1^2 + x2^2 + x3^2", 3);
    for (const auto& w : W.elements()) CHECK(weyl_act_poly(w, e1sq) == e1sq);
}

TEST_CASE("polynomial printing") {
    MultiPoly f = parse_poly("x1^2 - 2 x2 + 1/2 h", 2);
    CHECK(f.str() == "x1^2 - 2*x2 + 1/2*h");
    CHECK(parse_poly(f.str(), 2) == f);
    CHECK(MultiPoly::zero(2).str() == "0");
}
