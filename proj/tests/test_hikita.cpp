#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liedual/hikita.hpp"
#include "liedual/partition.hpp"

using namespace liedual;

namespace {

// the PGL4 instance: full-flag invariance side, GL1 x GL3 deformation side
HikitaInstance pgl4_instance() {
    LieType a4(LieFamily::A, 4);
    return HikitaInstance(a4, parse_levi("A4:torus"), parse_levi("A4:gl1,gl3"));
}

BElement cartan_diff(int n, int i, const std::string& name) {
    return BElement{name, MultiPoly::variable(n, i) - MultiPoly::variable(n, i + 1),
                    MultiPoly::constant(n, rat(1))};
}

std::vector<MultiPoly> expected_vectors(int which) {
    // entries over (la, h): a = la1
    MultiPoly a = MultiPoly::variable(1, 0);
    MultiPoly h = MultiPoly::hbar(1);
    switch (which) {
        case 1: return {a - h * rat(2), -a + h * rat(2), h * rat(2), h * rat(2)};
        case 2: return {h * rat(2), a, -a, h * rat(2)};
        case 3: return {h * rat(2), h * rat(2), a + h * rat(2), -a - h * rat(2)};
    }
    return {};
}

}  // namespace

TEST_CASE("fixed point census of the PGL4 instance") {
    HikitaInstance inst = pgl4_instance();
    auto c = fixed_point_census(inst);
    CHECK(c.count == 4);
    // canonical quantization-side labels in one-line notation
    REQUIRE(c.labels.size() == 4);
    CHECK(c.labels[0].one_line() == "[1,2,3,4]");
    CHECK(c.labels[1].one_line() == "[2,1,3,4]");
    CHECK(c.labels[2].one_line() == "[3,1,2,4]");
    CHECK(c.labels[3].one_line() == "[4,1,2,3]");
}

TEST_CASE("weight vectors of the PGL4 instance, both sides") {
    HikitaInstance inst = pgl4_instance();
    CHECK(inst.param_dim() == 1);
    for (int k = 1; k <= 3; ++k) {
        BElement b = cartan_diff(4, k - 1, "e" + std::to_string(k));
        auto expect = expected_vectors(k);

        WeightVector quant = quant_side(inst, b);
        REQUIRE(quant.entries.size() == 4);
        for (int i = 0; i < 4; ++i) CHECK(quant.entries[i] == expect[i]);

        WeightVector coh = coh_side(inst, b);
        REQUIRE(coh.entries.size() == 4);
        // coh labels are the inverses; same vector after the i-matching
        for (std::size_t i = 0; i < 4; ++i) {
            WeylElement t = coh.labels[i].inverse();
            std::size_t pos = 0;
            while (!(quant.labels[pos] == t)) ++pos;
            CHECK(coh.entries[i] == quant.entries[pos]);
        }
        // the coh labels come out as 1, (12), (123), (1234) and carry the
        // same displayed vector
        for (int i = 0; i < 4; ++i) CHECK(coh.entries[i] == expect[i]);
    }
}

TEST_CASE("diagram check on the PGL4 instance with Cartan generators") {
    HikitaInstance inst = pgl4_instance();
    std::vector<BElement> gens;
    for (int k = 1; k <= 3; ++k)
        gens.push_back(cartan_diff(4, k - 1, "e" + std::to_string(k)));
    DiagramReport r = diagram_check(inst, gens);
    CHECK(r.equal);
    CHECK(r.fixed_points == 4);
    CHECK(r.generators_checked == 3);
}

TEST_CASE("trivial inputs") {
    HikitaInstance inst = pgl4_instance();
    BElement one{"one", MultiPoly::constant(4, rat(1)),
                 MultiPoly::constant(4, rat(1))};
    WeightVector coh = coh_side(inst, one);
    for (const auto& e : coh.entries) CHECK(e == MultiPoly::constant(1, rat(1)));
    WeightVector quant = quant_side(inst, one);
    for (const auto& e : quant.entries) CHECK(e == MultiPoly::constant(1, rat(1)));

    // s = 1, g = x1: quantization side is label-independent
    BElement gx{"gx", MultiPoly::constant(4, rat(1)), MultiPoly::variable(4, 0)};
    WeightVector qv = quant_side(inst, gx);
    for (const auto& e : qv.entries) CHECK(e == qv.entries[0]);
}

TEST_CASE("invariance violations are rejected") {
    LieType c3(LieFamily::C, 3);
    HikitaInstance inst(c3, parse_levi("C3:gl3"), parse_levi("C3:gl2|sp1"));
    BElement bad{"bad", MultiPoly::variable(3, 0), MultiPoly::constant(3, rat(1))};
    CHECK_THROWS_AS(coh_side(inst, bad), std::invalid_argument);
    CHECK_THROWS_AS(quant_side(inst, bad), std::invalid_argument);
}

TEST_CASE("flag fixed restriction") {
    LieType a4(LieFamily::A, 4);
    HikitaInstance inst(a4, parse_levi("A4:gl1,gl3"), parse_levi("A4:torus"));
    // s = x2 + x3 + x4 is W_M-invariant for M = GL1 x GL3
    BElement b{"e1_block",
               parse_poly("x2 + x3 + x4", 4),
               MultiPoly::constant(4, rat(1))};
    WeightVector v = flag_fixed_restriction(inst, b);
    CHECK(v.labels.size() == 4);
    for (std::size_t k = 0; k < v.labels.size(); ++k) {
        // entry at w is x_{w(2)} + x_{w(3)} + x_{w(4)}
        const WeylElement& w = v.labels[k];
        MultiPoly expect = MultiPoly::zero(4);
        for (int j : {1, 2, 3})
            expect = expect + MultiPoly::variable(4, w.perm[j]);
        CHECK(v.entries[k] == expect);
    }
    // W-invariant s restricts to a constant vector
    BElement full{"e1_full", parse_poly("x1 + x2 + x3 + x4", 4),
                  MultiPoly::constant(4, rat(1))};
    WeightVector cv = flag_fixed_restriction(inst, full);
    for (const auto& e : cv.entries) CHECK(e == cv.entries[0]);
}

TEST_CASE("coh side with torus L degenerates to flag restriction") {
    LieType c3(LieFamily::C, 3);
    LeviSpec m = parse_levi("C3:gl3");
    LeviSpec torus = parse_levi("C3:torus");
    HikitaInstance inst(c3, m, torus);
    BElement b{"e2", invariant_generators(m)[1], MultiPoly::constant(3, rat(1))};
    WeightVector coh = coh_side(inst, b);
    WeightVector flag = flag_fixed_restriction(inst, b);
    // with L the torus, rho_l = 0 and the restriction is x_i -> la_i
    REQUIRE(inst.param_dim() == 3);
    std::vector<MultiPoly> la = {MultiPoly::variable(3, 0),
                                 MultiPoly::variable(3, 1),
                                 MultiPoly::variable(3, 2)};
    for (std::size_t k = 0; k < coh.labels.size(); ++k) {
        // match by label
        std::size_t pos = 0;
        while (!(flag.labels[pos] == coh.labels[k])) ++pos;
        CHECK(coh.entries[k] == flag.entries[pos].substitute(la));
    }
}

TEST_CASE("C3 instances: diagram commutes with the default generators") {
    LieType c3(LieFamily::C, 3);
    {
        HikitaInstance inst(c3, parse_levi("C3:gl3"), parse_levi("C3:gl2|sp1"));
        DiagramReport r = diagram_check(inst, inst.default_generators());
        CHECK(r.equal);
        CHECK(r.fixed_points == 1);
    }
    {
        // the two-component pair: 2 x A1, four fixed points in total
        HikitaInstance inst(c3, parse_levi("C3:gl3"),
                            parse_levi("C3:gl1,gl1|sp1"));
        DiagramReport r = diagram_check(inst, inst.default_generators());
        CHECK(r.equal);
        CHECK(r.fixed_points == 4);
    }
}

TEST_CASE("diagram commutes at higher rank (spot checks)") {
    struct Case {
        const char* m;
        const char* l;
    };
    for (Case c : {Case{"B4:gl2|so2", "B4:gl1,gl3"}, Case{"C4:gl4", "C4:gl2|sp2"},
                   Case{"D5:gl2,gl3", "D5:gl5"}, Case{"A5:gl2,gl3", "A5:gl1,gl4"}}) {
        LeviSpec m = parse_levi(c.m);
        LeviSpec l = parse_levi(c.l);
        HikitaInstance inst(m.ambient, m, l);
        DiagramReport r = diagram_check(inst, inst.default_generators());
        CHECK(r.equal);
        CHECK(r.fixed_points == fixed_point_census(inst).count);
    }
}

TEST_CASE("entry hbar-degree stays within total input degree") {
    HikitaInstance inst = pgl4_instance();
    for (const auto& b : inst.default_generators()) {
        int in_deg = std::max(b.s.degree(), 0) + std::max(b.g.degree(), 0);
        for (const auto& e : coh_side(inst, b).entries) {
            for (const auto& [m, c] : e.terms())
                CHECK(m.e[e.nvars()] <= in_deg);
        }
    }
}

TEST_CASE("full W-invariant s gives label-independent vectors on both sides") {
    LieType c3(LieFamily::C, 3);
    HikitaInstance inst(c3, parse_levi("C3:gl3"), parse_levi("C3:gl1,gl1|sp1"));
    // e_1(x^2) is invariant under all of W(C3), not just W_M
    BElement b{"central", parse_poly("x1^2 + x2^2 + x3^2", 3),
               MultiPoly::constant(3, rat(1))};
    for (const auto& v : {coh_side(inst, b), quant_side(inst, b)})
        for (const auto& e : v.entries) CHECK(e == v.entries[0]);
}

TEST_CASE("quant side with s = 1 evaluates g at the shifted point") {
    HikitaInstance inst = pgl4_instance();
    BElement gx{"gx1", MultiPoly::constant(4, rat(1)), MultiPoly::variable(4, 0)};
    WeightVector qv = quant_side(inst, gx);
    // (la + 2h rho_l)_1 with rho_l = (0,1,0,-1): first coordinate is la1
    for (const auto& e : qv.entries) CHECK(e == MultiPoly::variable(1, 0));
    BElement gx2{"gx2", MultiPoly::constant(4, rat(1)), MultiPoly::variable(4, 1)};
    // second coordinate is 0 + 2h
    for (const auto& e : quant_side(inst, gx2).entries)
        CHECK(e == MultiPoly::hbar(1) * rat(2));
}

TEST_CASE("numeric specialization agrees with direct fixed-point evaluation") {
    // an independent numeric route: pick rational (la, h), build the point
    // la + 2h rho_l in coordinates, and evaluate (w.s)g there directly
    for (auto specs : {std::pair<const char*, const char*>{"C3:gl3", "C3:gl2|sp1"},
                       {"B3:gl1|so2", "B3:gl2|so1"},
                       {"D4:gl2|so2", "D4:gl1,gl1|so2"}}) {
        LeviSpec m = parse_levi(specs.first);
        LeviSpec l = parse_levi(specs.second);
        HikitaInstance inst(m.ambient, m, l);
        int n = m.ambient.rank;
        int d = inst.param_dim();
        std::vector<Rat> la_num;
        for (int i = 0; i < d; ++i) la_num.push_back(rat(3 + 2 * i, 7));
        Rat h_num = rat(5, 11);
        // point = la + 2 h rho_l in ambient coordinates
        Weight point(n, rat(0));
        Weight rl = rho_levi(l);
        for (int b = 0; b < l.num_blocks(); ++b) {
            auto [s, e] = l.block_range(b);
            for (int i = s; i < e; ++i)
                if (b < d) point[i] = la_num[b];
        }
        for (int i = 0; i < n; ++i) point[i] += rat(2) * h_num * rl[i];

        std::vector<MultiPoly> la_sub;
        for (int i = 0; i < d; ++i)
            la_sub.push_back(MultiPoly::constant(0, la_num[i]));
        MultiPoly h_sub = MultiPoly::constant(0, h_num);

        for (const auto& b : inst.default_generators()) {
            WeightVector coh = coh_side(inst, b);
            for (std::size_t k = 0; k < coh.labels.size(); ++k) {
                MultiPoly entry = coh.entries[k].substitute(la_sub, &h_sub);
                Rat entry_val = entry.is_zero() ? rat(0) : entry.leading_coeff();
                Weight moved = act_on_weight(coh.labels[k].inverse(), point);
                std::vector<Rat> mv(moved.begin(), moved.end());
                std::vector<Rat> pv(point.begin(), point.end());
                Rat direct = b.s.evaluate(mv) * b.g.evaluate(pv);
                CHECK(entry_val == direct);
            }
        }
    }
}

TEST_CASE("oversized ranks are rejected before enumeration") {
    CHECK_THROWS_AS(WeylGroup(LieType(LieFamily::C, 12)), std::invalid_argument);
    CHECK_THROWS_AS(weyl_order(LieType(LieFamily::B, 40)), std::invalid_argument);
}

TEST_CASE("separating specialization: distinct labels get distinct vectors") {
    // at h = 0 and generic la, some generator separates every label pair
    HikitaInstance inst = pgl4_instance();
    auto gens = inst.default_generators();
    std::size_t npts = inst.quant_labels().size();
    std::vector<MultiPoly> la_val = {MultiPoly::constant(0, rat(7, 3))};
    MultiPoly h0 = MultiPoly::zero(0);
    for (std::size_t i = 0; i < npts; ++i)
        for (std::size_t j = i + 1; j < npts; ++j) {
            bool separated = false;
            for (const auto& b : gens) {
                WeightVector q = quant_side(inst, b);
                if (!(q.entries[i].substitute(la_val, &h0) ==
                      q.entries[j].substitute(la_val, &h0))) {
                    separated = true;
                    break;
                }
            }
            if (!separated)
                MESSAGE("labels ", inst.quant_labels()[i].one_line(), " and ",
                        inst.quant_labels()[j].one_line(),
                        " are not separated at the test point");
            CHECK(separated);
        }
}
