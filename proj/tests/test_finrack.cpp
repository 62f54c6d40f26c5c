#include "doctest.h"
#include "tetra/finrack.hpp"

using namespace tetra;

namespace {

// Discrete category on a finite set.
FinCat discrete(long n) {
    FinCat c;
    c.n_obj = c.n_mor = n;
    c.src.resize(n);
    c.tgt.resize(n);
    c.id.resize(n);
    for (long i = 0; i < n; ++i) c.src[i] = c.tgt[i] = c.id[i] = i;
    c.comp.assign(n, std::vector<long>(n, -1));
    for (long i = 0; i < n; ++i) c.comp[i][i] = i;
    return c;
}

CrossedModule z2_z3_module() {
    CrossedModule cm;
    cm.g = cyclic_group(2);
    cm.h = cyclic_group(3);
    cm.boundary.assign(3, 0);  // trivial boundary
    cm.action.assign(2, std::vector<long>(3));
    for (long h = 0; h < 3; ++h) {
        cm.action[0][h] = h;
        cm.action[1][h] = (3 - h) % 3;  // inversion
    }
    return cm;
}

}  // namespace

TEST_CASE("finite category validation") {
    FinCat one = discrete(1);
    CHECK(check_fincat(one).pass());
    FinCat bad = one;
    bad.comp[0][0] = -1;
    CHECK_FALSE(check_fincat(bad).pass());
}

TEST_CASE("one-object trivial structure is a semistrict 2-rack") {
    FinCat one = discrete(1);
    FinBifunctor lhd{{{0}}, {{0}}};
    Report rep = check_semistrict_2rack(one, lhd, identity_distributor(one, lhd), lhd);
    CHECK(rep.pass());
    CHECK(check_strict_2rack(one, lhd).pass());
}

TEST_CASE("conjugation rack of a nonabelian group, discrete category") {
    FinGroup s3 = symmetric_group_3();
    REQUIRE(check_group(s3).pass());
    FinCat cat = discrete(6);
    FinBifunctor lhd;
    lhd.obj.assign(6, std::vector<long>(6));
    for (long a = 0; a < 6; ++a)
        for (long b = 0; b < 6; ++b) lhd.obj[a][b] = s3.mul[s3.mul[s3.inv[b]][a]][b];
    lhd.mor = lhd.obj;
    Report rep = check_strict_2rack(cat, lhd);
    CHECK(rep.pass());

    SUBCASE("breaking one cell is detected") {
        FinBifunctor broken = lhd;
        broken.obj[1][2] = (broken.obj[1][2] + 1) % 6;
        broken.mor = broken.obj;
        Report bad = check_strict_2rack(cat, broken);
        CHECK_FALSE(bad.pass());
    }
}

TEST_CASE("crossed module validation") {
    CrossedModule cm = z2_z3_module();
    CHECK(check_crossed_module(cm).pass());

    SUBCASE("non-homomorphic action is rejected") {
        CrossedModule bad = cm;
        for (long h = 0; h < 3; ++h) bad.action[1][h] = (h + 1) % 3;  // a shift, not an automorphism
        Report rep = check_crossed_module(bad);
        CHECK_FALSE(rep.flag("action"));
    }
    SUBCASE("trivial H gives a discrete 2-group") {
        CrossedModule tiny;
        tiny.g = cyclic_group(3);
        tiny.h = cyclic_group(1);
        tiny.boundary = {0};
        tiny.action.assign(3, {0});
        Strict2Group g2 = two_group_from_crossed_module(tiny);
        CHECK(g2.cat.n_mor == 3);
        CHECK(check_strict_2group(g2).pass());
    }
    SUBCASE("trivial G forces an abelian H, which Z/3 is") {
        CrossedModule tiny;
        tiny.g = cyclic_group(1);
        tiny.h = cyclic_group(3);
        tiny.boundary.assign(3, 0);
        tiny.action.assign(1, {0, 1, 2});
        Strict2Group g2 = two_group_from_crossed_module(tiny);
        CHECK(g2.cat.n_obj == 1);
        CHECK(g2.cat.n_mor == 3);
        CHECK(check_strict_2group(g2).pass());
    }
}

TEST_CASE("the six-morphism 2-group from the Z/2-Z/3 module") {
    Strict2Group g2 = two_group_from_crossed_module(z2_z3_module());
    CHECK(g2.cat.n_obj == 2);
    CHECK(g2.cat.n_mor == 6);
    Report rep = check_strict_2group(g2);
    CHECK(rep.pass());
    CHECK(rep.flag("inverse_whisker"));
}

TEST_CASE("conjugation 2-rack from a 2-group acting on itself") {
    Strict2Group g2 = two_group_from_crossed_module(z2_z3_module());
    ConjugationRack rack = conjugation_rack(g2, g2.cat, left_translation_action(g2));
    CHECK(check_fincat(rack.cat).pass());
    Report rep = check_strict_2rack(rack.cat, rack.lhd);
    CHECK(rep.pass());

    SUBCASE("object-level rack matches the semidirect conjugation oracle") {
        long nx = g2.cat.n_obj;
        for (long g = 0; g < g2.cat.n_obj; ++g)
            for (long x = 0; x < nx; ++x)
                for (long h = 0; h < g2.cat.n_obj; ++h)
                    for (long y = 0; y < nx; ++y) {
                        long got = rack.lhd.obj[g * nx + x][h * nx + y];
                        long conj = g2.obj_tensor[g2.obj_tensor[h][g]][g2.obj_inverse[h]];
                        CHECK(got == conj * nx + g2.obj_tensor[h][x]);
                    }
    }
    SUBCASE("bad action tables are rejected with the violating pair") {
        ActionTables f = left_translation_action(g2);
        f.obj[1][1] = (f.obj[1][1] + 1) % g2.cat.n_obj;
        CHECK_THROWS_AS(conjugation_rack(g2, g2.cat, f), InputError);
    }
}

TEST_CASE("projection rack from the trivial 2-group") {
    CrossedModule tiny;
    tiny.g = cyclic_group(1);
    tiny.h = cyclic_group(1);
    tiny.boundary = {0};
    tiny.action = {{0}};
    Strict2Group g2 = two_group_from_crossed_module(tiny);
    FinCat x = discrete(3);
    ActionTables f;
    f.obj.assign(1, {0, 1, 2});
    f.mor.assign(1, {0, 1, 2});
    ConjugationRack rack = conjugation_rack(g2, x, f);
    // (g,x) ◁ (h,y) = (g, x): the projection rack
    for (long a = 0; a < 3; ++a)
        for (long b = 0; b < 3; ++b) CHECK(rack.lhd.obj[a][b] == a);
    CHECK(check_strict_2rack(rack.cat, rack.lhd).pass());
}
