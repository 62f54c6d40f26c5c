#include "doctest.h"
#include "test_util.hpp"
#include "tetra/zte.hpp"

using namespace tetra;

namespace {

Leibniz2Algebra fix_a() {
    TwoVec space(2, 0, Mat(2, 0));
    Mat m(2, 4);
    m.at(1, 0) = 1;  // [x,x] = e, basis (x, e)
    return make_leibniz2(space, make_bilinear(space, m, Mat(0, 0), Mat(0, 0)), Mat(0, 8));
}

Leibniz2Algebra omega_instance() {
    Mat m(3, 9);
    m.at(2, 0) = 1;
    Mat omega(3, 3);
    omega.at(0, 1) = 1;
    omega.at(1, 0) = -1;
    return example_omega(m, col_vec({0, 0, 1}), omega).algebra;
}

Leibniz2Algebra free_l3_instance() {
    TwoVec v = make_two_vec(Mat(2, 1));
    std::mt19937_64 rng(101);
    return make_leibniz2(v, zero_bilinear(v), random_mat(rng, 1, 8));
}

}  // namespace

TEST_CASE("zero bracket gives the swap solution") {
    TwoVec v = make_two_vec(Mat(2, 1));
    Leibniz2Algebra l = make_leibniz2(v, zero_bilinear(v), Mat(1, 8));
    Mat e(2, 1);
    e.at(0, 0) = 1;
    ZteSolution sol = from_central_leibniz(l, e);
    ChainMap tau = swap_chain_map(v, 1, 2);
    CHECK(sol.b.f0 == tau.f0);
    CHECK(sol.b.fw == tau.fw);
    CHECK(sol.y.is_zero());
    Report rep = verify_zte(sol);
    CHECK(rep.pass());
}

TEST_CASE("braiding matrix on the two-dimensional flat instance") {
    ZteSolution sol = from_central_leibniz(fix_a(), col_vec({0, 1}));
    // frozen expansions of B(x⊗x) = x⊗x + e⊗e, B(x⊗e) = e⊗x, B(e⊗x) = x⊗e,
    // B(e⊗e) = e⊗e, basis order (x, e)
    Mat expect(4, 4);
    expect.at(0, 0) = 1;
    expect.at(3, 0) = 1;
    expect.at(2, 1) = 1;
    expect.at(1, 2) = 1;
    expect.at(3, 3) = 1;
    CHECK(sol.b.f0 == expect);
    CHECK(verify_zte(sol).pass());
}

TEST_CASE("triple composite matches the direct expansion") {
    // (B⊗Id)(Id⊗B)(B⊗Id)(x⊗y⊗z)
    //   = z⊗y⊗x + e⊗[y,z]⊗x + e⊗y⊗[x,z] + z⊗e⊗[x,y] + e⊗e⊗[[x,y],z]
    Leibniz2Algebra l = omega_instance();
    Mat e = col_vec({0, 0, 1});
    ZteSolution sol = from_central_leibniz(l, e);
    long u = 3;
    const Mat& m = l.bracket.m_uu;
    Mat iu = Mat::identity(u);
    std::vector<long> d3{u, u, u};
    Mat expect = tensor_perm(d3, {2, 1, 0}) + kron(e, kron(m, iu)) * tensor_perm(d3, {1, 2, 0}) +
                 kron(e, kron(iu, m)) * tensor_perm(d3, {1, 0, 2}) +
                 kron(iu, kron(e, m)) * tensor_perm(d3, {2, 0, 1}) +
                 kron(e, kron(e, m * kron(m, iu)));
    CHECK(triple_word_lhs(sol).f0 == expect);
}

TEST_CASE("solutions from richer structures verify") {
    SUBCASE("omega instance, arrow dimension one") {
        ZteSolution sol = from_central_leibniz(omega_instance(), col_vec({0, 0, 1}));
        CHECK(verify_zte(sol).pass());
    }
    SUBCASE("central extension with nonzero differential") {
        auto ext = trivial_central_extension(omega_instance());
        ZteSolution sol = from_central_leibniz(ext.algebra, ext.central.e);
        CHECK(verify_zte(sol).pass());
    }
    SUBCASE("free Jacobiator arrow") {
        auto ext = trivial_central_extension(free_l3_instance());
        ZteSolution sol = from_central_leibniz(ext.algebra, ext.central.e);
        CHECK_FALSE(sol.y.is_zero());
        CHECK(verify_zte(sol).pass());
    }
}

TEST_CASE("rack-induced solutions") {
    SUBCASE("trivial rack gives the swap") {
        TwoVec v(2, 0, Mat(2, 0));
        Mat d0(4, 2);
        d0.at(0, 0) = 1;
        d0.at(3, 1) = 1;
        Mat eps(1, 2);
        eps.at(0, 0) = eps.at(0, 1) = 1;
        BilinearOp op = make_bilinear(v, kron(Mat::identity(2), eps), Mat(0, 0), Mat(0, 0));
        Linear2Rack rk = make_linear_2rack(v, Coproduct{d0, Mat(0, 0)}, eps, op, op, Mat(0, 8));
        ZteSolution sol = from_linear_2rack(rk);
        CHECK(sol.b.f0 == commutation(2, 2));
        CHECK(verify_zte(sol).pass());
    }
    SUBCASE("extension rack verifies and matches the algebra-induced solution") {
        for (const Leibniz2Algebra& l : {omega_instance(), free_l3_instance()}) {
            auto ext = trivial_central_extension(l);
            ZteSolution from_algebra = from_central_leibniz(ext.algebra, ext.central.e);
            ZteSolution from_rack = from_linear_2rack(rack_from_trivial_extension(l));
            CHECK(from_rack.b.f0 == from_algebra.b.f0);
            CHECK(from_rack.b.fw == from_algebra.b.fw);
            CHECK(from_rack.b_inv.f0 == from_algebra.b_inv.f0);
            CHECK(from_rack.b_inv.fw == from_algebra.b_inv.fw);
            CHECK(from_rack.y == from_algebra.y);
            CHECK(verify_zte(from_rack).pass());
        }
    }
}

TEST_CASE("perturbing the braiding isomorphism flips z5 for most entries") {
    // needs a nonzero bracket: over the swap braiding the two whisker sums
    // agree for every choice of y
    auto ext = trivial_central_extension(omega_instance());
    ZteSolution sol = from_central_leibniz(ext.algebra, ext.central.e);
    REQUIRE(verify_zte(sol).pass());
    int flipped = 0, total = 0;
    for (long c = 0; c < sol.y.cols(); c += 17) {
        ZteSolution m = sol;
        m.y.at(m.y.rows() - 1, c) += 1;
        Report rep = verify_zte(m);
        flipped += rep.pass() ? 0 : 1;
        ++total;
    }
    CHECK(flipped > total / 2);
}

TEST_CASE("flat braid relation") {
    CHECK(verify_ybe(Mat::identity(4), 2));
    CHECK(verify_ybe(commutation(2, 2), 2));
    CHECK(verify_ybe(commutation(3, 3), 3));
    Mat not_inv(4, 4);
    CHECK_FALSE(verify_ybe(not_inv, 2));
    CHECK_THROWS_AS(verify_ybe(Mat(3, 3), 2), InputError);

    // flat solution from a flat central Leibniz algebra
    LeibnizDecat dec = decategorify_leibniz(fix_a());
    Mat b_bar = flat_solution_leibniz(dec.flat, col_vec({0, 1}));
    CHECK(verify_ybe(b_bar, 2));
}

TEST_CASE("decategorification squares") {
    SUBCASE("flat space: the braiding descends to itself") {
        ZteSolution sol = from_central_leibniz(fix_a(), col_vec({0, 1}));
        SolutionDecat dec = decategorify_solution(sol);
        CHECK(dec.report.pass());
        CHECK(dec.ybe.b_bar == sol.b.f0);
        CHECK(decat_square_leibniz(fix_a(), col_vec({0, 1}), sol));
    }
    SUBCASE("nonzero differential: square against the flat formula") {
        auto ext = trivial_central_extension(omega_instance());
        ZteSolution sol = from_central_leibniz(ext.algebra, ext.central.e);
        CHECK(decat_square_leibniz(ext.algebra, ext.central.e, sol));
        SolutionDecat dec = decategorify_solution(sol);
        CHECK(dec.report.pass());
        CHECK(verify_ybe(dec.ybe.b_bar, dec.ybe.dim));
    }
    SUBCASE("rack square") {
        Linear2Rack rk = rack_from_trivial_extension(omega_instance());
        ZteSolution sol = from_linear_2rack(rk);
        CHECK(decat_square_rack(rk, sol));
    }
}
