#include "tetra/forge.hpp"

#include <random>

namespace tetra {

namespace {

Mat flatten(const Mat& m) {
    Mat v(m.rows() * m.cols(), 1);
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) v.at(i * m.cols() + j, 0) = m.at(i, j);
    return v;
}

Mat unflatten(const Mat& v, long rows, long cols) {
    Mat m(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) m.at(i, j) = v.at(i * cols + j, 0);
    return m;
}

// Assembles the linear system eval(X) = rhs over the entries of X by probing
// basis matrices, prunes unconstrained unknowns and trivial equations, and
// returns the full affine solution set.
template <typename Eval>
AffineMatSolutions solve_entrywise(long xr, long xc, Eval&& eval, const Mat& rhs) {
    long n = xr * xc;
    std::vector<Mat> columns;
    columns.reserve(n);
    for (long k = 0; k < n; ++k) {
        Mat ek(xr, xc);
        ek.at(k / xc, k % xc) = 1;
        columns.push_back(flatten(eval(ek)));
    }
    Mat b = flatten(rhs);
    long rows = b.rows();

    std::vector<long> live_rows, live_cols;
    for (long i = 0; i < rows; ++i) {
        bool nonzero = !is_zero(b.at(i, 0));
        for (long k = 0; k < n && !nonzero; ++k) nonzero = !is_zero(columns[k].at(i, 0));
        if (nonzero) live_rows.push_back(i);
    }
    std::vector<bool> constrained(n, false);
    for (long k = 0; k < n; ++k)
        for (long i : live_rows)
            if (!is_zero(columns[k].at(i, 0))) {
                constrained[k] = true;
                live_cols.push_back(k);
                break;
            }

    Mat a(long(live_rows.size()), long(live_cols.size()));
    Mat bb(long(live_rows.size()), 1);
    for (size_t i = 0; i < live_rows.size(); ++i) {
        bb.at(long(i), 0) = b.at(live_rows[i], 0);
        for (size_t j = 0; j < live_cols.size(); ++j) a.at(long(i), long(j)) = columns[live_cols[j]].at(live_rows[i], 0);
    }
    AffineSolutions sol = solve_linear(a, bb);
    AffineMatSolutions out;
    out.consistent = sol.consistent;
    if (!sol.consistent) return out;
    Mat part(n, 1);
    for (size_t j = 0; j < live_cols.size(); ++j) part.at(live_cols[j], 0) = sol.particular.at(long(j), 0);
    out.particular = unflatten(part, xr, xc);
    for (const Mat& k : sol.kernel) {
        Mat v(n, 1);
        for (size_t j = 0; j < live_cols.size(); ++j) v.at(live_cols[j], 0) = k.at(long(j), 0);
        out.kernel.push_back(unflatten(v, xr, xc));
    }
    for (long k = 0; k < n; ++k)
        if (!constrained[k]) {
            Mat v(xr, xc);
            v.at(k / xc, k % xc) = 1;
            out.kernel.push_back(std::move(v));
        }
    return out;
}

}  // namespace

AffineMatSolutions solve_l3(const TwoVec& space, const BilinearOp& bracket) {
    if (!check_bilinear(bracket).pass()) throw StructureError("bracket fails its shape conditions");
    long u = space.dim_obj, w = space.dim_arr;
    Leibniz2Algebra probe = make_leibniz2(space, bracket, Mat(w, u * u * u));
    ChainMap lhs = jac_lhs_chain(probe);
    ChainMap rhs = jac_rhs_chain(probe);
    Mat d0_defect = rhs.f0 - lhs.f0;
    Mat dw_defect = rhs.fw - lhs.fw;

    const Mat& m = bracket.m_uu;
    Mat iu = Mat::identity(u), iuu = Mat::identity(u * u);
    std::vector<long> d4{u, u, u, u};
    Mat m12 = kron(m, iuu), m23 = kron(kron(iu, m), iu), m34 = kron(iuu, m);
    Mat q_xywz = tensor_perm(d4, {0, 1, 3, 2});
    Mat q_xwyz = tensor_perm(d4, {0, 3, 1, 2});
    Mat q_xzyw = tensor_perm(d4, {0, 2, 1, 3});
    Mat q_xzwy = tensor_perm(d4, {0, 2, 3, 1});

    auto eval = [&](const Mat& x) {
        // endpoint and naturality conditions, then the expanded coherence
        // identity of the Jacobiator
        Mat pent = x * m12 + bracket.m_wu * kron(x, iu) * q_xywz + x * m12 * q_xwyz + x * m23 * q_xywz +
                   x * m34 - bracket.m_wu * kron(x, iu) - x * m12 * q_xzyw - x * m23 -
                   bracket.m_wu * kron(x, iu) * q_xzwy - bracket.m_uw * kron(iu, x);
        return Mat::vcat({flatten(space.d * x), flatten(x * lhs.dom.d), flatten(pent)});
    };
    Mat rhs_vec = Mat::vcat({flatten(d0_defect), flatten(dw_defect), Mat(w * u * u * u * u, 1)});
    return solve_entrywise(w, u * u * u, eval, rhs_vec);
}

AffineMatSolutions solve_r(const TwoVec& space, const Coproduct& delta, const Mat& eps, const BilinearOp& lhd,
                           const BilinearOp& lhd_inv) {
    long u = space.dim_obj, w = space.dim_arr;
    Linear2Rack probe = make_linear_2rack(space, delta, eps, lhd, lhd_inv, Mat(w, u * u * u));
    {
        Report rep = check_linear_2rack(probe);
        for (const char* f : {"c1", "c2", "c3", "c4", "c5", "c6"})
            if (!rep.flag(f)) throw StructureError("coalgebra/operation data fails " + std::string(f));
    }
    ChainMap lhs = selfdist_lhs_chain(probe);
    ChainMap rhs = selfdist_rhs_chain(probe);
    Mat d0_defect = rhs.f0 - lhs.f0;  // the constant value of d∘r on solutions
    Mat dw_defect = rhs.fw - lhs.fw;
    Mat s_r = lhs.f0;

    const Mat& a = lhd.m_uu;
    const Mat& dd = delta.d0;
    Mat iu = Mat::identity(u);
    std::vector<long> d5(5, u), d6(6, u);

    auto contract = [&](Mat mat, const std::vector<int>& sel, const std::vector<long>& dims,
                        std::vector<std::pair<long, long>> contractions) {
        mat = reorder_tensor_cols(mat, dims, sel);
        for (auto [left, right] : contractions) mat = apply_on_cols(mat, dd, left, right);
        return mat;
    };

    auto eval = [&](const Mat& x) {
        // left side of the coherence identity
        Mat e1 = lhd.m_wu * kron(x, iu);
        Mat e2 = apply_on_cols(apply_on_cols(x, a, 1, u * u), a, u * u, u);
        e2 = contract(e2, {0, 2, 1, 3, 4}, d5, {{u * u, u}});
        Mat e3 = lhd.m_wu * kron(x, s_r) + lhd.m_uw * kron(s_r, x) + lhd.m_wu * kron(x, d0_defect);
        e3 = contract(e3, {0, 3, 1, 4, 2, 5}, d6, {{u * u, u * u}, {u * u * u, 1}});
        // right side
        Mat f1 = x * kron(a, Mat::identity(u * u));
        Mat f2 = contract(lhd.m_wu * kron(x, a), {0, 1, 3, 2, 4}, d5, {{u * u * u, 1}});
        Mat f3 = apply_on_cols(apply_on_cols(apply_on_cols(x, a, 1, u * u), a, u * u, u), a, u * u * u * u, 1);
        f3 = contract(f3, {0, 2, 4, 1, 3, 5}, d6, {{u * u * u, u}, {u * u * u, 1}});
        Mat hex = e1 + e2 + e3 - f1 - f2 - f3;
        return Mat::vcat({flatten(space.d * x), flatten(x * lhs.dom.d), flatten(hex)});
    };
    Mat rhs_vec = Mat::vcat({flatten(d0_defect), flatten(dw_defect), Mat(w * u * u * u * u, 1)});
    return solve_entrywise(w, u * u * u, eval, rhs_vec);
}

namespace {

int draw(std::mt19937_64& rng, int bound) { return int(rng() % (2 * bound + 1)) - bound; }

// Random product of elementary matrices: unimodular with an exact inverse.
std::pair<Mat, Mat> random_basis_change(std::mt19937_64& rng, long n, int bound) {
    Mat t = Mat::identity(n), tinv = Mat::identity(n);
    if (n < 2) return {t, tinv};
    for (long step = 0; step < 2 * n; ++step) {
        long i = long(rng() % n), j = long(rng() % n);
        if (i == j) continue;
        Rat c = rat(draw(rng, bound));
        if (is_zero(c)) continue;
        Mat e = Mat::identity(n);
        e.at(i, j) = c;
        Mat einv = Mat::identity(n);
        einv.at(i, j) = -c;
        t = e * t;
        tinv = tinv * einv;
    }
    return {t, tinv};
}

Mat kron3(const Mat& a, const Mat& b, const Mat& c) { return kron(a, kron(b, c)); }

}  // namespace

SampledLeibniz2 sample_leibniz2(std::uint64_t seed, long u, long w, int bound) {
    if (u < 2 || w < 0) throw InputError("need at least two object dimensions");
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + attempt + u * 131 + w * 17);
        // layout: core indices, the central object, then acyclic pad targets
        long pads = (u >= 3 && w >= 1 && (rng() & 1)) ? 1 : 0;
        long core = u - 1 - pads;
        long e_idx = core;
        Mat d(u, w);
        for (long p = 0; p < pads; ++p) d.at(core + 1 + p, w - pads + p) = 1;
        TwoVec space(u, w, d);
        Mat m(u, u * u);
        bool nonzero = false;
        for (long i = 0; i < core; ++i)
            for (long j = 0; j < core; ++j) {
                int c = draw(rng, bound);
                if (c != 0) nonzero = true;
                m.at(e_idx, i * u + j) = rat(c);
            }
        if (!nonzero && core > 0) m.at(e_idx, 0) = 1;
        BilinearOp bracket = make_bilinear(space, m, Mat(w, w * u), Mat(w, u * w));

        AffineMatSolutions l3s = solve_l3(space, bracket);
        if (!l3s.consistent) continue;
        Mat l3 = l3s.particular;
        for (const Mat& k : l3s.kernel)
            if (rng() % 3 != 0) l3 = l3 + k.scaled(rat(draw(rng, 1)));

        Mat e(u, 1);
        e.at(e_idx, 0) = 1;
        // canonical complement section before the change of basis
        Mat sigma(u, u - 1);
        for (long i = 0, col = 0; i < u; ++i)
            if (i != e_idx) sigma.at(i, col++) = 1;

        auto [t, tinv] = random_basis_change(rng, u, 1);
        auto [tw, twinv] = random_basis_change(rng, w, 1);
        Mat t2inv = kron(tinv, tinv);
        TwoVec space2(u, w, t * d * twinv);
        BilinearOp bracket2 = make_bilinear(space2, t * m * t2inv, tw * bracket.m_wu * kron(twinv, tinv),
                                            tw * bracket.m_uw * kron(tinv, twinv));
        Leibniz2Algebra out = make_leibniz2(space2, bracket2, tw * l3 * kron3(tinv, tinv, tinv));
        Mat e2 = t * e;
        Mat s = t * sigma;
        CokerProjection cp = coker_projection(e2);
        auto ps_inv = inverse(cp.proj * s);
        if (!ps_inv) continue;
        Mat sigma2 = s * *ps_inv;

        if (!check_leibniz2(out).pass() || !check_central(out, e2)) continue;
        return SampledLeibniz2{std::move(out), CentralObject{std::move(e2)}, std::move(sigma2)};
    }
    throw SamplingError("no checker-passing instance after bounded attempts at dims (" + std::to_string(u) + "," +
                        std::to_string(w) + ")");
}

Linear2Rack sample_rack2(std::uint64_t seed, long u, long w, int bound) {
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::mt19937_64 rng(seed * 0xbf58476d1ce4e5b9ULL + attempt * 7 + u * 11 + w * 5);
        SampledLeibniz2 base = sample_leibniz2(seed * 31 + attempt, u, w, bound);
        Splitting sp = make_splitting(base.algebra, base.central.e, base.sigma0);
        Linear2Rack rack = rack_from_splitting(sp);
        AffineMatSolutions rs = solve_r(rack.space, rack.delta, rack.eps, rack.lhd, rack.lhd_inv);
        if (!rs.consistent) continue;
        Mat r = rs.particular;
        for (const Mat& k : rs.kernel)
            if (rng() % 3 != 0) r = r + k.scaled(rat(draw(rng, 1)));
        rack.r = std::move(r);
        if (!check_linear_2rack(rack).pass()) continue;
        return rack;
    }
    throw SamplingError("no checker-passing rack after bounded attempts at dims (" + std::to_string(u) + "," +
                        std::to_string(w) + ")");
}

Leibniz2Algebra fixture_a() {
    TwoVec space(2, 0, Mat(2, 0));
    Mat m(2, 4);
    m.at(1, 0) = 1;
    return make_leibniz2(space, make_bilinear(space, m, Mat(0, 0), Mat(0, 0)), Mat(0, 8));
}

Leibniz2Algebra fixture_b() {
    TwoVec space(2, 1, Mat(2, 1));
    return make_leibniz2(space, zero_bilinear(space), Mat(1, 8));
}

OmegaInstance fixture_c() { return trivial_central_extension(fixture_b()); }

Linear2Rack fixture_d() { return rack_from_trivial_extension(fixture_b()); }

Leibniz2Algebra fixture_e() {
    // fixture_a lifted with a one-dimensional arrow space, zero actions, and
    // the first nonzero Jacobiator arrow the solver offers
    Leibniz2Algebra a = fixture_a();
    TwoVec space(2, 1, Mat(2, 1));
    BilinearOp bracket = make_bilinear(space, a.bracket.m_uu, Mat(1, 2), Mat(1, 2));
    AffineMatSolutions sols = solve_l3(space, bracket);
    if (!sols.consistent) throw StructureError("lifted fixture admits no Jacobiator arrow");
    Mat l3 = sols.particular;
    for (const Mat& k : sols.kernel)
        if (l3.is_zero()) l3 = l3 + k;
    return make_leibniz2(space, bracket, std::move(l3));
}

namespace {

CrossedModule z2_z3_module() {
    CrossedModule cm;
    cm.g = cyclic_group(2);
    cm.h = cyclic_group(3);
    cm.boundary.assign(3, 0);
    cm.action.assign(2, std::vector<long>(3));
    for (long h = 0; h < 3; ++h) {
        cm.action[0][h] = h;
        cm.action[1][h] = (3 - h) % 3;
    }
    return cm;
}

}  // namespace

Strict2Group fixture_f_group() { return two_group_from_crossed_module(z2_z3_module()); }

ConjugationRack fixture_f() {
    Strict2Group g2 = fixture_f_group();
    return conjugation_rack(g2, g2.cat, left_translation_action(g2));
}

}  // namespace tetra
