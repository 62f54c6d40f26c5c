#include "tetra/leibniz2.hpp"

namespace tetra {

BilinearOp make_bilinear(const TwoVec& v, Mat m_uu, Mat m_wu, Mat m_uw) {
    long u = v.dim_obj, w = v.dim_arr;
    if (m_uu.rows() != u || m_uu.cols() != u * u) throw InputError("m_uu shape mismatch");
    if (m_wu.rows() != w || m_wu.cols() != w * u) throw InputError("m_wu shape mismatch");
    if (m_uw.rows() != w || m_uw.cols() != u * w) throw InputError("m_uw shape mismatch");
    return BilinearOp{v, std::move(m_uu), std::move(m_wu), std::move(m_uw)};
}

BilinearOp zero_bilinear(const TwoVec& v) {
    long u = v.dim_obj, w = v.dim_arr;
    return BilinearOp{v, Mat(u, u * u), Mat(w, w * u), Mat(w, u * w)};
}

Report check_bilinear(const BilinearOp& op) {
    Report rep;
    long u = op.space.dim_obj, w = op.space.dim_arr;
    const Mat& d = op.space.d;
    report_matrix_eq(rep, "b1", op.m_uu * kron(d, Mat::identity(u)), d * op.m_wu, {w, u});
    report_matrix_eq(rep, "b2", op.m_uu * kron(Mat::identity(u), d), d * op.m_uw, {u, w});
    report_matrix_eq(rep, "b3", op.m_wu * kron(Mat::identity(w), d), op.m_uw * kron(d, Mat::identity(w)), {w, w});
    return rep;
}

ChainMap bilinear_chain_map(const BilinearOp& op) {
    Report rep = check_bilinear(op);
    if (!rep.pass()) {
        std::string bad;
        for (const auto& [n, ok] : rep.flags)
            if (!ok) bad += (bad.empty() ? "" : ", ") + n;
        throw StructureError("bilinear operation violates " + bad);
    }
    TensorCtx dom = tensor_power(op.space, 2);
    TensorCtx cod = tensor_power(op.space, 1);
    return make_chain_map(dom, cod, op.m_uu, Mat::hcat({op.m_wu, op.m_uw}));
}

Mor bilinear_mor(const BilinearOp& op, const Mor& f, const Mor& g) {
    if (f.space != op.space || g.space != op.space) throw InputError("bilinear_mor space mismatch");
    Mat src = op.m_uu * kron(f.src, g.src);
    Mat arr = op.m_wu * kron(f.arr, g.src) + op.m_uw * kron(f.src, g.arr) + op.m_wu * kron(f.arr, op.space.d * g.arr);
    return Mor{op.space, std::move(src), std::move(arr)};
}

MorFamily bilinear_family(const BilinearOp& op, const MorFamily& a, const MorFamily& b) {
    if (a.space != op.space || b.space != op.space) throw InputError("bilinear_family space mismatch");
    long u = op.space.dim_obj, w = op.space.dim_arr;
    long pa = a.S.cols();
    Mat s = apply_on_cols(apply_on_cols(op.m_uu, a.S, 1, u), b.S, pa, 1);
    Mat h = apply_on_cols(apply_on_cols(op.m_wu, a.H, 1, u), b.S, pa, 1) +
            apply_on_cols(apply_on_cols(op.m_uw, a.S, 1, w), b.H, pa, 1) +
            apply_on_cols(apply_on_cols(op.m_wu, a.H, 1, u), op.space.d * b.H, pa, 1);
    return MorFamily{op.space, std::move(s), std::move(h)};
}

Leibniz2Algebra make_leibniz2(const TwoVec& v, BilinearOp bracket, Mat l3) {
    if (bracket.space != v) throw InputError("bracket lives on a different space");
    long u = v.dim_obj;
    if (l3.rows() != v.dim_arr || l3.cols() != u * u * u) throw InputError("l3 shape mismatch");
    return Leibniz2Algebra{v, std::move(bracket), std::move(l3)};
}

ChainMap bracket_chain_map(const Leibniz2Algebra& l) { return bilinear_chain_map(l.bracket); }

Mor bracket_morphisms(const Leibniz2Algebra& l, const Mor& f, const Mor& g) { return bilinear_mor(l.bracket, f, g); }

namespace {

// The Jacobiator as a three-argument morphism family, precomposed with an
// argument map into U^{⊗3}.
MorFamily jac_family(const Leibniz2Algebra& l, const Mat& arg_map) {
    long u = l.space.dim_obj;
    Mat s_j = apply_on_cols(l.bracket.m_uu, l.bracket.m_uu, 1, u);  // [[x,y],z]
    return MorFamily{l.space, s_j * arg_map, l.l3 * arg_map};
}

}  // namespace

ChainMap jac_lhs_chain(const Leibniz2Algebra& l) {
    ChainMap br = bracket_chain_map(l);
    ChainMap id1 = identity_chain(tensor_power(l.space, 1));
    return compose_chain(tensor_chain(br, id1), br);
}

ChainMap jac_rhs_chain(const Leibniz2Algebra& l) {
    ChainMap br = bracket_chain_map(l);
    ChainMap id1 = identity_chain(tensor_power(l.space, 1));
    ChainMap lhs = compose_chain(tensor_chain(br, id1), br);
    ChainMap first = compose_chain(swap_chain_map(l.space, 2, 3), lhs);
    ChainMap second = compose_chain(tensor_chain(id1, br), br);
    return add_chain(first, second);
}

Report check_leibniz2(const Leibniz2Algebra& l) {
    Report rep = check_bilinear(l.bracket);
    long u = l.space.dim_obj;
    std::vector<long> dims3{u, u, u}, dims4{u, u, u, u};

    if (!rep.pass()) {
        // Without a functorial bracket the remaining identities are not even
        // well-posed; report them as failed.
        rep.set("jac_endpoints", false);
        rep.set("jac_naturality", false);
        rep.set("jacobiator", false);
        return rep;
    }

    ChainMap lhs = jac_lhs_chain(l);
    ChainMap rhs = jac_rhs_chain(l);
    report_matrix_eq(rep, "jac_endpoints", l.space.d * l.l3, rhs.f0 - lhs.f0, dims3);
    report_matrix_eq(rep, "jac_naturality", l.l3 * lhs.dom.d, rhs.fw - lhs.fw, {});

    // The Jacobiator pentagon, composed edge by edge at all object
    // quadruples. Argument maps feed each J-component and each bracketed
    // identity morphism from (x, y, z, w).
    const Mat m = l.bracket.m_uu;
    Mat iu = Mat::identity(u), iuu = Mat::identity(u * u);
    Mat m12 = kron(m, iuu);                // ([a,b], c, d)
    Mat m23 = kron(kron(iu, m), iu);       // (a, [b,c], d)
    Mat m34 = kron(iuu, m);                // (a, b, [c,d])
    Mat q_xywz = tensor_perm(dims4, {0, 1, 3, 2});
    Mat q_xwyz = tensor_perm(dims4, {0, 3, 1, 2});
    Mat q_xzyw = tensor_perm(dims4, {0, 2, 1, 3});
    Mat q_xzwy = tensor_perm(dims4, {0, 2, 3, 1});
    Mat id3 = Mat::identity(u * u * u);
    MorFamily jac = jac_family(l, id3);
    MorFamily unit = identity_family(l.space, iu);
    Mat mm = apply_on_cols(apply_on_cols(m, m, 1, u), m, u * u, 1);  // [[a,b],[c,d]]

    MorFamily l1 = jac_family(l, m12);
    MorFamily l2 = family_add(family_precompose(bilinear_family(l.bracket, jac, unit), q_xywz),
                              identity_family(l.space, mm));
    MorFamily l3edge = family_add(family_add(jac_family(l, m12 * q_xwyz), jac_family(l, m23 * q_xywz)),
                                  jac_family(l, m34));
    PathCompose left = compose_family_path({l1, l2, l3edge});

    MorFamily r1 = bilinear_family(l.bracket, jac, unit);
    MorFamily r2 = family_add(jac_family(l, m12 * q_xzyw), jac_family(l, m23));
    MorFamily r3 = family_add(
        family_add(family_precompose(bilinear_family(l.bracket, jac, unit), q_xzwy),
                   identity_family(l.space, mm * q_xzyw + mm * q_xwyz)),
        bilinear_family(l.bracket, unit, jac));
    PathCompose right = compose_family_path({r1, r2, r3});

    if (!left.composable || !right.composable) {
        rep.set("jacobiator", false);
        const PathCompose& bad = left.composable ? right : left;
        rep.add_violation({"jacobiator",
                           {bad.bad_step},
                           std::string(left.composable ? "right" : "left") + " path edges fail to chain"});
        return rep;
    }
    report_matrix_eq(rep, "jacobiator", left.arrow, right.arrow, dims4);
    rep.set("jacobiator", left.source == right.source);
    return rep;
}

bool check_central(const Leibniz2Algebra& l, const Mat& e) {
    long u = l.space.dim_obj, w = l.space.dim_arr;
    if (e.rows() != u || e.cols() != 1) throw InputError("central candidate shape mismatch");
    Mat iu = Mat::identity(u), iw = Mat::identity(w);
    return (l.bracket.m_uu * kron(e, iu)).is_zero() && (l.bracket.m_uu * kron(iu, e)).is_zero() &&
           (l.bracket.m_uw * kron(e, iw)).is_zero() && (l.bracket.m_wu * kron(iw, e)).is_zero();
}

bool flat_leibniz_identity_holds(const Mat& bracket) {
    long u = bracket.rows();
    if (bracket.cols() != u * u) throw InputError("structure constants shape mismatch");
    for (long i = 0; i < u; ++i)
        for (long j = 0; j < u; ++j)
            for (long k = 0; k < u; ++k) {
                Mat x(u, 1), y(u, 1), z(u, 1);
                x.at(i, 0) = 1;
                y.at(j, 0) = 1;
                z.at(k, 0) = 1;
                Mat lhs = bracket * kron(bracket * kron(x, y), z);
                Mat rhs = bracket * kron(bracket * kron(x, z), y) + bracket * kron(x, bracket * kron(y, z));
                if (lhs != rhs) return false;
            }
    return true;
}

bool flat_central(const Mat& bracket, const Mat& e) {
    long u = bracket.rows();
    Mat iu = Mat::identity(u);
    return (bracket * kron(e, iu)).is_zero() && (bracket * kron(iu, e)).is_zero();
}

OmegaInstance example_omega(const Mat& bracket_g, const Mat& e, const Mat& omega) {
    long u = bracket_g.rows();
    if (bracket_g.cols() != u * u) throw InputError("structure constants shape mismatch");
    if (omega.rows() != u || omega.cols() != u) throw InputError("omega shape mismatch");
    if (!flat_leibniz_identity_holds(bracket_g)) throw StructureError("bracket violates the Leibniz identity");
    if (!flat_central(bracket_g, e)) throw StructureError("e is not central");
    if (omega.transpose() != -omega) throw StructureError("omega is not skew-symmetric");

    // omega([x,y], z) = omega(y, [x,z] + [z,x]) at all basis triples.
    Mat omega_row(1, u * u);
    for (long i = 0; i < u; ++i)
        for (long j = 0; j < u; ++j) omega_row.at(0, i * u + j) = omega.at(i, j);
    Mat lhs = apply_on_cols(omega_row, bracket_g, 1, u);  // args (x, y, z)
    Mat m_sym = bracket_g + bracket_g * commutation(u, u);
    Mat rhs_yxz = apply_on_cols(omega_row, m_sym, u, 1);  // args (y, x, z)
    Mat rhs = rhs_yxz * tensor_perm({u, u, u}, {1, 0, 2});
    if (lhs != rhs) {
        for (long c = 0; c < lhs.cols(); ++c)
            if (lhs.at(0, c) != rhs.at(0, c)) {
                auto t = decode_index(c, {u, u, u});
                throw StructureError("omega invariance fails at basis triple (" + std::to_string(t[0]) + ", " +
                                     std::to_string(t[1]) + ", " + std::to_string(t[2]) + ")");
            }
    }

    TwoVec space(u, 1, Mat(u, 1));
    BilinearOp bracket = make_bilinear(space, bracket_g, Mat(1, u), Mat(1, u));
    return OmegaInstance{make_leibniz2(space, std::move(bracket), lhs), CentralObject{e}};
}

OmegaInstance trivial_central_extension(const Leibniz2Algebra& l) {
    long u = l.space.dim_obj, w = l.space.dim_arr;
    Mat d_ext = Mat::vcat({Mat(1, w), l.space.d});
    TwoVec space(1 + u, w, d_ext);
    Mat embed = Mat::vcat({Mat(1, u), Mat::identity(u)});
    Mat proj = Mat::hcat({Mat(u, 1), Mat::identity(u)});
    Mat iw = Mat::identity(w);
    BilinearOp bracket = make_bilinear(space, embed * l.bracket.m_uu * kron(proj, proj),
                                       l.bracket.m_wu * kron(iw, proj), l.bracket.m_uw * kron(proj, iw));
    Mat l3_ext = l.l3 * kron(proj, kron(proj, proj));
    Mat e(1 + u, 1);
    e.at(0, 0) = 1;
    return OmegaInstance{make_leibniz2(space, std::move(bracket), std::move(l3_ext)), CentralObject{std::move(e)}};
}

LeibnizDecat decategorify_leibniz(const Leibniz2Algebra& l) {
    SpaceDecat dec = decategorify_space(l.space);
    Mat bar = dec.proj * l.bracket.m_uu * kron(dec.section, dec.section);
    return LeibnizDecat{FlatLeibniz{dec.dim, std::move(bar)}, std::move(dec)};
}

}  // namespace tetra
