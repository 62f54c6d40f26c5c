#include "tetra/rack2.hpp"

namespace tetra {

Linear2Rack make_linear_2rack(const TwoVec& v, Coproduct delta, Mat eps, BilinearOp lhd, BilinearOp lhd_inv,
                              Mat r) {
    long u = v.dim_obj, w = v.dim_arr;
    if (delta.d0.rows() != u * u || delta.d0.cols() != u) throw InputError("delta0 shape mismatch");
    if (delta.dw.rows() != w * u + u * w || delta.dw.cols() != w) throw InputError("deltaw shape mismatch");
    if (eps.rows() != 1 || eps.cols() != u) throw InputError("eps shape mismatch");
    if (lhd.space != v || lhd_inv.space != v) throw InputError("operation lives on a different space");
    if (r.rows() != w || r.cols() != u * u * u) throw InputError("r shape mismatch");
    return Linear2Rack{v, std::move(delta), std::move(eps), std::move(lhd), std::move(lhd_inv), std::move(r)};
}

ChainMap coproduct_chain_map(const Linear2Rack& rk) {
    return make_chain_map(tensor_power(rk.space, 1), tensor_power(rk.space, 2), rk.delta.d0, rk.delta.dw);
}

ChainMap counit_chain_map(const Linear2Rack& rk) {
    TensorCtx unit = tensor_ctx({scalar_two_vec()});
    return make_chain_map(tensor_power(rk.space, 1), unit, rk.eps, Mat(0, rk.space.dim_arr));
}

ChainMap selfdist_lhs_chain(const Linear2Rack& rk) {
    ChainMap op = bilinear_chain_map(rk.lhd);
    ChainMap id1 = identity_chain(tensor_power(rk.space, 1));
    return compose_chain(tensor_chain(op, id1), op);
}

ChainMap selfdist_rhs_chain(const Linear2Rack& rk) {
    ChainMap op = bilinear_chain_map(rk.lhd);
    ChainMap delta = coproduct_chain_map(rk);
    ChainMap id2 = identity_chain(tensor_power(rk.space, 2));
    ChainMap expand = tensor_chain(id2, delta);         // x ⊗ y ⊗ z1 ⊗ z2
    ChainMap shuffle = swap_chain_map(rk.space, 2, 4);  // x ⊗ z1 ⊗ y ⊗ z2
    return compose_chain(compose_chain(compose_chain(expand, shuffle), tensor_chain(op, op)), op);
}

namespace {

struct HexagonSides {
    PathCompose left, right;
};

// Both composite paths of the distributor coherence diagram, evaluated as
// morphism families over object quadruples. Sweedler legs go through the
// coproduct object part; intermediates never exceed a handful of rows.
HexagonSides hexagon_paths(const Linear2Rack& rk, const Mat& s_lhs) {
    long u = rk.space.dim_obj;
    const Mat& a = rk.lhd.m_uu;
    const Mat& dd = rk.delta.d0;
    MorFamily jr{rk.space, s_lhs, rk.r};
    MorFamily unit = identity_family(rk.space, Mat::identity(u));
    std::vector<long> d5(5, u), d6(6, u);

    auto expand_pair = [&](const MorFamily& f, const std::vector<int>& sel, const std::vector<long>& dims,
                           std::vector<std::pair<long, long>> contractions) {
        MorFamily g{f.space, reorder_tensor_cols(f.S, dims, sel), reorder_tensor_cols(f.H, dims, sel)};
        for (auto [left, right] : contractions) {
            g.S = apply_on_cols(g.S, dd, left, right);
            g.H = apply_on_cols(g.H, dd, left, right);
        }
        return g;
    };

    // Left path: r_{x,y,z} ◁ id_w, then r at ((x◁z1),(y◁z2),w), then
    // r_{x,z1,w1} ◁ r_{y,z2,w2}.
    MorFamily e1 = bilinear_family(rk.lhd, jr, unit);  // params (x,y,z,w)
    MorFamily e2;
    {
        Mat s = apply_on_cols(apply_on_cols(jr.S, a, 1, u * u), a, u * u, u);  // (x,z1,y,z2,w)
        Mat h = apply_on_cols(apply_on_cols(jr.H, a, 1, u * u), a, u * u, u);
        e2 = expand_pair(MorFamily{rk.space, s, h}, {0, 2, 1, 3, 4}, d5, {{u * u, u}});
    }
    MorFamily e3;
    {
        MorFamily pair = bilinear_family(rk.lhd, jr, jr);  // (x,z1,w1,y,z2,w2)
        e3 = expand_pair(pair, {0, 3, 1, 4, 2, 5}, d6, {{u * u, u * u}, {u * u * u, 1}});
    }

    // Right path: r_{(x◁y),z,w}, then r_{x,y,w1} ◁ (id_z ◁ id_w2), then
    // r at ((x◁w11),(y◁w12),(z◁w2)).
    MorFamily f1{rk.space, apply_on_cols(jr.S, a, 1, u * u), apply_on_cols(jr.H, a, 1, u * u)};
    MorFamily f2;
    {
        MorFamily pair = bilinear_family(rk.lhd, jr, identity_family(rk.space, a));  // (x,y,w1,z,w2)
        f2 = expand_pair(pair, {0, 1, 3, 2, 4}, d5, {{u * u * u, 1}});
    }
    MorFamily f3;
    {
        Mat s = apply_on_cols(apply_on_cols(apply_on_cols(jr.S, a, 1, u * u), a, u * u, u), a, u * u * u * u, 1);
        Mat h = apply_on_cols(apply_on_cols(apply_on_cols(jr.H, a, 1, u * u), a, u * u, u), a, u * u * u * u, 1);
        // current order (x,w11,y,w12,z,w2)
        f3 = expand_pair(MorFamily{rk.space, s, h}, {0, 2, 4, 1, 3, 5}, d6, {{u * u * u, u}, {u * u * u, 1}});
    }
    return HexagonSides{compose_family_path({e1, e2, e3}), compose_family_path({f1, f2, f3})};
}

}  // namespace

Report check_linear_2rack(const Linear2Rack& rk) {
    Report rep;
    long u = rk.space.dim_obj;
    std::vector<long> dims1{u}, dims2{u, u}, dims3{u, u, u}, dims4{u, u, u, u};

    ChainMap delta = coproduct_chain_map(rk);
    rep.set("delta_functor", delta.chain_condition_holds());
    ChainMap eps = counit_chain_map(rk);
    report_matrix_eq(rep, "eps_functor", rk.eps * rk.space.d, Mat(1, rk.space.dim_arr), {});
    rep.merge(check_bilinear(rk.lhd), "lhd_");
    rep.merge(check_bilinear(rk.lhd_inv), "lhd_inv_");
    if (!rep.pass()) {
        for (const char* f : {"c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8"}) rep.set(f, false);
        return rep;
    }

    ChainMap op = bilinear_chain_map(rk.lhd);
    ChainMap opinv = bilinear_chain_map(rk.lhd_inv);
    ChainMap id1 = identity_chain(tensor_power(rk.space, 1));

    ChainMap c1l = compose_chain(delta, tensor_chain(delta, id1));
    ChainMap c1r = compose_chain(delta, tensor_chain(id1, delta));
    report_matrix_eq(rep, "c1", c1l.f0, c1r.f0, dims1);
    report_matrix_eq(rep, "c1", c1l.fw, c1r.fw, {});

    ChainMap c2l = compose_chain(delta, swap_chain_map(rk.space, 1, 2));
    report_matrix_eq(rep, "c2", c2l.f0, delta.f0, dims1);
    report_matrix_eq(rep, "c2", c2l.fw, delta.fw, {});

    ChainMap left_counit = compose_chain(delta, tensor_chain(eps, id1));
    ChainMap right_counit = compose_chain(delta, tensor_chain(id1, eps));
    report_matrix_eq(rep, "c3", left_counit.f0, Mat::identity(u), dims1);
    report_matrix_eq(rep, "c3", left_counit.fw, Mat::identity(rk.space.dim_arr), {});
    report_matrix_eq(rep, "c3", right_counit.f0, Mat::identity(u), dims1);
    report_matrix_eq(rep, "c3", right_counit.fw, Mat::identity(rk.space.dim_arr), {});

    ChainMap c4l = compose_chain(op, delta);
    ChainMap c4r = compose_chain(compose_chain(tensor_chain(delta, delta), swap_chain_map(rk.space, 2, 4)),
                                 tensor_chain(op, op));
    report_matrix_eq(rep, "c4", c4l.f0, c4r.f0, dims2);
    report_matrix_eq(rep, "c4", c4l.fw, c4r.fw, {});

    ChainMap c5l = compose_chain(op, eps);
    ChainMap c5r = tensor_chain(eps, eps);
    report_matrix_eq(rep, "c5", c5l.f0, c5r.f0, dims2);
    report_matrix_eq(rep, "c5", c5l.fw, c5r.fw, {});

    ChainMap expand = tensor_chain(id1, delta);  // x ⊗ y1 ⊗ y2
    ChainMap mid = tensor_chain(id1, eps);
    ChainMap c6a = compose_chain(compose_chain(expand, tensor_chain(op, id1)), opinv);
    ChainMap c6b = compose_chain(compose_chain(expand, tensor_chain(opinv, id1)), op);
    report_matrix_eq(rep, "c6", c6a.f0, mid.f0, dims2);
    report_matrix_eq(rep, "c6", c6a.fw, mid.fw, {});
    report_matrix_eq(rep, "c6", c6b.f0, mid.f0, dims2);
    report_matrix_eq(rep, "c6", c6b.fw, mid.fw, {});

    ChainMap lhs = selfdist_lhs_chain(rk);
    ChainMap rhs = selfdist_rhs_chain(rk);
    report_matrix_eq(rep, "c7", rk.space.d * rk.r, rhs.f0 - lhs.f0, dims3);
    report_matrix_eq(rep, "c7", rk.r * lhs.dom.d, rhs.fw - lhs.fw, {});

    HexagonSides hex = hexagon_paths(rk, lhs.f0);
    if (!hex.left.composable || !hex.right.composable) {
        rep.set("c8", false);
        const PathCompose& bad = hex.left.composable ? hex.right : hex.left;
        rep.add_violation(
            {"c8", {bad.bad_step}, std::string(hex.left.composable ? "right" : "left") + " path edges fail to chain"});
        return rep;
    }
    report_matrix_eq(rep, "c8", hex.left.arrow, hex.right.arrow, dims4);
    rep.set("c8", hex.left.source == hex.right.source);
    return rep;
}

Linear2Rack rack_from_trivial_extension(const Leibniz2Algebra& l) {
    Report base = check_leibniz2(l);
    if (!base.pass()) throw StructureError("underlying structure fails its checks");
    OmegaInstance ext = trivial_central_extension(l);
    const Leibniz2Algebra& e = ext.algebra;
    long u1 = e.space.dim_obj, w = e.space.dim_arr;
    Mat eps(1, u1);
    eps.at(0, 0) = 1;
    Mat kill_k = Mat::identity(u1);
    kill_k.at(0, 0) = 0;

    Coproduct delta;
    delta.d0 = kron(Mat::identity(u1), ext.central.e) + kron(ext.central.e, kill_k);
    delta.dw = Mat::vcat({kron(Mat::identity(w), ext.central.e), kron(ext.central.e, Mat::identity(w))});

    Mat scale_wu = kron(Mat::identity(w), eps);
    BilinearOp lhd = make_bilinear(e.space, kron(Mat::identity(u1), eps) + e.bracket.m_uu,
                                   scale_wu + e.bracket.m_wu, e.bracket.m_uw);
    BilinearOp lhd_inv = make_bilinear(e.space, kron(Mat::identity(u1), eps) - e.bracket.m_uu,
                                       scale_wu - e.bracket.m_wu, -e.bracket.m_uw);
    return make_linear_2rack(e.space, std::move(delta), std::move(eps), std::move(lhd), std::move(lhd_inv), e.l3);
}

Report check_flat_rack(const FlatRack& r) {
    Report rep;
    long q = r.dim;
    Mat iq = Mat::identity(q);
    std::vector<long> dims1{q}, dims2{q, q}, dims3{q, q, q};
    report_matrix_eq(rep, "coassoc", kron(r.delta, iq) * r.delta, kron(iq, r.delta) * r.delta, dims1);
    report_matrix_eq(rep, "cocomm", commutation(q, q) * r.delta, r.delta, dims1);
    report_matrix_eq(rep, "counit", kron(r.eps, iq) * r.delta, iq, dims1);
    report_matrix_eq(rep, "counit", kron(iq, r.eps) * r.delta, iq, dims1);
    report_matrix_eq(rep, "op_coproduct", r.delta * r.lhd,
                     kron(r.lhd, r.lhd) * kron(iq, kron(commutation(q, q), iq)) * kron(r.delta, r.delta), dims2);
    report_matrix_eq(rep, "op_counit", r.eps * r.lhd, kron(r.eps, r.eps), dims2);
    Mat expand = kron(iq, r.delta);
    report_matrix_eq(rep, "inverse", r.lhd_inv * kron(r.lhd, iq) * expand, kron(iq, r.eps), dims2);
    report_matrix_eq(rep, "inverse", r.lhd * kron(r.lhd_inv, iq) * expand, kron(iq, r.eps), dims2);
    Mat sd_lhs = r.lhd * kron(r.lhd, iq);
    Mat sd_rhs = r.lhd * kron(r.lhd, r.lhd) * kron(iq, kron(commutation(q, q), iq)) * kron(iq, kron(iq, r.delta));
    report_matrix_eq(rep, "self_dist", sd_lhs, sd_rhs, dims3);
    return rep;
}

RackDecat decategorify_rack(const Linear2Rack& rk) {
    SpaceDecat dec = decategorify_space(rk.space);
    FlatRack flat;
    flat.dim = dec.dim;
    flat.delta = kron(dec.proj, dec.proj) * rk.delta.d0 * dec.section;
    flat.eps = rk.eps * dec.section;
    Mat sec2 = kron(dec.section, dec.section);
    flat.lhd = dec.proj * rk.lhd.m_uu * sec2;
    flat.lhd_inv = dec.proj * rk.lhd_inv.m_uu * sec2;
    return RackDecat{std::move(flat), std::move(dec)};
}

bool is_group_like(const Linear2Rack& rk, const Mat& x) {
    if (x.rows() != rk.space.dim_obj || x.cols() != 1) throw InputError("candidate shape mismatch");
    return rk.delta.d0 * x == kron(x, x);
}

Report group_like_report(const Linear2Rack& rk, const std::vector<Mat>& candidates) {
    Report rep;
    rep.set("group_like", true);
    rep.set("closure", true);
    rep.set("inverse", true);
    rep.set("distributor", true);
    for (size_t i = 0; i < candidates.size(); ++i)
        if (!is_group_like(rk, candidates[i])) {
            rep.set("group_like", false);
            rep.add_violation({"group_like", {long(i)}, "candidate is not group-like"});
        }

    auto apply2 = [&](const Mat& op, const Mat& x, const Mat& y) { return op * kron(x, y); };
    auto member = [&](const Mat& v) {
        for (const Mat& c : candidates)
            if (c == v) return true;
        return false;
    };
    for (size_t i = 0; i < candidates.size(); ++i)
        for (size_t j = 0; j < candidates.size(); ++j) {
            Mat v = apply2(rk.lhd.m_uu, candidates[i], candidates[j]);
            if (!member(v)) {
                rep.set("closure", false);
                rep.add_violation({"closure", {long(i), long(j)}, "operation value escapes the candidate set"});
            }
            Mat back = apply2(rk.lhd_inv.m_uu, v, candidates[j]);
            Mat fwd = apply2(rk.lhd.m_uu, apply2(rk.lhd_inv.m_uu, candidates[i], candidates[j]), candidates[j]);
            if (back != candidates[i] || fwd != candidates[i]) {
                rep.set("inverse", false);
                rep.add_violation({"inverse", {long(i), long(j)}, "inverse laws fail"});
            }
        }

    // Distributor identity at candidate quadruples, with the coproduct
    // specialised to x ⊗ x.
    Mat s_lhs = selfdist_lhs_chain(rk).f0;
    auto rmor = [&](const Mat& x, const Mat& y, const Mat& z) {
        Mat arg = kron(x, kron(y, z));
        return Mor{rk.space, s_lhs * arg, rk.r * arg};
    };
    auto op_mor = [&](const Mor& f, const Mor& g) { return bilinear_mor(rk.lhd, f, g); };
    bool hexagon_ok = true;
    for (size_t i = 0; i < candidates.size() && hexagon_ok; ++i)
        for (size_t j = 0; j < candidates.size() && hexagon_ok; ++j)
            for (size_t k = 0; k < candidates.size() && hexagon_ok; ++k)
                for (size_t m = 0; m < candidates.size(); ++m) {
                    const Mat &x = candidates[i], &y = candidates[j], &z = candidates[k], &w = candidates[m];
                    Mat xz = apply2(rk.lhd.m_uu, x, z), yz = apply2(rk.lhd.m_uu, y, z);
                    Mat xy = apply2(rk.lhd.m_uu, x, y);
                    Mat xw = apply2(rk.lhd.m_uu, x, w), yw = apply2(rk.lhd.m_uu, y, w);
                    Mat zw = apply2(rk.lhd.m_uu, z, w);
                    bool ok = true;
                    std::string why = "hexagon fails at candidate quadruple";
                    try {
                        Mor left = mor_compose(mor_compose(op_mor(rmor(x, y, z), mor_identity(rk.space, w)),
                                                           rmor(xz, yz, w)),
                                               op_mor(rmor(x, z, w), rmor(y, z, w)));
                        Mor right = mor_compose(
                            mor_compose(rmor(xy, z, w),
                                        op_mor(rmor(x, y, w),
                                               op_mor(mor_identity(rk.space, z), mor_identity(rk.space, w)))),
                            rmor(xw, yw, zw));
                        ok = mor_equal(left, right);
                    } catch (const InputError&) {
                        ok = false;
                        why = "hexagon edges fail to compose";
                    }
                    if (!ok) {
                        rep.set("distributor", false);
                        rep.add_violation({"distributor", {long(i), long(j), long(k), long(m)}, why});
                        hexagon_ok = false;
                        break;
                    }
                }
    return rep;
}

}  // namespace tetra
