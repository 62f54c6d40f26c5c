#include "tetra/split.hpp"

namespace tetra {

namespace {

// phi with id - sigma0∘proj0 = e ∘ phi; exists because the left side has
// rank one with image <e>.
Mat phi_along(const Mat& e, const Mat& defect) {
    long u = e.rows();
    long pivot = -1;
    for (long i = 0; i < u; ++i)
        if (!is_zero(e.at(i, 0))) {
            pivot = i;
            break;
        }
    if (pivot < 0) throw InputError("central object must be nonzero");
    Mat phi(1, u);
    for (long j = 0; j < u; ++j) phi.at(0, j) = defect.at(pivot, j) / e.at(pivot, 0);
    if (e * phi != defect) throw StructureError("complement defect is not supported on the central line");
    return phi;
}

}  // namespace

QuotientLeibniz2 quotient_leibniz2(const Leibniz2Algebra& l, const Mat& e) {
    if (e.rows() != l.space.dim_obj || e.cols() != 1 || e.is_zero())
        throw InputError("central object must be a nonzero object vector");
    if (!check_central(l, e)) throw StructureError("object is not central");
    CokerProjection c = coker_projection(e);
    long w = l.space.dim_arr;
    Mat iw = Mat::identity(w);
    TwoVec qspace(c.proj.rows(), w, c.proj * l.space.d);
    BilinearOp bracket = make_bilinear(qspace, c.proj * l.bracket.m_uu * kron(c.section, c.section),
                                       l.bracket.m_wu * kron(iw, c.section), l.bracket.m_uw * kron(c.section, iw));
    Mat l3q = l.l3 * kron(c.section, kron(c.section, c.section));
    return QuotientLeibniz2{make_leibniz2(qspace, std::move(bracket), std::move(l3q)), c.proj, c.section};
}

Splitting make_splitting(const Leibniz2Algebra& l, const Mat& e, const Mat& sigma0) {
    if (e.rows() != l.space.dim_obj || e.cols() != 1 || e.is_zero())
        throw InputError("central object must be a nonzero object vector");
    CokerProjection c = coker_projection(e);
    long q = c.proj.rows();
    if (sigma0.rows() != l.space.dim_obj || sigma0.cols() != q) throw InputError("section shape mismatch");
    if (c.proj * sigma0 != Mat::identity(q)) throw InputError("sigma0 is not a section of the projection");

    Mat defect = Mat::identity(l.space.dim_obj) - sigma0 * c.proj;
    Mat phi = phi_along(e, defect);

    // The arrow-level correction demanded by the target map: c(w) e =
    // -(d w - P d w). The source map forces c = 0, so a splitting exists only
    // when the section image absorbs im(d).
    Mat cw = -(phi * l.space.d);
    if (!cw.is_zero())
        throw StructureError("no splitting along this section: im(d) escapes the section image");
    return Splitting{l, e, c.proj, sigma0, cw, phi};
}

bool is_leibniz_section(const Splitting& sp) {
    const Leibniz2Algebra& l = sp.algebra;
    long w = l.space.dim_arr;
    Mat iw = Mat::identity(w);
    Mat s2 = kron(sp.sigma0, sp.sigma0);
    // object level: sigma0 of the quotient bracket equals the bracket of
    // section representatives
    Mat mq = sp.proj0 * l.bracket.m_uu * s2;
    if (sp.sigma0 * mq != l.bracket.m_uu * s2) return false;
    // arrow level (the W component passes through the quotient untouched)
    Mat p = sp.sigma0 * sp.proj0;
    if (l.bracket.m_wu * kron(iw, p * sp.sigma0) != l.bracket.m_wu * kron(iw, sp.sigma0)) return false;
    if (l.bracket.m_uw * kron(p * sp.sigma0, iw) != l.bracket.m_uw * kron(sp.sigma0, iw)) return false;
    // Jacobiator: the quotient components map back onto the originals
    Mat s3 = kron(sp.sigma0, kron(sp.sigma0, sp.sigma0));
    return l.l3 * kron(p, kron(p, p)) * s3 == l.l3 * s3;
}

Linear2Rack rack_from_splitting(const Splitting& sp) {
    const Leibniz2Algebra& l = sp.algebra;
    long u = l.space.dim_obj, w = l.space.dim_arr;
    Mat p = sp.sigma0 * sp.proj0;
    Mat iu = Mat::identity(u), iw = Mat::identity(w);

    Coproduct delta;
    delta.d0 = kron(iu, sp.e) + kron(sp.e, p);
    delta.dw = Mat::vcat({kron(iw, sp.e), kron(sp.e, iw)});

    Mat lhd_uw = l.bracket.m_uw * kron(p, iw);
    BilinearOp lhd = make_bilinear(l.space, kron(iu, sp.phi) + p * l.bracket.m_uu,
                                   kron(iw, sp.phi) + l.bracket.m_wu * kron(iw, p), lhd_uw);
    BilinearOp lhd_inv = make_bilinear(l.space, kron(iu, sp.phi) - p * l.bracket.m_uu,
                                       kron(iw, sp.phi) - l.bracket.m_wu * kron(iw, p), -lhd_uw);
    Mat r = l.l3 * kron(p, kron(p, p));
    return make_linear_2rack(l.space, std::move(delta), sp.phi, std::move(lhd), std::move(lhd_inv), std::move(r));
}

CoincidenceReport solutions_coincide(const Splitting& sp) {
    CoincidenceReport out;
    ZteSolution from_algebra = from_central_leibniz(sp.algebra, sp.e);
    ZteSolution from_rack = from_linear_2rack(rack_from_splitting(sp));
    out.diff_b0 = from_rack.b.f0 - from_algebra.b.f0;
    out.diff_bw = from_rack.b.fw - from_algebra.b.fw;
    out.diff_y = from_rack.y - from_algebra.y;
    out.report.set("b0", out.diff_b0.is_zero());
    out.report.set("bw", out.diff_bw.is_zero());
    out.report.set("binv0", from_rack.b_inv.f0 == from_algebra.b_inv.f0);
    out.report.set("binvw", from_rack.b_inv.fw == from_algebra.b_inv.fw);
    out.report.set("y", out.diff_y.is_zero());
    return out;
}

FlatRackFromLeibniz flat_rack_from_central_leibniz(const Mat& bracket, const Mat& e, const Mat& sigma) {
    long u = bracket.rows();
    if (bracket.cols() != u * u) throw InputError("structure constants shape mismatch");
    if (!flat_leibniz_identity_holds(bracket)) throw StructureError("bracket violates the Leibniz identity");
    if (!flat_central(bracket, e)) throw StructureError("e is not central");
    CokerProjection c = coker_projection(e);
    if (sigma.rows() != u || sigma.cols() != c.proj.rows()) throw InputError("section shape mismatch");
    if (c.proj * sigma != Mat::identity(c.proj.rows())) throw InputError("sigma is not a section");
    Mat p = sigma * c.proj;
    Mat phi = phi_along(e, Mat::identity(u) - p);
    Mat iu = Mat::identity(u);
    FlatRack rack;
    rack.dim = u;
    rack.delta = kron(iu, e) + kron(e, p);
    rack.eps = phi;
    rack.lhd = kron(iu, phi) + p * bracket;
    rack.lhd_inv = kron(iu, phi) - p * bracket;
    return FlatRackFromLeibniz{std::move(rack), std::move(phi)};
}

}  // namespace tetra
