#include "tetra/twovec.hpp"

namespace tetra {

TwoVec make_two_vec(Mat d) { return TwoVec(d.rows(), d.cols(), std::move(d)); }

TwoVec scalar_two_vec() { return TwoVec(1, 0, Mat(1, 0)); }

Mor mor(const TwoVec& v, Mat src, Mat arr) {
    if (src.rows() != v.dim_obj || src.cols() != 1) throw InputError("morphism source shape mismatch");
    if (arr.rows() != v.dim_arr || arr.cols() != 1) throw InputError("morphism arrow shape mismatch");
    return Mor{v, std::move(src), std::move(arr)};
}

Mor mor_identity(const TwoVec& v, Mat obj) { return mor(v, std::move(obj), Mat(v.dim_arr, 1)); }

Mat mor_target(const Mor& f) { return f.src + f.space.d * f.arr; }

bool mor_equal(const Mor& f, const Mor& g) { return f.space == g.space && f.src == g.src && f.arr == g.arr; }

Mor mor_add(const Mor& f, const Mor& g) {
    if (f.space != g.space) throw InputError("morphism sum across different spaces");
    return Mor{f.space, f.src + g.src, f.arr + g.arr};
}

Mor mor_compose(const Mor& f, const Mor& g) {
    if (f.space != g.space) throw InputError("composition across different spaces");
    if (mor_target(f) != g.src) throw InputError("morphisms not composable");
    return Mor{f.space, f.src, f.arr + g.arr};
}

Mor mor_invert(const Mor& f) { return Mor{f.space, mor_target(f), -f.arr}; }

TensorCtx tensor_ctx(std::vector<TwoVec> factors) {
    TensorCtx ctx;
    ctx.factors = std::move(factors);
    int n = ctx.strands();
    ctx.obj_dim = 1;
    for (const TwoVec& f : ctx.factors) ctx.obj_dim *= f.dim_obj;
    std::vector<Mat> dblocks;
    for (int i = 0; i < n; ++i) {
        long left = 1, right = 1;
        for (int j = 0; j < i; ++j) left *= ctx.factors[j].dim_obj;
        for (int j = i + 1; j < n; ++j) right *= ctx.factors[j].dim_obj;
        long sdim = left * ctx.factors[i].dim_arr * right;
        ctx.slot_offset.push_back(ctx.arr_dim);
        ctx.slot_dim.push_back(sdim);
        ctx.arr_dim += sdim;
        dblocks.push_back(kron(kron(Mat::identity(left), ctx.factors[i].d), Mat::identity(right)));
    }
    ctx.d = dblocks.empty() ? Mat(ctx.obj_dim, 0) : Mat::hcat(dblocks);
    return ctx;
}

TensorCtx tensor_power(const TwoVec& v, int n) {
    if (n < 1) throw InputError("tensor_power needs at least one strand");
    return tensor_ctx(std::vector<TwoVec>(n, v));
}

TensorCtx tensor_concat(const TensorCtx& a, const TensorCtx& b) {
    std::vector<TwoVec> factors = a.factors;
    factors.insert(factors.end(), b.factors.begin(), b.factors.end());
    return tensor_ctx(std::move(factors));
}

bool chain_equal(const ChainMap& f, const ChainMap& g) {
    return f.dom.total() == g.dom.total() && f.cod.total() == g.cod.total() && f.f0 == g.f0 && f.fw == g.fw;
}

ChainMap make_chain_map(TensorCtx dom, TensorCtx cod, Mat f0, Mat fw) {
    if (f0.rows() != cod.obj_dim || f0.cols() != dom.obj_dim) throw InputError("chain map object shape mismatch");
    if (fw.rows() != cod.arr_dim || fw.cols() != dom.arr_dim) throw InputError("chain map arrow shape mismatch");
    return ChainMap{std::move(dom), std::move(cod), std::move(f0), std::move(fw)};
}

ChainMap identity_chain(const TensorCtx& ctx) {
    return ChainMap{ctx, ctx, Mat::identity(ctx.obj_dim), Mat::identity(ctx.arr_dim)};
}

ChainMap compose_chain(const ChainMap& f, const ChainMap& g) {
    if (f.cod.total() != g.dom.total()) throw InputError("chain maps not composable");
    return ChainMap{f.dom, g.cod, g.f0 * f.f0, g.fw * f.fw};
}

ChainMap add_chain(const ChainMap& f, const ChainMap& g) {
    if (f.dom.total() != g.dom.total() || f.cod.total() != g.cod.total())
        throw InputError("chain map sum shape mismatch");
    return ChainMap{f.dom, f.cod, f.f0 + g.f0, f.fw + g.fw};
}

ChainMap tensor_chain(const ChainMap& f, const ChainMap& g) {
    TensorCtx dom = tensor_concat(f.dom, g.dom);
    TensorCtx cod = tensor_concat(f.cod, g.cod);
    Mat f0 = kron(f.f0, g.f0);
    // Arrow blocks: f-slots tensor g-objects, then f-objects tensor g-slots.
    // Cross blocks vanish. The f-slot block is contiguous (g-objects least
    // significant); the g-slot blocks must be placed slot by slot because the
    // context orders rows slot-major while the kron is f-object-major.
    Mat fw(cod.arr_dim, dom.arr_dim);
    Mat a = kron(f.fw, g.f0);
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            if (!is_zero(a.at(i, j))) fw.at(i, j) = a.at(i, j);
    int fk_cod = f.cod.strands(), fk_dom = f.dom.strands();
    for (int sj = 0; sj < g.cod.strands(); ++sj)
        for (int sl = 0; sl < g.dom.strands(); ++sl) {
            Mat gblock = g.fw.block(g.cod.slot_offset[sj], g.dom.slot_offset[sl], g.cod.slot_dim[sj],
                                    g.dom.slot_dim[sl]);
            if (gblock.is_zero()) continue;
            Mat b = kron(f.f0, gblock);
            long row0 = cod.slot_offset[fk_cod + sj];
            long col0 = dom.slot_offset[fk_dom + sl];
            for (long i = 0; i < b.rows(); ++i)
                for (long j = 0; j < b.cols(); ++j)
                    if (!is_zero(b.at(i, j))) fw.at(row0 + i, col0 + j) = b.at(i, j);
        }
    return ChainMap{std::move(dom), std::move(cod), std::move(f0), std::move(fw)};
}

namespace {

TwoVec uniform_base(const ChainMap& f) {
    if (f.dom.factors.empty()) throw InputError("lift of a map with no strands");
    const TwoVec& base = f.dom.factors[0];
    for (const TwoVec& v : f.dom.factors)
        if (v != base) throw InputError("lift requires a uniform base");
    for (const TwoVec& v : f.cod.factors)
        if (v != base) throw InputError("lift requires a uniform base");
    return base;
}

}  // namespace

ChainMap lift_chain_map(const ChainMap& f, int pos, int n) {
    TwoVec base = uniform_base(f);
    int k = f.dom.strands();
    if (pos < 1 || pos + k - 1 > n) throw InputError("lift window out of range");
    ChainMap out = f;
    if (pos > 1) out = tensor_chain(identity_chain(tensor_power(base, pos - 1)), out);
    if (pos + k - 1 < n) out = tensor_chain(out, identity_chain(tensor_power(base, n - k - pos + 1)));
    return out;
}

ChainMap swap_chain_map(const TwoVec& v, int pos, int n) {
    if (pos < 1 || pos + 1 > n) throw InputError("swap position out of range");
    long u = v.dim_obj, w = v.dim_arr;
    TensorCtx two = tensor_power(v, 2);
    Mat f0 = commutation(u, u);
    Mat fw(two.arr_dim, two.arr_dim);
    // slot 1 (W⊗U) -> slot 2 (U⊗W) and back, exchanging the factors.
    Mat k_wu = commutation(w, u);
    Mat k_uw = commutation(u, w);
    for (long i = 0; i < u * w; ++i)
        for (long j = 0; j < w * u; ++j)
            if (!is_zero(k_wu.at(i, j))) fw.at(two.slot_offset[1] + i, two.slot_offset[0] + j) = k_wu.at(i, j);
    for (long i = 0; i < w * u; ++i)
        for (long j = 0; j < u * w; ++j)
            if (!is_zero(k_uw.at(i, j))) fw.at(two.slot_offset[0] + i, two.slot_offset[1] + j) = k_uw.at(i, j);
    ChainMap tau{two, two, std::move(f0), std::move(fw)};
    return n == 2 && pos == 1 ? tau : lift_chain_map(tau, pos, n);
}

Mor chain_apply(const ChainMap& f, const Mor& m) {
    if (m.space != f.dom.total()) throw InputError("chain_apply space mismatch");
    return Mor{f.cod.total(), f.f0 * m.src, f.fw * m.arr};
}

Homotopy make_homotopy(ChainMap from, ChainMap to, Mat h) {
    if (from.dom.total() != to.dom.total() || from.cod.total() != to.cod.total())
        throw InputError("homotopy endpoints live on different contexts");
    if (h.rows() != from.cod.arr_dim || h.cols() != from.dom.obj_dim) throw InputError("homotopy matrix shape mismatch");
    return Homotopy{std::move(from), std::move(to), std::move(h)};
}

Homotopy zero_homotopy(const ChainMap& f) { return Homotopy{f, f, Mat(f.cod.arr_dim, f.dom.obj_dim)}; }

Homotopy whisker(const Homotopy& h, const ChainMap& pre, const ChainMap& post) {
    if (pre.cod.total() != h.from.dom.total()) throw InputError("whisker: pre does not land in the homotopy domain");
    if (h.from.cod.total() != post.dom.total()) throw InputError("whisker: post does not start at the homotopy codomain");
    return Homotopy{compose_chain(compose_chain(pre, h.from), post), compose_chain(compose_chain(pre, h.to), post),
                    post.fw * h.h * pre.f0};
}

Homotopy vcompose_homotopy(const Homotopy& a, const Homotopy& b) {
    if (!chain_equal(a.to, b.from)) throw InputError("homotopies not vertically composable");
    return Homotopy{a.from, b.to, a.h + b.h};
}

Homotopy lift_homotopy(const Homotopy& y, int pos, int n) {
    ChainMap from = lift_chain_map(y.from, pos, n);
    ChainMap to = lift_chain_map(y.to, pos, n);
    int k = y.from.dom.strands();
    TwoVec base = y.from.dom.factors[0];
    long left = 1, right = 1;
    for (int j = 0; j < pos - 1; ++j) left *= base.dim_obj;
    for (int j = 0; j < n - k - pos + 1; ++j) right *= base.dim_obj;
    // Window slot i of the lifted codomain receives I_left ⊗ (slot-i rows of
    // h) ⊗ I_right; all other slot rows stay zero.
    const TensorCtx& ycod = y.from.cod;
    Mat h(from.cod.arr_dim, from.dom.obj_dim);
    for (int s = 0; s < ycod.strands(); ++s) {
        Mat blockrows = y.h.block(ycod.slot_offset[s], 0, ycod.slot_dim[s], y.h.cols());
        Mat lifted = kron(kron(Mat::identity(left), blockrows), Mat::identity(right));
        long off = from.cod.slot_offset[pos - 1 + s];
        for (long i = 0; i < lifted.rows(); ++i)
            for (long j = 0; j < lifted.cols(); ++j)
                if (!is_zero(lifted.at(i, j))) h.at(off + i, j) = lifted.at(i, j);
    }
    return Homotopy{std::move(from), std::move(to), std::move(h)};
}

SpaceDecat decategorify_space(const TwoVec& v) {
    CokerProjection c = coker_projection(v.d);
    return SpaceDecat{c.proj.rows(), c.proj, c.section};
}

MorFamily identity_family(const TwoVec& v, Mat s) {
    if (s.rows() != v.dim_obj) throw InputError("identity family shape mismatch");
    return MorFamily{v, std::move(s), Mat(v.dim_arr, s.cols())};
}

MorFamily family_add(const MorFamily& a, const MorFamily& b) {
    if (a.space != b.space) throw InputError("family sum across different spaces");
    return MorFamily{a.space, a.S + b.S, a.H + b.H};
}

MorFamily family_precompose(const MorFamily& f, const Mat& m) { return MorFamily{f.space, f.S * m, f.H * m}; }

PathCompose compose_family_path(const std::vector<MorFamily>& edges) {
    PathCompose out;
    if (edges.empty()) throw InputError("empty family path");
    out.source = edges[0].S;
    out.arrow = edges[0].H;
    Mat target = edges[0].S + edges[0].space.d * edges[0].H;
    for (size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].S != target) {
            out.composable = false;
            out.bad_step = long(i);
            out.mismatch = edges[i].S - target;
            return out;
        }
        out.arrow = out.arrow + edges[i].H;
        target = edges[i].S + edges[i].space.d * edges[i].H;
    }
    return out;
}

}  // namespace tetra
