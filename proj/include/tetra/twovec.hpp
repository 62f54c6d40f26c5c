#pragma once

#include <vector>

#include "tetra/mat.hpp"

namespace tetra {

/// A 2-vector space stored as a 2-term complex d : W -> U. Objects live in U,
/// morphisms in U ⊕ W with source u, target u + d·w and identity (u, 0).
struct TwoVec {
    long dim_obj = 0;
    long dim_arr = 0;
    Mat d;  // dim_obj x dim_arr

    TwoVec() : d(0, 0) {}
    TwoVec(long u, long w, Mat dd) : dim_obj(u), dim_arr(w), d(std::move(dd)) {
        if (d.rows() != dim_obj || d.cols() != dim_arr) throw InputError("TwoVec: d shape mismatch");
    }

    bool operator==(const TwoVec& o) const { return dim_obj == o.dim_obj && dim_arr == o.dim_arr && d == o.d; }
    bool operator!=(const TwoVec& o) const { return !(*this == o); }

    // Source, target and identity as block matrices over U ⊕ W.
    Mat source_map() const { return Mat::hcat({Mat::identity(dim_obj), Mat::zero(dim_obj, dim_arr)}); }
    Mat target_map() const { return Mat::hcat({Mat::identity(dim_obj), d}); }
    Mat identity_map() const { return Mat::vcat({Mat::identity(dim_obj), Mat::zero(dim_arr, dim_obj)}); }
};

TwoVec make_two_vec(Mat d);

/// The 2-vector space with one object dimension and no arrows.
TwoVec scalar_two_vec();

/// A morphism f = (src, arr): src -> src + d·arr. The target is always
/// computed, never stored.
struct Mor {
    TwoVec space;
    Mat src;  // dim_obj x 1
    Mat arr;  // dim_arr x 1
};

Mor mor(const TwoVec& v, Mat src, Mat arr);
Mor mor_identity(const TwoVec& v, Mat obj);
Mat mor_target(const Mor& f);
bool mor_equal(const Mor& f, const Mor& g);
Mor mor_add(const Mor& f, const Mor& g);
Mor mor_compose(const Mor& f, const Mor& g);  // g after f; needs target(f) = src(g)
Mor mor_invert(const Mor& f);

/// Flattened tensor product of 2-term complexes. The arrow space is the
/// ordered direct sum over slots i of U⊗...⊗W_i⊗...⊗U, slot index ascending;
/// objects are row-major with the leftmost factor most significant.
struct TensorCtx {
    std::vector<TwoVec> factors;
    long obj_dim = 1;
    long arr_dim = 0;
    Mat d;                          // obj_dim x arr_dim
    std::vector<long> slot_offset;  // per factor
    std::vector<long> slot_dim;

    TwoVec total() const { return TwoVec(obj_dim, arr_dim, d); }
    int strands() const { return int(factors.size()); }
};

TensorCtx tensor_ctx(std::vector<TwoVec> factors);
TensorCtx tensor_power(const TwoVec& v, int n);
TensorCtx tensor_concat(const TensorCtx& a, const TensorCtx& b);

/// A linear functor between tensor contexts: object matrix + arrow matrix
/// commuting with the differentials.
struct ChainMap {
    TensorCtx dom, cod;
    Mat f0;  // cod.obj_dim x dom.obj_dim
    Mat fw;  // cod.arr_dim x dom.arr_dim

    bool chain_condition_holds() const { return f0 * dom.d == cod.d * fw; }
};

/// Equality is exact equality of both matrices over equal total complexes.
bool chain_equal(const ChainMap& f, const ChainMap& g);

ChainMap make_chain_map(TensorCtx dom, TensorCtx cod, Mat f0, Mat fw);
ChainMap identity_chain(const TensorCtx& ctx);
ChainMap compose_chain(const ChainMap& f, const ChainMap& g);  // g after f
ChainMap add_chain(const ChainMap& f, const ChainMap& g);
ChainMap tensor_chain(const ChainMap& f, const ChainMap& g);
ChainMap lift_chain_map(const ChainMap& f, int pos, int n);  // 1-based window position
ChainMap swap_chain_map(const TwoVec& v, int pos, int n);

/// Applies the functor to a morphism of the total complex.
Mor chain_apply(const ChainMap& f, const Mor& m);

/// A linear natural transformation between chain maps F and G, stored as
/// h : dom objects -> cod arrows. Validity:
///   (H1) cod.d · h = G.f0 - F.f0
///   (H2) h · dom.d = G.fw - F.fw
struct Homotopy {
    ChainMap from, to;
    Mat h;

    bool h1_holds() const { return from.cod.d * h == to.f0 - from.f0; }
    bool h2_holds() const { return h * from.dom.d == to.fw - from.fw; }
};

Homotopy make_homotopy(ChainMap from, ChainMap to, Mat h);
Homotopy zero_homotopy(const ChainMap& f);
Homotopy whisker(const Homotopy& h, const ChainMap& pre, const ChainMap& post);
Homotopy vcompose_homotopy(const Homotopy& a, const Homotopy& b);
Homotopy lift_homotopy(const Homotopy& y, int pos, int n);

struct SpaceDecat {
    long dim = 0;
    Mat proj;
    Mat section;
};

/// Isomorphism classes of objects = coker(d), with the deterministic
/// complement from coker_projection.
SpaceDecat decategorify_space(const TwoVec& v);

/// A linear family of morphisms of `space`, indexed by a parameter space P:
/// p |-> (S·p, H·p). Used to evaluate coherence diagrams edge by edge.
struct MorFamily {
    TwoVec space;
    Mat S;  // dim_obj x P
    Mat H;  // dim_arr x P
};

MorFamily identity_family(const TwoVec& v, Mat s);
MorFamily family_add(const MorFamily& a, const MorFamily& b);
MorFamily family_precompose(const MorFamily& f, const Mat& m);

struct PathCompose {
    bool composable = true;
    long bad_step = -1;  // first step whose source fails to match
    Mat mismatch;        // difference at that step
    Mat source;          // object matrix of the whole path
    Mat arrow;           // summed arrow matrix
};

/// Composes a chain of morphism families, verifying at every step that the
/// next source equals the previous target exactly.
PathCompose compose_family_path(const std::vector<MorFamily>& edges);

}  // namespace tetra
