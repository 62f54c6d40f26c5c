#pragma once

#include "tetra/leibniz2.hpp"

namespace tetra {

/// Coproduct data for a linear 2-rack: object part U -> U⊗U and arrow part
/// W -> W⊗U ⊕ U⊗W, subject to the chain condition of the induced one-to-two
/// strand functor.
struct Coproduct {
    Mat d0;  // U -> U⊗U
    Mat dw;  // W -> (W⊗U) ⊕ (U⊗W)
};

struct Linear2Rack {
    TwoVec space;
    Coproduct delta;
    Mat eps;             // U -> K
    BilinearOp lhd;      // the self-distributive operation
    BilinearOp lhd_inv;  // its two-sided inverse in the sense of c6
    Mat r;               // U⊗U⊗U -> W, distributor arrow part
};

Linear2Rack make_linear_2rack(const TwoVec& v, Coproduct delta, Mat eps, BilinearOp lhd, BilinearOp lhd_inv, Mat r);

ChainMap coproduct_chain_map(const Linear2Rack& rk);
ChainMap counit_chain_map(const Linear2Rack& rk);

/// (x ◁ y) ◁ z as a three-to-one strand chain map.
ChainMap selfdist_lhs_chain(const Linear2Rack& rk);
/// (x ◁ z_(1)) ◁ (y ◁ z_(2)) via the coproduct.
ChainMap selfdist_rhs_chain(const Linear2Rack& rk);

/// Flags:
///   c1 coassociativity, c2 cocommutativity, c3 counit,
///   c4 coproduct/operation compatibility, c5 counit multiplicativity,
///   c6 both inverse-law equations, c7 distributor homotopy validity,
///   c8 distributor hexagon; plus the functoriality flags of the pieces.
Report check_linear_2rack(const Linear2Rack& rk);

/// The rack structure on the one-dimensional central extension of a Leibniz
/// 2-algebra: coordinates (a, x) with
///   delta(a,x) = (a,x)⊗(1,0) + (1,0)⊗(0,x),  eps(a,x) = a,
///   (a,x)◁(b,y) = (ab, bx + [x,y]),          r = the Jacobiator arrow.
Linear2Rack rack_from_trivial_extension(const Leibniz2Algebra& l);

struct FlatRack {
    long dim = 0;
    Mat delta;    // dim -> dim^2
    Mat eps;      // dim -> 1
    Mat lhd;      // dim^2 -> dim
    Mat lhd_inv;  // dim^2 -> dim
};

Report check_flat_rack(const FlatRack& r);

struct RackDecat {
    FlatRack flat;
    SpaceDecat dec;
};

RackDecat decategorify_rack(const Linear2Rack& rk);

bool is_group_like(const Linear2Rack& rk, const Mat& x);

/// Verifies that every candidate is group-like, that the candidate set is
/// closed under the operation on the nose, that the inverse operation
/// inverts it, and that the distributor components satisfy the semistrict
/// identity at candidate quadruples.
Report group_like_report(const Linear2Rack& rk, const std::vector<Mat>& candidates);

}  // namespace tetra
