#pragma once

#include "tetra/report.hpp"
#include "tetra/twovec.hpp"

namespace tetra {

/// A bilinear operation on a 2-vector space, given by its object component
/// and the two mixed arrow components. Well-formedness:
///   (B1) m_uu ∘ (d ⊗ Id) = d ∘ m_wu
///   (B2) m_uu ∘ (Id ⊗ d) = d ∘ m_uw
///   (B3) m_wu ∘ (Id_W ⊗ d) = m_uw ∘ (d ⊗ Id_W)
/// (B1)/(B2) make the induced two-strand chain map valid; (B3) makes the
/// action on pairs of morphisms independent of the composition order.
struct BilinearOp {
    TwoVec space;
    Mat m_uu;  // U⊗U -> U
    Mat m_wu;  // W⊗U -> W
    Mat m_uw;  // U⊗W -> W
};

BilinearOp make_bilinear(const TwoVec& v, Mat m_uu, Mat m_wu, Mat m_uw);
BilinearOp zero_bilinear(const TwoVec& v);
Report check_bilinear(const BilinearOp& op);

/// The operation as a chain map on two strands. Throws StructureError naming
/// the violated condition when (B1)-(B3) fail.
ChainMap bilinear_chain_map(const BilinearOp& op);

/// Functorial action on a pair of morphisms.
Mor bilinear_mor(const BilinearOp& op, const Mor& f, const Mor& g);

/// Pairs two morphism families through the operation; the parameter space is
/// the tensor product of the two inputs' parameter spaces.
MorFamily bilinear_family(const BilinearOp& op, const MorFamily& a, const MorFamily& b);

struct Leibniz2Algebra {
    TwoVec space;
    BilinearOp bracket;
    Mat l3;  // W x U^3, arrow part of the Jacobiator
};

Leibniz2Algebra make_leibniz2(const TwoVec& v, BilinearOp bracket, Mat l3);

struct CentralObject {
    Mat e;  // dim_obj x 1
};

ChainMap bracket_chain_map(const Leibniz2Algebra& l);
Mor bracket_morphisms(const Leibniz2Algebra& l, const Mor& f, const Mor& g);

/// The two three-strand composite functors the Jacobiator connects:
/// [[x,y],z] and [[x,z],y] + [x,[y,z]].
ChainMap jac_lhs_chain(const Leibniz2Algebra& l);
ChainMap jac_rhs_chain(const Leibniz2Algebra& l);

/// Flags: b1, b2, b3, jac_endpoints, jac_naturality, jacobiator.
Report check_leibniz2(const Leibniz2Algebra& l);

bool check_central(const Leibniz2Algebra& l, const Mat& e);

/// Leibniz 2-algebra on (g, K) from an invariant skew form: the Jacobiator
/// arrow is omega([x,y], z) in the one-dimensional arrow space.
struct OmegaInstance {
    Leibniz2Algebra algebra;
    CentralObject central;
};
OmegaInstance example_omega(const Mat& bracket_g, const Mat& e, const Mat& omega);

/// Adjoins a one-dimensional object summand spanned by a new central object
/// (1, 0, ...); brackets and Jacobiator act through the old coordinates.
OmegaInstance trivial_central_extension(const Leibniz2Algebra& l);

struct FlatLeibniz {
    long dim = 0;
    Mat bracket;  // dim x dim^2
};

struct LeibnizDecat {
    FlatLeibniz flat;
    SpaceDecat dec;
};

LeibnizDecat decategorify_leibniz(const Leibniz2Algebra& l);

/// Brute-force Leibniz identity for structure constants, the test oracle for
/// every flat bracket this library produces.
bool flat_leibniz_identity_holds(const Mat& bracket);

bool flat_central(const Mat& bracket, const Mat& e);

}  // namespace tetra
