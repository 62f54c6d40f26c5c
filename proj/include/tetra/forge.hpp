#pragma once

#include <cstdint>

#include "tetra/finrack.hpp"
#include "tetra/split.hpp"

namespace tetra {

struct SamplingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AffineMatSolutions {
    bool consistent = false;
    Mat particular;
    std::vector<Mat> kernel;
};

/// All Jacobiator arrows making the given bracket a valid structure: the
/// endpoint, naturality and coherence conditions are linear in the arrow.
/// The coherence constraint is assembled from the expanded identity, not from
/// the diagram-composing checker, so the two can cross-validate.
AffineMatSolutions solve_l3(const TwoVec& space, const BilinearOp& bracket);

/// All distributor arrows compatible with coalgebra-and-operation data that
/// already satisfies its own axioms. On the endpoint-condition subspace the
/// one nonlinear term of the coherence identity has a constant value, which
/// makes the system affine.
AffineMatSolutions solve_r(const TwoVec& space, const Coproduct& delta, const Mat& eps, const BilinearOp& lhd,
                           const BilinearOp& lhd_inv);

struct SampledLeibniz2 {
    Leibniz2Algebra algebra;
    CentralObject central;
    Mat sigma0;  // a section exhibiting the instance as splittable
};

/// Deterministic, always checker-passing instances: a core bracket with
/// central values, optional acyclic padding for a nonzero differential, a
/// Jacobiator arrow drawn from solve_l3, and a random change of basis.
SampledLeibniz2 sample_leibniz2(std::uint64_t seed, long u, long w, int bound = 3);

/// Rack sampled through the splitting construction with the distributor
/// redrawn from solve_r, then a random change of basis.
Linear2Rack sample_rack2(std::uint64_t seed, long u, long w, int bound = 3);

// Named fixtures used across the test and acceptance suites.
Leibniz2Algebra fixture_a();   // two-dimensional flat algebra span{x, e}, [x,x] = e
Leibniz2Algebra fixture_b();   // abelian complex, U = K^2, W = K, d = 0
OmegaInstance fixture_c();     // one-dimensional central extension of fixture_b
Linear2Rack fixture_d();       // rack on the extension of fixture_b
Leibniz2Algebra fixture_e();   // nonzero Jacobiator arrow over the lift of fixture_a
ConjugationRack fixture_f();   // conjugation 2-rack of the Z/2-Z/3 crossed module
Strict2Group fixture_f_group();

}  // namespace tetra
