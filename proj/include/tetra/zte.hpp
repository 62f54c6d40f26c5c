#pragma once

#include <optional>

#include "tetra/rack2.hpp"

namespace tetra {

/// A braiding solution on a 2-vector space: an invertible two-strand chain
/// map B with its inverse, plus the arrow part y of the natural isomorphism
/// between the two triple composites on three strands.
struct ZteSolution {
    TwoVec space;
    ChainMap b;
    ChainMap b_inv;
    Mat y;  // three-strand objects -> three-strand arrows
};

/// Triple composite (B⊗Id)(Id⊗B)(B⊗Id) / (Id⊗B)(B⊗Id)(Id⊗B).
ChainMap triple_word_lhs(const ZteSolution& sol);
ChainMap triple_word_rhs(const ZteSolution& sol);
Homotopy solution_homotopy(const ZteSolution& sol);

/// B(x⊗y) = y⊗x + e⊗[x,y], with the inverse y⊗x - [y,x]⊗e and the
/// Jacobiator as braiding isomorphism in the top arrow slot.
ZteSolution from_central_leibniz(const Leibniz2Algebra& l, const Mat& e);

/// B = (Id⊗◁)(τ⊗Id)(Id⊗Δ), inverse through the inverse operation, braiding
/// isomorphism z1 ⊗ (y1 ◁ z2) ⊗ r(x ⊗ y2 ⊗ z3).
ZteSolution from_linear_2rack(const Linear2Rack& rk);

/// Flags: z1 invertibility, z2 homotopy validity of y, z3/z4 the two
/// four-strand whiskering schedules chain with exact endpoint matches and
/// far-commutativity steps, z5 the two total arrow matrices agree.
Report verify_zte(const ZteSolution& sol);

/// Both sides of the braid relation for an invertible matrix on V⊗V.
bool verify_ybe(const Mat& m, long dim);

struct YbeSolution {
    long dim = 0;
    Mat b_bar;
};

struct SolutionDecat {
    YbeSolution ybe;
    SpaceDecat dec;
    Report report;  // flags: descends, invertible, ybe
};

SolutionDecat decategorify_solution(const ZteSolution& sol);

/// Flat braiding from a flat central Leibniz algebra / a flat rack.
Mat flat_solution_leibniz(const FlatLeibniz& g, const Mat& e_bar);
Mat flat_solution_rack(const FlatRack& r);

/// Square checks: the decategorified solution equals the flat formula applied
/// to the decategorified structure.
bool decat_square_leibniz(const Leibniz2Algebra& l, const Mat& e, const ZteSolution& sol);
bool decat_square_rack(const Linear2Rack& rk, const ZteSolution& sol);

}  // namespace tetra
