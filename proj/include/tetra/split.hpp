#pragma once

#include "tetra/zte.hpp"

namespace tetra {

/// A section of the quotient by a nonzero central object, in source/arrow
/// coordinates. A valid splitting is a section sigma0 of the object quotient
/// whose image absorbs im(d); the arrow-level section is then the identity on
/// W and the correction functional c forced by the target map is zero.
struct Splitting {
    Leibniz2Algebra algebra;
    Mat e;       // the central object, nonzero
    Mat proj0;   // U -> U/<e>
    Mat sigma0;  // U/<e> -> U, proj0 ∘ sigma0 = id
    Mat c;       // W -> K, kept explicitly; zero for every valid splitting
    Mat phi;     // U -> K, coordinate along e: id - sigma0∘proj0 = e∘phi
};

struct QuotientLeibniz2 {
    Leibniz2Algebra algebra;
    Mat proj0;    // U -> U/<e>
    Mat section;  // canonical complement section
};

/// Quotient by the line spanned by a central object; bracket and Jacobiator
/// are conjugated through the canonical complement.
QuotientLeibniz2 quotient_leibniz2(const Leibniz2Algebra& l, const Mat& e);

/// Validates the section and derives the rest. Throws InputError when sigma0
/// is not a section and StructureError when no splitting exists along it
/// (im(d) escapes the section image, e.g. whenever e lies in im(d)).
Splitting make_splitting(const Leibniz2Algebra& l, const Mat& e, const Mat& sigma0);

/// True iff the section intertwines the brackets and the Jacobiator, i.e. is
/// a strict homomorphism from the quotient.
bool is_leibniz_section(const Splitting& sp);

/// The rack structure induced by a splitting:
///   delta(x) = x⊗e + e⊗P x,     eps = phi,
///   x ◁ y = phi(y) x + P [x,y],  r = l3 ∘ (P⊗P⊗P),   P = sigma0∘proj0.
Linear2Rack rack_from_splitting(const Splitting& sp);

struct CoincidenceReport {
    Report report;  // flags: b0, bw, binv0, binvw, y
    Mat diff_b0, diff_bw, diff_y;
};

/// Compares the solution built from the algebra directly with the one built
/// from the induced rack. Exact equality is expected when the section is a
/// Leibniz homomorphism; otherwise the difference matrices are informative.
CoincidenceReport solutions_coincide(const Splitting& sp);

struct FlatRackFromLeibniz {
    FlatRack rack;
    Mat phi;
};

/// Flat version of the splitting construction for a flat central Leibniz
/// algebra with section sigma of the quotient by <e>.
FlatRackFromLeibniz flat_rack_from_central_leibniz(const Mat& bracket, const Mat& e, const Mat& sigma);

}  // namespace tetra
