#pragma once

#include <string>
#include <vector>

#include "tetra/report.hpp"

namespace tetra {

/// A finite category as tables over index sets. comp[g][f] is g∘f (f applied
/// first) and -1 where the pair is not composable.
struct FinCat {
    long n_obj = 0, n_mor = 0;
    std::vector<long> src, tgt;           // per morphism
    std::vector<long> id;                 // per object
    std::vector<std::vector<long>> comp;  // comp[g][f]
};

Report check_fincat(const FinCat& x);

/// Bifunctor tables on a finite category.
struct FinBifunctor {
    std::vector<std::vector<long>> obj;  // obj[x][y]
    std::vector<std::vector<long>> mor;  // mor[f][g]
};

Report check_bifunctor(const FinCat& x, const FinBifunctor& op);

/// Distributor components r[x][y][z] : (x◁y)◁z -> (x◁z)◁(y◁z).
using RComponents = std::vector<std::vector<std::vector<long>>>;

RComponents identity_distributor(const FinCat& x, const FinBifunctor& lhd);

/// Flags: category, functor, inverse_functor, invertible, r_components,
/// r_natural, hexagon. All violating tuples are listed.
Report check_semistrict_2rack(const FinCat& x, const FinBifunctor& lhd, const RComponents& r,
                              const FinBifunctor& lhd_inv);

/// Semistrict check with the identity distributor, plus the classical rack
/// axioms on objects and on morphisms (self-distributivity and bijectivity
/// of right translations), each decided by enumeration.
Report check_strict_2rack(const FinCat& x, const FinBifunctor& lhd);

struct FinGroup {
    long n = 0;
    long unit = 0;
    std::vector<std::vector<long>> mul;
    std::vector<long> inv;
};

FinGroup cyclic_group(long n);
FinGroup symmetric_group_3();
Report check_group(const FinGroup& g);

struct CrossedModule {
    FinGroup g, h;
    std::vector<long> boundary;             // H -> G
    std::vector<std::vector<long>> action;  // action[g][h] in H
};

/// Boundary equivariance and the Peiffer identity, by enumeration.
Report check_crossed_module(const CrossedModule& cm);

/// A strict 2-group presented on a crossed module: objects G, morphisms
/// (g, h) with source g and target ∂(h)g, monoidal product by semidirect
/// multiplication.
struct Strict2Group {
    FinCat cat;
    FinGroup g, h;
    std::vector<std::vector<long>> obj_tensor;
    std::vector<std::vector<long>> mor_tensor;
    long unit_obj = 0;
    std::vector<long> obj_inverse;
    std::vector<long> mor_comp_inverse;
};

Strict2Group two_group_from_crossed_module(const CrossedModule& cm);

/// Tablewise strict monoidal laws, including the whisker factorisation of
/// composition-inverses used by the conjugation construction.
Report check_strict_2group(const Strict2Group& g2);

/// A strict action of a 2-group on a finite category, as tables.
struct ActionTables {
    std::vector<std::vector<long>> obj;  // F[g][x]
    std::vector<std::vector<long>> mor;  // F[alpha][xi]
};

struct ConjugationRack {
    FinCat cat;  // the product category G x X
    FinBifunctor lhd;
};

/// (g,x) ◁ (h,y) = (h⊗g⊗h†, F(h,x)) on the product category; throws
/// InputError naming a violating pair when F fails the strict action laws.
ConjugationRack conjugation_rack(const Strict2Group& g2, const FinCat& x, const ActionTables& f);

/// Left translation of a 2-group on itself, the stock action.
ActionTables left_translation_action(const Strict2Group& g2);

}  // namespace tetra
