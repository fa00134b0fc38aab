#pragma once

#include "strataforge/module.hpp"

namespace strataforge {

// Start of a minimal projective resolution: P1 -> P0 ->> B with the first
// two syzygies.
struct Resolution {
    Module b;
    ProjectiveCoverResult p0;     // p0.cover ->> b
    SubmoduleResult omega1;       // ker(p0.epi) -> p0.cover
    ProjectiveCoverResult p1;     // p1.cover ->> omega1.module
    SubmoduleResult omega2;       // ker(p1.epi) -> p1.cover
};

Resolution resolve2(const Module& b);

// Ext^k(B, N) presented as Hom(omega, N) modulo restrictions of morphisms
// from the covering projective (k = 1 with omega1, k = 2 with omega2).
struct ExtSpace {
    Module omega, n;
    std::vector<ModuleMorphism> homs;  // basis of Hom(omega, n)
    Mat rel{Field::rationals(), 0, 0};   // coords of the coboundaries
    Mat comp{Field::rationals(), 0, 0};  // complement: one column per ext class

    int dim() const { return comp.cols(); }
    ModuleMorphism cocycle(int i) const;          // representative of class i
    Mat class_of(const ModuleMorphism& f) const;  // dim() x 1 coordinates
};

// omega_incl: the inclusion omega -> P of a syzygy into its projective.
ExtSpace ext_space(const ModuleMorphism& omega_incl, const Module& n);

ExtSpace ext1(const Resolution& r, const Module& n);
ExtSpace ext2(const Resolution& r, const Module& n);

// Flatten a morphism's blocks into one coordinate column (used to compare and
// combine morphisms linearly).
Mat vectorize(const ModuleMorphism& f);

// u with epi . u == f (f.dom projective); VerifyError when no lift exists.
ModuleMorphism lift_through_epi(const ModuleMorphism& f, const ModuleMorphism& epi);

// g with incl . g == f, for injective incl whose image contains im(f).
ModuleMorphism factor_through_injection(const ModuleMorphism& incl, const ModuleMorphism& f);

// The short exact sequence realized by a cocycle c: omega1 -> N.
struct Extension {
    Module e;
    ModuleMorphism incl_n;  // N -> E
    ModuleMorphism proj_b;  // E ->> B
};

Extension realize_extension(const Resolution& r, const Module& n, const ModuleMorphism& cocycle);

// Inverse direction: the cocycle omega1 -> N of a given short exact sequence.
ModuleMorphism cocycle_of_extension(const Resolution& r, const Extension& ext);

// Yoneda product of c1 in Ext^1(B, M) and c2 in Ext^1(M, N): the cocycle
// omega2(B) -> N representing c2 . c1 in Ext^2(B, N).
ModuleMorphism yoneda_push(const Resolution& rb, const ModuleMorphism& c1,
                           const Resolution& rm, const ModuleMorphism& c2);

}  // namespace strataforge
