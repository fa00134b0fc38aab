#pragma once

#include "strataforge/modcat.hpp"

namespace strataforge {

// Recollement of mod(lambda) defined by the idempotent e = sum of the open
// vertex idempotents: closed part mod(lambda/LeL), open part mod(eLe).
struct RecollementDatum {
    AlgebraPtr lambda;
    std::vector<int> open_vertices;    // ascending lambda vertex indices
    std::vector<int> closed_vertices;  // the complement, ascending

    AlgebraPtr open_algebra;    // eLe on its own quiver (null when e = 0)
    AlgebraPtr closed_algebra;  // lambda/LeL (null when the quotient is zero)

    // translation data
    Mat corner_to_parent{Field::rationals(), 0, 0};   // eLe coords -> lambda coords
    Mat corner_from_parent{Field::rationals(), 0, 0}; // valid on eLe
    Mat quotient_projection{Field::rationals(), 0, 0}; // lambda coords -> quotient coords
    Mat quotient_section{Field::rationals(), 0, 0};

    // vertex correspondences (lambda index <-> part index)
    std::vector<int> open_index_of;    // per lambda vertex, index in open_algebra or -1
    std::vector<int> closed_index_of;  // per lambda vertex, index in closed_algebra or -1

    bool has_open() const { return open_algebra != nullptr; }
    bool has_closed() const { return closed_algebra != nullptr; }
};

RecollementDatum make_recollement(AlgebraPtr lambda, const std::vector<int>& open_vertices);

// --- the six functors (objects only) ---

// exact restriction to the open part: M |-> eM
Module j_upper_star(const RecollementDatum& r, const Module& m);

// extension by zero from the closed part (exact inflation)
Module i_lower_star(const RecollementDatum& r, const Module& n);

// left adjoints / right adjoints
Module i_upper_star(const RecollementDatum& r, const Module& m);   // M/(LeL)M
// i^! M: largest submodule killed by e, returned with its inclusion into m.
struct CoSubmodule {
    Module closed_module;       // over the closed algebra
    SubmoduleResult in_lambda;  // the same object inside m
};
CoSubmodule i_upper_shriek(const RecollementDatum& r, const Module& m);

Module j_lower_shriek(const RecollementDatum& r, const Module& n);  // Le (x)_{eLe} N
Module j_lower_star(const RecollementDatum& r, const Module& n);    // Hom_{eLe}(eL, N)

// canonical map j_! N -> j_* N and its image
ModuleMorphism canonical_map(const RecollementDatum& r, const Module& n);
Module intermediate_extension(const RecollementDatum& r, const Module& n);

// The simple objects of mod(lambda) sorted by provenance: closed simples are
// inflations, open simples are intermediate extensions of corner simples.
struct GluedSimple {
    int lambda_vertex;
    bool from_open;
    Module module;  // as a lambda-module
};
std::vector<GluedSimple> classify_simples(const RecollementDatum& r);

}  // namespace strataforge
