#pragma once

#include "strataforge/covers.hpp"

namespace strataforge {

// The basic projective generator assembled from one cover per simple, with
// the summand splitting retained.
struct GeneratorResult {
    Module g;
    std::vector<int> summand_vertices;  // covered simple per summand, ascending
    std::vector<ModuleMorphism> injections, projections;
};
GeneratorResult projective_generator(AlgebraPtr lambda,
                                     const std::map<int, CoverCertificate>& covers);

// End(G) with left-to-right composition (so that modules over the result
// reproduce the source category) and the summand idempotents installed.
EndAlgebra generator_endomorphisms(const GeneratorResult& gen);

// Executable recovery: present End(G) on its Gabriel quiver and
// produce a verified algebra isomorphism back onto lambda.
struct RecoveryResult {
    GeneratorResult generator;
    EndAlgebra endo;
    GabrielResult gabriel;
    Mat iso_to_lambda{Field::rationals(), 0, 0};  // realized basis -> lambda coords
};
RecoveryResult recover_algebra(AlgebraPtr lambda,
                               const std::map<int, CoverCertificate>& covers);

// Ext-quiver with the quadratic part of the relations: one tensor block per
// ordered vertex pair (source, target), mapping through the Yoneda pairing
//   Ext^1(S_j, S_k) (x) Ext^1(S_i, S_j)  ->  Ext^2(S_i, S_k)
// whose kernel columns are the quadratic relation candidates.
struct TensorSlot {
    int mid;    // the intermediate vertex j
    int left;   // index into the Ext^1(S_j, S_k) basis
    int right;  // index into the Ext^1(S_i, S_j) basis
};
struct QuadraticBlock {
    int source, target;
    std::vector<TensorSlot> slots;
    // kernel of the pairing (the quadratic-dual relations) and its orthogonal
    // complement, the row space, which carries the quadratic relations of the
    // algebra itself in slot coordinates (Ext^2 is dual to the relation space,
    // so a hereditary algebra yields an empty `relations`).
    Mat kernel{Field::rationals(), 0, 0};
    Mat relations{Field::rationals(), 0, 0};
};
struct ExtQuiverResult {
    Quiver quiver;  // dim Ext^1(S_v, S_w) arrows v -> w
    std::vector<QuadraticBlock> blocks;
};
ExtQuiverResult ext_quiver_with_quadratic_relations(AlgebraPtr lambda);

}  // namespace strataforge
