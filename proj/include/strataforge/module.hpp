#pragma once

#include "strataforge/algebra.hpp"

namespace strataforge {

// Finite-dimensional left module over a realized algebra: a vector space per
// vertex, a matrix per arrow (mapping the source fiber into the target
// fiber), subject to the relations.
struct Module {
    AlgebraPtr alg;
    std::vector<int> dims;        // per vertex
    std::vector<Mat> arrow_maps;  // per arrow: dims[target] x dims[source]

    const Field& field() const { return alg->field(); }
    int num_vertices() const { return alg->num_vertices(); }
    int dim(int v) const { return dims[v]; }
    int total() const;
    int offset(int v) const;      // start of vertex v's block in the total space
    bool is_zero_module() const { return total() == 0; }

    // Action on the total space.
    Mat path_action(const PathWord& p) const;       // total x total
    Mat basis_action(int i) const;                  // algebra basis element
    Mat action(const Coords& x) const;              // arbitrary element

    void validate() const;  // shapes, relations
    std::vector<int> dimension_vector() const { return dims; }
};

Module zero_module(AlgebraPtr alg);
Module simple_module(AlgebraPtr alg, int v);
// Left projective P(v) = (algebra) e_v: basis = path residues with source v,
// graded by target, arrows acting by left multiplication.
Module projective_module(AlgebraPtr alg, int v);

struct ModuleMorphism {
    Module dom, cod;
    std::vector<Mat> blocks;  // per vertex: cod.dims[v] x dom.dims[v]

    Mat total_matrix() const;
    void verify() const;  // blocks commute with the arrow actions
    bool is_zero() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const { return is_injective() && is_surjective(); }

    ModuleMorphism compose(const ModuleMorphism& inner) const;  // this after inner
    ModuleMorphism add(const ModuleMorphism& o) const;
    ModuleMorphism scale(const Scalar& c) const;
    bool operator==(const ModuleMorphism& o) const;
};

ModuleMorphism zero_morphism(const Module& dom, const Module& cod);
ModuleMorphism identity_morphism(const Module& m);

// Basis of Hom(M, N), deterministic order.
std::vector<ModuleMorphism> hom_basis(const Module& m, const Module& n);

struct SubmoduleResult {
    Module module;
    ModuleMorphism inclusion;
};

struct QuotientModuleResult {
    Module module;
    ModuleMorphism projection;
    std::vector<Mat> sections;  // per vertex: linear section of the projection
};

SubmoduleResult kernel(const ModuleMorphism& f);
SubmoduleResult image(const ModuleMorphism& f);
QuotientModuleResult cokernel(const ModuleMorphism& f);

// Smallest submodule containing the given vectors (columns per vertex; a
// matrix with zero columns means no generators at that vertex).
SubmoduleResult submodule_generated(const Module& m, const std::vector<Mat>& gens);

// Quotient by the image of a (not necessarily injective) morphism into m.
QuotientModuleResult quotient_module(const Module& m, const ModuleMorphism& into);

SubmoduleResult radical_submodule(const Module& m);   // sum of arrow images
QuotientModuleResult top_of(const Module& m);         // m / rad m
SubmoduleResult socle_of(const Module& m);            // joint kernel of the arrows

struct DirectSumResult {
    Module module;
    std::vector<ModuleMorphism> injections;
    std::vector<ModuleMorphism> projections;
};

DirectSumResult direct_sum(AlgebraPtr alg, const std::vector<Module>& parts);

struct ProjectiveCoverResult {
    Module cover;                      // direct sum of P(v)^{mult[v]}
    ModuleMorphism epi;                // cover ->> m
    std::vector<int> multiplicities;   // per vertex: dim of top(m) at v
};

ProjectiveCoverResult projective_cover(const Module& m);

// Multiset of composition factors, as multiplicities per vertex (all simples
// are one-dimensional since the algebra is split basic).
std::vector<int> composition_factors(const Module& m);
int composition_length(const Module& m);

}  // namespace strataforge
