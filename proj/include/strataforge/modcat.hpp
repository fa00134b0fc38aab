#pragma once

#include <optional>

#include "strataforge/ext.hpp"

namespace strataforge {

// Endomorphism ring of a module as a structure-constant algebra over the
// deterministic hom basis.  With `opposite` the multiplication is reversed
// (b_i * b_j = b_j . b_i), matching the convention End(G)^op.
struct EndAlgebra {
    std::vector<ModuleMorphism> basis;
    StructAlgebra alg;  // idempotent data not populated

    ModuleMorphism element(const Coords& c) const;
    Coords coords_of(const ModuleMorphism& f) const;
};

EndAlgebra endomorphism_algebra(const Module& m, bool opposite = false);

// One direct summand of a module, with the splitting data:
// sum of inclusion . projection over all summands is the identity.
struct Summand {
    Module module;
    ModuleMorphism inclusion;
    ModuleMorphism projection;
};

// Krull-Schmidt decomposition into indecomposable summands.  The budget caps
// the exhaustive idempotent searches in residue algebras; exceeding it throws
// ResourceError.  Throws UnsupportedError when a residue division algebra
// cannot be certified over Q.
std::vector<Summand> decompose(const Module& m, long long budget = 1 << 20);

// Complete isomorphism test for modules already known indecomposable: some
// pairwise composite of hom-basis elements is invertible.
std::optional<ModuleMorphism> indecomposable_isomorphism(const Module& m, const Module& n);

struct IsoResult {
    bool isomorphic = false;
    std::optional<ModuleMorphism> witness;  // a verified isomorphism m -> n
};

IsoResult modules_isomorphic(const Module& m, const Module& n, long long budget = 1 << 20);

// --- polynomial helpers over an exact field (ascending coefficients) ---

using Poly = std::vector<Scalar>;

int poly_deg(const Poly& p);
Poly poly_normalize(const Field& f, Poly p);            // strip + make monic
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b);
Poly poly_gcd(const Field& f, Poly a, Poly b);           // monic gcd
Poly poly_derivative(const Field& f, const Poly& p);

// Minimal polynomial of an element (monic, ascending coefficients).
Poly min_poly(const StructAlgebra& a, const Coords& x);

// Outcome of trying to break a minimal polynomial into coprime parts.
struct PolySplit {
    enum class Kind { Coprime, PurePower, Irreducible, Unknown } kind;
    Poly f, g;  // Coprime: mu = f*g; PurePower: mu = f^k with k >= 2
};

PolySplit split_min_poly(const Field& fld, const Poly& mu, long long budget);

}  // namespace strataforge
