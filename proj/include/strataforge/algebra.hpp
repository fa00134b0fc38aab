#pragma once

#include <map>
#include <memory>
#include <vector>

#include "strataforge/matrix.hpp"
#include "strataforge/quiver.hpp"

namespace strataforge {

using Coords = std::vector<Scalar>;  // coordinates over an algebra basis

// A realized split basic algebra: quiver presentation together with the
// finite basis of path residues and the multiplication table.
class Algebra {
public:
    const AlgebraPresentation& presentation() const { return pres_; }
    const Field& field() const { return pres_.field; }
    const Quiver& quiver() const { return pres_.quiver; }

    int dim() const { return static_cast<int>(basis_.size()); }
    int num_vertices() const { return static_cast<int>(pres_.quiver.vertices.size()); }
    bool is_zero() const { return num_vertices() == 0; }

    const std::vector<PathWord>& basis() const { return basis_; }
    int basis_source(int i) const { return src_[i]; }
    int basis_target(int i) const { return tgt_[i]; }
    int vertex_idempotent(int v) const { return idem_[v]; }
    int arrow_basis_index(int a) const { return arrow_basis_[a]; }

    Coords zero_elt() const { return Coords(basis_.size(), Scalar(0)); }
    Coords unit() const;
    Coords basis_elt(int i) const;
    Coords mul(const Coords& a, const Coords& b) const;
    const Coords& mul_basis(int i, int j) const { return table_[i][j]; }

    bool structurally_equal(const Algebra& o) const;
    std::string describe_elt(const Coords& c) const;

    // Invariant checks used by realize() and by tests.
    void verify_associative() const;
    void verify_radical_nilpotent() const;

private:
    friend Algebra realize(const AlgebraPresentation&, int, int);
    AlgebraPresentation pres_{Field::rationals(), {}, {}};
    std::vector<PathWord> basis_;   // ascending deglex; trivial paths first
    std::vector<int> src_, tgt_;
    std::vector<int> idem_;         // per vertex: basis index of e_v
    std::vector<int> arrow_basis_;  // per arrow: basis index of its residue
    std::vector<std::vector<Coords>> table_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Compute the basis of paths modulo the relation ideal, degree by degree,
// until the arrow ideal dies.  Throws MalformedError("infinite-dimensional
// algebra") when the arrow ideal is not nilpotent modulo the relations.
Algebra realize(const AlgebraPresentation& pres, int max_degree = 30, int max_paths = 40000);

// ---------------------------------------------------------------------------
// Algebras given purely by structure constants (corners, quotients,
// endomorphism algebras) and the generic Gabriel-presentation machinery.

struct StructAlgebra {
    Field field = Field::rationals();
    int dim = 0;
    std::vector<std::vector<Coords>> table;  // b_i b_j expanded over the basis
    Coords unit;
    std::vector<std::string> idem_labels;    // primitive orthogonal idempotents
    std::vector<Coords> idems;               // summing to the unit

    Coords mul(const Coords& a, const Coords& b) const;
    Mat left_mult(const Coords& a) const;    // dim x dim matrix of x -> a*x
    Mat elements_matrix(const std::vector<Coords>& xs) const;  // columns
    void verify() const;                     // associativity + idempotent axioms
};

StructAlgebra struct_view(const Algebra& a);

// Jacobson radical, as a matrix whose columns are coordinates of a basis.
// `rep` is a faithful matrix representation of the algebra (defaults to the
// left regular representation).  Char 0 uses the trace form; char p uses the
// Cohen-Ivanyos-Wales trace-of-powers chain.
Mat radical_basis(const StructAlgebra& a, const std::vector<Mat>* rep = nullptr);

struct StructQuotient {
    StructAlgebra algebra;                       // idempotent data not populated
    Mat projection{Field::rationals(), 0, 0};    // quotient coords from parent coords
    Mat section{Field::rationals(), 0, 0};       // linear section
};

// Quotient by a two-sided ideal given by a column-span basis.
StructQuotient quotient_struct(const StructAlgebra& a, const Mat& ideal);

struct GabrielResult {
    AlgebraPresentation presentation;
    Algebra realized;
    Mat to_algebra;       // (a.dim x realized.dim): realized basis -> input coords, an algebra iso
    Mat from_algebra;     // inverse translation
};

// Quiver-with-relations presentation of a split basic algebra, with the
// translation isomorphism onto the input.  Throws MalformedError when the
// input is not split basic over its idempotent list.
GabrielResult gabriel_presentation(const StructAlgebra& a);

struct CornerResult {
    Algebra algebra;        // eAe realized on its own quiver
    Mat to_parent;          // parent coords of each corner basis element
    Mat from_parent;        // corner coords from parent coords (valid on eAe)
};

// eAe for e the sum of the vertex idempotents in `vertices`.
CornerResult corner(const Algebra& a, const std::vector<int>& vertices);

struct QuotientResult {
    Algebra algebra;        // A / AeA on the complementary vertices
    Mat projection;         // quotient coords from parent coords (algebra map)
    Mat section;            // a linear section: parent coords from quotient coords
};

// A/AeA for e the sum of the vertex idempotents in `vertices`.  Returns the
// explicit zero algebra when the ideal is everything.
QuotientResult quotient_by_idempotent_ideal(const Algebra& a, const std::vector<int>& vertices);

// Reversed multiplication; vertices preserved, arrows reversed.
Algebra opposite(const Algebra& a);

// Verify that the linear map `t` (columns: images of a's basis in b's
// coordinates) is an algebra isomorphism a -> b.
bool is_algebra_isomorphism(const Algebra& a, const Algebra& b, const Mat& t);

// ---------------------------------------------------------------------------

struct StratifiedAlgebra {
    AlgebraPtr algebra;
    std::vector<std::vector<int>> strata;  // vertex partition, closed first

    void validate() const;
    // Vertices of the open complement of the first `k` strata.
    std::vector<int> open_vertices_after(int k) const;
};

}  // namespace strataforge
