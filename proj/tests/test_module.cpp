#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strataforge/module.hpp"

using namespace strataforge;

namespace {

AlgebraPtr cp1_algebra(Field f = Field::prime(5)) {
    AlgebraPresentation p{f, {}, {}};
    p.quiver.vertices = {"o", "c"};
    p.quiver.arrows = {Arrow{"a", 0, 1}, Arrow{"b", 1, 0}};
    p.relations = {{RelationTerm{Scalar(1), PathWord{0, {0, 1}}}}};
    return std::make_shared<Algebra>(realize(p));
}

}  // namespace

TEST_CASE("projective modules have the path-residue fibers") {
    AlgebraPtr alg = cp1_algebra();
    Module po = projective_module(alg, 0);
    Module pc = projective_module(alg, 1);
    po.validate();
    pc.validate();
    CHECK(po.dims == std::vector<int>{1, 1});   // e_o, a
    CHECK(pc.dims == std::vector<int>{1, 2});   // b; e_c, a*b
    CHECK(composition_length(pc) == 3);
}

TEST_CASE("hom dimension from a projective equals the fiber dimension") {
    AlgebraPtr alg = cp1_algebra();
    Module po = projective_module(alg, 0);
    Module pc = projective_module(alg, 1);
    CHECK(hom_basis(po, pc).size() == 1);  // dim pc at vertex o
    CHECK(hom_basis(pc, pc).size() == 2);  // dim pc at vertex c
    CHECK(hom_basis(pc, po).size() == 1);  // dim po at vertex c
    CHECK(hom_basis(po, po).size() == 1);
    for (const auto& h : hom_basis(pc, pc)) h.verify();
    Module sc = simple_module(alg, 1);
    CHECK(hom_basis(pc, sc).size() == 1);
    CHECK(hom_basis(po, sc).size() == 0);
}

TEST_CASE("radical, top and socle of P(c)") {
    AlgebraPtr alg = cp1_algebra();
    Module pc = projective_module(alg, 1);
    SubmoduleResult rad = radical_submodule(pc);
    CHECK(rad.module.dims == std::vector<int>{1, 1});
    rad.inclusion.verify();
    QuotientModuleResult top = top_of(pc);
    CHECK(top.module.dims == std::vector<int>{0, 1});
    top.projection.verify();
    SubmoduleResult soc = socle_of(pc);
    CHECK(soc.module.dims == std::vector<int>{0, 1});
    soc.inclusion.verify();
}

TEST_CASE("kernel, image and cokernel of a morphism") {
    AlgebraPtr alg = cp1_algebra();
    Module po = projective_module(alg, 0);
    Module pc = projective_module(alg, 1);
    // the unique (up to scalar) map P(o) -> P(c): e_o |-> b
    std::vector<ModuleMorphism> hs = hom_basis(po, pc);
    REQUIRE(hs.size() == 1);
    const ModuleMorphism& h = hs[0];
    h.verify();
    CHECK(h.is_injective());  // e_o |-> b, a |-> a*b
    SubmoduleResult im = image(h);
    CHECK(im.module.dims == std::vector<int>{1, 1});
    QuotientModuleResult cok = cokernel(h);
    CHECK(cok.module.dims == std::vector<int>{0, 1});  // S_c
    cok.projection.verify();
    SubmoduleResult ker = kernel(h);
    CHECK(ker.module.is_zero_module());
}

TEST_CASE("direct sums come with injections and projections") {
    AlgebraPtr alg = cp1_algebra();
    Module po = projective_module(alg, 0);
    Module pc = projective_module(alg, 1);
    DirectSumResult s = direct_sum(alg, {po, pc});
    s.module.validate();
    CHECK(s.module.dims == std::vector<int>{2, 3});
    for (int i = 0; i < 2; ++i) {
        s.injections[i].verify();
        s.projections[i].verify();
        CHECK(s.projections[i].compose(s.injections[i]) ==
              identity_morphism(i == 0 ? po : pc));
    }
    CHECK(s.projections[1].compose(s.injections[0]).is_zero());
}

TEST_CASE("projective covers of simples and of a radical") {
    AlgebraPtr alg = cp1_algebra();
    Module sc = simple_module(alg, 1);
    ProjectiveCoverResult c = projective_cover(sc);
    CHECK(c.multiplicities == std::vector<int>{0, 1});
    CHECK(c.cover.dims == std::vector<int>{1, 2});
    CHECK(c.epi.is_surjective());
    SubmoduleResult k = kernel(c.epi);
    // the first syzygy of S_c is rad P(c), which is P(o) here
    CHECK(k.module.dims == std::vector<int>{1, 1});
    QuotientModuleResult ktop = top_of(k.module);
    CHECK(ktop.module.dims == std::vector<int>{1, 0});

    // a decomposable top: cover of S_o + S_c
    DirectSumResult two = direct_sum(alg, {simple_module(alg, 0), sc});
    ProjectiveCoverResult c2 = projective_cover(two.module);
    CHECK(c2.multiplicities == std::vector<int>{1, 1});
    CHECK(c2.cover.dims == std::vector<int>{2, 3});
}

TEST_CASE("submodule generated by a vector") {
    AlgebraPtr alg = cp1_algebra();
    Module pc = projective_module(alg, 1);
    // generate from e_c: everything
    std::vector<Mat> gens{Mat(pc.field(), 1, 0), Mat(pc.field(), 2, 1)};
    gens[1].set(0, 0, Scalar(1));  // fiber order at c: e_c then a*b
    SubmoduleResult all = submodule_generated(pc, gens);
    CHECK(all.module.dims == pc.dims);
    // generate from a*b: just the socle
    gens[1] = Mat(pc.field(), 2, 1);
    gens[1].set(1, 0, Scalar(1));
    SubmoduleResult soc = submodule_generated(pc, gens);
    CHECK(soc.module.dims == std::vector<int>{0, 1});
}

TEST_CASE("module validation rejects maps violating relations") {
    AlgebraPtr alg = cp1_algebra();
    Module bad{alg, {1, 1}, {Mat(alg->field(), 1, 1), Mat(alg->field(), 1, 1)}};
    bad.arrow_maps[0].set(0, 0, Scalar(1));
    bad.arrow_maps[1].set(0, 0, Scalar(1));  // b then a is nonzero: violates ab=0... (rel kills b after a)
    CHECK_THROWS_AS(bad.validate(), MalformedError);
    bad.arrow_maps[1].set(0, 0, Scalar(0));
    bad.validate();
}
