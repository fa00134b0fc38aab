#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strataforge/lattice.hpp"
#include "strataforge/recollement.hpp"

using namespace strataforge;

namespace {

// vertices o (open) and c (closed? no: here c is the OPEN one in the tests
// below); arrows a: o->c, b: c->o with b*a = 0, so dim 5
AlgebraPtr cp1_algebra(Field f = Field::prime(5)) {
    AlgebraPresentation p{f, {}, {}};
    p.quiver.vertices = {"o", "c"};
    p.quiver.arrows = {Arrow{"a", 0, 1}, Arrow{"b", 1, 0}};
    p.relations = {{RelationTerm{Scalar(1), PathWord{0, {0, 1}}}}};
    return std::make_shared<Algebra>(realize(p));
}

// A_3 with the composite killed: al: 0->1, be: 1->2, be*al = 0
AlgebraPtr a3_algebra(Field f = Field::prime(3)) {
    AlgebraPresentation p{f, {}, {}};
    p.quiver.vertices = {"1", "2", "3"};
    p.quiver.arrows = {Arrow{"al", 0, 1}, Arrow{"be", 1, 2}};
    p.relations = {{RelationTerm{Scalar(1), PathWord{0, {0, 1}}}}};
    return std::make_shared<Algebra>(realize(p));
}

}  // namespace

TEST_CASE("make_recollement validates and splits the algebra") {
    AlgebraPtr lam = cp1_algebra();
    CHECK_THROWS_AS(make_recollement(lam, {2}), MalformedError);
    CHECK_THROWS_AS(make_recollement(lam, {1, 1}), MalformedError);

    RecollementDatum r = make_recollement(lam, {1});
    REQUIRE(r.has_open());
    REQUIRE(r.has_closed());
    // eLe at vertex c is the dual numbers: e_c and the loop ab
    CHECK(r.open_algebra->dim() == 2);
    CHECK(r.open_algebra->num_vertices() == 1);
    CHECK(r.open_algebra->quiver().arrows.size() == 1);
    CHECK(r.closed_algebra->dim() == 1);
    CHECK(r.open_index_of == std::vector<int>{-1, 0});
    CHECK(r.closed_index_of == std::vector<int>{0, -1});
}

TEST_CASE("restriction j^* on projectives") {
    AlgebraPtr lam = cp1_algebra();
    RecollementDatum r = make_recollement(lam, {1});
    Module pc = projective_module(lam, 1);
    Module jpc = j_upper_star(r, pc);
    jpc.validate();
    // e * P(c) is the free module of rank one over the dual numbers
    CHECK(modules_isomorphic(jpc, projective_module(r.open_algebra, 0)).isomorphic);
    // e * P(o) is the corner simple
    Module jpo = j_upper_star(r, projective_module(lam, 0));
    CHECK(modules_isomorphic(jpo, simple_module(r.open_algebra, 0)).isomorphic);
}

TEST_CASE("closed inflation and i^* / i^!") {
    AlgebraPtr lam = cp1_algebra();
    RecollementDatum r = make_recollement(lam, {1});
    Module sc = simple_module(r.closed_algebra, 0);
    Module infl = i_lower_star(r, sc);
    infl.validate();
    CHECK(infl.dims == std::vector<int>{1, 0});
    CHECK(modules_isomorphic(infl, simple_module(lam, 0)).isomorphic);
    // restriction kills inflations
    CHECK(j_upper_star(r, infl).total() == 0);

    // i^* P(o) = S_o (the arrow a hits the open fiber and dies), i^* P(c) = 0
    Module istar_po = i_upper_star(r, projective_module(lam, 0));
    CHECK(modules_isomorphic(istar_po, sc).isomorphic);
    CHECK(i_upper_star(r, projective_module(lam, 1)).total() == 0);

    // i^! is the largest e-killed submodule
    CoSubmodule co = i_upper_shriek(r, projective_module(lam, 1));
    CHECK(co.closed_module.total() == 0);
    CoSubmodule co2 = i_upper_shriek(r, infl);
    co2.in_lambda.inclusion.verify();
    CHECK(modules_isomorphic(co2.closed_module, sc).isomorphic);
}

TEST_CASE("j_! and j_* of the corner simple flank the simple IC") {
    for (Field f : {Field::prime(2), Field::prime(5), Field::rationals()}) {
        AlgebraPtr lam = cp1_algebra(f);
        RecollementDatum r = make_recollement(lam, {1});
        Module s = simple_module(r.open_algebra, 0);

        Module shriek = j_lower_shriek(r, s);
        shriek.validate();
        CHECK(shriek.dims == std::vector<int>{1, 1});
        // top S_c, socle S_o: generated by the c fiber
        CHECK(top_of(shriek).module.dims == std::vector<int>{0, 1});
        CHECK(socle_of(shriek).module.dims == std::vector<int>{1, 0});

        Module star = j_lower_star(r, s);
        star.validate();
        CHECK(star.dims == std::vector<int>{1, 1});
        CHECK(top_of(star).module.dims == std::vector<int>{1, 0});
        CHECK(socle_of(star).module.dims == std::vector<int>{0, 1});

        // both restrict back to s
        CHECK(modules_isomorphic(j_upper_star(r, shriek), s).isomorphic);
        CHECK(modules_isomorphic(j_upper_star(r, star), s).isomorphic);

        // the canonical map has image the simple at the open vertex
        Module ic = intermediate_extension(r, s);
        CHECK(modules_isomorphic(ic, simple_module(lam, 1)).isomorphic);
    }
}

TEST_CASE("j_! of the free corner module is the big projective") {
    AlgebraPtr lam = cp1_algebra();
    RecollementDatum r = make_recollement(lam, {1});
    Module free = projective_module(r.open_algebra, 0);
    Module shriek = j_lower_shriek(r, free);
    CHECK(modules_isomorphic(shriek, projective_module(lam, 1)).isomorphic);
}

TEST_CASE("adjunction dimensions: Hom(j_! N, M) = Hom(N, j^* M)") {
    AlgebraPtr lam = cp1_algebra();
    RecollementDatum r = make_recollement(lam, {1});
    std::vector<Module> corner_mods = {simple_module(r.open_algebra, 0),
                                       projective_module(r.open_algebra, 0)};
    std::vector<Module> lambda_mods = {projective_module(lam, 0), projective_module(lam, 1),
                                       simple_module(lam, 0), simple_module(lam, 1)};
    for (const Module& n : corner_mods)
        for (const Module& m : lambda_mods) {
            size_t lhs = hom_basis(j_lower_shriek(r, n), m).size();
            size_t rhs = hom_basis(n, j_upper_star(r, m)).size();
            CHECK(lhs == rhs);
            size_t lhs2 = hom_basis(m, j_lower_star(r, n)).size();
            CHECK(lhs2 == rhs);
        }
    // i_* against i^* and i^!
    Module sc = simple_module(r.closed_algebra, 0);
    for (const Module& m : lambda_mods) {
        CHECK(hom_basis(m, i_lower_star(r, sc)).size() ==
              hom_basis(i_upper_star(r, m), sc).size());
        CHECK(hom_basis(i_lower_star(r, sc), m).size() ==
              hom_basis(sc, i_upper_shriek(r, m).closed_module).size());
    }
}

TEST_CASE("classify_simples recovers the simple lambda-modules") {
    for (AlgebraPtr lam : {cp1_algebra(), a3_algebra()}) {
        for (int open_v = 0; open_v < lam->num_vertices(); ++open_v) {
            RecollementDatum r = make_recollement(lam, {open_v});
            std::vector<GluedSimple> gs = classify_simples(r);
            REQUIRE(static_cast<int>(gs.size()) == lam->num_vertices());
            for (int v = 0; v < lam->num_vertices(); ++v) {
                CHECK(gs[v].lambda_vertex == v);
                CHECK(gs[v].from_open == (v == open_v));
                CHECK(modules_isomorphic(gs[v].module, simple_module(lam, v)).isomorphic);
            }
        }
    }
}

TEST_CASE("A3 stratification: middle vertex open") {
    AlgebraPtr lam = a3_algebra();
    RecollementDatum r = make_recollement(lam, {1});
    CHECK(r.open_algebra->dim() == 1);
    CHECK(r.closed_algebra->dim() == 2);  // e_1, e_3 with no surviving arrows
    Module s = simple_module(r.open_algebra, 0);
    Module shriek = j_lower_shriek(r, s);
    CHECK(shriek.dims == std::vector<int>{0, 1, 1});
    Module star = j_lower_star(r, s);
    CHECK(star.dims == std::vector<int>{1, 1, 0});
    CHECK(modules_isomorphic(intermediate_extension(r, s), simple_module(lam, 1)).isomorphic);
}
