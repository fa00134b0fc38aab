#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strataforge/lattice.hpp"

using namespace strataforge;

namespace {

AlgebraPtr cp1_algebra(Field f = Field::prime(2)) {
    AlgebraPresentation p{f, {}, {}};
    p.quiver.vertices = {"o", "c"};
    p.quiver.arrows = {Arrow{"a", 0, 1}, Arrow{"b", 1, 0}};
    p.relations = {{RelationTerm{Scalar(1), PathWord{0, {0, 1}}}}};
    return std::make_shared<Algebra>(realize(p));
}

}  // namespace

TEST_CASE("submodule lattice of a simple module") {
    AlgebraPtr alg = cp1_algebra();
    std::vector<SubmoduleResult> subs = all_submodules(simple_module(alg, 1));
    REQUIRE(subs.size() == 2);
    CHECK(subs[0].module.total() == 0);
    CHECK(subs[1].module.total() == 1);
}

TEST_CASE("submodule lattice of the big projective") {
    AlgebraPtr alg = cp1_algebra();
    Module pc = projective_module(alg, 1);
    REQUIRE(pc.dims == std::vector<int>{1, 2});
    std::vector<SubmoduleResult> subs = all_submodules(pc);
    // 0, the socle <ab>, the radical, and pc itself
    REQUIRE(subs.size() == 4);
    std::vector<std::vector<int>> dims;
    for (const auto& s : subs) dims.push_back(s.module.dims);
    CHECK(dims == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 1}, {1, 2}});
    for (const auto& s : subs) {
        s.module.validate();
        s.inclusion.verify();
        CHECK(s.inclusion.is_injective());
    }
    // the radical shows up as an actual lattice member
    SubmoduleResult rad = radical_submodule(pc);
    CHECK(subs[2].module.dims == rad.module.dims);
}

TEST_CASE("isotypic square has p+3 submodules") {
    AlgebraPtr alg = cp1_algebra();
    Module sc = simple_module(alg, 1);
    Module m = direct_sum(alg, {sc, sc}).module;
    // subspaces of F_2^2: zero, three lines, the plane
    CHECK(all_submodules(m).size() == 5);
}

TEST_CASE("quotients mirror the lattice in decreasing dimension") {
    AlgebraPtr alg = cp1_algebra();
    Module pc = projective_module(alg, 1);
    std::vector<QuotientModuleResult> qs = all_quotients(pc);
    REQUIRE(qs.size() == 4);
    CHECK(qs.front().module.total() == 3);
    CHECK(qs.back().module.total() == 0);
    for (const auto& q : qs) {
        q.module.validate();
        q.projection.verify();
        CHECK(q.projection.is_surjective());
    }
}

TEST_CASE("enumeration is finite-field only and budgeted") {
    AlgebraPtr alg = cp1_algebra(Field::rationals());
    Module pc = projective_module(alg, 1);
    CHECK_THROWS_AS(all_submodules(pc), UnsupportedError);
    AlgebraPtr alg2 = cp1_algebra();
    CHECK_THROWS_AS(all_submodules(projective_module(alg2, 1), 2), ResourceError);
}
