#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "strataforge/matrix.hpp"

using namespace strataforge;

TEST_CASE("prime field arithmetic") {
    Field f = Field::prime(5);
    CHECK(f.reduce(Scalar(7)) == Scalar(2));
    CHECK(f.reduce(Scalar(-1)) == Scalar(4));
    CHECK(f.mul(Scalar(3), Scalar(4)) == Scalar(2));
    CHECK(f.inv(Scalar(3)) == Scalar(2));
    CHECK(f.characteristic() == 5);
    // a denominator reduces via the modular inverse
    CHECK(f.reduce(Scalar(1) / Scalar(2)) == Scalar(3));
    CHECK_THROWS_AS(Field::prime(6), MalformedError);
    CHECK_THROWS_AS(f.inv(Scalar(0)), MalformedError);
}

TEST_CASE("rational field arithmetic") {
    Field f = Field::rationals();
    Scalar x = Scalar(2) / Scalar(3);
    CHECK(f.mul(x, f.inv(x)) == Scalar(1));
    CHECK(f.characteristic() == 0);
    CHECK(f.parse("-7/2") == Scalar(-7) / Scalar(2));
}

TEST_CASE("rref basic properties over Q") {
    Field f = Field::rationals();
    Mat m(f, 3, 4);
    int vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {1, 0, 1, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m.set(i, j, Scalar(vals[i][j]));
    RrefResult r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.transform.mul(m) == r.echelon);
    // idempotent: rref of the echelon form is itself
    CHECK(rref(r.echelon).echelon == r.echelon);
    Mat k = kernel_basis(m);
    CHECK(k.cols() == 2);
    CHECK(m.mul(k).is_zero());
}

namespace {

// Independent rank oracle over F_2: size of the row space is 2^rank.
int brute_rank_f2(const Mat& m) {
    std::set<std::vector<int>> space;
    int nr = m.rows(), nc = m.cols();
    for (int mask = 0; mask < (1 << nr); ++mask) {
        std::vector<int> v(nc, 0);
        for (int i = 0; i < nr; ++i)
            if (mask & (1 << i))
                for (int j = 0; j < nc; ++j)
                    v[j] = (v[j] + (m.at(i, j) == Scalar(1) ? 1 : 0)) % 2;
        space.insert(v);
    }
    int r = 0;
    while ((1u << r) < space.size()) ++r;
    return r;
}

}  // namespace

TEST_CASE("rank and kernel agree with brute force over F_2") {
    Field f = Field::prime(2);
    for (int nr = 1; nr <= 3; ++nr)
        for (int nc = 1; nc <= 3; ++nc)
            for (int bits = 0; bits < (1 << (nr * nc)); ++bits) {
                Mat m(f, nr, nc);
                for (int i = 0; i < nr; ++i)
                    for (int j = 0; j < nc; ++j)
                        m.set(i, j, Scalar((bits >> (i * nc + j)) & 1));
                int r = rank(m);
                REQUIRE(r == brute_rank_f2(m));
                Mat k = kernel_basis(m);
                REQUIRE(k.cols() == nc - r);
                REQUIRE(m.mul(k).is_zero());
                REQUIRE(rank(k) == k.cols());
            }
}

TEST_CASE("solve finds particular solutions and detects inconsistency") {
    Field f = Field::prime(7);
    Mat a(f, 2, 3);
    a.set(0, 0, Scalar(1)); a.set(0, 1, Scalar(2)); a.set(0, 2, Scalar(3));
    a.set(1, 0, Scalar(2)); a.set(1, 1, Scalar(4)); a.set(1, 2, Scalar(6));
    Mat b(f, 2, 1);
    b.set(0, 0, Scalar(5)); b.set(1, 0, Scalar(4));  // 4 != 2*5 mod 7
    CHECK_FALSE(solve(a, b).solution.has_value());
    Mat b2(f, 2, 1);
    b2.set(0, 0, Scalar(5)); b2.set(1, 0, Scalar(10));
    SolveResult s = solve(a, b2);
    REQUIRE(s.solution.has_value());
    CHECK(a.mul(*s.solution) == b2);
    CHECK(s.kernel.cols() == 2);
}

TEST_CASE("column_space is canonical across spanning sets") {
    Field f = Field::prime(3);
    Mat a(f, 3, 2), b(f, 3, 3);
    // a: columns (1,1,0), (0,1,1); b: same span, different generators
    a.set(0, 0, Scalar(1)); a.set(1, 0, Scalar(1));
    a.set(1, 1, Scalar(1)); a.set(2, 1, Scalar(1));
    b.set(0, 0, Scalar(1)); b.set(1, 0, Scalar(2)); b.set(2, 0, Scalar(1));
    b.set(0, 1, Scalar(2)); b.set(1, 1, Scalar(2)); b.set(2, 1, Scalar(0));
    b.set(0, 2, Scalar(1)); b.set(1, 2, Scalar(1)); b.set(2, 2, Scalar(0));
    CHECK(column_space(a) == column_space(b));
    CHECK(subspace_contains(b, a));
    CHECK(subspace_sum(a, b) == column_space(a));
    Mat comp = complement_basis(a);
    CHECK(comp.cols() == 1);
    CHECK(rank(a.hstack(comp)) == 3);
}

TEST_CASE("coordinates_in recovers coefficients") {
    Field f = Field::rationals();
    Mat basis(f, 3, 2);
    basis.set(0, 0, Scalar(1));
    basis.set(1, 1, Scalar(2));
    Mat v(f, 3, 1);
    v.set(0, 0, Scalar(3));
    v.set(1, 0, Scalar(5));
    Mat c = coordinates_in(basis, v);
    CHECK(basis.mul(c) == v);
    Mat out(f, 3, 1);
    out.set(2, 0, Scalar(1));
    CHECK_THROWS_AS(coordinates_in(basis, out), VerifyError);
}
