#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "akblocks/linalg.hpp"

using namespace akblocks;

namespace {

Matrix from_rows(const Fp& f, const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Matrix random_matrix(const Fp& f, std::size_t rows, std::size_t cols, std::mt19937& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng() % f.modulus());
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    Fp f7(7);
    CHECK(rank(Matrix::identity(f7, 3)) == 3);
    CHECK(rank(Matrix(f7, 2, 5)) == 0);
    CHECK(rank(from_rows(f7, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel basics") {
    Fp f7(7);
    CHECK(kernel(Matrix::identity(f7, 4)).dim() == 0);
    Subspace full = kernel(Matrix(f7, 3, 3));
    CHECK(full.dim() == 3);
    CHECK(full == Subspace::full(f7, 3));

    Matrix m = from_rows(f7, {{1, 2}, {2, 4}});
    Subspace k = kernel(m);
    REQUIRE(k.dim() == 1);
    // spanned by a multiple of (2, -1); M v = 0 exactly
    Vec v = k.basis()[0];
    CHECK(m.apply(v) == Vec{0, 0});
    CHECK(f7.add(v[0], f7.mul(2, v[1])) == 0);
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937 rng(7);
    Fp f(13);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        Matrix m = random_matrix(f, rows, cols, rng);
        CHECK(rank(m) + kernel(m).dim() == cols);
    }
}

TEST_CASE("solve") {
    Fp f5(5);
    Matrix id = Matrix::identity(f5, 3);
    Vec b{1, 2, 3};
    CHECK(solve(id, b) == b);

    Matrix inconsistent = from_rows(f5, {{1, 0}, {1, 0}});
    CHECK(!solve(inconsistent, {1, 2}).has_value());

    Matrix scalar = from_rows(f5, {{2}});
    auto x = solve(scalar, {3});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 4);
}

TEST_CASE("matrix inverse") {
    Fp f7(7);
    Matrix m = from_rows(f7, {{1, 2}, {3, 4}});
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(m.mul(*inv) == Matrix::identity(f7, 2));
    CHECK(!inverse(from_rows(f7, {{1, 2}, {2, 4}})).has_value());
}

TEST_CASE("subspace intersection") {
    Fp f7(7);
    Subspace s = Subspace::span(f7, 3, {{1, 0, 0}, {0, 1, 0}});
    CHECK(intersect(s, s) == s);
    CHECK(intersect(s, Subspace::zero(f7, 3)).dim() == 0);

    Subspace t = Subspace::span(f7, 3, {{0, 1, 0}, {0, 0, 1}});
    Subspace line = intersect(s, t);
    REQUIRE(line.dim() == 1);
    CHECK(s.contains(line.basis()[0]));
    CHECK(t.contains(line.basis()[0]));

    CHECK_THROWS_AS(intersect(s, Subspace::zero(f7, 4)), precondition_error);
}

TEST_CASE("intersection contains exactly the common vectors") {
    std::mt19937 rng(11);
    Fp f(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t ambient = 4 + rng() % 3;
        auto rand_span = [&](std::size_t count) {
            std::vector<Vec> vecs;
            for (std::size_t i = 0; i < count; ++i) {
                Vec v(ambient);
                for (uint32_t& x : v) x = rng() % 5;
                vecs.push_back(std::move(v));
            }
            return Subspace::span(f, ambient, std::move(vecs));
        };
        Subspace s1 = rand_span(1 + rng() % 4), s2 = rand_span(1 + rng() % 4);
        Subspace both = intersect(s1, s2);
        CHECK(s1.contains(both));
        CHECK(s2.contains(both));
        // dim(S1 ∩ S2) = dim S1 + dim S2 - dim(S1 + S2)
        CHECK(both.dim() == s1.dim() + s2.dim() - subspace_sum(s1, s2).dim());
        // random members of S1 that happen to lie in S2 are in the intersection
        for (int probe = 0; probe < 10; ++probe) {
            Vec v(ambient, 0);
            for (const Vec& b : s1.basis()) {
                uint32_t c = rng() % 5;
                for (std::size_t i = 0; i < ambient; ++i) v[i] = f.add(v[i], f.mul(c, b[i]));
            }
            if (s2.contains(v)) CHECK(both.contains(v));
        }
    }
}

namespace {

// diagonal product algebra F_p^k, plus an optional nilpotent part
CommAlgebra diagonal_algebra(const Fp& f, std::size_t k) {
    CommAlgebra alg{f, k, {}, Vec(k, 1)};
    alg.product.assign(k, std::vector<Vec>(k, Vec(k, 0)));
    for (std::size_t i = 0; i < k; ++i) alg.product[i][i][i] = 1;
    return alg;
}

// F_p[x]/(x^2): basis 1, x
CommAlgebra dual_numbers(const Fp& f) {
    CommAlgebra alg{f, 2, {}, {1, 0}};
    alg.product.assign(2, std::vector<Vec>(2, Vec(2, 0)));
    alg.product[0][0] = {1, 0};
    alg.product[0][1] = {0, 1};
    alg.product[1][0] = {0, 1};
    alg.product[1][1] = {0, 0};
    return alg;
}

}  // namespace

TEST_CASE("minimal polynomials") {
    Fp f7(7);
    CommAlgebra alg = diagonal_algebra(f7, 3);
    auto mul = [&](const Vec& x, const Vec& y) { return alg.mul(x, y); };

    // identity: X - 1
    CHECK(minimal_polynomial(alg.one, alg.one, mul, f7) == Vec{6, 1});
    // zero: X
    CHECK(minimal_polynomial(Vec{0, 0, 0}, alg.one, mul, f7) == Vec{0, 1});
    // proper idempotent: X^2 - X
    CHECK(minimal_polynomial(Vec{1, 0, 0}, alg.one, mul, f7) == Vec{0, 6, 1});
}

TEST_CASE("split idempotents") {
    Fp f7(7);

    SUBCASE("one-dimensional algebra") {
        CommAlgebra alg = diagonal_algebra(f7, 1);
        auto es = split_idempotents(alg);
        REQUIRE(es.size() == 1);
        CHECK(es[0] == Vec{1});
    }

    SUBCASE("diagonal split") {
        CommAlgebra alg = diagonal_algebra(f7, 2);
        auto es = split_idempotents(alg);
        REQUIRE(es.size() == 2);
        CHECK(((es[0] == Vec{1, 0} && es[1] == Vec{0, 1}) ||
               (es[0] == Vec{0, 1} && es[1] == Vec{1, 0})));
    }

    SUBCASE("local ring does not split") {
        CommAlgebra alg = dual_numbers(f7);
        auto es = split_idempotents(alg);
        REQUIRE(es.size() == 1);
        CHECK(es[0] == Vec{1, 0});
    }

    SUBCASE("bigger diagonal, orthogonality replay") {
        CommAlgebra alg = diagonal_algebra(Fp(11), 5);
        auto es = split_idempotents(alg);
        REQUIRE(es.size() == 5);
        Vec total(5, 0);
        for (const Vec& e : es) {
            CHECK(alg.mul(e, e) == e);
            for (std::size_t i = 0; i < 5; ++i) total[i] = Fp(11).add(total[i], e[i]);
        }
        CHECK(total == alg.one);
    }

    SUBCASE("local times simple") {
        // F_p[x]/(x^2) x F_p: basis (1,0), (x,0), (0,1)
        CommAlgebra alg{f7, 3, {}, {1, 0, 1}};
        alg.product.assign(3, std::vector<Vec>(3, Vec(3, 0)));
        alg.product[0][0] = {1, 0, 0};
        alg.product[0][1] = alg.product[1][0] = {0, 1, 0};
        alg.product[2][2] = {0, 0, 1};
        auto es = split_idempotents(alg);
        REQUIRE(es.size() == 2);
        std::sort(es.begin(), es.end());
        CHECK(es[0] == Vec{0, 0, 1});
        CHECK(es[1] == Vec{1, 0, 0});
    }

    SUBCASE("non-commutative input is rejected") {
        CommAlgebra alg = diagonal_algebra(f7, 2);
        alg.product[0][1] = {1, 0};  // break symmetry
        CHECK_THROWS_AS(split_idempotents(alg), precondition_error);
    }
}
