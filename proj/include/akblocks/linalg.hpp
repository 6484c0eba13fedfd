#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "akblocks/ffield.hpp"

namespace akblocks {

using Vec = std::vector<uint32_t>;

// Dense row-major matrix over F_p.  Desk scale (<= ~400x400); plain
// Gaussian elimination throughout.
class Matrix {
public:
    Matrix(const Fp& field, std::size_t rows, std::size_t cols);

    static Matrix identity(const Fp& field, std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Fp& field() const noexcept { return field_; }

    uint32_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, uint32_t v) { data_[i * cols_ + j] = v; }

    Vec row(std::size_t i) const;
    void set_row(std::size_t i, const Vec& v);

    Matrix transpose() const;
    Matrix mul(const Matrix& other) const;
    Vec apply(const Vec& x) const;  // M x

    bool operator==(const Matrix& o) const;

private:
    Fp field_;
    std::size_t rows_, cols_;
    Vec data_;
};

// Reduce rows in place to reduced row-echelon form, dropping zero rows.
// Returns the pivot column of each surviving row (strictly increasing).
std::vector<std::size_t> reduce_to_rref(std::vector<Vec>& rows, const Fp& field);

std::size_t rank(const Matrix& m);

// Canonical subspace of F_p^ambient: basis rows kept in reduced
// echelon form with strictly increasing pivots, so equality of
// subspaces is representation equality.
class Subspace {
public:
    static Subspace zero(const Fp& field, std::size_t ambient);
    static Subspace full(const Fp& field, std::size_t ambient);
    static Subspace span(const Fp& field, std::size_t ambient, std::vector<Vec> vectors);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Vec>& basis() const noexcept { return basis_; }
    const Fp& field() const noexcept { return field_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const;

private:
    Subspace(const Fp& field, std::size_t ambient) : field_(field), ambient_(ambient) {}
    Fp field_;
    std::size_t ambient_;
    std::vector<Vec> basis_;
};

// Right null space {x : M x = 0}.
Subspace kernel(const Matrix& m);

// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

// Any solution of M x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

Subspace intersect(const Subspace& s1, const Subspace& s2);
Subspace subspace_sum(const Subspace& s1, const Subspace& s2);

// A commutative, associative, unital algebra over F_p presented by a
// basis and structure constants: product[i][j] is the coefficient
// vector of b_i * b_j.
struct CommAlgebra {
    Fp field;
    std::size_t dim;
    std::vector<std::vector<Vec>> product;
    Vec one;

    Vec mul(const Vec& x, const Vec& y) const;
    Vec power(const Vec& x, uint64_t k) const;
    bool is_commutative() const;
};

// Monic minimal polynomial of z, coefficients low degree first, found
// by iterating powers 1, z, z^2, ... until they become dependent.
// `one` is the identity of the (sub)algebra z lives in.
Vec minimal_polynomial(const Vec& z, const Vec& one,
                       const std::function<Vec(const Vec&, const Vec&)>& mul, const Fp& field);

// Complete set of primitive orthogonal idempotents of a split
// commutative algebra.  Works over F_p by splitting along the
// Frobenius-fixed subalgebra {z : z^p = z}.
std::vector<Vec> split_idempotents(const CommAlgebra& algebra);

}  // namespace akblocks
