#include "akblocks/linalg.hpp"

#include <algorithm>
#include <string>

namespace akblocks {

Matrix::Matrix(const Fp& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(const Fp& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void Matrix::set_row(std::size_t i, const Vec& v) {
    std::copy(v.begin(), v.end(), data_.begin() + i * cols_);
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

Matrix Matrix::mul(const Matrix& other) const {
    if (cols_ != other.rows_) throw precondition_error("matrix product shape mismatch");
    if (field_ != other.field_) throw context_mismatch_error("matrix product over different fields");
    Matrix out(field_, rows_, other.cols_);
    uint64_t p = field_.modulus();
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            uint64_t aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                uint64_t v = out.at(i, j) + aik * other.at(k, j) % p;
                out.set(i, j, static_cast<uint32_t>(v >= p ? v - p : v));
            }
        }
    }
    return out;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw precondition_error("matrix-vector shape mismatch");
    Vec out(rows_, 0);
    uint64_t p = field_.modulus();
    for (std::size_t i = 0; i < rows_; ++i) {
        uint64_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            acc += static_cast<uint64_t>(at(i, j)) * x[j] % p;
            if (acc >= (uint64_t(1) << 62)) acc %= p;
        }
        out[i] = static_cast<uint32_t>(acc % p);
    }
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

std::vector<std::size_t> reduce_to_rref(std::vector<Vec>& rows, const Fp& field) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
        std::size_t sel = row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[row], rows[sel]);
        uint32_t inv = field.inv(rows[row][col]);
        for (std::size_t j = col; j < ncols; ++j) rows[row][j] = field.mul(rows[row][j], inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == row || rows[i][col] == 0) continue;
            uint32_t factor = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                rows[i][j] = field.sub(rows[i][j], field.mul(factor, rows[row][j]));
        }
        pivots.push_back(col);
        ++row;
    }
    rows.resize(pivots.size());
    return pivots;
}

std::size_t rank(const Matrix& m) {
    std::vector<Vec> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);
    return reduce_to_rref(rows, m.field()).size();
}

Subspace Subspace::zero(const Fp& field, std::size_t ambient) {
    return Subspace(field, ambient);
}

Subspace Subspace::full(const Fp& field, std::size_t ambient) {
    Subspace s(field, ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        Vec v(ambient, 0);
        v[i] = 1;
        s.basis_.push_back(std::move(v));
    }
    return s;
}

Subspace Subspace::span(const Fp& field, std::size_t ambient, std::vector<Vec> vectors) {
    for (const Vec& v : vectors) {
        if (v.size() != ambient) throw precondition_error("span vector of wrong length");
    }
    reduce_to_rref(vectors, field);
    Subspace s(field, ambient);
    s.basis_ = std::move(vectors);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw precondition_error("membership test in wrong ambient dimension");
    Vec w = v;
    for (const Vec& b : basis_) {
        std::size_t pivot = 0;
        while (pivot < ambient_ && b[pivot] == 0) ++pivot;
        if (pivot == ambient_) continue;
        uint32_t factor = w[pivot];
        if (factor == 0) continue;
        for (std::size_t j = pivot; j < ambient_; ++j)
            w[j] = field_.sub(w[j], field_.mul(factor, b[j]));
    }
    return std::all_of(w.begin(), w.end(), [](uint32_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const Vec& v) { return contains(v); });
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && field_ == o.field_ && basis_ == o.basis_;
}

Subspace kernel(const Matrix& m) {
    std::vector<Vec> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);
    std::vector<std::size_t> pivots = reduce_to_rref(rows, m.field());

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = m.field().neg(rows[i][free]);
        basis.push_back(std::move(v));
    }
    return Subspace::span(m.field(), m.cols(), std::move(basis));
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw precondition_error("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Vec> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = m.row(i);
        rows[i].resize(2 * n, 0);
        rows[i][n + i] = 1;
    }
    std::vector<std::size_t> pivots = reduce_to_rref(rows, m.field());
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, rows[i][n + j]);
    return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw precondition_error("solve: rhs of wrong length");
    std::vector<Vec> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows[i] = m.row(i);
        rows[i].push_back(b[i]);
    }
    std::vector<std::size_t> pivots = reduce_to_rref(rows, m.field());
    Vec x(m.cols(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m.cols()) return std::nullopt;  // pivot in the rhs column
        x[pivots[i]] = rows[i][m.cols()];
    }
    return x;
}

Subspace intersect(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient() != s2.ambient())
        throw precondition_error("intersect: ambient dimension mismatch");
    const Fp& f = s1.field();
    if (f != s2.field()) throw context_mismatch_error("intersect over different fields");

    // Columns are the basis vectors of S1 followed by S2; a kernel
    // vector (u, v) gives a common point sum_i u_i b1_i = -sum_j v_j b2_j.
    const std::size_t d1 = s1.dim(), d2 = s2.dim();
    Matrix stacked(f, s1.ambient(), d1 + d2);
    for (std::size_t j = 0; j < d1; ++j)
        for (std::size_t i = 0; i < s1.ambient(); ++i) stacked.set(i, j, s1.basis()[j][i]);
    for (std::size_t j = 0; j < d2; ++j)
        for (std::size_t i = 0; i < s2.ambient(); ++i) stacked.set(i, d1 + j, s2.basis()[j][i]);

    Subspace ker = kernel(stacked);
    std::vector<Vec> points;
    for (const Vec& uv : ker.basis()) {
        Vec x(s1.ambient(), 0);
        for (std::size_t j = 0; j < d1; ++j) {
            if (uv[j] == 0) continue;
            for (std::size_t i = 0; i < s1.ambient(); ++i)
                x[i] = f.add(x[i], f.mul(uv[j], s1.basis()[j][i]));
        }
        points.push_back(std::move(x));
    }
    return Subspace::span(f, s1.ambient(), std::move(points));
}

Subspace subspace_sum(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient() != s2.ambient())
        throw precondition_error("subspace sum: ambient dimension mismatch");
    std::vector<Vec> all = s1.basis();
    all.insert(all.end(), s2.basis().begin(), s2.basis().end());
    return Subspace::span(s1.field(), s1.ambient(), std::move(all));
}

Vec CommAlgebra::mul(const Vec& x, const Vec& y) const {
    Vec out(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j] == 0) continue;
            uint32_t c = field.mul(x[i], y[j]);
            const Vec& pij = product[i][j];
            for (std::size_t k = 0; k < dim; ++k)
                if (pij[k] != 0) out[k] = field.add(out[k], field.mul(c, pij[k]));
        }
    }
    return out;
}

Vec CommAlgebra::power(const Vec& x, uint64_t k) const {
    Vec acc = one, base = x;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

bool CommAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            if (product[i][j] != product[j][i]) return false;
    return true;
}

Vec minimal_polynomial(const Vec& z, const Vec& one,
                       const std::function<Vec(const Vec&, const Vec&)>& mul, const Fp& field) {
    const std::size_t ambient = z.size();
    std::vector<Vec> powers{one};
    Vec current = one;
    for (std::size_t deg = 1; deg <= ambient + 1; ++deg) {
        current = mul(current, z);
        // Express current in terms of the previous powers, if possible.
        Matrix m(field, ambient, powers.size());
        for (std::size_t j = 0; j < powers.size(); ++j)
            for (std::size_t i = 0; i < ambient; ++i) m.set(i, j, powers[j][i]);
        if (auto combo = solve(m, current)) {
            Vec poly(deg + 1, 0);
            for (std::size_t i = 0; i < deg; ++i) poly[i] = field.neg((*combo)[i]);
            poly[deg] = 1;
            return poly;
        }
        powers.push_back(current);
    }
    throw internal_error("minimal polynomial search exceeded the ambient dimension");
}

namespace {

std::vector<uint32_t> distinct_roots(const Vec& poly, const Fp& field) {
    std::vector<uint32_t> roots;
    for (uint32_t c = 0; c < field.modulus(); ++c) {
        uint32_t value = 0;
        for (std::size_t i = poly.size(); i-- > 0;) value = field.add(field.mul(value, c), poly[i]);
        if (value == 0) roots.push_back(c);
    }
    return roots;
}

}  // namespace

std::vector<Vec> split_idempotents(const CommAlgebra& algebra) {
    const Fp& f = algebra.field;
    if (!algebra.is_commutative())
        throw precondition_error("split_idempotents: algebra is not commutative");

    // Frobenius-fixed subalgebra {z : z^p = z}; its F_p-dimension is
    // the number of primitive idempotents and every fixed element has
    // a squarefree minimal polynomial splitting over F_p.
    Matrix frobenius(f, algebra.dim, algebra.dim);
    for (std::size_t j = 0; j < algebra.dim; ++j) {
        Vec ej(algebra.dim, 0);
        ej[j] = 1;
        Vec img = algebra.power(ej, f.modulus());
        for (std::size_t i = 0; i < algebra.dim; ++i)
            frobenius.set(i, j, f.sub(img[i], j == i ? 1u : 0u));
    }
    Subspace fixed = kernel(frobenius);

    std::vector<Vec> idempotents{algebra.one};
    auto mul = [&algebra](const Vec& x, const Vec& y) { return algebra.mul(x, y); };

    for (const Vec& fix : fixed.basis()) {
        std::vector<Vec> refined;
        for (const Vec& e : idempotents) {
            Vec z = algebra.mul(e, fix);
            Vec poly = minimal_polynomial(z, e, mul, f);
            if (poly.size() <= 2) {
                refined.push_back(e);
                continue;
            }
            std::vector<uint32_t> roots = distinct_roots(poly, f);
            if (roots.size() + 1 != poly.size())
                throw precondition_error("split_idempotents: algebra is not split over F_p");
            // Lagrange projectors onto the eigenspaces of z inside eZ.
            for (uint32_t root : roots) {
                Vec proj = e;
                for (uint32_t other : roots) {
                    if (other == root) continue;
                    // proj *= (z - other*e) / (root - other)
                    Vec shifted = z;
                    for (std::size_t i = 0; i < algebra.dim; ++i)
                        shifted[i] = f.sub(shifted[i], f.mul(other, e[i]));
                    uint32_t scale = f.inv(f.sub(root, other));
                    proj = algebra.mul(proj, shifted);
                    for (uint32_t& c : proj) c = f.mul(c, scale);
                }
                refined.push_back(std::move(proj));
            }
        }
        idempotents = std::move(refined);
    }

    if (idempotents.size() != fixed.dim())
        throw internal_error("idempotent count does not match the Frobenius-fixed dimension");
    Vec total(algebra.dim, 0);
    for (const Vec& e : idempotents) {
        for (std::size_t i = 0; i < algebra.dim; ++i) total[i] = f.add(total[i], e[i]);
        if (algebra.mul(e, e) != e) throw internal_error("refined element is not idempotent");
    }
    if (total != algebra.one) throw internal_error("idempotents do not sum to 1");
    for (std::size_t i = 0; i < idempotents.size(); ++i)
        for (std::size_t j = i + 1; j < idempotents.size(); ++j) {
            Vec zero(algebra.dim, 0);
            if (algebra.mul(idempotents[i], idempotents[j]) != zero)
                throw internal_error("idempotents are not orthogonal");
        }
    return idempotents;
}

}  // namespace akblocks
