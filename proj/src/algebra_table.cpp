#include "akblocks/akalgebra.hpp"

#include <algorithm>
#include <string>

namespace akblocks {

namespace {

constexpr uint64_t kRewriteStepBudget = 500'000'000;

}  // namespace

AKParams::AKParams(FieldContext fc_value, std::vector<int64_t> a_values, uint32_t n_value,
                   uint32_t cap)
    : fc(fc_value), r(static_cast<uint32_t>(a_values.size())), n(n_value), basis_cap(cap) {
    if (r < 2) throw precondition_error("Ariki-Koike parameters need r >= 2");
    if (n < 1) throw precondition_error("Ariki-Koike parameters need n >= 1");
    a.reserve(r);
    for (int64_t v : a_values) {
        int64_t m = v % static_cast<int64_t>(fc.e);
        if (m < 0) m += fc.e;
        a.push_back(static_cast<uint32_t>(m));
    }
}

ResidueParams AKParams::residue_params() const {
    std::vector<int64_t> av(a.begin(), a.end());
    return ResidueParams(fc.e, std::move(av));
}

std::vector<uint32_t> AKParams::cyclotomic_values() const {
    std::vector<uint32_t> q(r);
    for (uint32_t k = 0; k < r; ++k) q[k] = fc.field.pow(fc.q, a[k]);
    return q;
}

AKParams AKParams::mirror() const {
    FieldContext mfc(fc.field.modulus(), fc.field.inv(fc.q));
    std::vector<int64_t> ma;
    for (uint32_t k = r; k-- > 0;) ma.push_back(-static_cast<int64_t>(a[k]));
    return AKParams(mfc, std::move(ma), n, basis_cap);
}

AlgebraTable::AlgebraTable(const AKParams& params)
    : params_(params), sym_(params.n), nfact_(sym_.order()) {
    uint64_t d = nfact_;
    for (uint32_t i = 0; i < params_.n; ++i) {
        d *= params_.r;
        if (d > params_.basis_cap)
            throw resource_cap_error("algebra dimension r^n n! exceeds cap " +
                                     std::to_string(params_.basis_cap));
    }
    dim_ = static_cast<uint32_t>(d);

    qvals_ = params_.cyclotomic_values();
    // elementary symmetric polynomials in Q_1..Q_r
    const Fp& f = field();
    elementary_sym_.assign(params_.r + 1, 0);
    elementary_sym_[0] = 1;
    for (uint32_t k = 0; k < params_.r; ++k)
        for (uint32_t t = std::min(k + 1, params_.r); t >= 1; --t)
            elementary_sym_[t] = f.add(elementary_sym_[t], f.mul(elementary_sym_[t - 1], qvals_[k]));

    weak_order_.resize(nfact_);
    for (uint32_t w = 0; w < nfact_; ++w) weak_order_[w] = w;
    std::stable_sort(weak_order_.begin(), weak_order_.end(),
                     [this](uint32_t a, uint32_t b) { return sym_.length(a) < sym_.length(b); });

    reduce_Lr_memo_.assign(params_.n + 1, Sparse{});
    build_generator_tables();
    word_L_memo_.clear();
    reduce_Lr_memo_.clear();
    verify_defining_relations();
}

uint32_t AlgebraTable::encode(const std::vector<uint8_t>& c, uint32_t w) const {
    uint32_t code = 0;
    for (uint32_t i = params_.n; i-- > 0;) code = code * params_.r + c[i];
    return code * nfact_ + w;
}

std::pair<std::vector<uint8_t>, uint32_t> AlgebraTable::decode(uint32_t idx) const {
    uint32_t w = idx % nfact_;
    uint32_t code = idx / nfact_;
    std::vector<uint8_t> c(params_.n);
    for (uint32_t i = 0; i < params_.n; ++i) {
        c[i] = static_cast<uint8_t>(code % params_.r);
        code /= params_.r;
    }
    return {std::move(c), w};
}

Vec AlgebraTable::unit() const {
    Vec x(dim_, 0);
    x[identity_index()] = 1;
    return x;
}

Vec AlgebraTable::basis_vec(uint32_t idx) const {
    Vec x(dim_, 0);
    x[idx] = 1;
    return x;
}

void AlgebraTable::bump_steps() const {
    if (++rewrite_steps_ > kRewriteStepBudget)
        throw internal_error("rewriting step budget exceeded");
}

AlgebraTable::Sparse AlgebraTable::rmul_gen_sparse(const Sparse& x, uint32_t j) const {
    // j >= 1: only the T_w part is touched.
    const Fp& f = field();
    const uint32_t q = params_.fc.q;
    Sparse out;
    for (const auto& [idx, coeff] : x) {
        bump_steps();
        uint32_t w = idx % nfact_;
        uint32_t base = idx - w;
        uint32_t ws = sym_.right_gen(w, j);
        if (sym_.right_ascent(w, j)) {
            out[base + ws] = f.add(out[base + ws], coeff);
        } else {
            out[base + w] = f.add(out[base + w], f.mul(coeff, f.sub(q, 1)));
            out[base + ws] = f.add(out[base + ws], f.mul(coeff, q));
        }
    }
    return out;
}

AlgebraTable::Sparse AlgebraTable::rmul_word_sparse(Sparse x, const std::vector<uint32_t>& letters) const {
    for (uint32_t j : letters) x = rmul_gen_sparse(x, j);
    return x;
}

const AlgebraTable::Sparse& AlgebraTable::reduce_Lr(uint32_t k) {
    Sparse& memo = reduce_Lr_memo_[k];
    if (!memo.empty()) return memo;
    const Fp& f = field();
    const uint32_t q = params_.fc.q;
    const uint32_t r = params_.r;

    if (k == 1) {
        // H1: L_1^r = sum_t (-1)^(t-1) e_t(Q) L_1^(r-t)
        for (uint32_t t = 1; t <= r; ++t) {
            uint32_t coeff = elementary_sym_[t];
            if (t % 2 == 0) coeff = f.neg(coeff);
            if (coeff == 0) continue;
            std::vector<uint8_t> c(params_.n, 0);
            c[0] = static_cast<uint8_t>(r - t);
            uint32_t idx = encode(c, sym_.identity());
            memo[idx] = f.add(memo[idx], coeff);
        }
        return memo;
    }

    // L_k^r = q^{-1} T_{k-1} L_{k-1}^r T_{k-1}
    //       + q^{-1}(q-1) sum_{j=1}^{r-1} L_k^j L_{k-1}^{r-j} T_{k-1}
    Sparse inner = reduce_Lr(k - 1);
    Sparse a = lmul_gen_sparse(k - 1, inner);
    a = rmul_gen_sparse(a, k - 1);
    uint32_t qinv = f.inv(q);
    for (const auto& [idx, coeff] : a) {
        uint32_t v = f.mul(coeff, qinv);
        if (v != 0) memo[idx] = f.add(memo[idx], v);
    }
    uint32_t tail = f.mul(qinv, f.sub(q, 1));
    uint32_t sk = sym_.right_gen(sym_.identity(), k - 1);
    for (uint32_t j = 1; j < r; ++j) {
        std::vector<uint8_t> c(params_.n, 0);
        c[k - 1] = static_cast<uint8_t>(j);
        c[k - 2] = static_cast<uint8_t>(r - j);
        uint32_t idx = encode(c, sk);
        memo[idx] = f.add(memo[idx], tail);
    }
    // prune explicit zeros so emptiness stays meaningful
    for (auto it = memo.begin(); it != memo.end();)
        it = it->second == 0 ? memo.erase(it) : std::next(it);
    if (memo.empty()) throw internal_error("vanishing power relation");
    return memo;
}

AlgebraTable::Sparse AlgebraTable::mul_Lmono(const std::vector<uint8_t>& c, const Sparse& e) {
    const Fp& f = field();
    Sparse out;
    for (const auto& [idx, coeff] : e) {
        bump_steps();
        auto [h, v] = decode(idx);
        std::vector<uint32_t> g(params_.n);
        uint32_t overflow_at = 0;  // 1-based position, 0 = none (take the largest)
        for (uint32_t i = 0; i < params_.n; ++i) {
            g[i] = static_cast<uint32_t>(c[i]) + h[i];
            if (g[i] >= params_.r) overflow_at = i + 1;
        }
        if (overflow_at == 0) {
            std::vector<uint8_t> gc(g.begin(), g.end());
            uint32_t out_idx = encode(gc, v);
            out[out_idx] = f.add(out[out_idx], coeff);
            continue;
        }
        // L^g = L^(g - r e_k) L_k^r with k the top overflow position;
        // expand the power relation, absorb the remaining L factors in
        // chunks below r (they commute), then restore T_v on the right.
        g[overflow_at - 1] -= params_.r;
        Sparse z = reduce_Lr(overflow_at);
        for (uint32_t i = 0; i < params_.n; ++i) {
            uint32_t remaining = g[i];
            while (remaining > 0) {
                uint32_t chunk = std::min(remaining, params_.r - 1);
                std::vector<uint8_t> step(params_.n, 0);
                step[i] = static_cast<uint8_t>(chunk);
                z = mul_Lmono(step, z);
                remaining -= chunk;
            }
        }
        if (!sym_.reduced_word(v).empty()) z = rmul_word_sparse(std::move(z), sym_.reduced_word(v));
        for (const auto& [zi, zc] : z) {
            uint32_t val = f.mul(zc, coeff);
            if (val != 0) out[zi] = f.add(out[zi], val);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

AlgebraTable::Sparse AlgebraTable::word_L(uint32_t w, uint32_t k) {
    auto key = std::make_pair(w, k);
    auto found = word_L_memo_.find(key);
    if (found != word_L_memo_.end()) return found->second;

    const Fp& f = field();
    const uint32_t q = params_.fc.q;
    Sparse result;
    if (w == sym_.identity()) {
        std::vector<uint8_t> c(params_.n, 0);
        c[k - 1] = 1;
        result[encode(c, w)] = 1;
    } else {
        uint32_t i = sym_.reduced_word(w).back();
        uint32_t wp = sym_.right_gen(w, i);  // shorter by one
        if (k != i && k != i + 1) {
            result = rmul_gen_sparse(word_L(wp, k), i);
        } else if (k == i) {
            // T_i L_i = L_{i+1} T_i - (q-1) L_{i+1}
            Sparse a = word_L(wp, i + 1);
            result = rmul_gen_sparse(a, i);
            uint32_t qm1 = f.sub(q, 1);
            for (const auto& [idx, coeff] : a) {
                uint32_t v = f.mul(coeff, qm1);
                result[idx] = f.sub(result[idx], v);
            }
        } else {
            // T_i L_{i+1} = L_i T_i + (q-1) L_{i+1}
            Sparse a = word_L(wp, i);
            Sparse b = word_L(wp, i + 1);
            result = rmul_gen_sparse(a, i);
            uint32_t qm1 = f.sub(q, 1);
            for (const auto& [idx, coeff] : b) {
                uint32_t v = f.mul(coeff, qm1);
                result[idx] = f.add(result[idx], v);
            }
        }
        for (auto it = result.begin(); it != result.end();)
            it = it->second == 0 ? result.erase(it) : std::next(it);
    }
    word_L_memo_[key] = result;
    return result;
}

AlgebraTable::Sparse AlgebraTable::lmul_gen_sparse(uint32_t j, const Sparse& x) {
    const Fp& f = field();
    const uint32_t q = params_.fc.q;
    const uint32_t qm1 = f.sub(q, 1);
    Sparse out;
    auto add_term = [&](uint32_t idx, uint32_t coeff) {
        if (coeff == 0) return;
        uint32_t& slot = out[idx];
        slot = f.add(slot, coeff);
        if (slot == 0) out.erase(idx);
    };

    for (const auto& [idx, coeff] : x) {
        bump_steps();
        auto [c, u] = decode(idx);
        if (j == 0) {
            // T_0 = L_1 commutes with every L_i
            if (c[0] + 1u < params_.r) {
                std::vector<uint8_t> c2 = c;
                ++c2[0];
                add_term(encode(c2, u), coeff);
            } else {
                std::vector<uint8_t> c0 = c;
                c0[0] = 0;
                for (const auto& [ri, rc] : reduce_Lr(1)) {
                    auto [h, hv] = decode(ri);  // hv is the identity
                    std::vector<uint8_t> merged = c0;
                    merged[0] = h[0];
                    add_term(encode(merged, u), f.mul(coeff, rc));
                }
            }
            continue;
        }
        // T_j L_j^a L_{j+1}^b: exponents swap, plus correction terms.
        uint32_t a_exp = c[j - 1], b_exp = c[j];
        std::vector<uint8_t> swapped = c;
        std::swap(swapped[j - 1], swapped[j]);
        uint32_t base = encode(swapped, sym_.identity()) - sym_.identity();
        // (...) T_j T_u
        uint32_t su = sym_.left_gen(j, u);
        if (sym_.left_ascent(j, u)) {
            add_term(base + su, coeff);
        } else {
            add_term(base + u, f.mul(coeff, qm1));
            add_term(base + su, f.mul(coeff, q));
        }
        if (a_exp > b_exp) {
            for (uint32_t t = 1; t <= a_exp - b_exp; ++t) {
                std::vector<uint8_t> cc = c;
                cc[j - 1] = static_cast<uint8_t>(a_exp - t);
                cc[j] = static_cast<uint8_t>(b_exp + t);
                add_term(encode(cc, u), f.neg(f.mul(coeff, qm1)));
            }
        } else if (b_exp > a_exp) {
            for (uint32_t t = 1; t <= b_exp - a_exp; ++t) {
                std::vector<uint8_t> cc = c;
                cc[j - 1] = static_cast<uint8_t>(b_exp - t);
                cc[j] = static_cast<uint8_t>(a_exp + t);
                add_term(encode(cc, u), f.mul(coeff, qm1));
            }
        }
    }
    return out;
}

void AlgebraTable::build_generator_tables() {
    const Fp& f = field();
    const uint32_t n = params_.n;

    auto to_col = [](const Sparse& s) {
        SparseCol col(s.begin(), s.end());
        return col;
    };

    rcols_.assign(n, {});
    lcols_.assign(n, {});
    for (uint32_t j = 0; j < n; ++j) {
        rcols_[j].resize(dim_);
        lcols_[j].resize(dim_);
    }

    for (uint32_t b = 0; b < dim_; ++b) {
        Sparse e{{b, 1}};
        for (uint32_t j = 1; j < n; ++j) rcols_[j][b] = to_col(rmul_gen_sparse(e, j));
        for (uint32_t j = 0; j < n; ++j) lcols_[j][b] = to_col(lmul_gen_sparse(j, e));

        // right multiplication by T_0 = append L_1 through T_w
        auto [c, w] = decode(b);
        Sparse out;
        for (const auto& [ti, tc] : word_L(w, 1)) {
            auto [d, u] = decode(ti);
            uint32_t m = 0;
            while (d[m] == 0) ++m;  // single L factor
            if (c[m] + 1u < params_.r) {
                std::vector<uint8_t> merged = c;
                ++merged[m];
                uint32_t idx = encode(merged, u);
                out[idx] = f.add(out[idx], tc);
            } else {
                std::vector<uint8_t> c0 = c;
                c0[m] = 0;
                Sparse z = mul_Lmono(c0, reduce_Lr(m + 1));
                if (!sym_.reduced_word(u).empty())
                    z = rmul_word_sparse(std::move(z), sym_.reduced_word(u));
                for (const auto& [zi, zc] : z) {
                    uint32_t v = f.mul(zc, tc);
                    if (v != 0) out[zi] = f.add(out[zi], v);
                }
            }
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second == 0 ? out.erase(it) : std::next(it);
        rcols_[0][b] = to_col(out);
    }

    // right multiplication by L_k: q^{-(k-1)} T_{k-1}...T_1 T_0 T_1...T_{k-1}
    rLcols_.assign(n, {});
    for (uint32_t k = 1; k <= n; ++k) {
        rLcols_[k - 1].resize(dim_);
        std::vector<uint32_t> letters;
        for (uint32_t i = k - 1; i >= 1; --i) letters.push_back(i);
        letters.push_back(0);
        for (uint32_t i = 1; i <= k - 1; ++i) letters.push_back(i);
        uint32_t scale = f.inv(f.pow(params_.fc.q, k - 1));
        for (uint32_t b = 0; b < dim_; ++b) {
            Sparse e{{b, 1}};
            for (uint32_t j : letters) {
                if (j == 0) {
                    Sparse next;
                    for (const auto& [idx, coeff] : e)
                        for (const auto& [ti, tc] : rcols_[0][idx]) {
                            uint32_t v = f.mul(coeff, tc);
                            if (v != 0) next[ti] = f.add(next[ti], v);
                        }
                    for (auto it = next.begin(); it != next.end();)
                        it = it->second == 0 ? next.erase(it) : std::next(it);
                    e = std::move(next);
                } else {
                    e = rmul_gen_sparse(e, j);
                }
            }
            SparseCol col;
            for (const auto& [idx, coeff] : e) {
                uint32_t v = f.mul(coeff, scale);
                if (v != 0) col.emplace_back(idx, v);
            }
            rLcols_[k - 1][b] = std::move(col);
        }
        // e_id * L_k must be the L_k monomial itself
        std::vector<uint8_t> c(params_.n, 0);
        c[k - 1] = 1;
        SparseCol expected{{encode(c, sym_.identity()), 1}};
        if (rLcols_[k - 1][identity_index()] != expected)
            throw internal_error("L_" + std::to_string(k) + " column at the identity is wrong");
    }

    // transposed tables for the trace pairing
    auto transpose_table = [this](const std::vector<SparseCol>& cols) {
        std::vector<SparseCol> rows(dim_);
        for (uint32_t b = 0; b < dim_; ++b)
            for (const auto& [idx, coeff] : cols[b]) rows[idx].emplace_back(b, coeff);
        return rows;
    };
    rrows_.clear();
    rLrows_.clear();
    for (uint32_t j = 0; j < n; ++j) rrows_.push_back(transpose_table(rcols_[j]));
    for (uint32_t k = 0; k < n; ++k) rLrows_.push_back(transpose_table(rLcols_[k]));
}

namespace {

Vec apply_col_table(const std::vector<std::vector<std::pair<uint32_t, uint32_t>>>& table,
                    const Vec& x, const Fp& f) {
    Vec out(x.size(), 0);
    for (uint32_t b = 0; b < x.size(); ++b) {
        if (x[b] == 0) continue;
        for (const auto& [idx, coeff] : table[b]) out[idx] = f.add(out[idx], f.mul(x[b], coeff));
    }
    return out;
}

}  // namespace

Vec AlgebraTable::rmul_gen(const Vec& x, uint32_t j) const {
    if (j >= params_.n) throw precondition_error("generator index out of range");
    return apply_col_table(rcols_[j], x, field());
}

Vec AlgebraTable::lmul_gen(uint32_t j, const Vec& x) const {
    if (j >= params_.n) throw precondition_error("generator index out of range");
    return apply_col_table(lcols_[j], x, field());
}

Vec AlgebraTable::rmul_L(const Vec& x, uint32_t k) const {
    if (k < 1 || k > params_.n) throw precondition_error("L index out of range");
    return apply_col_table(rLcols_[k - 1], x, field());
}

Vec AlgebraTable::rmul_monomial(const Vec& x, uint32_t idx) const {
    auto [c, w] = decode(idx);
    Vec acc = x;
    for (uint32_t i = 1; i <= params_.n; ++i)
        for (uint32_t t = 0; t < c[i - 1]; ++t) acc = rmul_L(acc, i);
    for (uint32_t j : sym_.reduced_word(w)) acc = rmul_gen(acc, j);
    return acc;
}

Vec AlgebraTable::mul(const Vec& x, const Vec& y) const {
    return mul_many(x, {y})[0];
}

std::vector<Vec> AlgebraTable::mul_many(const Vec& x, const std::vector<Vec>& ys) const {
    const Fp& f = field();
    std::vector<Vec> out(ys.size(), Vec(dim_, 0));

    // x * (L^c T_w) for every monomial, sharing prefixes: first a DP
    // over the exponent vectors, then one generator step per w along
    // the weak order
    const uint32_t ncodes = dim_ / nfact_;
    std::vector<Vec> lprefix(ncodes);
    lprefix[0] = x;
    for (uint32_t code = 1; code < ncodes; ++code) {
        uint32_t digit = code, position = 0, step = 1;
        while (digit % params_.r == 0) {
            digit /= params_.r;
            ++position;
            step *= params_.r;
        }
        lprefix[code] = rmul_L(lprefix[code - step], position + 1);
    }

    std::vector<Vec> wvec(nfact_);
    for (uint32_t code = 0; code < ncodes; ++code) {
        bool any = false;
        for (const Vec& y : ys)
            for (uint32_t w = 0; w < nfact_ && !any; ++w) any = y[code * nfact_ + w] != 0;
        if (!any) continue;
        wvec[sym_.identity()] = lprefix[code];
        for (uint32_t w : weak_order_) {
            if (w != sym_.identity()) {
                uint32_t letter = sym_.reduced_word(w).back();
                wvec[w] = rmul_gen(wvec[sym_.right_gen(w, letter)], letter);
            }
            const Vec& t = wvec[w];
            for (std::size_t j = 0; j < ys.size(); ++j) {
                uint32_t coeff = ys[j][code * nfact_ + w];
                if (coeff == 0) continue;
                Vec& acc = out[j];
                for (uint32_t i = 0; i < dim_; ++i)
                    if (t[i] != 0) acc[i] = f.add(acc[i], f.mul(coeff, t[i]));
            }
        }
    }
    return out;
}

Vec AlgebraTable::star(const Vec& x) const {
    const Fp& f = field();
    Vec out(dim_, 0);
    for (uint32_t idx = 0; idx < dim_; ++idx) {
        if (x[idx] == 0) continue;
        auto [c, w] = decode(idx);
        // (L^c T_w)^* = T_{w^{-1}} L^c
        Vec t = basis_vec(encode(c, sym_.identity()));
        for (uint32_t j : sym_.reduced_word(w)) t = lmul_gen(j, t);
        for (uint32_t i = 0; i < dim_; ++i)
            if (t[i] != 0) out[i] = f.add(out[i], f.mul(x[idx], t[i]));
    }
    return out;
}

Vec AlgebraTable::trace_pairing_row(uint32_t idx) const {
    const Fp& f = field();
    auto [c, w] = decode(idx);
    // letters of the monomial word, applied transposed in reverse order
    Vec u(dim_, 0);
    u[identity_index()] = 1;
    const auto& word = sym_.reduced_word(w);
    for (std::size_t t = word.size(); t-- > 0;) u = apply_col_table(rrows_[word[t]], u, f);
    for (uint32_t i = params_.n; i-- > 0;)
        for (uint32_t t = 0; t < c[i]; ++t) u = apply_col_table(rLrows_[i], u, f);
    return u;
}

Matrix AlgebraTable::rmul_matrix(uint32_t j) const {
    Matrix m(field(), dim_, dim_);
    for (uint32_t b = 0; b < dim_; ++b)
        for (const auto& [idx, coeff] : rcols_[j][b]) m.set(idx, b, coeff);
    return m;
}

Matrix AlgebraTable::lmul_matrix(uint32_t j) const {
    Matrix m(field(), dim_, dim_);
    for (uint32_t b = 0; b < dim_; ++b)
        for (const auto& [idx, coeff] : lcols_[j][b]) m.set(idx, b, coeff);
    return m;
}

void AlgebraTable::verify_defining_relations() const {
    const Fp& f = field();
    const uint32_t q = params_.fc.q;
    const uint32_t n = params_.n;
    Vec zero(dim_, 0);

    auto scaled_sub = [&](Vec x, const Vec& y, uint32_t scale) {
        for (uint32_t i = 0; i < dim_; ++i) x[i] = f.sub(x[i], f.mul(scale, y[i]));
        return x;
    };
    auto word_vec = [&](std::initializer_list<uint32_t> letters) {
        Vec x = unit();
        for (uint32_t j : letters) x = rmul_gen(x, j);
        return x;
    };

    // (T_0 - Q_1)...(T_0 - Q_r) = 0
    Vec x = unit();
    for (uint32_t k = 0; k < params_.r; ++k) x = scaled_sub(rmul_gen(x, 0), x, qvals_[k]);
    if (x != zero) throw internal_error("cyclotomic relation fails in the built table");

    // (T_i + 1)(T_i - q) = 0
    for (uint32_t i = 1; i < n; ++i) {
        Vec ti = word_vec({i});
        Vec quad = scaled_sub(rmul_gen(ti, i), ti, f.sub(q, 1));
        quad = scaled_sub(std::move(quad), unit(), q);
        if (quad != zero)
            throw internal_error("quadratic relation fails for T_" + std::to_string(i));
    }

    if (n >= 2 && word_vec({0, 1, 0, 1}) != word_vec({1, 0, 1, 0}))
        throw internal_error("mixed braid relation T_0 T_1 T_0 T_1 fails");
    for (uint32_t i = 1; i + 1 < n; ++i)
        if (word_vec({i, i + 1, i}) != word_vec({i + 1, i, i + 1}))
            throw internal_error("braid relation fails at T_" + std::to_string(i));
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 2; j < n; ++j)
            if (word_vec({i, j}) != word_vec({j, i}))
                throw internal_error("commutation fails for T_" + std::to_string(i) + ", T_" +
                                     std::to_string(j));
}

}  // namespace akblocks
