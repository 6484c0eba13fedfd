#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "akblocks/blocks.hpp"
#include "akblocks/ffield.hpp"
#include "akblocks/linalg.hpp"
#include "akblocks/partitions.hpp"
#include "akblocks/perms.hpp"

namespace akblocks {

struct AKParams {
    FieldContext fc;
    uint32_t r;
    std::vector<uint32_t> a;  // exponents mod e; Q_k = q^{a_k}
    uint32_t n;
    uint32_t basis_cap;

    AKParams(FieldContext fc_value, std::vector<int64_t> a_values, uint32_t n_value,
             uint32_t cap = 1000);

    ResidueParams residue_params() const;
    std::vector<uint32_t> cyclotomic_values() const;  // Q_k in F_p

    // Parameters of the reversed algebra H'(q^{-1}, Q reversed).
    AKParams mirror() const;
};

// H_n(q, Q) in the normal-form basis {L_1^{c_1}...L_n^{c_n} T_w} with
// 0 <= c_i < r, w in S_n.  Elements are dense coefficient vectors of
// length r^n n!; monomials are indexed by c (mixed radix) * n! + w.
// Right and left multiplication by each generator are built once by
// rewriting; everything else multiplies through them.
class AlgebraTable {
public:
    explicit AlgebraTable(const AKParams& params);

    uint32_t dim() const noexcept { return dim_; }
    const AKParams& params() const noexcept { return params_; }
    const SymmetricGroup& sym() const noexcept { return sym_; }
    const Fp& field() const noexcept { return params_.fc.field; }

    uint32_t encode(const std::vector<uint8_t>& c, uint32_t w) const;
    std::pair<std::vector<uint8_t>, uint32_t> decode(uint32_t idx) const;
    uint32_t identity_index() const noexcept { return 0; }

    Vec unit() const;
    Vec basis_vec(uint32_t idx) const;

    Vec rmul_gen(const Vec& x, uint32_t j) const;  // x * T_j, 0 <= j <= n-1
    Vec lmul_gen(uint32_t j, const Vec& x) const;  // T_j * x
    Vec rmul_L(const Vec& x, uint32_t k) const;    // x * L_k, 1 <= k <= n
    Vec rmul_monomial(const Vec& x, uint32_t idx) const;
    Vec mul(const Vec& x, const Vec& y) const;

    // x * y for every y in one pass; the expensive per-monomial images
    // of x are shared across the right-hand factors.
    std::vector<Vec> mul_many(const Vec& x, const std::vector<Vec>& ys) const;

    Vec star(const Vec& x) const;         // anti-automorphism fixing the generators
    uint32_t trace_coeff(const Vec& x) const { return x[identity_index()]; }

    // Row of the trace pairing: result[b1] = tau(basis_{b1} * basis_{idx}).
    Vec trace_pairing_row(uint32_t idx) const;

    Matrix rmul_matrix(uint32_t j) const;
    Matrix lmul_matrix(uint32_t j) const;

private:
    using Sparse = std::map<uint32_t, uint32_t>;
    using SparseCol = std::vector<std::pair<uint32_t, uint32_t>>;

    AKParams params_;
    SymmetricGroup sym_;
    uint32_t dim_;
    uint32_t nfact_;
    std::vector<uint32_t> qvals_;             // Q_1..Q_r
    std::vector<uint32_t> elementary_sym_;    // e_t(Q_1..Q_r), t = 0..r
    std::vector<uint32_t> weak_order_;        // ranks sorted by length

    std::vector<std::vector<SparseCol>> rcols_;    // [j][b]: columns of right mult by T_j
    std::vector<std::vector<SparseCol>> lcols_;    // [j][b]: columns of left mult by T_j
    std::vector<std::vector<SparseCol>> rLcols_;   // [k-1][b]: columns of right mult by L_k
    std::vector<std::vector<SparseCol>> rrows_;    // [j][b]: rows of right mult by T_j
    std::vector<std::vector<SparseCol>> rLrows_;   // [k-1][b]

    mutable uint64_t rewrite_steps_ = 0;

    // rewriting machinery (construction only)
    std::map<std::pair<uint32_t, uint32_t>, Sparse> word_L_memo_;
    std::vector<Sparse> reduce_Lr_memo_;

    void bump_steps() const;
    Sparse rmul_gen_sparse(const Sparse& x, uint32_t j) const;
    Sparse lmul_gen_sparse(uint32_t j, const Sparse& x);
    Sparse rmul_word_sparse(Sparse x, const std::vector<uint32_t>& letters) const;
    const Sparse& reduce_Lr(uint32_t k);
    Sparse mul_Lmono(const std::vector<uint8_t>& c, const Sparse& e);
    Sparse word_L(uint32_t w, uint32_t k);
    Sparse lmul_T0_sparse(const Sparse& x);
    void build_generator_tables();
    void verify_defining_relations() const;
};

// DJM cellular datum: the dominance poset of r-partitions of n, the
// standard tableaux M(lambda), and the basis C^lambda_{S,T} expressed
// over the normal-form basis.
struct CellDatum {
    std::vector<MultiPartition> lambdas;
    std::vector<std::vector<StandardTableau>> tableaux;
    std::vector<std::vector<uint32_t>> d_perm;  // rank of d(T)
    std::vector<uint32_t> offset;               // flat index base per lambda
    std::vector<Vec> basis;                     // flat: offset[l] + S*n_l + T
    Matrix transition = Matrix(Fp(2), 0, 0);    // columns are the basis vectors
    Matrix transition_inv = Matrix(Fp(2), 0, 0);
    std::vector<std::vector<bool>> dominates_strictly;  // [mu][la]: mu |> la

    uint32_t num_lambdas() const { return static_cast<uint32_t>(lambdas.size()); }
    uint32_t n_tab(uint32_t l) const { return static_cast<uint32_t>(tableaux[l].size()); }
    uint32_t flat(uint32_t l, uint32_t s, uint32_t t) const {
        return offset[l] + s * n_tab(l) + t;
    }
    Vec to_cell_coords(const Vec& x) const;  // coefficients on the C basis
};

CellDatum djm_basis(const AlgebraTable& table);

// Verdict of the mod-ideal product rule: for every lambda, S, T and
// generator g, C_{S,T} g is congruent to sum_V r(T,V,g) C_{S,V}
// modulo strictly dominating terms, with r independent of S.
struct CellularityReport {
    bool ok = true;
    std::string witness;
    // action[l][g]: n_l x n_l matrix of r(T,V,g)
    std::vector<std::vector<Matrix>> action;
};

CellularityReport check_cellularity(const AlgebraTable& table, const CellDatum& cd);

struct DualBasisTable {
    std::vector<Vec> dual;  // flat like cd.basis; tau(C_{S,T} D_{U,V}) = delta pattern
    Matrix tau_gram;        // tau(b_i b_j) over the normal basis
};

DualBasisTable trace_and_dual(const AlgebraTable& table, const CellDatum& cd);

struct GramData {
    std::vector<Matrix> form;       // G(lambda): Phi values
    std::vector<Matrix> dual_form;  // G'(lambda): Psi values
    std::vector<uint32_t> k_lambda;
    std::vector<std::size_t> form_rank;
};

// full_spectator_check replays the spectator independence for every
// pair (S, V) instead of a fixed one.
GramData gram_matrices(const AlgebraTable& table, const CellDatum& cd,
                       const DualBasisTable& dual, bool full_spectator_check = true);

struct LambdaSets {
    std::vector<uint32_t> sets[5];  // indices into cd.lambdas
};

LambdaSets lambda_sets(const CellDatum& cd, const GramData& gram);

// Cell and simple modules: generator actions on W(lambda), the form
// radical, and actions on L(lambda) for lambda in Lambda_0.
struct CellModules {
    std::vector<std::vector<Matrix>> gen_action;   // [l][g], W(lambda) as row vectors
    std::vector<Subspace> form_radical;            // kernel of G(lambda)
    std::vector<std::size_t> dim_simple;           // rank of G(lambda)
    std::vector<std::vector<Matrix>> monomial_action;  // [l][basis idx] on W(lambda)

    // action of an arbitrary element on W(lambda)
    Matrix action_on_cell(const AlgebraTable& table, uint32_t l, const Vec& x) const;
};

CellModules cell_and_simple_modules(const AlgebraTable& table, const CellDatum& cd,
                                    const CellularityReport& cellularity, const GramData& gram);

// rad A as the intersection of the annihilators of the simple modules.
Subspace radical(const AlgebraTable& table, const CellDatum& cd, const GramData& gram,
                 const LambdaSets& sets, const CellModules& modules);

struct BlockDecomposition {
    Subspace center;
    std::vector<Vec> idempotents;                     // primitive central
    std::vector<std::vector<uint32_t>> block_lambdas; // lambda indices per block
    std::vector<ResidueContent> contents;             // residue-content label per block
    std::vector<Subspace> block_span;                 // z_B A
    std::vector<Subspace> block_radical;              // z_B rad A

    // index of the block whose content matches, or throws
    uint32_t block_by_content(const ResidueContent& c) const;
};

BlockDecomposition center_and_blocks(const AlgebraTable& table, const CellDatum& cd,
                                     const CellModules& modules, const Subspace& rad,
                                     const ResidueParams& rp);

// Dimensions of rad B, (rad B)^2, (rad B)^3.
std::vector<std::size_t> radical_powers(const AlgebraTable& table, const Subspace& rad_block);

struct CentralIdealReport {
    bool e_lambda_t_independent = true;
    bool e_lambda_central = true;
    std::size_t dim_socle = 0;
    std::size_t dim_reynolds = 0;  // Z(B) ∩ soc B
    std::size_t dim_cell_ideal = 0;  // ideal of Z(B) generated by the e_lambda
    bool ideals_equal = false;
};

CentralIdealReport socle_and_central_ideals(const AlgebraTable& table, const CellDatum& cd,
                                            const DualBasisTable& dual,
                                            const BlockDecomposition& blocks,
                                            uint32_t block_index);

// The full pipeline on one algebra, with every structural identity
// re-verified during construction.
struct CellularAnalysis {
    AKParams params;
    AlgebraTable table;
    CellDatum cd;
    CellularityReport cellularity;
    DualBasisTable dual;
    GramData gram;
    LambdaSets sets;
    CellModules modules;
    Subspace rad;
    BlockDecomposition blocks;

    explicit CellularAnalysis(const AKParams& p, bool full_spectator_check = true);

    uint32_t lambda_index(const MultiPartition& mp) const;
};

// Everything the verification of one weight-one block records.
struct BlockVerdict {
    // instance data
    uint32_t p, q, e, r, n;
    std::vector<uint32_t> a;
    ResidueContent content;
    int64_t block_weight = 1;
    uint32_t s = 0;
    std::vector<std::string> chain;  // ascending
    std::vector<uint64_t> n_lambda;
    uint64_t dim_algebra = 0;
    uint64_t dim_block = 0;

    // per-member algebraic data, in chain order
    std::vector<std::size_t> gram_ranks;
    std::vector<std::size_t> dim_simple;    // rank G per chain member
    std::vector<std::size_t> dim_rad_cell;  // n_lambda - rank G
    std::vector<uint32_t> k_values;

    std::vector<std::vector<std::string>> lambda_sets;  // five lists, member strings

    std::size_t dim_radB = 0;
    std::size_t radB_square_dim = 0;
    std::size_t radB_cube_dim = 0;

    // mirror instance
    std::vector<uint32_t> mirror_a;
    uint32_t mirror_q = 0;
    std::vector<std::string> mirror_chain;

    // named checks, true = verified
    bool check_chain = false;
    bool check_lambda_sets = false;
    bool check_decomposition_dims = false;
    bool check_k_lambda_zero = false;
    bool check_radical_powers = false;
    bool check_mirror_block = false;
    bool check_paired_tableau_sum = false;
    bool check_paired_radical_sum = false;
    bool check_central_ideals = false;

    bool pass() const {
        return check_chain && check_lambda_sets && check_decomposition_dims &&
               check_k_lambda_zero && check_radical_powers && check_mirror_block &&
               check_paired_tableau_sum && check_paired_radical_sum && check_central_ideals;
    }
};

// Orchestrates the algebraic verification of one weight-one block,
// including the mirror algebra.  Throws theorem_violation (naming the
// failed check) unless `collect_only` is set, in which case the
// verdict carries the failure flags instead.
BlockVerdict verify_weight_one_block(const AKParams& params, const ResidueContent& target_content,
                                     bool collect_only = false);

}  // namespace akblocks
