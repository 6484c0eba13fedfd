#pragma once

#include <cstdint>
#include <vector>

#include "akblocks/partitions.hpp"

namespace akblocks {

// Residue data (e, r, a) with Q_k = q^{a_k}.  Residues live in Z/e, so
// the combinatorics is independent of the field backend.
struct ResidueParams {
    uint32_t e;
    uint32_t r;
    std::vector<uint32_t> a;  // size r, reduced mod e

    ResidueParams(uint32_t e_value, std::vector<int64_t> a_values);
};

using ResidueContent = std::vector<uint32_t>;  // counts indexed by Z/e

// res(i, j, k) = (j - i + a_k) mod e.
uint32_t residue(const Node& node, const ResidueParams& params);

ResidueContent content(const MultiPartition& mp, const ResidueParams& params);

// Fayers' weight: sum of c_{a_i} minus half the circular sum of
// squared content differences.  Can be negative in principle; exact.
int64_t weight(const MultiPartition& mp, const ResidueParams& params);

// Parameters of the reversed algebra (q -> q^{-1}, Q reversed), in
// exponent form relative to the new q: a'_k = -a_{r+1-k} mod e.
ResidueParams conjugate_params(const ResidueParams& params);

// Residue-content class: all members share the content, and (checked
// at construction) a single common weight.
struct BlockClass {
    ResidueContent content;
    std::vector<MultiPartition> members;  // enumeration order
    int64_t weight;

    // Members sorted most dominant first where the block is a chain.
    bool is_dominance_chain() const;
    std::vector<MultiPartition> sorted_descending() const;
};

// Group all r-partitions of n by residue content, sorted by content.
std::vector<BlockClass> partition_into_blocks(uint32_t n, const ResidueParams& params);

// Classification data for a weight-one block: the dominance chain
// lambda_1 < ... < lambda_s (ascending), the five index lists, the
// bidiagonal decomposition matrix, and the combinatorial dimensions.
struct WeightOneReport {
    std::vector<MultiPartition> chain;  // ascending: chain[0] is least dominant
    uint32_t s;
    std::vector<std::vector<uint32_t>> lambda_sets;  // 5 lists of chain indices
    std::vector<std::vector<uint32_t>> decomposition;  // s x (s-1), 0/1
    std::vector<BigInt> n_lambda;                      // per chain entry
    std::vector<BigInt> dim_simple;                    // s-1 entries, dim L(lambda_i)
    std::vector<BigInt> dim_rad_cell;                  // s entries, form-radical dims
};

WeightOneReport classify_weight_one(const BlockClass& block, const ResidueParams& params);

// Pairing of a weight-one block with its mirror in the reversed
// algebra: reversal of the chain under conjugation, plus the two
// paired sum identities over {B, B-bar}.
struct PairedSumReport {
    ResidueParams mirror_params;
    std::vector<MultiPartition> mirror_chain;  // ascending in the mirror order
    bool mirror_is_conjugate_set;
    bool mirror_chain_reversed;
    bool tableau_sum_equal;   // sum over Lambda_3 of n^2 == sum over Lambda_4 of n^2
    bool radical_sum_equal;   // sum over Lambda_2 of (dim rad)^2 == (dim L)^2
    BigInt tableau_sum_lhs, tableau_sum_rhs;
    BigInt radical_sum_lhs, radical_sum_rhs;

    bool all_hold() const {
        return mirror_is_conjugate_set && mirror_chain_reversed && tableau_sum_equal &&
               radical_sum_equal;
    }
};

PairedSumReport verify_paired_sums(const BlockClass& block, const ResidueParams& params);

}  // namespace akblocks
