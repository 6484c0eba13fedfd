#include "akblocks/blocks.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace akblocks {

ResidueParams::ResidueParams(uint32_t e_value, std::vector<int64_t> a_values) : e(e_value), r(0) {
    if (e < 2) throw precondition_error("residue parameters need e >= 2");
    if (a_values.empty()) throw precondition_error("residue parameters need at least one exponent");
    r = static_cast<uint32_t>(a_values.size());
    a.reserve(r);
    for (int64_t v : a_values) {
        int64_t m = v % static_cast<int64_t>(e);
        if (m < 0) m += e;
        a.push_back(static_cast<uint32_t>(m));
    }
}

uint32_t residue(const Node& node, const ResidueParams& params) {
    if (node.comp >= params.r) throw precondition_error("node component outside parameter range");
    int64_t t = static_cast<int64_t>(node.col) - static_cast<int64_t>(node.row) +
                params.a[node.comp];
    int64_t m = t % static_cast<int64_t>(params.e);
    if (m < 0) m += params.e;
    return static_cast<uint32_t>(m);
}

ResidueContent content(const MultiPartition& mp, const ResidueParams& params) {
    ResidueContent c(params.e, 0);
    for (const Node& node : mp.nodes()) ++c[residue(node, params)];
    return c;
}

int64_t weight(const MultiPartition& mp, const ResidueParams& params) {
    ResidueContent c = content(mp, params);
    int64_t head = 0;
    for (uint32_t ak : params.a) head += c[ak];
    int64_t squares = 0;
    for (uint32_t f = 0; f < params.e; ++f) {
        int64_t diff = static_cast<int64_t>(c[f]) - static_cast<int64_t>(c[(f + 1) % params.e]);
        squares += diff * diff;
    }
    if (squares % 2 != 0)
        throw internal_error("odd circular square sum in weight of " + mp.to_string());
    return head - squares / 2;
}

ResidueParams conjugate_params(const ResidueParams& params) {
    std::vector<int64_t> reversed;
    reversed.reserve(params.r);
    for (uint32_t k = params.r; k-- > 0;)
        reversed.push_back(-static_cast<int64_t>(params.a[k]));
    return ResidueParams(params.e, std::move(reversed));
}

bool BlockClass::is_dominance_chain() const {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!dominates(members[i], members[j]) && !dominates(members[j], members[i]))
                return false;
    return true;
}

std::vector<MultiPartition> BlockClass::sorted_descending() const {
    std::vector<MultiPartition> out = members;
    if (!is_dominance_chain()) return out;
    std::sort(out.begin(), out.end(), [](const MultiPartition& x, const MultiPartition& y) {
        return x != y && dominates(x, y);
    });
    return out;
}

std::vector<BlockClass> partition_into_blocks(uint32_t n, const ResidueParams& params) {
    std::map<ResidueContent, BlockClass> grouped;
    for (MultiPartition& mp : enumerate_multipartitions(n, params.r)) {
        ResidueContent c = content(mp, params);
        int64_t w = weight(mp, params);
        auto it = grouped.find(c);
        if (it == grouped.end()) {
            grouped.emplace(c, BlockClass{c, {std::move(mp)}, w});
        } else {
            if (it->second.weight != w)
                throw theorem_violation("block-weight-constancy",
                                        "members " + it->second.members[0].to_string() + " and " +
                                            mp.to_string() + " share content but differ in weight");
            it->second.members.push_back(std::move(mp));
        }
    }
    std::vector<BlockClass> out;
    out.reserve(grouped.size());
    for (auto& [c, block] : grouped) out.push_back(std::move(block));
    return out;
}

WeightOneReport classify_weight_one(const BlockClass& block, const ResidueParams& params) {
    if (block.weight != 1)
        throw precondition_error("classify_weight_one called on a block of weight " +
                                 std::to_string(block.weight));

    for (std::size_t i = 0; i < block.members.size(); ++i)
        for (std::size_t j = i + 1; j < block.members.size(); ++j)
            if (!dominates(block.members[i], block.members[j]) &&
                !dominates(block.members[j], block.members[i]))
                throw theorem_violation("weight-one-chain",
                                        block.members[i].to_string() + " and " +
                                            block.members[j].to_string() +
                                            " are dominance-incomparable in a weight-one block");

    WeightOneReport report;
    report.chain = block.members;
    std::sort(report.chain.begin(), report.chain.end(),
              [](const MultiPartition& x, const MultiPartition& y) {
                  return x != y && dominates(y, x);
              });
    report.s = static_cast<uint32_t>(report.chain.size());
    if (report.s > params.e)
        throw theorem_violation("weight-one-chain", "chain length " + std::to_string(report.s) +
                                                        " exceeds e = " + std::to_string(params.e));
    if (report.s < 2)
        throw theorem_violation("weight-one-chain",
                                "a weight-one block cannot be a single cell class");

    const uint32_t s = report.s;
    report.lambda_sets.resize(5);
    for (uint32_t i = 0; i + 1 < s; ++i) report.lambda_sets[0].push_back(i);
    report.lambda_sets[1] = {0};
    for (uint32_t i = 1; i + 1 < s; ++i) report.lambda_sets[2].push_back(i);
    report.lambda_sets[3] = {s - 1};
    report.lambda_sets[4] = {0};

    report.decomposition.assign(s, std::vector<uint32_t>(s - 1, 0));
    for (uint32_t i = 0; i < s; ++i)
        for (uint32_t j = 0; j + 1 < s; ++j)
            if (i == j || i == j + 1) report.decomposition[i][j] = 1;

    for (const MultiPartition& mp : report.chain)
        report.n_lambda.push_back(count_standard_tableaux(mp));

    // dim L(lambda_i) by unitriangular inversion of the bidiagonal
    // decomposition matrix: alternating sums of tableau counts.
    BigInt prev = 0;
    for (uint32_t i = 0; i + 1 < s; ++i) {
        BigInt dim = report.n_lambda[i] - prev;
        if (dim <= 0)
            throw theorem_violation("weight-one-decomposition-dims",
                                    "nonpositive simple dimension at chain position " +
                                        std::to_string(i));
        report.dim_simple.push_back(dim);
        prev = dim;
    }
    // W(lambda_s) has the single constituent L(lambda_{s-1}).
    if (report.n_lambda[s - 1] != report.dim_simple[s - 2])
        throw theorem_violation("weight-one-decomposition-dims",
                                "top cell dimension does not match the previous simple");

    report.dim_rad_cell.push_back(0);
    for (uint32_t i = 1; i < s; ++i) report.dim_rad_cell.push_back(report.dim_simple[i - 1]);
    return report;
}

PairedSumReport verify_paired_sums(const BlockClass& block, const ResidueParams& params) {
    if (block.weight != 1)
        throw precondition_error("verify_paired_sums called on a block of weight " +
                                 std::to_string(block.weight));

    WeightOneReport primary = classify_weight_one(block, params);
    PairedSumReport out{conjugate_params(params), {}, true, true, false, false, 0, 0, 0, 0};

    // Locate the mirror block among all blocks of the reversed algebra.
    ResidueContent mirror_content = content(block.members[0].conjugate(), out.mirror_params);
    const BlockClass* mirror_block = nullptr;
    std::vector<BlockClass> mirror_blocks = partition_into_blocks(block.members[0].n(), out.mirror_params);
    for (const BlockClass& b : mirror_blocks)
        if (b.content == mirror_content) mirror_block = &b;
    if (mirror_block == nullptr)
        throw internal_error("mirror block not found for content class");
    if (mirror_block->weight != 1)
        throw theorem_violation("mirror-block-weight",
                                "mirror block has weight " + std::to_string(mirror_block->weight));

    std::vector<MultiPartition> conjugates;
    for (const MultiPartition& mp : block.members) conjugates.push_back(mp.conjugate());
    std::sort(conjugates.begin(), conjugates.end());
    std::vector<MultiPartition> mirror_members = mirror_block->members;
    std::sort(mirror_members.begin(), mirror_members.end());
    out.mirror_is_conjugate_set = conjugates == mirror_members;

    WeightOneReport mirror = classify_weight_one(*mirror_block, out.mirror_params);
    out.mirror_chain = mirror.chain;
    out.mirror_chain_reversed = mirror.s == primary.s;
    for (uint32_t i = 0; i < primary.s && out.mirror_chain_reversed; ++i)
        if (mirror.chain[i] != primary.chain[primary.s - 1 - i].conjugate())
            out.mirror_chain_reversed = false;

    // Lambda_3 = top of each chain, Lambda_4 = bottom of each chain.
    auto sq = [](const BigInt& x) { return x * x; };
    out.tableau_sum_lhs = sq(primary.n_lambda[primary.s - 1]) + sq(mirror.n_lambda[mirror.s - 1]);
    out.tableau_sum_rhs = sq(primary.n_lambda[0]) + sq(mirror.n_lambda[0]);
    out.tableau_sum_equal = out.tableau_sum_lhs == out.tableau_sum_rhs;

    out.radical_sum_lhs = 0;
    out.radical_sum_rhs = 0;
    for (const WeightOneReport* rep : {&primary, &mirror}) {
        for (uint32_t i : rep->lambda_sets[2]) {
            out.radical_sum_lhs += sq(rep->dim_rad_cell[i]);
            out.radical_sum_rhs += sq(rep->dim_simple[i]);
        }
    }
    out.radical_sum_equal = out.radical_sum_lhs == out.radical_sum_rhs;
    return out;
}

}  // namespace akblocks
