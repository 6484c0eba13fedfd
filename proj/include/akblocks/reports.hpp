#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "akblocks/akalgebra.hpp"
#include "akblocks/blocks.hpp"

namespace akblocks {

// Stable key order so fixed inputs serialize byte-for-byte.
using Json = nlohmann::ordered_json;

Json blocks_report(uint32_t n, const ResidueParams& params, const std::vector<BlockClass>& blocks);

Json weight_one_report_json(const WeightOneReport& report);

Json verdict_json(const BlockVerdict& verdict);

// One weight-one block found by a parameter sweep.
struct SearchHit {
    uint32_t e;
    uint32_t r;
    std::vector<uint32_t> a;
    uint32_t n;
    ResidueContent content;
    uint32_t s;
    std::vector<std::string> chain;  // descending
    uint64_t dim_algebra;            // r^n n!
    uint64_t dim_block;              // sum of n_lambda^2
};

std::vector<SearchHit> search_weight_one(uint32_t r, uint32_t n_min, uint32_t n_max,
                                         const std::vector<uint32_t>& e_values);

Json search_report(const std::vector<SearchHit>& hits);

}  // namespace akblocks
